#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "freqcnn/errors.hpp"
#include "freqcnn/loss.hpp"
#include "test_support.hpp"

using namespace freqcnn;
using freqcnn::testing::central_diff;
using freqcnn::testing::rel_err;

TEST(Bce, HandValues) {
  EXPECT_NEAR(bce({1, 0.5}), std::numbers::ln2, 1e-16);
  EXPECT_NEAR(bce({0, 0.5}), std::numbers::ln2, 1e-16);
  EXPECT_NEAR(bce({1, 0.9}), 0.10536051565782630, 1e-15);
}

TEST(Bce, DomainErrors) {
  EXPECT_THROW(BceInput(1, 0.0), DomainError);
  EXPECT_THROW(BceInput(0, 1.0), DomainError);
  EXPECT_THROW(BceInput(2, 0.5), DomainError);
  EXPECT_THROW(BceInput(1, std::nan("")), DomainError);
}

TEST(Bce, LabelSymmetryAndPositivity) {
  // Exact on dyadic p, where 1 - p and 1 - (1 - p) are both exact.
  for (int k = 1; k < 64; ++k) {
    const double p = k / 64.0;
    EXPECT_EQ(bce({1, p}), bce({0, 1.0 - p}));
  }
  double previous = INFINITY;
  for (int k = 1; k < 100; ++k) {
    const double p = k / 100.0;
    EXPECT_NEAR(bce({1, p}), bce({0, 1.0 - p}), 1e-15 * bce({1, p}) + 1e-16);
    EXPECT_GE(bce({1, p}), 0.0);
    EXPECT_LT(bce({1, p}), previous);  // decreasing towards p -> y = 1
    previous = bce({1, p});
  }
}

TEST(BceExpIdentity, HandAndGrid) {
  const auto a = bce_exp_identity_check({0, 0.3});
  EXPECT_NEAR(a.lhs, 1.0 / 0.7, 1e-14);
  EXPECT_NEAR(a.rhs, 1.0 / 0.7, 1e-14);
  const auto b = bce_exp_identity_check({1, 0.5});
  EXPECT_NEAR(b.lhs, 2.0, 1e-15);
  EXPECT_EQ(b.rhs, 2.0);
  for (int y : {0, 1}) {
    for (int k = 1; k <= 99; ++k) {
      const auto s = bce_exp_identity_check({y, k / 100.0});
      EXPECT_LE(std::abs(s.lhs - s.rhs), 1e-12 * s.rhs);
    }
  }
}

TEST(BceFt, AntiderivativeDerivative) {
  const BceInput in{1, 0.6};
  auto f = [&](double x) { return bce_ft_antiderivative(x, 2.0, in); };
  const Complex want = (1.0 / 0.6) * std::exp(Complex{0, -0.6});
  EXPECT_LE(rel_err(central_diff(f, 0.3, 1e-5), want), 1e-6);
}

TEST(BceFt, HandValueAndSingularity) {
  const BceInput in{1, std::exp(-1.0)};
  const Complex v = bce_ft_antiderivative(0.0, 1.0, in);
  EXPECT_NEAR(v.real(), 0.0, 1e-15);
  EXPECT_NEAR(v.imag(), std::exp(1.0), 1e-14);
  EXPECT_THROW(bce_ft_antiderivative(0.0, 0.0, in), SingularityError);
}

TEST(BceFt, MagnitudeIndependentOfX) {
  const BceInput in{0, 0.25};
  const double m = std::abs(bce_ft_antiderivative(0.0, 1.5, in));
  for (double x : {-3.0, -0.1, 0.7, 12.0}) {
    EXPECT_NEAR(std::abs(bce_ft_antiderivative(x, 1.5, in)), m, 1e-15);
  }
}

TEST(BceFt, AntiderivativeGrid) {
  for (int y : {0, 1}) {
    const BceInput in{y, 0.35};
    const double amplitude = std::pow(0.35, -y) * std::pow(0.65, y - 1.0);
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      for (double omega : {-3.0, -0.5, 0.25, 1.0, 4.0}) {
        auto f = [&](double t) { return bce_ft_antiderivative(t, omega, in); };
        const Complex want = amplitude * std::exp(Complex{0, -omega * x});
        EXPECT_LE(rel_err(central_diff(f, x, 1e-5), want), 1e-6);
      }
    }
  }
}
