#pragma once

#include <cstddef>

#include "freqcnn/signal.hpp"

namespace freqcnn {

struct Hyp2F1Params {
  Complex a;
  Complex b;
  Complex c;
  Complex z;
};

struct SeriesControl {
  double rel_tol = 1e-12;
  std::size_t max_terms = 100000;
};

struct SeriesResult {
  Complex value;
  std::size_t terms;  ///< number of series terms summed, including the leading 1
};

/// Gauss hypergeometric function by its power series
///   sum_n (a)_n (b)_n / (c)_n * z^n / n!
/// valid only inside the unit disc. Summation stops at the first term with
/// |term| < rel_tol * |partial sum|.
///
/// Throws DomainError for |z| >= 1 or c a non-positive integer, and
/// ConvergenceError (carrying the partial sum) past ctl.max_terms.
SeriesResult hyp2f1(const Hyp2F1Params& params, const SeriesControl& ctl = {});

}  // namespace freqcnn
