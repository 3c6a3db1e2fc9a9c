#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "freqcnn/errors.hpp"

namespace freqcnn::verify {

/// Bad configuration: unknown suite or check, malformed sizes. Maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Report could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Spectral and direct convolution disagreed before timing started.
class CorrectnessError : public Error {
 public:
  using Error::Error;
};

enum class Format { Csv, Json };

/// Suite names in registration order.
const std::vector<std::string>& suite_names();

/// Names of every registered check, in registration order.
std::vector<std::string> check_names();

struct SuiteConfig {
  std::vector<std::string> suites = suite_names();
  std::uint64_t seed = 42;
  std::map<std::string, double> tolerance_overrides;
  std::vector<std::size_t> sizes{64, 256, 1024, 4096};
  std::string output_path;  ///< empty means stdout
  Format format = Format::Csv;

  /// Throws UsageError on an empty or unknown suite list, an override for an
  /// unknown check, or sizes that are not strictly increasing powers of two.
  void validate() const;
};

struct CheckRecord {
  std::string check;
  std::string anchor;
  double error = 0.0;
  double tolerance = 0.0;  ///< +inf for informational rows
  bool pass = false;
  bool informational = false;
  std::int64_t ns = 0;
};

struct BenchRecord {
  std::size_t n = 0;
  std::int64_t direct_ns = 0;
  std::int64_t spectral_ns = 0;
  double ratio = 0.0;  ///< direct_ns / spectral_ns
  std::size_t repetitions = 0;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::vector<BenchRecord> bench;

  ReportSummary summary() const;
  bool all_passed() const { return summary().failed == 0; }
};

/// Uniform doubles on [-1, 1) from mt19937_64: 2 * (x >> 11) * 2^-53 - 1.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double operator()() {
    return 2.0 * static_cast<double>(engine_() >> 11) * 0x1.0p-53 - 1.0;
  }
  double in(double lo, double hi) { return lo + (hi - lo) * 0.5 * ((*this)() + 1.0); }
  /// Integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }
  std::vector<double> vec(std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = (*this)();
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Runs every registered check of the selected suites in registration order.
VerificationReport run_suites(const SuiteConfig& config);

/// Times direct and spectral 1D convolution at each size after a correctness
/// gate. Throws CorrectnessError if the gate fails at any size.
std::vector<BenchRecord> run_bench(const SuiteConfig& config);

/// Renders the check table (CSV header `check,anchor,error,tolerance,pass,ns`)
/// or the full JSON document including bench records and summary.
std::string render_report(const VerificationReport& report, Format format);

/// CSV rendering of bench records: `n,direct_ns,spectral_ns,ratio,repetitions`.
std::string render_bench_csv(const std::vector<BenchRecord>& bench);

/// Writes render_report to path. For CSV with bench records, the bench table
/// goes to `<stem>_bench.csv` next to it. Throws IoError naming the path.
void emit_report(const VerificationReport& report, const std::string& path, Format format);

}  // namespace freqcnn::verify
