#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "freqcnn/verify/verify.hpp"

namespace {

using namespace freqcnn::verify;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& item : split_csv(s)) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad size '" + item + "'");
    }
    if (used != item.size() || item.front() == '-') throw UsageError("bad size '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::pair<std::string, double> parse_override(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected <check>=<real>, got '" + s + "'");
  const std::string value = s.substr(eq + 1);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw UsageError("bad tolerance in '" + s + "'");
  }
  if (used != value.size()) throw UsageError("bad tolerance in '" + s + "'");
  return {s.substr(0, eq), v};
}

void print_bench(const std::vector<BenchRecord>& bench) {
  if (bench.empty()) return;
  std::cerr << "\n       n   direct_ns  spectral_ns   ratio\n";
  for (const auto& b : bench) {
    char line[96];
    std::snprintf(line, sizeof line, "%8zu %11lld %12lld %7.2f\n", b.n,
                  static_cast<long long>(b.direct_ns), static_cast<long long>(b.spectral_ns),
                  b.ratio);
    std::cerr << line;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run numerical verification suites and the convolution benchmark"};

  std::string suites_arg;
  std::uint64_t seed = 42;
  std::string sizes_arg;
  std::string out_path;
  std::string format_arg = "csv";
  std::vector<std::string> overrides;

  app.add_option("--suite", suites_arg,
                 "Comma-separated suites: dft,conv,activations,pooling,loss,laplace,bench "
                 "(default: all)");
  app.add_option("--seed", seed, "Seed for random instances")->capture_default_str();
  app.add_option("--sizes", sizes_arg, "Comma-separated bench sizes, increasing powers of two");
  app.add_option("--out", out_path, "Report path (default: stdout)");
  app.add_option("--format", format_arg, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--tolerance", overrides, "Override a check tolerance: <check>=<real>")
      ->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SuiteConfig config;
  VerificationReport report;
  try {
    config.seed = seed;
    config.format = format_arg == "json" ? Format::Json : Format::Csv;
    config.output_path = out_path;
    if (!suites_arg.empty()) config.suites = split_csv(suites_arg);
    if (!sizes_arg.empty()) config.sizes = parse_sizes(sizes_arg);
    for (const auto& o : overrides) config.tolerance_overrides.insert(parse_override(o));
    report = run_suites(config);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const freqcnn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (out_path.empty()) {
      std::cout << render_report(report, config.format);
      if (config.format == Format::Csv && !report.bench.empty()) {
        std::cout << "\n" << render_bench_csv(report.bench);
      }
    } else {
      emit_report(report, out_path, config.format);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  print_bench(report.bench);
  const auto s = report.summary();
  std::cerr << s.passed << "/" << s.total << " checks passed";
  if (s.failed > 0) {
    std::cerr << "; failed:";
    for (const auto& r : report.records) {
      if (!r.pass) std::cerr << " " << r.check;
    }
  }
  std::cerr << "\n";
  return s.failed == 0 ? 0 : 1;
}
