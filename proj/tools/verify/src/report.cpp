#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "freqcnn/verify/verify.hpp"

namespace freqcnn::verify {

namespace {

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// JSON has no infinity or NaN; those become null.
nlohmann::json json_real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  s.total = records.size();
  for (const auto& r : records) (r.pass ? s.passed : s.failed) += 1;
  return s;
}

std::string render_report(const VerificationReport& report, Format format) {
  if (format == Format::Csv) {
    std::string out = "check,anchor,error,tolerance,pass,ns\n";
    for (const auto& r : report.records) {
      out += csv_field(r.check) + ',' + csv_field(r.anchor) + ',' + format_real(r.error) + ',' +
             format_real(r.tolerance) + ',' + (r.pass ? "true" : "false") + ',' +
             std::to_string(r.ns) + '\n';
    }
    return out;
  }

  nlohmann::json doc;
  doc["records"] = nlohmann::json::array();
  for (const auto& r : report.records) {
    doc["records"].push_back({{"check", r.check},
                              {"anchor", r.anchor},
                              {"error", json_real(r.error)},
                              {"tolerance", json_real(r.tolerance)},
                              {"pass", r.pass},
                              {"informational", r.informational},
                              {"ns", r.ns}});
  }
  doc["bench"] = nlohmann::json::array();
  for (const auto& b : report.bench) {
    doc["bench"].push_back({{"n", b.n},
                            {"direct_ns", b.direct_ns},
                            {"spectral_ns", b.spectral_ns},
                            {"ratio", json_real(b.ratio)},
                            {"repetitions", b.repetitions}});
  }
  const auto s = report.summary();
  doc["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
  return doc.dump(2) + '\n';
}

std::string render_bench_csv(const std::vector<BenchRecord>& bench) {
  std::string out = "n,direct_ns,spectral_ns,ratio,repetitions\n";
  for (const auto& b : bench) {
    out += std::to_string(b.n) + ',' + std::to_string(b.direct_ns) + ',' +
           std::to_string(b.spectral_ns) + ',' + format_real(b.ratio) + ',' +
           std::to_string(b.repetitions) + '\n';
  }
  return out;
}

void emit_report(const VerificationReport& report, const std::string& path, Format format) {
  write_file(path, render_report(report, format));
  if (format == Format::Csv && !report.bench.empty()) {
    std::filesystem::path p(path);
    const auto bench_path = p.parent_path() / (p.stem().string() + "_bench.csv");
    write_file(bench_path.string(), render_bench_csv(report.bench));
  }
}

}  // namespace freqcnn::verify
