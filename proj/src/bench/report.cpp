#include "emp/bench/report.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace emp::bench {
namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Value a reader of the CSV sees; keeps CSV and JSON in agreement.
double rounded6(double v) { return std::strtod(fixed6(v).c_str(), nullptr); }

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(rounded6(*v)) : nlohmann::json(nullptr);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::optional<double> optional_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "csv" || s == "CSV") return Format::CSV;
  if (s == "json" || s == "JSON") return Format::JSON;
  throw Error(ErrorCode::Config, "unknown report format '" + std::string(s) + "'");
}

void write_report(std::ostream& out, const std::vector<ReportRow>& rows, Format format) {
  if (format == Format::CSV) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
      out << r.algorithm << ',' << r.m << ',' << r.trial << ',' << fixed6(r.srer_db) << ','
          << (r.snr_db ? fixed6(*r.snr_db) : "") << ',' << (r.ip ? fixed6(*r.ip) : "") << ','
          << (r.recovered ? (*r.recovered ? "true" : "false") : "") << ',' << r.iterations << ','
          << r.termination << '\n';
    }
    return;
  }
  auto doc = nlohmann::json::array();
  for (const auto& r : rows) {
    doc.push_back({
        {"algorithm", r.algorithm},
        {"m", r.m},
        {"trial", r.trial},
        {"srer_db", rounded6(r.srer_db)},
        {"snr_db", optional_json(r.snr_db)},
        {"ip", optional_json(r.ip)},
        {"recovered", r.recovered ? nlohmann::json(*r.recovered) : nlohmann::json(nullptr)},
        {"iterations", r.iterations},
        {"termination", r.termination},
    });
  }
  out << doc.dump(2) << '\n';
}

void emit_report(const std::vector<ReportRow>& rows, Format format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing: " + std::strerror(errno));
  }
  write_report(out, rows, format);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "failed writing report to '" + path + "'");
}

std::vector<ReportRow> parse_csv_report(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorCode::Io, "report does not start with the expected CSV header");
  }
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 9) throw Error(ErrorCode::Io, "malformed report line: " + line);
    ReportRow r;
    r.algorithm = f[0];
    r.m = std::stol(f[1]);
    r.trial = std::stol(f[2]);
    r.srer_db = std::stod(f[3]);
    r.snr_db = optional_real(f[4]);
    r.ip = optional_real(f[5]);
    if (!f[6].empty()) r.recovered = f[6] == "true";
    r.iterations = std::stol(f[7]);
    r.termination = f[8];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace emp::bench
