#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "emp/bench/experiment.hpp"

namespace emp::bench {

enum class Format { CSV, JSON };

Format parse_format(std::string_view s);

inline constexpr std::string_view kCsvHeader =
    "algorithm,m,trial,srer_db,snr_db,ip,recovered,iterations,termination";

/// CSV: fixed header, reals at 6 decimals, absent optionals as empty fields,
/// flags as true/false. JSON: array of objects with the header's field
/// names, reals rounded to the same 6 decimals, absent optionals as null.
void write_report(std::ostream& out, const std::vector<ReportRow>& rows, Format format);

/// write_report into `path`; throws Error(Io) naming the path on failure.
void emit_report(const std::vector<ReportRow>& rows, Format format, const std::string& path);

/// Inverse of the CSV writer (values come back at 6-decimal precision).
std::vector<ReportRow> parse_csv_report(std::istream& in);

}  // namespace emp::bench
