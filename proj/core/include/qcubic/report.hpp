#pragma once

#include <cstdint>
#include <string>

#include "qcubic/constant.hpp"

namespace qcubic {

// One row of counting output. CSV and JSON carry the same keys and the same
// textual number representations, so the two parse identically.
struct CountReport {
  int field_n = 0;
  long double bound = 0;
  std::string backend;
  std::uint64_t count = 0;
  long double predicted = 0;  // c * B * (log B)^6, or 0 when that is <= 0
  long double ratio = 0;      // count / predicted when predicted > 0
  double elapsed_ms = 0;
  std::uint64_t euler_bound = 0;
  long double inv_log_bound = 0;  // 1/log B, reported by `compare`
};

enum class ReportStyle { Count, Compare };  // Compare adds inv_log_bound

std::string count_report_csv_header(ReportStyle style);
std::string count_report_csv_row(const CountReport& r, ReportStyle style);
std::string count_report_json(const CountReport& r, ReportStyle style);

std::string breakdown_csv_header();
std::string breakdown_csv_row(const ConstantBreakdown& b);
std::string breakdown_json(const ConstantBreakdown& b);

}  // namespace qcubic
