#include "qcubic/report.hpp"

#include <json.hpp>

namespace qcubic {

namespace {

using nlohmann::json;

// Render numbers through the JSON serializer everywhere so the CSV cells
// and the JSON values are byte-identical.
std::string num(double v) { return json(v).dump(); }
std::string num(std::uint64_t v) { return json(v).dump(); }
std::string num(int v) { return json(v).dump(); }

json count_report_object(const CountReport& r, ReportStyle style) {
  json j;
  j["field"] = r.field_n;
  j["bound"] = static_cast<double>(r.bound);
  j["backend"] = r.backend;
  j["count"] = r.count;
  j["predicted"] = static_cast<double>(r.predicted);
  j["ratio"] = static_cast<double>(r.ratio);
  if (style == ReportStyle::Compare)
    j["inv_log_bound"] = static_cast<double>(r.inv_log_bound);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string count_report_csv_header(ReportStyle style) {
  if (style == ReportStyle::Compare)
    return "field,bound,backend,count,predicted,ratio,inv_log_bound,elapsed_ms";
  return "field,bound,backend,count,predicted,ratio,elapsed_ms";
}

std::string count_report_csv_row(const CountReport& r, ReportStyle style) {
  std::string row = num(r.field_n) + "," + num(static_cast<double>(r.bound)) + "," +
                    r.backend + "," + num(r.count) + "," +
                    num(static_cast<double>(r.predicted)) + "," +
                    num(static_cast<double>(r.ratio));
  if (style == ReportStyle::Compare)
    row += "," + num(static_cast<double>(r.inv_log_bound));
  row += "," + num(r.elapsed_ms);
  return row;
}

std::string count_report_json(const CountReport& r, ReportStyle style) {
  return count_report_object(r, style).dump();
}

std::string breakdown_csv_header() {
  return "field,euler_bound,alpha,euler_partial,euler_tail_bound,"
         "closed_form_prefactor,assembled_general,c_value";
}

std::string breakdown_csv_row(const ConstantBreakdown& b) {
  return num(b.field_n) + "," + num(b.euler_bound) + "," + b.alpha.str() + "," +
         num(static_cast<double>(b.euler_partial)) + "," +
         num(static_cast<double>(b.euler_tail_bound)) + "," +
         num(static_cast<double>(b.closed_form_prefactor)) + "," +
         num(static_cast<double>(b.assembled_general)) + "," +
         num(static_cast<double>(b.c_value));
}

std::string breakdown_json(const ConstantBreakdown& b) {
  nlohmann::json j;
  j["field"] = b.field_n;
  j["euler_bound"] = b.euler_bound;
  j["alpha"] = b.alpha.str();
  j["euler_partial"] = static_cast<double>(b.euler_partial);
  j["euler_tail_bound"] = static_cast<double>(b.euler_tail_bound);
  j["closed_form_prefactor"] = static_cast<double>(b.closed_form_prefactor);
  j["assembled_general"] = static_cast<double>(b.assembled_general);
  j["c_value"] = static_cast<double>(b.c_value);
  return j.dump();
}

}  // namespace qcubic
