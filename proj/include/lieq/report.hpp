#pragma once

#include <sstream>
#include <string>

#include "lieq/criteria.hpp"
#include "lieq/survey.hpp"

namespace lieq {

// report rendering shared by the command-line driver, the golden fixtures and
// the tests; every renderer is deterministic in its inputs
enum class ReportFormat { Text, Records };

namespace detail {

inline std::string vec_brief(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += rat_str(v[i]);
  }
  return s + "]";
}

}  // namespace detail

inline std::string render_case(const CaseReport& r, ReportFormat fmt) {
  std::ostringstream out;
  if (fmt == ReportFormat::Text) {
    out << "case " << r.id << "\n";
    for (const auto& it : r.items) {
      out << "  " << it.name << ": " << it.computed;
      if (it.cited)
        out << " (cited, not recomputed)";
      else if (it.pass())
        out << " (expected " << it.expected << ", ok)";
      else
        out << " (expected " << it.expected << ", MISMATCH)";
      out << "\n";
    }
    out << "result: " << (r.pass() ? "pass" : "fail") << "\n";
  } else {
    out << "case=" << r.id << "\n";
    for (const auto& it : r.items)
      out << "item=" << it.name << "|computed=" << it.computed << "|expected=" << it.expected
          << "|status=" << (it.cited ? "cited" : it.pass() ? "ok" : "mismatch") << "\n";
    out << "result=" << (r.pass() ? "pass" : "fail") << "\n";
  }
  return out.str();
}

inline std::string render_table2(const Table2Result& t, ReportFormat fmt) {
  std::ostringstream out;
  auto row = [](const SurveyEntry& e) {
    std::ostringstream r;
    r << e.g_label << " / " << e.h_label << " dims " << e.dim_g << "/" << e.dim_h << " rank "
      << e.rank_g;
    return r.str();
  };
  if (fmt == ReportFormat::Text) {
    out << "table2 rows: " << t.rows.size() << "\n";
    for (const auto& e : t.rows) out << "  " << row(e) << "\n";
    out << "excluded (classified separately):\n";
    for (const auto& e : t.excluded_exceptional) out << "  " << row(e) << "\n";
    out << "tail certificate: " << (t.tail_certified ? "pass" : "fail") << "\n";
  } else {
    out << "rows=" << t.rows.size() << "\n";
    for (const auto& e : t.rows) out << "row=" << row(e) << "\n";
    for (const auto& e : t.excluded_exceptional) out << "excluded=" << row(e) << "\n";
    out << "tail_certificate=" << (t.tail_certified ? "pass" : "fail") << "\n";
  }
  return out.str();
}

inline std::string render_verdict(const std::string& which, const Verdict& v, ReportFormat fmt) {
  std::ostringstream out;
  if (fmt == ReportFormat::Text) {
    out << which << ": " << outcome_str(v.outcome) << " (trials " << v.trials << ", seed "
        << v.seed << ")\n";
    if (v.witness) out << "witness: " << detail::vec_brief(*v.witness) << "\n";
  } else {
    out << "check=" << which << "\noutcome=" << outcome_str(v.outcome) << "\ntrials=" << v.trials
        << "\nseed=" << v.seed << "\n";
    if (v.witness) out << "witness=" << detail::vec_brief(*v.witness) << "\n";
  }
  return out.str();
}

}  // namespace lieq
