#pragma once

// CSV and JSON serialization of sweep reports.
//
// CSV: header
//   identity,i,j,k,l,r,c,p,q,class,holds,lhs_degree,rhs_degree,lhs_at_1,rhs_at_1
// then one row per check; p, q are blank outside local sweeps and the degree
// of the zero polynomial is written "-inf".
//
// JSON: {"spec": {...}, "summary": {examined, holding, trivial, failed,
// wall_ms}, "rows": [{params, class, holds, lhs, rhs}]}, polynomials as
// ascending coefficient arrays from degree 0.

#include <optional>
#include <ostream>
#include <string>

#include "schubert/errors.hpp"
#include "schubert/json_writer.hpp"
#include "schubert/sweeper.hpp"

namespace schubert {

enum class ReportFormat { Csv, Json };

struct ReportOptions {
  /// Writes wall_ms as null so that reports of the same sweep compare equal.
  bool include_timing = true;
};

namespace detail {

inline std::string degree_field(const std::optional<std::size_t>& d) {
  return d ? std::to_string(*d) : std::string("-inf");
}

inline void write_csv(const SweepReport& report, std::ostream& os) {
  os << "identity,i,j,k,l,r,c,p,q,class,holds,lhs_degree,rhs_degree,lhs_at_1,rhs_at_1\n";
  for (const auto& row : report.rows) {
    const auto& s = row.params;
    os << to_string(row.kind) << ',' << s.i() << ',' << s.j() << ',' << s.k() << ',' << s.l() << ',' << s.r()
       << ',' << s.c() << ',';
    if (row.pair) os << row.pair->p();
    os << ',';
    if (row.pair) os << row.pair->q();
    os << ',' << to_string(row.cls) << ',' << (row.holds ? "true" : "false") << ',' << degree_field(row.lhs_degree)
       << ',' << degree_field(row.rhs_degree) << ',' << row.lhs_at_1 << ',' << row.rhs_at_1 << '\n';
  }
}

inline void write_interval(JsonWriter& w, const char* name, const Interval& iv) {
  w.key(name).begin_array().value(iv.lo).value(iv.hi).end_array();
}

inline void write_spec(JsonWriter& w, const SweepSpec& spec) {
  w.key("spec").begin_object();
  w.field("identity", to_string(spec.kind));
  write_interval(w, "i", spec.i);
  write_interval(w, "j", spec.j);
  switch (spec.kind) {
    case IdentityKind::Global:
    case IdentityKind::Local:
      write_interval(w, "r", spec.r);
      if (spec.c)
        write_interval(w, "c", *spec.c);
      else
        w.key("c").null();
      w.field("c_equals_r", spec.c_equals_r);
      w.field("mode", to_string(spec.mode));
      break;
    case IdentityKind::AppendixKi2:
      write_interval(w, "c", *spec.c);
      w.field("h_rule", to_string(spec.rule));
      break;
    case IdentityKind::AppendixKc2:
      write_interval(w, "r", spec.r);
      w.field("h_rule", to_string(spec.rule));
      break;
  }
  w.field("counterexample_cap", spec.counterexample_cap);
  w.end_object();
}

inline void write_json(const SweepReport& report, std::ostream& os, const ReportOptions& options) {
  JsonWriter w(os);
  w.begin_object();
  write_spec(w, report.spec);
  os << '\n';
  w.key("summary").begin_object();
  w.field("examined", report.examined)
      .field("holding", report.holding)
      .field("trivial", report.trivial)
      .field("failed", report.failed);
  if (options.include_timing)
    w.field("wall_ms", static_cast<long long>(report.wall_time.count()));
  else
    w.key("wall_ms").null();
  w.end_object();
  os << '\n';
  w.key("rows").begin_array();
  for (const auto& row : report.rows) {
    os << '\n';
    const auto& s = row.params;
    w.begin_object();
    w.key("params").begin_object();
    w.field("i", s.i()).field("j", s.j()).field("k", s.k()).field("l", s.l()).field("r", s.r()).field("c", s.c());
    if (row.pair) w.field("p", row.pair->p()).field("q", row.pair->q());
    w.end_object();
    w.field("class", to_string(row.cls)).field("holds", row.holds);
    if (row.lhs)
      w.field("lhs", *row.lhs);
    else
      w.key("lhs").null();
    if (row.rhs)
      w.field("rhs", *row.rhs);
    else
      w.key("rhs").null();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  os << '\n';
}

}  // namespace detail

inline void write_report(const SweepReport& report, ReportFormat format, std::ostream& destination,
                         const ReportOptions& options = {}) {
  if (format == ReportFormat::Csv)
    detail::write_csv(report, destination);
  else
    detail::write_json(report, destination, options);
  destination.flush();
  if (!destination) throw IoError("failed to write the sweep report");
}

}  // namespace schubert
