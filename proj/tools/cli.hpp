#pragma once

// Command-line driver. Exit codes: 0 when every checked identity holds,
// 1 when one fails or a cross-check disagrees, 2 on invalid input.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "schubert/schubert.hpp"

namespace schubert::cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Exit : int { Ok = 0, Failure = 1, Usage = 2 };

inline int code(Exit e) { return static_cast<int>(e); }

inline int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw UsageError(std::string(what) + ": expected an integer, got '" + std::string(text) + "'");
  return value;
}

/// "lo:hi", both inclusive; a bare "n" means n:n.
inline Interval parse_range(std::string_view text, std::string_view what) {
  const auto colon = text.find(':');
  Interval iv;
  if (colon == std::string_view::npos) {
    iv.lo = iv.hi = parse_int(text, what);
  } else {
    iv.lo = parse_int(text.substr(0, colon), what);
    iv.hi = parse_int(text.substr(colon + 1), what);
  }
  if (iv.empty()) throw UsageError(std::string(what) + ": range " + std::string(text) + " is empty");
  return iv;
}

inline NegativeIndexRule parse_rule(const std::string& name) {
  return name == "zero" ? NegativeIndexRule::Zero : NegativeIndexRule::Reflection;
}

inline std::size_t resolve_jobs(const std::optional<int>& flag) {
  if (flag) {
    if (*flag < 1) throw UsageError("--jobs must be positive");
    return static_cast<std::size_t>(*flag);
  }
  if (const char* env = std::getenv("SCHUBERT_JOBS"); env && *env) {
    const int n = parse_int(env, "SCHUBERT_JOBS");
    if (n < 1) throw UsageError("SCHUBERT_JOBS must be positive");
    return static_cast<std::size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline void write_params(JsonWriter& w, const SchubertParams& s) {
  w.key("params").begin_object();
  w.field("i", s.i()).field("j", s.j()).field("k", s.k()).field("l", s.l()).field("r", s.r()).field("c", s.c());
  w.end_object();
}

// ---------------------------------------------------------------------------

struct PoincareArgs {
  int k = 0, l = 0;
  std::string format = "text";
};

inline int cmd_poincare(const PoincareArgs& a, std::ostream& out) {
  const Polynomial& g = gauss(a.k, a.l);
  if (a.format == "json") {
    JsonWriter w(out);
    w.begin_object().field("k", a.k).field("l", a.l).field("poincare", g).end_object();
    out << '\n';
  } else {
    out << g << '\n';
  }
  return code(Exit::Ok);
}

struct IhArgs {
  int i = 0, j = 0, k = 0, l = 0;
  std::optional<int> p;
  std::string format = "text";
};

inline int cmd_ih(const IhArgs& a, std::ostream& out, std::ostream& err) {
  const SchubertParams s(a.i, a.j, a.k, a.l);
  if (classify(s) != ParamClass::Geometric)
    throw UsageError(to_string(s) + " is " + to_string(classify(s)) + ", the IH table needs a GEOMETRIC tuple");
  if (a.p) detail::require_stratum(s, *a.p);

  const IHTable table = solve_backsub(s);
  const int lo = a.p ? *a.p : 1;
  const int hi = a.p ? *a.p : s.r() + 1;
  bool all_match = true;

  std::optional<JsonWriter> w;
  if (a.format == "json") {
    w.emplace(out);
    w->begin_object();
    write_params(*w, s);
    w->key("entries").begin_array();
  }
  for (int p = lo; p <= hi; ++p) {
    const Polynomial& ip = table.at(p);
    const bool match = ip == ih_closed_form(s, p);
    all_match = all_match && match;
    const int m = dim_stratum(s, p);
    if (w) {
      w->begin_object().field("p", p).field("m", m).field("ih", ip).field("closed_form_match", match).end_object();
    } else {
      out << "I_" << p << " = " << ip << "    [m_" << p << " = " << m << ", closed form "
          << (match ? "agrees" : "DISAGREES") << "]\n";
    }
  }
  if (w) {
    w->end_array().end_object();
    out << '\n';
  }
  if (!all_match) err << "error: the recursion and the closed form disagree for " << to_string(s) << '\n';
  return code(all_match ? Exit::Ok : Exit::Failure);
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  IdentityKind kind = IdentityKind::Global;
  int i = 0, j = 0, k = 0, l = 0;
  int c = 0, r = 0;
  std::optional<int> p, q;
  bool all_pairs = false;
  std::string rule = "reflection";
  std::string format = "text";
};

inline void render_text(const IdentityVerdict& v, std::ostream& out) {
  out << to_string(v.kind) << ' ';
  if (v.triple) {
    const char* third = v.kind == IdentityKind::AppendixKi2 ? "c" : "r";
    out << "(i,j," << third << ")=(" << v.triple->i << ',' << v.triple->j << ',' << v.triple->third << ") ";
  }
  out << to_string(v.params);
  if (v.pair) out << " (p,q)=(" << v.pair->p() << ',' << v.pair->q() << ')';
  out << ": " << (v.holds ? "holds" : "FAILS") << '\n';
  const char* suffix = v.over_common_denominator ? " numerator" : "";
  out << "  lhs" << suffix << " = " << v.lhs << '\n';
  out << "  rhs" << suffix << " = " << v.rhs << '\n';
}

inline void render_json(const IdentityVerdict& v, JsonWriter& w) {
  w.begin_object();
  w.field("identity", to_string(v.kind));
  write_params(w, v.params);
  if (v.pair) w.field("p", v.pair->p()).field("q", v.pair->q());
  if (v.triple) {
    w.key("triple").begin_array().value(v.triple->i).value(v.triple->j).value(v.triple->third).end_array();
  }
  w.field("holds", v.holds).field("over_common_denominator", v.over_common_denominator);
  w.field("lhs", v.lhs).field("rhs", v.rhs);
  w.end_object();
}

inline std::vector<IdentityVerdict> run_verify(const VerifyArgs& a) {
  std::vector<IdentityVerdict> verdicts;
  switch (a.kind) {
    case IdentityKind::Global:
      verdicts.push_back(check_global(SchubertParams(a.i, a.j, a.k, a.l)));
      break;
    case IdentityKind::Local: {
      const SchubertParams s(a.i, a.j, a.k, a.l);
      if (a.all_pairs) {
        detail::require_symbolic(s);
        for (int p = 2; p <= s.r() + 1; ++p)
          for (int q = 1; q < p; ++q) verdicts.push_back(check_local(s, StratumPair(p, q)));
      } else {
        verdicts.push_back(check_local(s, StratumPair(*a.p, *a.q)));
      }
      break;
    }
    case IdentityKind::AppendixKi2:
      verdicts.push_back(appendix_f(a.i, a.j, a.c, parse_rule(a.rule)));
      break;
    case IdentityKind::AppendixKc2:
      verdicts.push_back(appendix_ff(a.i, a.j, a.r, parse_rule(a.rule)));
      break;
  }
  return verdicts;
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto verdicts = run_verify(a);
  bool all = true;
  for (const auto& v : verdicts) all = all && v.holds;
  if (a.format == "json") {
    JsonWriter w(out);
    w.begin_object().key("verdicts").begin_array();
    for (const auto& v : verdicts) render_json(v, w);
    w.end_array().field("all_hold", all).end_object();
    out << '\n';
  } else {
    for (const auto& v : verdicts) render_text(v, out);
  }
  return code(all ? Exit::Ok : Exit::Failure);
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string identity;
  std::optional<std::string> i, r, j, c;
  std::optional<int> j_max;
  bool c_equals_r = false;
  std::optional<std::string> mode;
  std::optional<std::string> rule;
  std::string format = "csv";
  std::optional<std::string> out_path;
  std::optional<int> jobs;
  int cap = 32;
  bool no_timing = false;
};

inline IdentityKind parse_kind(const std::string& name) {
  if (name == "local") return IdentityKind::Local;
  if (name == "appendix-ki2") return IdentityKind::AppendixKi2;
  if (name == "appendix-kc2") return IdentityKind::AppendixKc2;
  return IdentityKind::Global;
}

inline SweepSpec build_spec(const SweepArgs& a) {
  SweepSpec spec;
  spec.kind = parse_kind(a.identity);
  const bool appendix = spec.kind == IdentityKind::AppendixKi2 || spec.kind == IdentityKind::AppendixKc2;

  auto need = [](const std::optional<std::string>& v, const char* flag) -> const std::string& {
    if (!v) throw UsageError(std::string("sweep: ") + flag + " lo:hi is required for this identity");
    return *v;
  };
  auto forbid = [&](bool given, const char* flag) {
    if (given) throw UsageError(std::string("sweep: ") + flag + " does not apply to --identity " + a.identity);
  };

  spec.i = parse_range(need(a.i, "--i"), "--i");
  if (a.j && a.j_max) throw UsageError("sweep: give either --j or --j-max, not both");
  if (!a.j && !a.j_max) throw UsageError("sweep: --j lo:hi or --j-max N is required");
  if (a.j) {
    spec.j = parse_range(*a.j, "--j");
  } else {
    // The floor is implied: r + i for global and local sweeps, i for k - c = 2.
    spec.j = Interval{spec.kind == IdentityKind::AppendixKi2 ? 1 : 0, *a.j_max};
    if (spec.j.empty()) throw UsageError("sweep: --j-max is below the smallest admissible j");
  }

  switch (spec.kind) {
    case IdentityKind::Global:
    case IdentityKind::Local:
      spec.r = parse_range(need(a.r, "--r"), "--r");
      if (a.c) spec.c = parse_range(*a.c, "--c");
      forbid(a.rule.has_value(), "--h-rule");
      spec.c_equals_r = a.c_equals_r;
      if (a.c_equals_r) {
        if (a.mode && *a.mode == "geometric")
          throw UsageError("sweep: --c-equals-r tuples are not geometric; drop --mode geometric");
        spec.mode = ConstraintMode::IncludeSymbolic;
      } else if (a.mode) {
        spec.mode = *a.mode == "symbolic" ? ConstraintMode::IncludeSymbolic : ConstraintMode::GeometricOnly;
      }
      break;
    case IdentityKind::AppendixKi2:
      spec.c = parse_range(need(a.c, "--c"), "--c");
      forbid(a.r.has_value(), "--r");
      break;
    case IdentityKind::AppendixKc2:
      spec.r = parse_range(need(a.r, "--r"), "--r");
      forbid(a.c.has_value(), "--c");
      break;
  }
  if (appendix) {
    forbid(a.c_equals_r, "--c-equals-r");
    forbid(a.mode.has_value(), "--mode");
    if (a.rule) spec.rule = parse_rule(*a.rule);
  }
  if (a.cap < 0) throw UsageError("sweep: --cap must be nonnegative");
  spec.counterexample_cap = static_cast<std::size_t>(a.cap);
  spec.parallelism = resolve_jobs(a.jobs);
  spec.keep_polynomials = a.format == "json";
  detail::validate(spec);
  return spec;
}

inline int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const SweepSpec spec = build_spec(a);
  const SweepReport report = run_sweep(spec);

  const ReportFormat format = a.format == "json" ? ReportFormat::Json : ReportFormat::Csv;
  const ReportOptions options{!a.no_timing};
  if (a.out_path) {
    std::ofstream file(*a.out_path, std::ios::binary);
    if (!file) throw IoError("cannot open " + *a.out_path + " for writing");
    write_report(report, format, file, options);
  } else {
    write_report(report, format, out, options);
  }

  err << to_string(spec.kind) << " sweep: " << report.examined << " examined, " << report.holding << " holding, "
      << report.trivial << " trivial, " << report.failed << " failed (" << report.wall_time.count() << " ms, "
      << spec.parallelism << " jobs)\n";
  for (const auto& v : report.counterexamples) {
    err << "counterexample: ";
    render_text(v, err);
  }
  if (report.failed > report.counterexamples.size())
    err << "(" << report.failed - report.counterexamples.size() << " more counterexamples not shown)\n";
  return code(report.failed == 0 ? Exit::Ok : Exit::Failure);
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincare polynomials of Grassmannians and of intersection cohomology of single-condition "
               "Schubert varieties; exact checks of the decomposition identities."};
  app.name("schubert");
  app.require_subcommand(1);
  const auto text_json = CLI::IsMember({"text", "json"});
  const auto rules = CLI::IsMember({"zero", "reflection"});

  PoincareArgs pa;
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of G_k(C^l)");
  poincare->add_option("--k", pa.k, "subspace dimension")->required();
  poincare->add_option("--l", pa.l, "ambient dimension")->required();
  poincare->add_option("--format", pa.format, "text or json")->check(text_json);

  IhArgs ia;
  auto* ih = app.add_subcommand("ih", "intersection cohomology Poincare polynomials of all strata");
  ih->add_option("--i", ia.i)->required();
  ih->add_option("--j", ia.j)->required();
  ih->add_option("--k", ia.k)->required();
  ih->add_option("--l", ia.l)->required();
  ih->add_option("--p", ia.p, "print only stratum p");
  ih->add_option("--format", ia.format, "text or json")->check(text_json);

  VerifyArgs va_local, va_global, va_ki2, va_kc2;
  va_local.kind = IdentityKind::Local;
  va_global.kind = IdentityKind::Global;
  va_ki2.kind = IdentityKind::AppendixKi2;
  va_kc2.kind = IdentityKind::AppendixKc2;

  auto add_ijkl = [](CLI::App* sub, VerifyArgs& v) {
    sub->add_option("--i", v.i)->required();
    sub->add_option("--j", v.j)->required();
    sub->add_option("--k", v.k)->required();
    sub->add_option("--l", v.l)->required();
    sub->add_option("--format", v.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify_local = app.add_subcommand("verify-local", "check the local identity for one or all pairs (p,q)");
  add_ijkl(verify_local, va_local);
  auto* opt_p = verify_local->add_option("--p", va_local.p);
  auto* opt_q = verify_local->add_option("--q", va_local.q);
  auto* opt_all = verify_local->add_flag("--all-pairs", va_local.all_pairs, "every 0 < q < p <= r+1");
  opt_p->needs(opt_q)->excludes(opt_all);
  opt_q->needs(opt_p)->excludes(opt_all);

  auto* verify_global = app.add_subcommand("verify-global", "check the global identity");
  add_ijkl(verify_global, va_global);

  auto* verify_ki2 = app.add_subcommand("verify-appendix-ki2", "check the k - i = 2 specialization");
  verify_ki2->add_option("--i", va_ki2.i)->required();
  verify_ki2->add_option("--j", va_ki2.j)->required();
  verify_ki2->add_option("--c", va_ki2.c)->required();
  verify_ki2->add_option("--h-rule", va_ki2.rule, "h_n for n < 0: zero or reflection")->check(rules);
  verify_ki2->add_option("--format", va_ki2.format, "text or json")->check(text_json);

  auto* verify_kc2 = app.add_subcommand("verify-appendix-kc2", "check the k - c = 2 specialization");
  verify_kc2->add_option("--i", va_kc2.i)->required();
  verify_kc2->add_option("--j", va_kc2.j)->required();
  verify_kc2->add_option("--r", va_kc2.r)->required();
  verify_kc2->add_option("--h-rule", va_kc2.rule, "h_n for n < 0: zero or reflection")->check(rules);
  verify_kc2->add_option("--format", va_kc2.format, "text or json")->check(text_json);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "check an identity over a box of parameters");
  sweep->add_option("--identity", sa.identity)
      ->required()
      ->check(CLI::IsMember({"global", "local", "appendix-ki2", "appendix-kc2"}));
  sweep->add_option("--i", sa.i, "lo:hi");
  sweep->add_option("--r", sa.r, "lo:hi");
  sweep->add_option("--j", sa.j, "lo:hi");
  sweep->add_option("--j-max", sa.j_max, "upper bound for j, lower bound implied");
  sweep->add_option("--c", sa.c, "lo:hi");
  sweep->add_flag("--c-equals-r", sa.c_equals_r, "pin c = r (symbolic mode)");
  sweep->add_option("--mode", sa.mode, "geometric or symbolic")->check(CLI::IsMember({"geometric", "symbolic"}));
  sweep->add_option("--h-rule", sa.rule, "zero or reflection")->check(rules);
  sweep->add_option("--format", sa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", sa.out_path, "write the report here instead of standard output");
  sweep->add_option("--jobs", sa.jobs, "worker threads (default: $SCHUBERT_JOBS, then all cores)");
  sweep->add_option("--cap", sa.cap, "maximum counterexamples kept");
  sweep->add_flag("--no-timing", sa.no_timing, "write wall_ms as null in JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? code(Exit::Ok) : code(Exit::Usage);
  }

  try {
    if (*poincare) return cmd_poincare(pa, out);
    if (*ih) return cmd_ih(ia, out, err);
    if (*verify_local) {
      if (!va_local.all_pairs && !va_local.p)
        throw UsageError("verify-local: give --p and --q, or --all-pairs");
      return cmd_verify(va_local, out);
    }
    if (*verify_global) return cmd_verify(va_global, out);
    if (*verify_ki2) return cmd_verify(va_ki2, out);
    if (*verify_kc2) return cmd_verify(va_kc2, out);
    if (*sweep) return cmd_sweep(sa, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return code(Exit::Usage);
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return code(Exit::Usage);
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return code(Exit::Usage);
  } catch (const SpecInvalid& e) {
    err << "error: " << e.what() << '\n';
    return code(Exit::Usage);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return code(Exit::Usage);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return code(Exit::Failure);
  }
  return code(Exit::Usage);
}

}  // namespace schubert::cli
