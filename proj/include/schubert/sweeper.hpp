#pragma once

// Exhaustive verification of an identity over a box of parameters.
//
// Global and local sweeps enumerate (i, r, j, c) lexicographically with
// k = r + i, l = j + c, j >= r + i, and c restricted to a window that depends
// on the constraint mode:
//   GeometricOnly    c in [r+1, r+i-1]
//   IncludeSymbolic  c in [r, r+i]      (or exactly c = r when pinned)
// The specialization sweeps enumerate (i, j, c) and (i, j, r).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/identities.hpp"
#include "schubert/strata.hpp"

namespace schubert {

enum class ConstraintMode { GeometricOnly, IncludeSymbolic };

inline const char* to_string(ConstraintMode mode) {
  return mode == ConstraintMode::GeometricOnly ? "geometric" : "symbolic";
}

inline const char* to_string(NegativeIndexRule rule) {
  return rule == NegativeIndexRule::Zero ? "zero" : "reflection";
}

/// Inclusive integer interval.
struct Interval {
  int lo = 0;
  int hi = 0;
  bool empty() const { return lo > hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SweepSpec {
  IdentityKind kind = IdentityKind::Global;
  Interval i{1, 1};
  Interval r{2, 2};
  /// Global and local sweeps raise the lower bound to r + i.
  Interval j{0, 0};
  /// Required for the k - i = 2 specialization; for global and local sweeps an
  /// optional absolute filter on top of the mode's window.
  std::optional<Interval> c;
  bool c_equals_r = false;
  ConstraintMode mode = ConstraintMode::GeometricOnly;
  NegativeIndexRule rule = NegativeIndexRule::Reflection;
  std::size_t parallelism = 1;
  std::size_t counterexample_cap = 32;
  /// Keep both sides of every row (needed for JSON output).
  bool keep_polynomials = true;
};

struct SweepRow {
  IdentityKind kind = IdentityKind::Global;
  SchubertParams params{0, 0, 0, 0};
  std::optional<StratumPair> pair;
  std::optional<AppendixTriple> triple;
  ParamClass cls = ParamClass::Invalid;
  bool holds = false;
  std::optional<std::size_t> lhs_degree;
  std::optional<std::size_t> rhs_degree;
  Integer lhs_at_1;
  Integer rhs_at_1;
  std::optional<Polynomial> lhs;
  std::optional<Polynomial> rhs;
};

/// examined = holding + trivial + failed, where trivial counts holding rows
/// tagged TRIVIAL_EDGE and failed is exact even when fewer counterexamples
/// are kept.
struct SweepReport {
  SweepSpec spec;
  std::size_t examined = 0;
  std::size_t holding = 0;
  std::size_t trivial = 0;
  std::size_t failed = 0;
  std::vector<SweepRow> rows;
  std::vector<IdentityVerdict> counterexamples;
  std::chrono::milliseconds wall_time{0};
};

namespace detail {

struct SweepTask {
  SchubertParams params;
  std::optional<StratumPair> pair;
  std::optional<AppendixTriple> triple;
};

inline void require_interval(const Interval& iv, const char* name) {
  if (iv.empty())
    throw SpecInvalid(std::string("range for ") + name + " is empty: " + std::to_string(iv.lo) + ":" +
                      std::to_string(iv.hi));
}

inline void require_floor(const Interval& iv, int floor, const char* name) {
  if (iv.lo < floor)
    throw SpecInvalid(std::string("range for ") + name + " must start at " + std::to_string(floor) +
                      " or above");
}

inline void validate(const SweepSpec& spec) {
  if (spec.parallelism == 0) throw SpecInvalid("parallelism must be positive");
  require_interval(spec.i, "i");
  require_interval(spec.j, "j");
  switch (spec.kind) {
    case IdentityKind::Global:
    case IdentityKind::Local: {
      require_interval(spec.r, "r");
      if (spec.c) require_interval(*spec.c, "c");
      const int floor = spec.mode == ConstraintMode::GeometricOnly ? 1 : 0;
      require_floor(spec.i, floor, "i");
      require_floor(spec.r, floor, "r");
      if (spec.c_equals_r && spec.mode == ConstraintMode::GeometricOnly)
        throw SpecInvalid("c = r tuples are not geometric; use the symbolic mode");
      break;
    }
    case IdentityKind::AppendixKi2:
      if (!spec.c) throw SpecInvalid("the k-i=2 specialization needs a range for c");
      require_interval(*spec.c, "c");
      require_floor(*spec.c, 2, "c");
      require_floor(spec.i, 1, "i");
      require_floor(spec.j, 1, "j");
      break;
    case IdentityKind::AppendixKc2:
      require_interval(spec.r, "r");
      require_floor(spec.i, 2, "i");
      require_floor(spec.r, 0, "r");
      break;
  }
}

inline std::vector<SweepTask> enumerate(const SweepSpec& spec) {
  std::vector<SweepTask> tasks;
  switch (spec.kind) {
    case IdentityKind::Global:
    case IdentityKind::Local:
      for (int i = spec.i.lo; i <= spec.i.hi; ++i)
        for (int r = spec.r.lo; r <= spec.r.hi; ++r)
          for (int j = std::max(spec.j.lo, r + i); j <= spec.j.hi; ++j) {
            int c_lo = spec.mode == ConstraintMode::GeometricOnly ? r + 1 : r;
            int c_hi = spec.mode == ConstraintMode::GeometricOnly ? r + i - 1 : r + i;
            if (spec.c_equals_r) c_hi = c_lo = r;
            if (spec.c) {
              c_lo = std::max(c_lo, spec.c->lo);
              c_hi = std::min(c_hi, spec.c->hi);
            }
            for (int c = c_lo; c <= c_hi; ++c) {
              const SchubertParams s(i, j, r + i, j + c);
              const ParamClass cls = classify(s);
              const bool agrees = spec.mode == ConstraintMode::GeometricOnly ? cls == ParamClass::Geometric
                                                                              : is_symbolic(cls);
              if (!agrees)
                throw InternalInconsistency("sweep enumerated " + to_string(s) + " classified " +
                                            to_string(cls));
              if (spec.kind == IdentityKind::Global) {
                tasks.push_back({s, std::nullopt, std::nullopt});
                continue;
              }
              for (int p = 2; p <= r + 1; ++p)
                for (int q = 1; q < p; ++q) tasks.push_back({s, StratumPair(p, q), std::nullopt});
            }
          }
      break;
    case IdentityKind::AppendixKi2:
      for (int i = spec.i.lo; i <= spec.i.hi; ++i)
        for (int j = spec.j.lo; j <= spec.j.hi; ++j)
          for (int c = spec.c->lo; c <= spec.c->hi; ++c)
            tasks.push_back({SchubertParams(i, j, i + 2, j + c), std::nullopt, AppendixTriple{i, j, c}});
      break;
    case IdentityKind::AppendixKc2:
      for (int i = spec.i.lo; i <= spec.i.hi; ++i)
        for (int j = std::max(spec.j.lo, i); j <= spec.j.hi; ++j)
          for (int r = spec.r.lo; r <= spec.r.hi; ++r)
            tasks.push_back({SchubertParams(i, j, r + i, j + r + i - 2), std::nullopt, AppendixTriple{i, j, r}});
      break;
  }
  return tasks;
}

inline IdentityVerdict run_task(const SweepSpec& spec, const SweepTask& task) {
  switch (spec.kind) {
    case IdentityKind::Global: return check_global(task.params);
    case IdentityKind::Local: return check_local(task.params, *task.pair);
    case IdentityKind::AppendixKi2: return appendix_f(task.triple->i, task.triple->j, task.triple->third, spec.rule);
    case IdentityKind::AppendixKc2: return appendix_ff(task.triple->i, task.triple->j, task.triple->third, spec.rule);
  }
  throw SpecInvalid("unknown identity kind");
}

inline SweepRow summarize(const SweepSpec& spec, const SweepTask& task, const IdentityVerdict& v) {
  SweepRow row;
  row.kind = spec.kind;
  row.params = task.params;
  row.pair = task.pair;
  row.triple = task.triple;
  row.cls = classify(task.params);
  row.holds = v.holds;
  row.lhs_degree = v.lhs.degree();
  row.rhs_degree = v.rhs.degree();
  row.lhs_at_1 = eval_at_one(v.lhs);
  row.rhs_at_1 = eval_at_one(v.rhs);
  if (spec.keep_polynomials) {
    row.lhs = v.lhs;
    row.rhs = v.rhs;
  }
  return row;
}

}  // namespace detail

/// Runs every admissible tuple of the box. Rows come back in enumeration
/// order whatever the parallelism.
inline SweepReport run_sweep(const SweepSpec& spec) {
  detail::validate(spec);
  const auto start = std::chrono::steady_clock::now();
  const auto tasks = detail::enumerate(spec);

  std::vector<SweepRow> rows(tasks.size());
  std::vector<std::optional<IdentityVerdict>> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> stop{false};
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size() || stop.load()) return;
      try {
        auto verdict = detail::run_task(spec, tasks[idx]);
        rows[idx] = detail::summarize(spec, tasks[idx], verdict);
        if (!verdict.holds) failures[idx] = std::move(verdict);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
        return;
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(spec.parallelism, tasks.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.spec = spec;
  report.examined = rows.size();
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    if (!rows[idx].holds) {
      ++report.failed;
      if (report.counterexamples.size() < spec.counterexample_cap)
        report.counterexamples.push_back(std::move(*failures[idx]));
    } else if (rows[idx].cls == ParamClass::TrivialEdge) {
      ++report.trivial;
    } else {
      ++report.holding;
    }
  }
  report.rows = std::move(rows);
  report.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace schubert
