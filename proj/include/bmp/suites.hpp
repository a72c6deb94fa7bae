#pragma once

// Named verification suites over ranges of m, each producing a PropertyReport.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmp/coefficients.hpp"
#include "bmp/exact.hpp"
#include "bmp/hypergeometric.hpp"
#include "bmp/parallel.hpp"
#include "bmp/recurrence.hpp"
#include "bmp/report.hpp"
#include "bmp/scan.hpp"
#include "bmp/sequence.hpp"
#include "bmp/tfunction.hpp"

namespace bmp {

/// Invalid suite parameters (as opposed to a mathematical failure).
class config_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SuiteOptions {
  Index max_m = 100;
  std::size_t depth = 3;
  unsigned jobs = 1;
};

struct Failure {
  json location;
  json values;
};

namespace detail {

/// Runs fn(m) for lo <= m <= hi and keeps the failure with the smallest m.
template <class Fn>
PropertyReport check_each(std::string property, std::string range, Index lo, Index hi, unsigned jobs, Fn&& fn) {
  Stopwatch clock;
  PropertyReport rep;
  rep.property = std::move(property);
  rep.range = std::move(range);
  if (hi >= lo) {
    const auto results =
        parallel_map(hi - lo + 1, jobs, [&](std::size_t i) -> std::optional<Failure> { return fn(lo + i); });
    for (const auto& r : results)
      if (r) {
        rep.fail(r->location, r->values);
        break;
      }
  }
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

inline void require_max(const SuiteOptions& o, Index minimum, const std::string& name) {
  if (o.max_m < minimum)
    throw config_error(name + ": max-m must be at least " + std::to_string(minimum) + ", got " +
                       std::to_string(o.max_m));
}

inline std::string span_text(const char* var, Index lo, Index hi) {
  return std::to_string(lo) + " <= " + var + " <= " + std::to_string(hi);
}

inline json row_json(const std::vector<Rational>& row) {
  json out = json::array();
  for (const auto& v : row) out.push_back(to_string(v));
  return out;
}

}  // namespace detail

inline PropertyReport verify_unimodal(const SuiteOptions& o) {
  detail::require_max(o, 1, "unimodal");
  return detail::check_each("unimodal", detail::span_text("m", 0, o.max_m), 0, o.max_m, o.jobs,
                            [](Index m) -> std::optional<Failure> {
                              const auto row = coefficient_row(m);
                              if (is_unimodal<Rational>(row.values)) return std::nullopt;
                              return Failure{{{"m", m}}, {{"row", detail::row_json(row.values)}}};
                            });
}

inline PropertyReport verify_logconcave(const SuiteOptions& o) {
  detail::require_max(o, 1, "logconcave");
  return detail::check_each("logconcave", detail::span_text("m", 0, o.max_m), 0, o.max_m, o.jobs,
                            [](Index m) -> std::optional<Failure> {
                              const auto row = coefficient_row(m);
                              if (is_logconcave<Rational>(row.values)) return std::nullopt;
                              return Failure{{{"m", m}}, {{"row", detail::row_json(row.values)}}};
                            });
}

inline PropertyReport verify_ilogconcave(const SuiteOptions& o) {
  detail::require_max(o, 1, "ilogconcave");
  ScanConfig cfg;
  cfg.max_m = o.max_m;
  cfg.depth = o.depth;
  cfg.jobs = o.jobs;
  auto rep = scan_infinite_logconcavity(cfg);
  rep.property = "ilogconcave";
  return rep;
}

inline PropertyReport verify_ratio_monotone(const SuiteOptions& o) {
  detail::require_max(o, 2, "ratio-monotone");
  return detail::check_each("ratio-monotone", detail::span_text("m", 2, o.max_m), 2, o.max_m, o.jobs,
                            [](Index m) -> std::optional<Failure> {
                              const auto row = coefficient_row(m);
                              if (is_ratio_monotone<Rational>(row.values)) return std::nullopt;
                              return Failure{{{"m", m}}, {{"row", detail::row_json(row.values)}}};
                            });
}

/// Minimum over 1 <= l <= m sits at l = m with the closed-form value.
inline PropertyReport verify_min_functional(const SuiteOptions& o) {
  detail::require_max(o, 2, "min-functional");
  auto rep = detail::check_each(
      "min-functional", detail::span_text("m", 2, o.max_m) + ", 1 <= l <= m", 2, o.max_m, o.jobs,
      [](Index m) -> std::optional<Failure> {
        const auto b = scaled_row(m);
        const Integer at_m = minimum_functional(b, m, m);
        const Integer expected = minimum_functional_expected(m);
        if (at_m != expected)
          return Failure{{{"m", m}, {"l", m}}, {{"value", to_string(at_m)}, {"expected", to_string(expected)}}};
        for (Index l = 1; l < m; ++l) {
          const Integer v = minimum_functional(b, m, l);
          if (v < at_m)
            return Failure{{{"m", m}, {"l", l}}, {{"value", to_string(v)}, {"value_at_m", to_string(at_m)}}};
        }
        return std::nullopt;
      });
  const auto b = scaled_row(o.max_m);
  rep.notes.push_back("at m = " + std::to_string(o.max_m) + ", l = m: corrected form " +
                      to_string(minimum_functional(b, o.max_m, o.max_m)) + ", uncorrected form (last term l(2m+1)b_{l-1}) " +
                      to_string(minimum_functional_uncorrected(b, o.max_m, o.max_m)) + ", expected " +
                      to_string(minimum_functional_expected(o.max_m)));
  return rep;
}

/// d_{l+1}(m) - d_l(m) is positive for l < floor(m/2) and negative from there on; both
/// difference formulas agree.
inline PropertyReport verify_delta_signs(const SuiteOptions& o) {
  detail::require_max(o, 1, "delta-signs");
  return detail::check_each("delta-signs", detail::span_text("m", 1, o.max_m) + ", 0 <= l < m", 1, o.max_m, o.jobs,
                            [](Index m) -> std::optional<Failure> {
                              for (Index l = 0; l < m; ++l) {
                                const Rational direct = delta_direct(m, l);
                                const Rational closed = delta_closed(m, l);
                                const bool sign_ok = l < m / 2 ? direct > 0 : direct < 0;
                                if (!sign_ok || direct != closed)
                                  return Failure{{{"m", m}, {"l", l}},
                                                 {{"delta_direct", to_string(direct)},
                                                  {"delta_closed", to_string(closed)}}};
                              }
                              return std::nullopt;
                            });
}

inline PropertyReport verify_inequality_chain(const SuiteOptions& o) {
  detail::require_max(o, 2, "inequality-chain");
  return detail::check_each(
      "inequality-chain", detail::span_text("m", 2, o.max_m) + ", 0 <= l < floor(m/2)", 2, o.max_m, o.jobs,
      [](Index m) -> std::optional<Failure> {
        for (Index l = 0; 2 * (l + 1) <= m; ++l) {
          const auto c = inequality_chain_check(m, l);
          if (!c.all_hold())
            return Failure{{{"m", m}, {"l", l}},
                           {{"task1", c.task1},
                            {"task2", c.task2},
                            {"task3", c.task3},
                            {"task4", c.task4},
                            {"chain_consistent", c.chain_consistent},
                            {"S", to_string(c.s)}}};
        }
        return std::nullopt;
      });
}

/// S_{m,l} strictly increasing for 0 <= l < floor(m/2), and S_{m,floor((m-1)/2)} < 1.
inline PropertyReport verify_s_monotone(const SuiteOptions& o) {
  detail::require_max(o, 2, "s-monotone");
  return detail::check_each("s-monotone", detail::span_text("m", 2, o.max_m), 2, o.max_m, o.jobs,
                            [](Index m) -> std::optional<Failure> {
                              const Index top = m / 2;  // compare l and l+1 for l + 1 < top
                              Rational prev = s_sum(m, 0);
                              for (Index l = 0; l + 1 < top; ++l) {
                                Rational next = s_sum(m, l + 1);
                                if (!(prev < next))
                                  return Failure{{{"m", m}, {"l", l}},
                                                 {{"S(m,l)", to_string(prev)}, {"S(m,l+1)", to_string(next)}}};
                                prev = std::move(next);
                              }
                              const Index lmax = (m - 1) / 2;
                              const Rational maximal = s_sum(m, lmax);
                              if (maximal < 1) return std::nullopt;
                              return Failure{{{"m", m}, {"l", lmax}}, {{"S", to_string(maximal)}}};
                            });
}

/// T(m) < 1; for m >= 2 also T(m) <= 27/28, T(m) below the geometric envelope, the
/// integral prefactor at most 9/112, and C(2r,r)C(m+1,r) <= C(4m,r) for every r.
inline PropertyReport verify_t_bounds(const SuiteOptions& o) {
  detail::require_max(o, 1, "t-bounds");
  const Rational cap(27, 28);
  const Rational prefactor_cap(9, 112);
  return detail::check_each(
      "t-bounds", detail::span_text("m", 1, o.max_m), 1, o.max_m, o.jobs, [&](Index m) -> std::optional<Failure> {
        const Rational t = t_direct(m);
        const json where{{"m", m}};
        if (!(t < 1)) return Failure{where, {{"T", to_string(t)}, {"bound", "1"}}};
        if (m < 2) return std::nullopt;
        if (t > cap) return Failure{where, {{"T", to_string(t)}, {"bound", "27/28"}}};
        const Rational envelope = geometric_tail_bound(m);
        if (!(t < envelope)) return Failure{where, {{"T", to_string(t)}, {"bound", to_string(envelope)}}};
        if (integral_prefactor(m) > prefactor_cap)
          return Failure{where, {{"prefactor", to_string(integral_prefactor(m))}, {"bound", "9/112"}}};
        for (Index r = 2; r <= m + 1; ++r)
          if (!bound_pair_check(m, r)) return Failure{{{"m", m}, {"r", r}}, {{"check", "C(2r,r)C(m+1,r) <= C(4m,r)"}}};
        return std::nullopt;
      });
}

/// Every representation of T(m) agrees, and S_{2m,m-1} = T(m).
inline PropertyReport verify_t_crosscheck(const SuiteOptions& o) {
  detail::require_max(o, 1, "t-crosscheck");
  auto rep = detail::check_each(
      "t-crosscheck", detail::span_text("m", 1, o.max_m), 1, o.max_m, o.jobs, [](Index m) -> std::optional<Failure> {
        const auto b = t_bundle(m);
        const Rational s = s_sum(2 * m, m - 1);
        if (b.consistent() && s == b.direct) return std::nullopt;
        return Failure{{{"m", m}},
                       {{"direct", to_string(b.direct)},
                        {"hypergeometric", to_string(b.hypergeometric)},
                        {"integral", b.integral ? to_string(*b.integral) : std::string("undefined")},
                        {"via_w", to_string(b.via_w)},
                        {"s_sum", to_string(s)}}};
      });
  rep.notes.push_back("uncorrected W identity [W'(x)/2 - W(x)] at x = 1/2, m = 1: " + to_string(t_via_w_uncorrected(1)) +
                      " (T(1) = " + to_string(t_direct(1)) + ")");
  return rep;
}

/// Structural facts about the recurrence plus a zero residual for 1 <= n <= max_m.
inline PropertyReport verify_recurrence(const SuiteOptions& o) {
  detail::require_max(o, 1, "recurrence");
  Stopwatch clock;
  PropertyReport rep;
  rep.property = "recurrence";
  rep.range = detail::span_text("n", 1, o.max_m);
  if (!b_identity_check()) rep.fail(json{{"check", "b = a + c + d"}}, json::object());
  const auto shift = d_shift_positivity();
  if (!shift.all_positive || !shift.matches_published) {
    json coeffs = json::array();
    for (const auto& c : shift.coefficients) coeffs.push_back(to_string(c));
    rep.fail(json{{"check", "d(x+2)"}}, json{{"coefficients", coeffs},
                                             {"all_positive", shift.all_positive},
                                             {"matches_published", shift.matches_published}});
  }
  if (ac_limit() != Rational(27, 16)) rep.fail(json{{"check", "ac_limit"}}, json{{"value", to_string(ac_limit())}});

  const auto t = t_values(o.max_m + 2, o.jobs);  // t[i] = T(i+1)
  const auto& rc = recurrence_coefficients();
  for (Index n = 1; n <= o.max_m && rep.passed; ++n) {
    const Rational res = recurrence_residual(n, t[n - 1], t[n], t[n + 1]);
    if (res != 0) rep.fail(json{{"n", n}}, json{{"residual", to_string(res)}});
  }
  for (Index n = 2; n <= o.max_m && rep.passed; ++n) {
    const Rational lhs = Rational(rc.a.evaluate(Integer(n))) * (t[n - 1] - t[n]);
    const Rational rhs = Rational(rc.c.evaluate(Integer(n))) * (t[n] - t[n + 1]);
    if (lhs > rhs)
      rep.fail(json{{"n", n}, {"check", "a(n)(T(n)-T(n+1)) <= c(n)(T(n+1)-T(n+2))"}},
               json{{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
  }
  for (Index n = 1; n <= 1000 && rep.passed; ++n)
    if (rc.a.evaluate(Integer(n)) <= 0 || rc.c.evaluate(Integer(n)) <= 0)
      rep.fail(json{{"n", n}, {"check", "a(n) > 0 and c(n) > 0"}}, json::object());
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

inline PropertyReport verify_monotone_t(const SuiteOptions& o) {
  if (o.max_m < 3) throw config_error("monotone-t: max-m must be at least 3");
  return monotonicity_check(o.max_m, o.jobs);
}

/// Pochhammer ratio bounds, the envelope bound on a 21-point grid, summand domination,
/// and the derivative / contiguous relations in the instances used for T.
inline PropertyReport verify_hyp_bounds(const SuiteOptions& o) {
  detail::require_max(o, 2, "hyp-bounds");
  const auto grid = envelope_grid();
  return detail::check_each(
      "hyp-bounds", detail::span_text("m", 2, o.max_m), 2, o.max_m, o.jobs, [&](Index m) -> std::optional<Failure> {
        const json where{{"m", m}};
        const Rational mq(m);
        if (!pochhammer_ratio_bound_check(m)) return Failure{where, {{"check", "3^k (1-m)_k/(2-4m)_k"}}};
        if (const auto v = companion_ratio_bound_violation(m))
          return Failure{{{"m", m}, {"k", v->k}},
                         {{"check", "(-1-m)_k/(-4m)_k <= 3^-k"}, {"ratio", to_string(v->ratio)}, {"bound", to_string(v->bound)}}};
        for (const auto& t : grid) {
          if (!envelope_bound_check(m, t))
            return Failure{{{"m", m}, {"t", to_string(t)}}, {{"check", "2F1^2 (3-t)^5 <= 243"}}};
          if (!summand_domination_check(m, t))
            return Failure{{{"m", m}, {"t", to_string(t)}}, {{"check", "summand domination"}}};
        }
        if (!derivative_relation_check(Rational(1, 2), -1 - mq, -4 * mq) ||
            !derivative_relation_check(Rational(3, 2), -mq, 1 - 4 * mq) ||
            !derivative_relation_check(Rational(5, 2), 1 - mq, 2 - 4 * mq))
          return Failure{where, {{"check", "derivative relation"}}};
        if (!contiguous_relation_check(Rational(1, 2), -1 - mq, -4 * mq, 2))
          return Failure{where, {{"check", "contiguous relation"}}};
        const Rational lhs = (mq + 1) / (4 * mq) * hyp2f1(Rational(3, 2), -mq, 1 - 4 * mq, 2);
        const Rational rhs = (hyp2f1(Rational(3, 2), -1 - mq, -4 * mq, 2) - hyp2f1(Rational(1, 2), -1 - mq, -4 * mq, 2)) / 2;
        if (lhs != rhs) return Failure{where, {{"check", "half-difference relation"}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}}};
        return std::nullopt;
      });
}

using Suite = std::function<PropertyReport(const SuiteOptions&)>;

struct SuiteEntry {
  Suite run;
  Index default_max_m;
};

/// Suite name -> runner with its default range.
inline const std::map<std::string, SuiteEntry>& suites() {
  static const std::map<std::string, SuiteEntry> table{
      {"unimodal", {verify_unimodal, 100}},
      {"logconcave", {verify_logconcave, 100}},
      {"ilogconcave", {verify_ilogconcave, 100}},
      {"ratio-monotone", {verify_ratio_monotone, 100}},
      {"min-functional", {verify_min_functional, 40}},
      {"delta-signs", {verify_delta_signs, 100}},
      {"inequality-chain", {verify_inequality_chain, 100}},
      {"s-monotone", {verify_s_monotone, 100}},
      {"t-bounds", {verify_t_bounds, 500}},
      {"t-crosscheck", {verify_t_crosscheck, 100}},
      {"recurrence", {verify_recurrence, 100}},
      {"monotone-t", {verify_monotone_t, 500}},
      {"hyp-bounds", {verify_hyp_bounds, 60}},
  };
  return table;
}

}  // namespace bmp
