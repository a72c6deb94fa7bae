#pragma once

// Counterexample searches for two open conjectures: infinite log-concavity of the
// coefficient rows, and a 2F1 inequality for x >= 1/2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bmp/coefficients.hpp"
#include "bmp/exact.hpp"
#include "bmp/hypergeometric.hpp"
#include "bmp/parallel.hpp"
#include "bmp/report.hpp"
#include "bmp/sequence.hpp"

namespace bmp {

struct ScanConfig {
  Index min_m = 2;
  Index max_m = 40;
  std::size_t depth = 5;
  std::vector<Rational> x_grid;
  bool stop_on_failure = false;
  unsigned jobs = 1;
};

/// x = lo, lo + step, ... while x <= hi.
inline std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, const Rational& step) {
  if (step <= 0) throw domain_error("grid step must be positive");
  if (hi < lo) throw domain_error("grid upper end below lower end");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

namespace detail {

struct LogconcavityWitness {
  Index m = 0;
  NegativeEntry where;
  Rational value;  // the negative entry, rescaled to the rational row
};

inline std::optional<LogconcavityWitness> logconcavity_witness(Index m, std::size_t depth) {
  const auto b = scaled_row(m);
  FiniteSequence<Integer> iterate;
  const auto neg = first_negative_iterate<Integer>(b, depth, &iterate);
  if (!neg) return std::nullopt;
  // L is homogeneous of degree 2, so the j-th iterate carries the scale 4^(m 2^j).
  const Integer scale = ipow(pow2(2 * m), Index{1} << neg->iteration);
  return LogconcavityWitness{m, *neg, make_rational(iterate[neg->index], scale)};
}

}  // namespace detail

/// Applies L up to cfg.depth times to every row m in [0, cfg.max_m].
inline PropertyReport scan_infinite_logconcavity(const ScanConfig& cfg) {
  Stopwatch clock;
  PropertyReport rep;
  rep.property = "infinite-logconcavity";
  rep.range = "0 <= m <= " + std::to_string(cfg.max_m) + ", depth " + std::to_string(cfg.depth);
  const auto found = parallel_map(cfg.max_m + 1, cfg.jobs,
                                  [&](std::size_t m) { return detail::logconcavity_witness(m, cfg.depth); });
  std::size_t failures = 0;
  for (const auto& w : found) {
    if (!w) continue;
    ++failures;
    rep.fail(json{{"m", w->m}, {"iteration", w->where.iteration}, {"index", w->where.index}},
             json{{"entry", to_string(w->value)}});
    if (cfg.stop_on_failure) break;
  }
  if (failures > 1) rep.notes.push_back(std::to_string(failures) + " rows fail; first reported");
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// Both sides of the conjectured inequality at (m, x) and their exact difference.
struct HypInequalityPoint {
  Index m = 0;
  Rational x;
  Rational lhs;  // 2F1(3/2,-m-2;-4m-4;4x) - 2F1(3/2,-m-1;-4m;4x)
  Rational rhs;  // 3 [2F1(1/2,-m-2;-4m-4;4x) - 2F1(1/2,-m-1;-4m;4x)]
  [[nodiscard]] Rational margin() const { return lhs - rhs; }
  [[nodiscard]] bool holds() const { return lhs > rhs; }
};

inline HypInequalityPoint hyp_inequality_point(Index m, const Rational& x) {
  if (m < 1) throw domain_error("hyp_inequality_point: need m >= 1");
  const Rational mq(m);
  const Rational z = 4 * x;
  const Rational half(1, 2);
  const Rational three_halves(3, 2);
  HypInequalityPoint p{m, x, {}, {}};
  p.lhs = hyp2f1(three_halves, -mq - 2, -4 * mq - 4, z) - hyp2f1(three_halves, -mq - 1, -4 * mq, z);
  p.rhs = 3 * (hyp2f1(half, -mq - 2, -4 * mq - 4, z) - hyp2f1(half, -mq - 1, -4 * mq, z));
  return p;
}

inline PropertyReport scan_hyp_inequality(const ScanConfig& cfg) {
  if (cfg.x_grid.empty()) throw domain_error("scan_hyp_inequality: empty grid");
  for (const auto& x : cfg.x_grid)
    if (x < Rational(1, 2)) throw domain_error("scan_hyp_inequality: grid point " + to_string(x) + " below 1/2");
  if (cfg.min_m < 1 || cfg.max_m < cfg.min_m) throw domain_error("scan_hyp_inequality: bad m range");

  Stopwatch clock;
  PropertyReport rep;
  rep.property = "hyp-inequality";
  rep.range = std::to_string(cfg.min_m) + " <= m <= " + std::to_string(cfg.max_m) + ", " +
              std::to_string(cfg.x_grid.size()) + " x values in [" + to_string(cfg.x_grid.front()) + ", " +
              to_string(cfg.x_grid.back()) + "]";
  const std::size_t nx = cfg.x_grid.size();
  const std::size_t count = (cfg.max_m - cfg.min_m + 1) * nx;
  // Only failing points are kept; passing ones contribute their margin sign alone.
  const auto failing = parallel_map(count, cfg.jobs, [&](std::size_t i) -> std::optional<HypInequalityPoint> {
    auto p = hyp_inequality_point(cfg.min_m + i / nx, cfg.x_grid[i % nx]);
    if (p.holds()) return std::nullopt;
    return p;
  });
  std::size_t failures = 0;
  for (const auto& p : failing) {
    if (!p) continue;
    ++failures;
    rep.fail(json{{"m", p->m}, {"x", to_string(p->x)}},
             json{{"lhs", to_string(p->lhs)}, {"rhs", to_string(p->rhs)}, {"margin", to_string(p->margin())}});
    if (cfg.stop_on_failure) break;
  }
  rep.notes.push_back(std::to_string(count) + " points compared");
  if (failures > 1) rep.notes.push_back(std::to_string(failures) + " points fail; first reported");
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

}  // namespace bmp
