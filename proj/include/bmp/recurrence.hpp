#pragma once

// The three-term inhomogeneous recurrence
//   a(n) T(n) - b(n) T(n+1) + c(n) T(n+2) + d(n) = 0
// with fixed integer polynomial coefficients, checked exactly against T computed from
// its defining sum.

#include <string>
#include <vector>

#include "bmp/exact.hpp"
#include "bmp/parallel.hpp"
#include "bmp/polynomial.hpp"
#include "bmp/report.hpp"
#include "bmp/tfunction.hpp"

namespace bmp {

struct RecurrenceCoefficients {
  IntegerPolynomial a;
  IntegerPolynomial b;
  IntegerPolynomial c;
  IntegerPolynomial d;
};

namespace detail {

inline IntegerPolynomial integer_poly(std::initializer_list<const char*> digits) {
  std::vector<Integer> v;
  for (const char* s : digits) v.emplace_back(s, 10);
  return IntegerPolynomial(std::move(v));
}

}  // namespace detail

inline const RecurrenceCoefficients& recurrence_coefficients() {
  static const RecurrenceCoefficients coeffs{
      detail::integer_poly({"7195230", "87693273", "448856568", "1263033897", "2147597568", "2279791176",
                            "1502157312", "586779648", "121208832", "9732096"}),
      detail::integer_poly({"9661680", "123557904", "651005760", "1865031680", "3206772480", "3428727552",
                            "2272235520", "894167040", "187269120", "15499264"}),
      detail::integer_poly({"3265920", "41472576", "217055232", "618806528", "1062162432", "1139030016",
                            "762052608", "305528832", "66060288", "5767168"}),
      detail::integer_poly({"-799470", "-5607945", "-14906040", "-16808745", "-2987520", "9906360", "8025600",
                            "1858560"}),
  };
  return coeffs;
}

/// Published expansion of d(x+2), lowest degree first.
inline const std::vector<Integer>& published_d_shift() {
  static const std::vector<Integer> v = [] {
    std::vector<Integer> out;
    for (const char* s : {"814627800", "2803521195", "3780146130", "2680435095", "1098008880", "262332600",
                          "34045440", "1858560"})
      out.emplace_back(s, 10);
    return out;
  }();
  return v;
}

/// Residual from three consecutive T values; zero when the recurrence holds at n.
inline Rational recurrence_residual(Index n, const Rational& t0, const Rational& t1, const Rational& t2) {
  const auto& rc = recurrence_coefficients();
  const Integer nn(n);
  return Rational(rc.a.evaluate(nn)) * t0 - Rational(rc.b.evaluate(nn)) * t1 + Rational(rc.c.evaluate(nn)) * t2 +
         Rational(rc.d.evaluate(nn));
}

inline Rational recurrence_residual(Index n) {
  if (n < 1) throw domain_error("recurrence_residual: need n >= 1");
  return recurrence_residual(n, t_direct(n), t_direct(n + 1), t_direct(n + 2));
}

/// b - (a + c + d) is the zero polynomial.
inline bool b_identity_check() {
  const auto& rc = recurrence_coefficients();
  return (rc.b - (rc.a + rc.c + rc.d)).is_zero();
}

struct DShiftResult {
  std::vector<Integer> coefficients;  // of d(x+2)
  bool all_positive = false;
  bool matches_published = false;
};

inline DShiftResult d_shift_positivity() {
  DShiftResult out;
  out.coefficients = recurrence_coefficients().d.shifted(Integer(2)).coefficients();
  out.all_positive = !out.coefficients.empty();
  for (const auto& c : out.coefficients)
    if (c <= 0) out.all_positive = false;
  out.matches_published = out.coefficients == published_d_shift();
  return out;
}

inline Rational ac_ratio(Index n) {
  const auto& rc = recurrence_coefficients();
  const Integer c = rc.c.evaluate(Integer(n));
  if (c == 0) throw pole_error("ac_ratio: c(n) = 0");
  return make_rational(rc.a.evaluate(Integer(n)), c);
}

/// Ratio of leading coefficients of a and c.
inline Rational ac_limit() {
  const auto& rc = recurrence_coefficients();
  return make_rational(rc.a.leading(), rc.c.leading());
}

/// T(m) for m = 1..max_m, index m-1.
inline std::vector<Rational> t_values(Index max_m, unsigned jobs = 1) {
  return parallel_map(max_m, jobs, [](std::size_t i) { return t_direct(i + 1); });
}

/// T(m) <= T(m+1) for 2 <= m < max_m; any step where equality holds is listed in the notes.
inline PropertyReport monotonicity_check(Index max_m, unsigned jobs = 1) {
  if (max_m < 3) throw domain_error("monotonicity_check: need max_m >= 3");
  Stopwatch clock;
  PropertyReport rep;
  rep.property = "monotone-t";
  rep.range = "2 <= m < " + std::to_string(max_m);
  const auto t = t_values(max_m, jobs);
  for (Index m = 2; m < max_m; ++m) {
    const Rational& cur = t[m - 1];
    const Rational& next = t[m];
    if (cur > next) {
      rep.fail(json{{"m", m}}, json{{"T(m)", to_string(cur)}, {"T(m+1)", to_string(next)}});
      break;
    }
    if (cur == next) rep.notes.push_back("non-strict step at m = " + std::to_string(m));
  }
  if (t[0] == t[1])
    rep.notes.push_back("boundary: T(1) = T(2) = " + to_string(t[0]) + " (not part of the checked range)");
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

}  // namespace bmp
