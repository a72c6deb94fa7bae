#pragma once

// Terminating Gauss series 2F1(a, b; c; z) = sum_k (a)_k (b)_k / ((c)_k k!) z^k with b a
// nonpositive integer, evaluated exactly.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bmp/exact.hpp"
#include "bmp/polynomial.hpp"

namespace bmp {

struct Hyp2F1Spec {
  Rational a;
  Rational b;  // nonpositive integer: the series stops at k = -b
  Rational c;
  Rational z = 0;
};

/// N = -b. Throws unsupported_error unless b is a nonpositive integer, and pole_error
/// if (c)_k vanishes for some k <= N.
inline Index terminating_length(const Rational& b, const Rational& c) {
  if (!is_integer(b) || b > 0)
    throw unsupported_error("2F1: b = " + to_string(b) + " is not a nonpositive integer");
  const Integer neg_b = -b.get_num();
  if (!neg_b.fits_ulong_p()) throw unsupported_error("2F1: series too long");
  const Index n = neg_b.get_ui();
  // (c)_k for k <= N contains the factors c, c+1, ..., c+N-1.
  if (is_integer(c) && c <= 0 && c + n - 1 >= 0)
    throw pole_error("2F1: (c)_k vanishes before the series terminates, c = " + to_string(c));
  return n;
}

/// Coefficients (a)_k (b)_k / ((c)_k k!) for k = 0..N, by the running-term ratio.
inline RationalPolynomial hyp2f1_as_polynomial(const Rational& a, const Rational& b, const Rational& c) {
  const Index n = terminating_length(b, c);
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  Rational term = 1;
  coeffs.push_back(term);
  for (Index k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * Rational(k + 1));
    coeffs.push_back(term);
  }
  return RationalPolynomial(std::move(coeffs));
}

inline Rational hyp2f1_terminating(const Hyp2F1Spec& spec) {
  const Index n = terminating_length(spec.b, spec.c);
  Rational term = 1;
  Rational sum = 1;
  for (Index k = 0; k < n; ++k) {
    term *= (spec.a + k) * (spec.b + k) * spec.z / ((spec.c + k) * Rational(k + 1));
    sum += term;
  }
  return sum;
}

inline Rational hyp2f1(const Rational& a, const Rational& b, const Rational& c, const Rational& z) {
  return hyp2f1_terminating({a, b, c, z});
}

/// d/dt 2F1(a,b;c;t) == (ab/c) 2F1(a+1,b+1;c+1;t), as a polynomial identity.
inline bool derivative_relation_check(const Rational& a, const Rational& b, const Rational& c) {
  const RationalPolynomial lhs = hyp2f1_as_polynomial(a, b, c).derivative();
  const Rational factor = a * b / c;
  if (factor == 0) return lhs.is_zero();
  return lhs == factor * hyp2f1_as_polynomial(a + 1, b + 1, c + 1);
}

/// 2F1(a+1,b;c;z) == 2F1(a,b;c;z) + (bz/c) 2F1(a+1,b+1;c+1;z), exactly.
inline bool contiguous_relation_check(const Rational& a, const Rational& b, const Rational& c, const Rational& z) {
  const Rational lhs = hyp2f1(a + 1, b, c, z);
  Rational rhs = hyp2f1(a, b, c, z);
  const Rational factor = b * z / c;
  if (factor != 0) rhs += factor * hyp2f1(a + 1, b + 1, c + 1, z);
  return lhs == rhs;
}

/// 1F0(a;;z) = (1-z)^(-a), floating point, |z| < 1.
inline double one_f_zero(const Rational& a, double z) {
  if (!(std::abs(z) < 1.0)) throw domain_error("1F0: need |z| < 1");
  return std::pow(1.0 - z, -to_double(a));
}

// Bounds on the Pochhammer ratios that dominate the series above.

/// 3^k (1-m)_k / (2-4m)_k lies in (0, 1] and is nonincreasing for 1 <= k <= m-1.
inline bool pochhammer_ratio_bound_check(Index m) {
  if (m < 2) throw domain_error("pochhammer_ratio_bound_check: need m >= 2");
  const Rational top = Rational(1) - m;
  const Rational bottom = Rational(2) - 4 * m;
  Rational scaled = 1;  // k = 0
  for (Index k = 0; k + 1 <= m - 1; ++k) {
    const Rational next = scaled * 3 * (top + k) / (bottom + k);
    if (next <= 0 || next > 1 || next > scaled) return false;
    scaled = next;
  }
  return true;
}

struct RatioBoundViolation {
  Index k = 0;
  Rational ratio;
  Rational bound;
};

/// First k in [0, m+1] with (-1-m)_k / (-4m)_k > 3^(-k), if any.
inline std::optional<RatioBoundViolation> companion_ratio_bound_violation(Index m) {
  if (m < 2) throw domain_error("companion_ratio_bound_check: need m >= 2");
  const Rational top = Rational(-1) - m;
  const Rational bottom = Rational(0) - 4 * m;
  Rational ratio = 1;
  Rational third_power = 1;
  for (Index k = 0; k <= m + 1; ++k) {
    if (ratio > third_power) return RatioBoundViolation{k, ratio, third_power};
    ratio *= (top + k) / (bottom + k);
    third_power /= 3;
  }
  return std::nullopt;
}

/// (-1-m)_k / (-4m)_k <= 3^(-k) for 0 <= k <= m+1. Fails at m = 2 (k = 1 gives 3/8).
inline bool companion_ratio_bound_check(Index m) { return !companion_ratio_bound_violation(m).has_value(); }

/// 2F1(5/2, 1-m; 2-4m; t)^2 (3-t)^5 <= 243, i.e. |2F1| <= 9 sqrt(3) (3-t)^(-5/2), exactly.
inline bool envelope_bound_check(Index m, const Rational& t) {
  if (m < 2) throw domain_error("envelope_bound_check: need m >= 2");
  const Rational f = hyp2f1(Rational(5, 2), Rational(1) - m, Rational(2) - 4 * m, t);
  return f * f * ipow(Rational(3) - t, 5) <= 243;
}

/// Every summand of 2F1(5/2, 1-m; 2-4m; t) is at most (5/2)_k t^k / (k! 3^k), for 0 <= t.
inline bool summand_domination_check(Index m, const Rational& t) {
  if (m < 2) throw domain_error("summand_domination_check: need m >= 2");
  const RationalPolynomial p = hyp2f1_as_polynomial(Rational(5, 2), Rational(1) - m, Rational(2) - 4 * m);
  Rational majorant = 1;
  for (Index k = 0; k < m; ++k) {
    const Rational summand = p.coefficient(k) * ipow(t, k);
    if (abs(summand) > majorant) return false;
    majorant *= (Rational(5, 2) + k) * t / (Rational(k + 1) * 3);
  }
  return true;
}

/// 21 equally spaced rational points 0, 1/10, ..., 2.
inline std::vector<Rational> envelope_grid() {
  std::vector<Rational> t;
  for (int i = 0; i <= 20; ++i) t.emplace_back(i, 10);
  for (auto& v : t) v.canonicalize();
  return t;
}

}  // namespace bmp
