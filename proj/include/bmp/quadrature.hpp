#pragma once

// Floating-point check of
//   int_0^oo dx / (x^4 + 2a x^2 + 1)^(m+1) = pi / (2^(m+3/2) (a+1)^(m+1/2)) P_m(a).

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "bmp/coefficients.hpp"
#include "bmp/exact.hpp"

namespace bmp {

struct QuadratureResult {
  Index m = 0;
  double a = 0.0;
  double numeric = 0.0;
  double closed_form = 0.0;
  double relative_error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with the embedded 7-point Gauss weights.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

template <class F>
PanelEstimate gauss_kronrod_15(const F& f, double lo, double hi, std::size_t& evaluations) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  evaluations += 15;
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <class F>
double adaptive(const F& f, double lo, double hi, double tol, int depth, std::size_t& evaluations,
                std::size_t budget) {
  const PanelEstimate est = gauss_kronrod_15(f, lo, hi, evaluations);
  if (est.error <= tol) return est.value;
  if (depth == 0 || evaluations >= budget)
    throw convergence_error("quadrature: tolerance not reached within the evaluation budget");
  const double mid = 0.5 * (lo + hi);
  return adaptive(f, lo, mid, 0.5 * tol, depth - 1, evaluations, budget) +
         adaptive(f, mid, hi, 0.5 * tol, depth - 1, evaluations, budget);
}

inline void check_parameter(double a) {
  if (!(a > -1.0)) throw domain_error("quartic integral diverges for a <= -1");
}

}  // namespace detail

/// Adaptive Gauss-Kronrod of the quartic integral. [1, oo) is folded onto (0, 1] by x -> 1/x.
inline double quartic_integral_numeric(Index m, double a, double tol, std::size_t* evaluations = nullptr,
                                       std::size_t budget = 2'000'000) {
  detail::check_parameter(a);
  if (!(tol > 0.0)) throw domain_error("quadrature tolerance must be positive");
  const double power = static_cast<double>(m + 1);
  auto base = [&](double x) {
    const double x2 = x * x;
    return std::pow(x2 * x2 + 2.0 * a * x2 + 1.0, -power);
  };
  auto folded = [&](double x) { return std::pow(x, static_cast<double>(4 * m + 2)) * base(x); };
  std::size_t count = 0;
  const double result = detail::adaptive(base, 0.0, 1.0, 0.5 * tol, 60, count, budget) +
                        detail::adaptive(folded, 0.0, 1.0, 0.5 * tol, 60, count, budget);
  if (evaluations != nullptr) *evaluations = count;
  return result;
}

/// pi / (2^(m+3/2) (a+1)^(m+1/2)) * P_m(a), with P_m(a) exact until the final conversion.
inline double closed_form(Index m, const Rational& a) {
  if (a <= -1) throw domain_error("closed form requires a > -1");
  const double p = to_double(poly_P(m).evaluate(a));
  const double md = static_cast<double>(m);
  return std::numbers::pi / (std::pow(2.0, md + 1.5) * std::pow(to_double(a) + 1.0, md + 0.5)) * p;
}

/// A double is an exact binary rational, so this reuses the exact path.
inline double closed_form(Index m, double a) {
  detail::check_parameter(a);
  return closed_form(m, Rational(a));
}

inline QuadratureResult quartic_integral_check(Index m, double a, double tol) {
  QuadratureResult r;
  r.m = m;
  r.a = a;
  r.numeric = quartic_integral_numeric(m, a, tol, &r.evaluations);
  r.closed_form = closed_form(m, a);
  r.relative_error = std::abs(r.numeric - r.closed_form) / std::abs(r.closed_form);
  return r;
}

}  // namespace bmp
