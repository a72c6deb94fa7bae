#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bmp/exact.hpp"

namespace bmp {

template <class T>
concept ExactRing = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  T(0);
};

/// Dense univariate polynomial; coefficient i multiplies x^i. Never stores trailing zeros.
template <ExactRing T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial({c}); }
  static Polynomial monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<T>& coefficients() const { return coeffs_; }
  [[nodiscard]] T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  [[nodiscard]] T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  /// Horner evaluation in the argument's type (an integer polynomial may be evaluated at a rational).
  template <class U = T>
  [[nodiscard]] U evaluate(const U& x) const {
    U acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  [[nodiscard]] Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1, T(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// p(x + c), by Horner composition.
  [[nodiscard]] Polynomial shifted(const T& c) const {
    Polynomial result;
    const Polynomial linear({c, T(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * linear + constant(*it);
    return result;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> out(p.coeffs_);
    for (auto& c : out) c = s * c;
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;
using IntegerPolynomial = Polynomial<Integer>;

/// Exact integral of p over [lo, hi] via the term-wise antiderivative.
inline Rational definite_integral(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  Rational total = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Index e = i + 1;
    total += c[i] * (ipow(hi, e) - ipow(lo, e)) / Rational(e);
  }
  return total;
}

inline RationalPolynomial to_rational(const IntegerPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

template <ExactRing T>
std::string to_string(const Polynomial<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == T(0)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c[i]) + ")";
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace bmp
