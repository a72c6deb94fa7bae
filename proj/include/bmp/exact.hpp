#pragma once

// Exact integer and rational primitives backed by GMP.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmp {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator) after any arithmetic.
using Rational = mpq_class;

/// Index into a coefficient family (m, l, k, r, n). Desk-scale ranges fit a machine word.
using Index = unsigned long;

/// Raised when an argument falls outside an operation's mathematical domain.
class domain_error : public std::domain_error {
  using std::domain_error::domain_error;
};

/// A denominator Pochhammer (c)_k vanished before the series terminated.
class pole_error : public domain_error {
  using domain_error::domain_error;
};

/// The requested evaluation is outside what the evaluator supports.
class unsupported_error : public domain_error {
  using domain_error::domain_error;
};

class convergence_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// C(n, k) with the combinatorial convention: 0 when k < 0, k > n, or n < 0.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Rising factorial x(x+1)...(x+k-1); the empty product is 1.
inline Rational pochhammer(const Rational& x, Index k) {
  Rational p = 1;
  for (Index i = 0; i < k; ++i) p *= x + i;
  return p;
}

/// x(x-1)...(x-k+1)/k!, the binomial extended to any rational top; equals (-1)^k (-x)_k / k!.
inline Rational generalized_binomial(const Rational& x, Index k) {
  Rational p = 1;
  for (Index i = 0; i < k; ++i) p *= (x - i) / Rational(i + 1);
  return p;
}

inline Integer factorial(Index n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer pow2(Index e) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

inline Integer ipow(const Integer& base, Index e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational ipow(const Rational& base, Index e) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Builds num/den in lowest terms.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonical "p/q" form, or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline double to_double(const Rational& q) { return q.get_d(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer z(std::string(s), 10);
  return neg ? Integer(-z) : z;
}

}  // namespace detail

/// Parses "p", "p/q", or a plain decimal such as "-0.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-')
      throw std::invalid_argument("negative denominator: '" + std::string(text) + "'");
    Integer den = detail::parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)))
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    Integer scale = ipow(Integer(10), frac.size());
    Rational r = make_rational(digits, scale);
    return neg ? Rational(-r) : r;
  }
  return Rational(detail::parse_integer(text));
}

}  // namespace bmp
