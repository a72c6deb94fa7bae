#pragma once

// Test-only reference implementations, deliberately written along a different route
// from the library (factorials instead of mpz_bin, brute force instead of scans).

#include <cstddef>
#include <random>
#include <vector>

#include "bmp/exact.hpp"

namespace oracle {

using bmp::Integer;
using bmp::Rational;

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer power(long base, long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

inline Rational d_coeff(long m, long l) {
  Integer s = 0;
  for (long k = l; k <= m; ++k) s += power(2, k) * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m) * binomial(k, l);
  return ratio(s, power(4, m));
}

inline Rational t_value(long m) {
  Rational s = 0;
  for (long r = 2; r <= m + 1; ++r)
    s += ratio(binomial(2 * r, r) * binomial(m + 1, r) * (r - 1), power(2, r) * binomial(4 * m, r));
  return s;
}

/// Tries every peak index.
template <class T>
bool unimodal_brute(const std::vector<T>& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 <= j && ok; ++i) ok = s[i] <= s[i + 1];
    for (std::size_t i = j; i + 1 < s.size() && ok; ++i) ok = s[i] >= s[i + 1];
    if (ok) return true;
  }
  return s.empty();
}

/// Positive rational in [1/den_max, num_max].
inline Rational random_positive(std::mt19937_64& rng, long num_max = 50, long den_max = 20) {
  std::uniform_int_distribution<long> num(1, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  return ratio(Integer(num(rng)), Integer(den(rng)));
}

inline Rational random_rational(std::mt19937_64& rng, long num_max = 50, long den_max = 20) {
  std::uniform_int_distribution<long> num(-num_max, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  return ratio(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace oracle
