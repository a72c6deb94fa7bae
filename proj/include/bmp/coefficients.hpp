#pragma once

// The coefficients d_l(m) of P_m(a), where
//   int_0^oo dx / (x^4 + 2 a x^2 + 1)^(m+1) = pi / (2^(m+3/2) (a+1)^(m+1/2)) * P_m(a),
//   d_l(m) = 2^(-2m) sum_{k=l}^{m} 2^k C(2m-2k, m-k) C(m+k, m) C(k, l).

#include <string>
#include <vector>

#include "bmp/exact.hpp"
#include "bmp/polynomial.hpp"

namespace bmp {

/// (d_0(m), ..., d_m(m)); scaled()[l] = 2^(2m) d_l(m) is always an integer.
struct CoefficientRow {
  Index m = 0;
  std::vector<Rational> values;

  [[nodiscard]] Integer scale() const { return pow2(2 * m); }
  [[nodiscard]] std::vector<Integer> scaled() const {
    std::vector<Integer> out;
    out.reserve(values.size());
    const Integer s = scale();
    for (const auto& v : values) {
      Rational b = v * s;
      out.push_back(b.get_num());
    }
    return out;
  }
};

/// d_l(m) by literal summation.
inline Rational d_coeff(Index m, Index l) {
  if (l > m) throw domain_error("d_coeff: l = " + std::to_string(l) + " exceeds m = " + std::to_string(m));
  const long lm = static_cast<long>(m);
  Integer sum = 0;
  for (long k = static_cast<long>(l); k <= lm; ++k)
    sum += pow2(k) * binomial(2 * lm - 2 * k, lm - k) * binomial(lm + k, lm) * binomial(k, static_cast<long>(l));
  return make_rational(sum, pow2(2 * m));
}

/// b_l(m) = 2^(2m) d_l(m) for every l, sharing the k-dependent factors across the row.
inline std::vector<Integer> scaled_row(Index m) {
  const long lm = static_cast<long>(m);
  std::vector<Integer> weight(m + 1);
  for (long k = 0; k <= lm; ++k) weight[k] = pow2(k) * binomial(2 * lm - 2 * k, lm - k) * binomial(lm + k, lm);

  std::vector<Integer> out(m + 1);
  // Walk Pascal's triangle along k so each C(k, l) is a single addition.
  std::vector<Integer> pascal{1};
  for (long k = 0; k <= lm; ++k) {
    if (k > 0) {
      pascal.push_back(1);
      for (long j = k - 1; j >= 1; --j) pascal[j] += pascal[j - 1];
    }
    for (long l = 0; l <= k; ++l) out[l] += weight[k] * pascal[l];
  }
  return out;
}

inline CoefficientRow coefficient_row(Index m) {
  CoefficientRow row{m, {}};
  const Integer scale = pow2(2 * m);
  for (auto& b : scaled_row(m)) row.values.push_back(make_rational(b, scale));
  return row;
}

/// P_m(a) = sum_l d_l(m) a^l.
inline RationalPolynomial poly_P(Index m) { return RationalPolynomial(coefficient_row(m).values); }

/// d_{l+1}(m) - d_l(m) from the coefficient definition.
inline Rational delta_direct(Index m, Index l) {
  if (l >= m) throw domain_error("delta_direct: need l < m");
  return d_coeff(m, l + 1) - d_coeff(m, l);
}

/// d_{l+1}(m) - d_l(m) from the single-sum closed form with factor (k - 2l - 1)/(l + 1).
inline Rational delta_closed(Index m, Index l) {
  if (l >= m) throw domain_error("delta_closed: need l < m");
  const long lm = static_cast<long>(m);
  const long ll = static_cast<long>(l);
  Integer sum = 0;
  for (long k = ll; k <= lm; ++k)
    sum += pow2(k) * binomial(2 * lm - 2 * k, lm - k) * binomial(lm + k, lm + ll) * (k - 2 * ll - 1);
  return make_rational(binomial(lm + ll, lm) * sum, pow2(2 * m) * (ll + 1));
}

}  // namespace bmp
