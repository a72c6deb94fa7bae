#pragma once

// The partial sums S_{m,l} that control the sign of d_{l+1}(m) - d_l(m), and their
// extremal member T(m) = S_{2m,m-1} computed through each of its representations.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bmp/exact.hpp"
#include "bmp/hypergeometric.hpp"
#include "bmp/polynomial.hpp"

namespace bmp {

inline constexpr double kTLimit = (2.0 - std::numbers::sqrt2) / 2.0;
/// An earlier guess for the limit, reported for context only.
inline constexpr double kOneMinusLn2 = 1.0 - std::numbers::ln2;

/// S_{m,l} = sum_{k=l}^{2l} C(m-l, m-k) C(m+k, 2k) / C(2m, 2k) * (2l+1-k) / 2^(m-k).
inline Rational s_sum(Index m, Index l) {
  if (l > m) throw domain_error("s_sum: need l <= m");
  const long lm = static_cast<long>(m);
  const long ll = static_cast<long>(l);
  Rational sum = 0;
  for (long k = ll; k <= 2 * ll && k <= lm; ++k) {
    const Integer num = binomial(lm - ll, lm - k) * binomial(lm + k, 2 * k) * (2 * ll + 1 - k);
    sum += make_rational(num, binomial(2 * lm, 2 * k) * pow2(m - k));
  }
  return sum;
}

/// T(m) = sum_{r=2}^{m+1} C(2r, r) C(m+1, r) (r-1) / (2^r C(4m, r)).
inline Rational t_direct(Index m) {
  if (m < 1) throw domain_error("t_direct: need m >= 1");
  const long lm = static_cast<long>(m);
  Rational sum = 0;
  for (long r = 2; r <= lm + 1; ++r) {
    const Integer num = binomial(2 * r, r) * binomial(lm + 1, r) * (r - 1);
    sum += make_rational(num, pow2(r) * binomial(4 * lm, r));
  }
  return sum;
}

/// 1 - 2F1(1/2, -1-m; -4m; 2) + (m+1)/(4m) 2F1(3/2, -m; 1-4m; 2).
inline Rational t_hypergeometric(Index m) {
  if (m < 1) throw domain_error("t_hypergeometric: need m >= 1");
  const Rational mq(m);
  return Rational(1) - hyp2f1(Rational(1, 2), -1 - mq, -4 * mq, 2) +
         (mq + 1) / (4 * mq) * hyp2f1(Rational(3, 2), -mq, 1 - 4 * mq, 2);
}

/// 3(m+1)/(16(4m-1)); at most 9/112 once m >= 2.
inline Rational integral_prefactor(Index m) {
  if (m < 1) throw domain_error("integral_prefactor: need m >= 1");
  return make_rational(Integer(3 * (m + 1)), Integer(16 * (4 * m - 1)));
}

/// 3(m+1)/(16(4m-1)) * int_0^2 t 2F1(5/2, 1-m; 2-4m; t) dt, integrating the polynomial exactly.
inline Rational t_integral(Index m) {
  if (m < 1) throw domain_error("t_integral: need m >= 1");
  const Rational mq(m);
  const RationalPolynomial integrand =
      RationalPolynomial{0, 1} * hyp2f1_as_polynomial(Rational(5, 2), 1 - mq, 2 - 4 * mq);
  return integral_prefactor(m) * definite_integral(integrand, 0, 2);
}

/// W_m(x) = sum_{r=0}^{m+1} C(2r, r) C(m+1, r) / C(4m, r) x^r.
inline RationalPolynomial w_polynomial(Index m) {
  if (m < 1) throw domain_error("w_polynomial: need m >= 1");
  const long lm = static_cast<long>(m);
  std::vector<Rational> c;
  for (long r = 0; r <= lm + 1; ++r) c.push_back(make_rational(binomial(2 * r, r) * binomial(lm + 1, r), binomial(4 * lm, r)));
  return RationalPolynomial(std::move(c));
}

inline Rational w_function(Index m, const Rational& x) { return w_polynomial(m).evaluate(x); }

/// W_m(x) through its hypergeometric form 2F1(1/2, -1-m; -4m; 4x).
inline Rational w_hypergeometric(Index m, const Rational& x) {
  if (m < 1) throw domain_error("w_hypergeometric: need m >= 1");
  const Rational mq(m);
  return hyp2f1(Rational(1, 2), -1 - mq, -4 * mq, 4 * x);
}

/// [x W_m'(x) - W_m(x) + 1] at x = 1/2.
inline Rational t_via_w(Index m) {
  const RationalPolynomial w = w_polynomial(m);
  const Rational half(1, 2);
  return half * w.derivative().evaluate(half) - w.evaluate(half) + 1;
}

/// [W_m'(x)/2 - W_m(x)] at x = 1/2: the identity in its uncorrected form, which misses T(m).
inline Rational t_via_w_uncorrected(Index m) {
  const RationalPolynomial w = w_polynomial(m);
  const Rational half(1, 2);
  return half * w.derivative().evaluate(half) - w.evaluate(half);
}

/// C(2r, r) C(m+1, r) <= C(4m, r).
inline bool bound_pair_check(Index m, Index r) {
  if (r < 2 || r > m + 1) throw domain_error("bound_pair_check: need 2 <= r <= m+1");
  const long lm = static_cast<long>(m);
  const long lr = static_cast<long>(r);
  return binomial(2 * lr, lr) * binomial(lm + 1, lr) <= binomial(4 * lm, lr);
}

/// sum_{r=2}^{m+1} (r-1)/2^r, which equals 1 - (m+2)/2^(m+1).
inline Rational geometric_tail_bound(Index m) {
  if (m < 1) throw domain_error("geometric_tail_bound: need m >= 1");
  Rational sum = 0;
  for (Index r = 2; r <= m + 1; ++r) sum += make_rational(Integer(r - 1), pow2(r));
  return sum;
}

/// Both sides of the four successively stronger sufficient conditions for d_{l+1}(m) > d_l(m).
struct InequalityChain {
  Index m = 0;
  Index l = 0;
  Integer lhs;       // sum_{k=l}^{2l} 2^k (2l+1-k) C(2m-2k, m-k) C(m+k, m+l)
  Integer rhs_full;  // sum_{k=2l+2}^{m} 2^k (k-2l-1) C(2m-2k, m-k) C(m+k, m+l)
  Integer rhs_unit;  // the same sum with every weight k-2l-1 replaced by 1
  Integer rhs_last;  // its last term, 2^m C(2m, m+l)
  Rational s;        // S_{m,l}
  bool task1 = false;
  bool task2 = false;
  bool task3 = false;
  bool task4 = false;
  /// rhs_last <= rhs_unit <= rhs_full, and S_{m,l} == lhs / rhs_last.
  bool chain_consistent = false;

  [[nodiscard]] bool all_hold() const { return task1 && task2 && task3 && task4 && chain_consistent; }
};

inline InequalityChain inequality_chain_check(Index m, Index l) {
  if (2 * (l + 1) > m) throw domain_error("inequality_chain_check: need 0 <= l < floor(m/2)");
  const long lm = static_cast<long>(m);
  const long ll = static_cast<long>(l);
  InequalityChain out;
  out.m = m;
  out.l = l;
  auto term = [&](long k) -> Integer { return pow2(k) * binomial(2 * lm - 2 * k, lm - k) * binomial(lm + k, lm + ll); };
  for (long k = ll; k <= 2 * ll; ++k) out.lhs += term(k) * (2 * ll + 1 - k);
  for (long k = 2 * ll + 2; k <= lm; ++k) {
    const Integer t = term(k);
    out.rhs_full += t * (k - 2 * ll - 1);
    out.rhs_unit += t;
  }
  out.rhs_last = pow2(m) * binomial(2 * lm, lm + ll);
  out.s = s_sum(m, l);
  out.task1 = out.lhs < out.rhs_full;
  out.task2 = out.lhs < out.rhs_unit;
  out.task3 = out.lhs < out.rhs_last;
  out.task4 = out.s < 1;
  out.chain_consistent = out.rhs_last <= out.rhs_unit && out.rhs_unit <= out.rhs_full &&
                         out.s == make_rational(out.lhs, out.rhs_last);
  return out;
}

/// (2 - sqrt 2)/2 - T(m), in floating point.
inline double limit_gap(const Rational& t) { return kTLimit - to_double(t); }
inline double limit_gap(Index m) { return limit_gap(t_direct(m)); }

/// T(m) through every representation; all exact fields agree whenever defined.
struct TValueBundle {
  Index m = 0;
  Rational direct;
  Rational hypergeometric;
  std::optional<Rational> integral;
  Rational via_w;
  double limit_gap = 0.0;

  [[nodiscard]] bool consistent() const {
    return direct == hypergeometric && direct == via_w && (!integral || *integral == direct);
  }
};

inline TValueBundle t_bundle(Index m) {
  TValueBundle b;
  b.m = m;
  b.direct = t_direct(m);
  b.hypergeometric = t_hypergeometric(m);
  b.integral = t_integral(m);
  b.via_w = t_via_w(m);
  b.limit_gap = limit_gap(b.direct);
  return b;
}

}  // namespace bmp
