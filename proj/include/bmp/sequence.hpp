#pragma once

// Ordering properties of finite sequences, decided exactly.
//
// The functions are templated on the entry type so they run on rationals and on
// integer-scaled rows alike (scaling by a positive constant preserves every
// property here).

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bmp/coefficients.hpp"
#include "bmp/exact.hpp"

namespace bmp {

template <class T>
using FiniteSequence = std::vector<T>;

/// Nondecreasing up to some index j, nonincreasing after it.
template <class T>
bool is_unimodal(std::span<const T> s) {
  std::size_t i = 1;
  while (i < s.size() && s[i - 1] <= s[i]) ++i;
  while (i < s.size() && s[i - 1] >= s[i]) ++i;
  return i >= s.size();
}

/// s_j^2 >= s_{j-1} s_{j+1} at every interior j.
template <class T>
bool is_logconcave(std::span<const T> s) {
  for (std::size_t j = 1; j + 1 < s.size(); ++j)
    if (s[j] * s[j] < s[j - 1] * s[j + 1]) return false;
  return true;
}

/// {x_k^2 - x_{k-1} x_{k+1}}, with neighbours outside the range taken as 0.
template <class T>
FiniteSequence<T> l_operator(std::span<const T> s) {
  FiniteSequence<T> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    T v = s[k] * s[k];
    if (k >= 1 && k + 1 < s.size()) v -= s[k - 1] * s[k + 1];
    out[k] = v;
  }
  return out;
}

/// Position of the first negative entry found while iterating the L operator.
struct NegativeEntry {
  std::size_t iteration = 0;  // 0 means the sequence itself
  std::size_t index = 0;
};

/// Applies L up to `depth` times, stopping at the first iterate with a negative entry.
template <class T>
std::optional<NegativeEntry> first_negative_iterate(std::span<const T> s, std::size_t depth,
                                                    FiniteSequence<T>* witness = nullptr) {
  FiniteSequence<T> cur(s.begin(), s.end());
  for (std::size_t it = 0;; ++it) {
    for (std::size_t k = 0; k < cur.size(); ++k) {
      if (cur[k] < 0) {
        if (witness != nullptr) *witness = cur;
        return NegativeEntry{it, k};
      }
    }
    if (it == depth) return std::nullopt;
    cur = l_operator<T>(cur);
  }
}

/// L^j(s) is entrywise nonnegative for every 0 <= j <= i.
template <class T>
bool is_i_logconcave(std::span<const T> s, std::size_t i) {
  return !first_negative_iterate(s, i).has_value();
}

/// x_0/x_{m-1} <= x_1/x_{m-2} <= ... <= x_{h-1}/x_{m-h} <= 1 with h = floor(m/2),
/// compared by cross-multiplication. Requires strictly positive entries.
template <class T>
bool is_ratio_monotone(std::span<const T> s) {
  if (s.size() < 2) throw domain_error("is_ratio_monotone: need at least two entries");
  for (const auto& x : s)
    if (x <= 0) throw domain_error("is_ratio_monotone: entries must be strictly positive");
  const std::size_t m = s.size() - 1;
  const std::size_t h = m / 2;
  for (std::size_t i = 0; i + 1 < h; ++i)
    if (s[i] * s[m - 2 - i] > s[i + 1] * s[m - 1 - i]) return false;
  if (h >= 1 && s[h - 1] > s[m - h]) return false;
  return true;
}

namespace detail {

inline void check_functional_range(Index m, Index l) {
  if (l < 1 || l > m) throw domain_error("minimum_functional: need 1 <= l <= m");
}

}  // namespace detail

/// (m+l)(m+1-l) b_{l-1}^2 + l(l+1) b_l^2 - l(2m+1) b_{l-1} b_l, with b_l = 2^(2m) d_l(m).
inline Integer minimum_functional(std::span<const Integer> b, Index m, Index l) {
  detail::check_functional_range(m, l);
  const Integer& prev = b[l - 1];
  const Integer& cur = b[l];
  return Integer((m + l) * (m + 1 - l)) * prev * prev + Integer(l * (l + 1)) * cur * cur -
         Integer(l * (2 * m + 1)) * prev * cur;
}

inline Rational minimum_functional(Index m, Index l) {
  detail::check_functional_range(m, l);
  const auto b = scaled_row(m);
  return Rational(minimum_functional(std::span<const Integer>(b), m, l));
}

/// The variant whose last term is l(2m+1) b_{l-1} alone, kept for comparison.
inline Integer minimum_functional_uncorrected(std::span<const Integer> b, Index m, Index l) {
  detail::check_functional_range(m, l);
  const Integer& prev = b[l - 1];
  const Integer& cur = b[l];
  return Integer((m + l) * (m + 1 - l)) * prev * prev + Integer(l * (l + 1)) * cur * cur -
         Integer(l * (2 * m + 1)) * prev;
}

/// 2^(2m) m (m+1) C(2m, m)^2, the value at l = m.
inline Integer minimum_functional_expected(Index m) {
  const Integer c = binomial(2 * static_cast<long>(m), static_cast<long>(m));
  return pow2(2 * m) * Integer(m) * Integer(m + 1) * c * c;
}

}  // namespace bmp
