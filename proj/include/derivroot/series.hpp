#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "derivroot/errors.hpp"
#include "derivroot/numeric.hpp"

namespace derivroot {

/// Multiplicity vector (s_1, s_2, s_3, ...) where s_i counts parts of size i,
/// so it describes a partition of sum_i i*s_i. Trailing zeros are trimmed, so
/// equal partitions compare equal with vector::operator==.
using Partition = std::vector<int>;

/// Orders above this are rejected by invert_series unless the caller raises
/// the cap; the partition count behind each coefficient grows so fast that a
/// silent attempt is more likely a bug than an intent.
inline constexpr std::size_t default_series_order_cap = 16;

/// Every multiplicity vector with sum_i i*s_i == n, each exactly once, in
/// descending lexicographic order on (s_1, s_2, ...): (n) first, the single
/// part of size n last. n == 0 yields one empty partition.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw invalid_input_error("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  Partition current(static_cast<std::size_t>(n), 0);
  auto recurse = [&](auto&& self, int part, int remaining) -> void {
    if (remaining == 0) {
      Partition trimmed(current.begin(), current.begin() + part - 1);
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      out.push_back(std::move(trimmed));
      return;
    }
    if (part > remaining) return;
    for (int count = remaining / part; count >= 0; --count) {
      current[static_cast<std::size_t>(part - 1)] = count;
      self(self, part + 1, remaining - part * count);
    }
    current[static_cast<std::size_t>(part - 1)] = 0;
  };
  if (n == 0) {
    out.push_back({});
  } else {
    recurse(recurse, 1, n);
  }
  return out;
}

/// Inverse-series coefficient A_n evaluated by the full partition sum
///   A_n = 1/(n a_1^n) * sum over partitions of n-1 of
///         (-1)^(s_1+s_2+...) * n(n+1)...(n-1+s_1+s_2+...) / (s_1! s_2! ...)
///         * (a_2/a_1)^(s_1) (a_3/a_1)^(s_2) ...
/// The rising-factorial factors are interleaved with the factorial
/// denominators so intermediates stay small.
template <class Real>
Real inversion_coefficient_general(std::span<const Real> forward, std::size_t n) {
  const Real a1 = forward[0];
  Real sum(0);
  for (const Partition& s : enumerate_partitions(static_cast<int>(n) - 1)) {
    int parity = 0;
    Real term(1);
    int rising = static_cast<int>(n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (int k = 1; k <= s[i]; ++k) {
        term *= Real(rising++) / Real(k);
      }
      parity += s[i];
      const Real ratio = forward[i + 1] / a1;
      for (int k = 0; k < s[i]; ++k) term *= ratio;
    }
    sum += (parity % 2 == 0) ? term : -term;
  }
  Real a1_pow_n(1);
  for (std::size_t k = 0; k < n; ++k) a1_pow_n *= a1;
  return sum / (Real(n) * a1_pow_n);
}

/// Coefficients A_1..A_m of the series inverse of dy = sum_j a_j dx^j.
/// Orders 1-3 use the closed forms, higher orders the partition sum; the two
/// paths agree and are cross-checked in the tests.
template <class Real>
std::vector<Real> invert_series(std::span<const Real> forward,
                                std::size_t order_cap = default_series_order_cap) {
  const std::size_t m = forward.size();
  if (m == 0) throw invalid_input_error("invert_series: empty coefficient list");
  if (m > order_cap) {
    throw order_cap_error("invert_series: order " + std::to_string(m) +
                          " exceeds cap " + std::to_string(order_cap));
  }
  for (Real a : forward) {
    if (!num::isfinite(a)) throw invalid_input_error("invert_series: non-finite coefficient");
  }
  const Real a1 = forward[0];
  if (a1 == Real(0)) {
    throw zero_derivative_error("invert_series: leading coefficient a_1 is zero");
  }

  std::vector<Real> inverse(m);
  inverse[0] = Real(1) / a1;
  if (m >= 2) {
    const Real a2 = forward[1];
    inverse[1] = -a2 / (a1 * a1 * a1);
  }
  if (m >= 3) {
    const Real a2 = forward[1];
    const Real a3 = forward[2];
    const Real a1sq = a1 * a1;
    inverse[2] = (Real(2) * a2 * a2 - a1 * a3) / (a1sq * a1sq * a1);
  }
  for (std::size_t n = 4; n <= m; ++n) {
    inverse[n - 1] = inversion_coefficient_general(forward, n);
  }
  return inverse;
}

template <class Real>
std::vector<Real> invert_series(const std::vector<Real>& forward,
                                std::size_t order_cap = default_series_order_cap) {
  return invert_series(std::span<const Real>(forward), order_cap);
}

/// Coefficients of outer(inner(x)) truncated at `order`. Both series have zero
/// constant term and are given from degree 1 up.
template <class Real>
std::vector<Real> compose_series(std::span<const Real> outer, std::span<const Real> inner,
                                 std::size_t order) {
  if (order < 1) throw invalid_input_error("compose_series: order must be >= 1");
  for (Real c : outer) {
    if (!num::isfinite(c)) throw invalid_input_error("compose_series: non-finite coefficient");
  }
  for (Real c : inner) {
    if (!num::isfinite(c)) throw invalid_input_error("compose_series: non-finite coefficient");
  }

  std::vector<Real> result(order, Real(0));
  // power[k] holds the degree-(k+1) coefficient of inner^j for the current j.
  std::vector<Real> power(order, Real(0));
  for (std::size_t k = 0; k < order && k < inner.size(); ++k) power[k] = inner[k];
  for (std::size_t j = 1; j <= outer.size() && j <= order; ++j) {
    const Real oj = outer[j - 1];
    for (std::size_t k = j - 1; k < order; ++k) result[k] += oj * power[k];
    if (j == outer.size() || j == order) break;
    // power <- power * inner, truncated.
    std::vector<Real> next(order, Real(0));
    for (std::size_t p = j - 1; p < order; ++p) {
      if (power[p] == Real(0)) continue;
      for (std::size_t q = 0; q < inner.size() && p + q + 1 < order; ++q) {
        next[p + q + 1] += power[p] * inner[q];
      }
    }
    power.swap(next);
  }
  return result;
}

template <class Real>
std::vector<Real> compose_series(const std::vector<Real>& outer, const std::vector<Real>& inner,
                                 std::size_t order) {
  return compose_series(std::span<const Real>(outer), std::span<const Real>(inner), order);
}

}  // namespace derivroot
