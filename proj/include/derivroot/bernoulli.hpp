#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "derivroot/errors.hpp"

namespace derivroot {

inline constexpr std::size_t bernoulli_table_cap = 32;

/// Even Bernoulli numbers B_2, B_4, ..., B_2K from the convolution recurrence
/// sum_{j=0}^{n-1} C(n+1, j) B_j = -(n+1) B_n, seeded with B_0 = 1. The
/// recurrence cancels heavily for large n, so builtin precisions are widened
/// to long double internally.
template <class Real = double>
std::vector<Real> bernoulli_numbers(std::size_t K) {
  if (K < 1) throw invalid_input_error("bernoulli_numbers: K must be >= 1");
  if (K > bernoulli_table_cap) {
    throw order_cap_error("bernoulli_numbers: K " + std::to_string(K) + " exceeds cap " +
                          std::to_string(bernoulli_table_cap));
  }
  using Work = std::conditional_t<std::is_floating_point_v<Real>, long double, Real>;

  const std::size_t top = 2 * K;
  std::vector<Work> b(top + 1, Work(0));
  b[0] = Work(1);
  std::vector<Work> binom(top + 2, Work(0));  // row C(n+1, .) of Pascal's triangle
  binom[0] = Work(1);
  binom[1] = Work(1);
  for (std::size_t n = 1; n <= top; ++n) {
    // extend Pascal row from C(n, .) to C(n+1, .)
    for (std::size_t j = n + 1; j > 0; --j) binom[j] += binom[j - 1];
    if (n % 2 == 1 && n > 1) continue;  // odd Bernoulli numbers beyond B_1 vanish
    Work sum(0);
    for (std::size_t j = 0; j < n; ++j) sum += binom[j] * b[j];
    b[n] = -sum / binom[n];  // C(n+1, n) = n+1
  }

  std::vector<Real> evens(K);
  for (std::size_t k = 1; k <= K; ++k) evens[k - 1] = static_cast<Real>(b[2 * k]);
  return evens;
}

}  // namespace derivroot
