#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "derivroot/errors.hpp"

namespace derivroot {

inline constexpr std::size_t gauss_legendre_cap = 64;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]. Each node
/// starts from the interlacing cosine guess and is polished with Newton steps
/// on P_n (clamped to stay inside the interval); weights are 2/((1-z^2) P_n'^2).
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(std::size_t n) {
  if (n < 1) throw invalid_input_error("gauss_legendre_nodes: n must be >= 1");
  if (n > gauss_legendre_cap) {
    throw order_cap_error("gauss_legendre_nodes: n " + std::to_string(n) + " exceeds cap " +
                          std::to_string(gauss_legendre_cap));
  }
  std::vector<double> nodes(n), weights(n);
  const std::size_t half = (n + 1) / 2;
  const double pi = 3.14159265358979323846;
  for (std::size_t i = 1; i <= half; ++i) {
    double z = std::cos(pi * (static_cast<double>(i) - 0.25) / (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(z) and P_n'(z)
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * static_cast<double>(j) - 1.0) * z * p2 -
              (static_cast<double>(j) - 1.0) * p3) /
             static_cast<double>(j);
      }
      pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (z >= 1.0) z = 0.5 * (z1 + 1.0);
      if (z <= -1.0) z = 0.5 * (z1 - 1.0);
      if (std::abs(z - z1) <= 1e-15) break;
    }
    nodes[i - 1] = -z;
    nodes[n - i] = z;
    weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[n - i] = weights[i - 1];
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
  return {std::move(nodes), std::move(weights)};
}

}  // namespace derivroot
