#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "derivroot/errors.hpp"

namespace derivroot {

/// A target function known only through its derivatives plus one point
/// (anchor_x, anchor_y) on the curve. derivatives[j-1] evaluates the j-th
/// derivative; evaluators must be deterministic.
template <class Real = double>
struct DifferentiableTarget {
  std::vector<std::function<Real(Real)>> derivatives;
  Real anchor_x{};
  Real anchor_y{};

  std::size_t order() const { return derivatives.size(); }

  const std::function<Real(Real)>& derivative(std::size_t j) const {
    if (j < 1 || j > derivatives.size()) {
      throw invalid_input_error("target: derivative order out of range");
    }
    return derivatives[j - 1];
  }
};

enum class Method {
  local_inversion,
  local_inversion_quadratic,
  approximate_newton,
  hybrid_local_newton,
  explicit_integrand,
  local_inversion_nd,
  hybrid_nd,
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::local_inversion: return "local";
    case Method::local_inversion_quadratic: return "local-quadratic";
    case Method::approximate_newton: return "newton";
    case Method::hybrid_local_newton: return "hybrid";
    case Method::explicit_integrand: return "explicit";
    case Method::local_inversion_nd: return "nd-local";
    case Method::hybrid_nd: return "nd-hybrid";
  }
  return "?";
}

/// Samples recorded while a solver runs. x holds every visited point
/// (x_0..x_N); step and dydx hold the step taken from and the first
/// derivative sampled at x_0..x_{N-1}. anchor_derivatives keeps the raw
/// higher derivatives y^(2)..y^(m) sampled at the anchor on the first step so
/// a follow-up Newton hop can reuse them without re-evaluation.
template <class Real = double>
struct SolveTrace {
  std::vector<Real> x;
  std::vector<Real> step;
  std::vector<Real> dydx;
  std::vector<Real> anchor_derivatives;
};

template <class Real = double>
struct RootEstimate {
  Real root{};
  long steps = 0;
  long derivative_evals = 0;
  Method method = Method::local_inversion;
  std::optional<SolveTrace<Real>> trace;
};

}  // namespace derivroot
