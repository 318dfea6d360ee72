#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "derivroot/errors.hpp"
#include "derivroot/numeric.hpp"
#include "derivroot/series.hpp"
#include "derivroot/target.hpp"

namespace derivroot {

template <class Real = double>
struct LocalInversionOptions {
  /// |y'| at or below this counts as a stationary point. Exact zero is rare in
  /// floating point, so the check is a small absolute floor.
  Real derivative_floor = Real(1e-300);
  bool trace = false;
  std::size_t series_order_cap = default_series_order_cap;
};

/// The root of a_2 dx^2 + a_1 dx - dy = 0 that joins continuously onto the
/// linear-limit step dy/a_1 as a_2 -> 0, evaluated in the cancellation-free
/// form 2 dy / (a_1 + sign(a_1) sqrt(a_1^2 + 4 a_2 dy)).
///
/// When a_1 is negligible against the quadratic term both roots are +-
/// sqrt(dy/a_2) and the linear limit no longer selects one; the step is taken
/// in the +x direction by convention.
template <class Real>
Real branch_select_quadratic(Real a1, Real a2, Real dy) {
  if (!num::isfinite(a1) || !num::isfinite(a2) || !num::isfinite(dy)) {
    throw invalid_input_error("branch_select_quadratic: non-finite input");
  }
  if (dy == Real(0)) return Real(0);
  const Real quad_term = Real(4) * a2 * dy;
  const Real disc = a1 * a1 + quad_term;
  if (disc < Real(0)) {
    throw discriminant_error(
        "branch_select_quadratic: negative discriminant (requested dy overshoots the "
        "extremum of the local quadratic model)");
  }
  const Real root_disc = num::sqrt(disc);
  const Real eps = std::numeric_limits<double>::epsilon();
  if (a1 * a1 <= Real(eps) * num::abs(quad_term)) {
    if (root_disc == Real(0)) {
      throw degenerate_quadratic_error("branch_select_quadratic: a_1 and a_2 both vanish");
    }
    return num::abs(Real(2) * dy / root_disc);
  }
  const Real denom = (a1 >= Real(0)) ? a1 + root_disc : a1 - root_disc;
  if (denom == Real(0)) {
    throw degenerate_quadratic_error("branch_select_quadratic: a_1 and a_2 both vanish");
  }
  return Real(2) * dy / denom;
}

/// Inching root finder. Takes N steps; each expands y in a Taylor series of
/// order m about the current point, inverts the series, and moves by the dx
/// that drops y by anchor_y / N. The estimate error scales as O(N^-m) when a
/// root sits downhill of the anchor.
template <class Real>
RootEstimate<Real> local_inversion(const DifferentiableTarget<Real>& target, long N,
                                   std::size_t m, const LocalInversionOptions<Real>& opt = {}) {
  if (N < 1) throw invalid_input_error("local_inversion: N must be >= 1");
  if (m < 1 || m > target.order()) {
    throw invalid_input_error("local_inversion: need 1 <= m <= number of supplied derivatives");
  }
  if (!num::isfinite(target.anchor_x) || !num::isfinite(target.anchor_y)) {
    throw invalid_input_error("local_inversion: non-finite anchor");
  }

  RootEstimate<Real> result;
  result.method = Method::local_inversion;
  if (opt.trace) result.trace.emplace();

  if (target.anchor_y == Real(0)) {
    result.root = target.anchor_x;
    if (result.trace) result.trace->x.push_back(target.anchor_x);
    return result;
  }

  const Real dy = -(target.anchor_y / Real(N));
  num::compensated_sum<Real> x(target.anchor_x);
  std::vector<Real> coeffs(m);
  Real factorial(1);

  for (long k = 0; k < N; ++k) {
    const Real xk = x.value();
    const Real a1 = target.derivatives[0](xk);
    ++result.derivative_evals;
    if (!num::isfinite(a1)) {
      throw nonfinite_error("local_inversion: non-finite derivative at step " + std::to_string(k));
    }
    if (num::abs(a1) <= opt.derivative_floor) {
      throw zero_derivative_error(
          "local_inversion: y' vanished at step " + std::to_string(k) +
          "; no root is reachable downhill without crossing a stationary point");
    }

    Real dx;
    if (m == 1) {
      dx = dy / a1;
    } else {
      coeffs[0] = a1;
      factorial = Real(1);
      for (std::size_t j = 2; j <= m; ++j) {
        const Real raw = target.derivatives[j - 1](xk);
        ++result.derivative_evals;
        if (!num::isfinite(raw)) {
          throw nonfinite_error("local_inversion: non-finite derivative at step " +
                                std::to_string(k));
        }
        if (k == 0 && result.trace) result.trace->anchor_derivatives.push_back(raw);
        factorial *= Real(j);
        coeffs[j - 1] = raw / factorial;
      }
      const std::vector<Real> inverse =
          invert_series(std::span<const Real>(coeffs), opt.series_order_cap);
      Real acc = inverse[m - 1];
      for (std::size_t j = m - 1; j >= 1; --j) acc = inverse[j - 1] + dy * acc;
      dx = dy * acc;
    }

    if (result.trace) {
      result.trace->x.push_back(xk);
      result.trace->step.push_back(dx);
      result.trace->dydx.push_back(a1);
    }
    x.add(dx);
    if (!num::isfinite(x.value())) {
      throw nonfinite_error("local_inversion: iterate left the finite range at step " +
                            std::to_string(k));
    }
  }

  result.root = x.value();
  result.steps = N;
  if (result.trace) result.trace->x.push_back(result.root);
  return result;
}

/// Inching with the exact local quadratic model instead of the truncated
/// inverse series. Works from a stationary anchor (where the inverse Taylor
/// series cannot converge) with error O(N^-3/2), and gives O(N^-2) elsewhere.
template <class Real>
RootEstimate<Real> local_inversion_quadratic(const DifferentiableTarget<Real>& target, long N,
                                             const LocalInversionOptions<Real>& opt = {}) {
  if (N < 1) throw invalid_input_error("local_inversion_quadratic: N must be >= 1");
  if (target.order() < 2) {
    throw invalid_input_error("local_inversion_quadratic: needs two derivatives");
  }
  if (!num::isfinite(target.anchor_x) || !num::isfinite(target.anchor_y)) {
    throw invalid_input_error("local_inversion_quadratic: non-finite anchor");
  }

  RootEstimate<Real> result;
  result.method = Method::local_inversion_quadratic;
  if (opt.trace) result.trace.emplace();

  if (target.anchor_y == Real(0)) {
    result.root = target.anchor_x;
    if (result.trace) result.trace->x.push_back(target.anchor_x);
    return result;
  }

  const Real dy = -(target.anchor_y / Real(N));
  num::compensated_sum<Real> x(target.anchor_x);

  for (long k = 0; k < N; ++k) {
    const Real xk = x.value();
    const Real a1 = target.derivatives[0](xk);
    const Real a2 = target.derivatives[1](xk) / Real(2);
    result.derivative_evals += 2;
    if (!num::isfinite(a1) || !num::isfinite(a2)) {
      throw nonfinite_error("local_inversion_quadratic: non-finite derivative at step " +
                            std::to_string(k));
    }
    const Real dx = branch_select_quadratic(a1, a2, dy);
    if (result.trace) {
      result.trace->x.push_back(xk);
      result.trace->step.push_back(dx);
      result.trace->dydx.push_back(a1);
    }
    x.add(dx);
    if (!num::isfinite(x.value())) {
      throw nonfinite_error("local_inversion_quadratic: iterate left the finite range at step " +
                            std::to_string(k));
    }
  }

  result.root = x.value();
  result.steps = N;
  if (result.trace) result.trace->x.push_back(result.root);
  return result;
}

}  // namespace derivroot
