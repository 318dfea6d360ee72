#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "derivroot/errors.hpp"
#include "derivroot/numeric.hpp"

namespace derivroot {

/// Piecewise polynomial on the integer knots g = 0..N, stored segment by
/// segment as Taylor coefficients about each segment start. Derivative
/// queries are supported up to the polynomial degree.
template <class Real = double>
class SplineInterpolant {
 public:
  SplineInterpolant(std::size_t degree, std::size_t segments, std::vector<Real> coef)
      : degree_(degree), segments_(segments), coef_(std::move(coef)) {}

  std::size_t degree() const { return degree_; }
  std::size_t segment_count() const { return segments_; }

  Real value(Real g) const { return derivative(g, 0); }

  Real derivative(Real g, std::size_t order) const {
    if (order > degree_) {
      throw invalid_input_error("SplineInterpolant: derivative order " + std::to_string(order) +
                                " exceeds degree " + std::to_string(degree_));
    }
    long i = static_cast<long>(g);
    if (i < 0) i = 0;
    if (i >= static_cast<long>(segments_)) i = static_cast<long>(segments_) - 1;
    const Real t = g - Real(i);
    const Real* c = &coef_[static_cast<std::size_t>(i) * (degree_ + 1)];
    Real acc(0);
    for (std::size_t k = degree_ + 1; k-- > order;) {
      Real perm(1);
      for (std::size_t q = 0; q < order; ++q) perm *= Real(k - q);
      acc = acc * t + c[k] * perm;
    }
    return acc;
  }

 private:
  std::size_t degree_;
  std::size_t segments_;
  std::vector<Real> coef_;  // segments_ x (degree_ + 1)
};

namespace detail {

/// Index mu with knots[mu] <= x < knots[mu+1], clamped so that
/// lo <= mu <= hi (the valid evaluation spans).
template <class Real>
std::size_t find_span(const std::vector<Real>& knots, std::size_t lo, std::size_t hi, Real x) {
  if (x >= knots[hi + 1]) return hi;
  if (x <= knots[lo]) return lo;
  std::size_t a = lo, b = hi;
  while (a < b) {
    const std::size_t mid = (a + b + 1) / 2;
    if (knots[mid] <= x) {
      a = mid;
    } else {
      b = mid - 1;
    }
  }
  return a;
}

/// de Boor evaluation of a degree-p spline with the given control points.
template <class Real>
Real deboor_eval(const std::vector<Real>& knots, std::size_t first_knot,
                 const std::vector<Real>& control, std::size_t p, Real x) {
  // Valid spans are first_knot+p .. first_knot+#control-1 in absolute indexing.
  const std::size_t lo = first_knot + p;
  const std::size_t hi = first_knot + control.size() - 1;
  const std::size_t mu = find_span(knots, lo, hi, x);
  std::vector<Real> d(p + 1);
  for (std::size_t j = 0; j <= p; ++j) d[j] = control[mu - first_knot - p + j];
  for (std::size_t level = 1; level <= p; ++level) {
    for (std::size_t j = p; j >= level; --j) {
      const std::size_t i1 = mu - p + j;
      const Real denom = knots[i1 + p - level + 1] - knots[i1];
      const Real alpha = (denom == Real(0)) ? Real(0) : (x - knots[i1]) / denom;
      d[j] = (Real(1) - alpha) * d[j - 1] + alpha * d[j];
    }
  }
  return d[p];
}

/// Nonzero B-spline basis values N_{mu-p..mu}(x) (Cox-de Boor triangle).
template <class Real>
void basis_values(const std::vector<Real>& knots, std::size_t mu, std::size_t p, Real x,
                  std::vector<Real>& out) {
  out.assign(p + 1, Real(0));
  out[0] = Real(1);
  std::vector<Real> left(p + 1), right(p + 1);
  for (std::size_t j = 1; j <= p; ++j) {
    left[j] = x - knots[mu + 1 - j];
    right[j] = knots[mu + j] - x;
    Real saved(0);
    for (std::size_t k = 0; k < j; ++k) {
      const Real term = out[k] / (right[k + 1] + left[j - k]);
      out[k] = saved + right[k + 1] * term;
      saved = left[j - k] * term;
    }
    out[j] = saved;
  }
}

/// Unpivoted banded LU solve (in-place). band is n rows of width 2*hw+1 with
/// the diagonal at column hw. Collocation matrices here are totally positive,
/// which keeps the elimination stable without pivoting.
template <class Real>
void band_solve(std::vector<Real>& band, std::size_t n, std::size_t hw, std::vector<Real>& rhs) {
  const std::size_t width = 2 * hw + 1;
  auto at = [&](std::size_t row, std::size_t col) -> Real& {
    return band[row * width + (col + hw - row)];
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Real pivot = at(k, k);
    if (!(num::abs(pivot) > Real(0))) {
      throw singular_matrix_error("spline fit: singular collocation system");
    }
    const std::size_t last = (k + hw < n - 1) ? k + hw : n - 1;
    for (std::size_t i = k + 1; i <= last; ++i) {
      const Real f = at(i, k) / pivot;
      if (f == Real(0)) continue;
      const std::size_t cend = (k + hw < n - 1) ? k + hw : n - 1;
      for (std::size_t j = k; j <= cend; ++j) at(i, j) -= f * at(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Real s = rhs[k];
    const std::size_t cend = (k + hw < n - 1) ? k + hw : n - 1;
    for (std::size_t j = k + 1; j <= cend; ++j) s -= at(k, j) * rhs[j];
    rhs[k] = s / at(k, k);
  }
}

/// Natural cubic spline through values at g = 0..N: second derivative zero at
/// both ends, moments from the classic tridiagonal system.
template <class Real>
SplineInterpolant<Real> fit_natural_cubic(std::span<const Real> v) {
  const std::size_t n = v.size() - 1;  // segments
  std::vector<Real> moments(n + 1, Real(0));
  if (n >= 2) {
    const std::size_t m = n - 1;  // unknowns M_1..M_{n-1}
    std::vector<Real> diag(m, Real(4)), rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
      rhs[i] = Real(6) * (v[i] - Real(2) * v[i + 1] + v[i + 2]);
    }
    for (std::size_t i = 1; i < m; ++i) {  // Thomas elimination, off-diagonals are 1
      const Real f = Real(1) / diag[i - 1];
      diag[i] -= f;
      rhs[i] -= f * rhs[i - 1];
    }
    moments[m] = rhs[m - 1] / diag[m - 1];
    for (std::size_t i = m - 1; i >= 1; --i) {
      moments[i] = (rhs[i - 1] - moments[i + 1]) / diag[i - 1];
    }
  }
  std::vector<Real> coef(n * 4);
  for (std::size_t i = 0; i < n; ++i) {
    coef[i * 4 + 0] = v[i];
    coef[i * 4 + 1] = (v[i + 1] - v[i]) - (moments[i + 1] + Real(2) * moments[i]) / Real(6);
    coef[i * 4 + 2] = moments[i] / Real(2);
    coef[i * 4 + 3] = (moments[i + 1] - moments[i]) / Real(6);
  }
  return SplineInterpolant<Real>(3, n, std::move(coef));
}

/// Odd-degree interpolating spline with a not-a-knot style closure: the
/// (degree-1)/2 interior knots next to each boundary are removed, which pins
/// the remaining freedom without imposing artificial end derivatives.
template <class Real>
SplineInterpolant<Real> fit_trimmed_bspline(std::span<const Real> v, std::size_t degree) {
  const std::size_t n = v.size() - 1;  // sites 0..n
  const std::size_t p = degree;
  const std::size_t trim = (p - 1) / 2;
  std::vector<Real> knots;
  knots.reserve(2 * (p + 1) + n);
  for (std::size_t i = 0; i <= p; ++i) knots.push_back(Real(0));
  for (std::size_t s = trim + 1; s + trim + 1 <= n; ++s) knots.push_back(Real(s));
  for (std::size_t i = 0; i <= p; ++i) knots.push_back(Real(n));
  const std::size_t nb = knots.size() - p - 1;  // basis count == n + 1

  // Banded collocation system: row i holds the nonzero basis values at g = i.
  const std::size_t hw = p;
  std::vector<Real> band((n + 1) * (2 * hw + 1), Real(0));
  std::vector<Real> rhs(v.begin(), v.end());
  std::vector<Real> basis;
  for (std::size_t i = 0; i <= n; ++i) {
    const Real x = Real(i);
    const std::size_t mu = find_span(knots, p, nb - 1, x);
    basis_values(knots, mu, p, x, basis);
    for (std::size_t j = 0; j <= p; ++j) {
      const std::size_t col = mu - p + j;
      band[i * (2 * hw + 1) + (col + hw - i)] += basis[j];
    }
  }
  band_solve(band, n + 1, hw, rhs);

  // Control points of every derivative order (each differentiation shortens
  // the active knot range by one at both ends).
  std::vector<std::vector<Real>> dctrl(p + 1);
  dctrl[0] = rhs;
  for (std::size_t rho = 1; rho <= p; ++rho) {
    const std::size_t count = nb - rho;
    dctrl[rho].assign(count, Real(0));
    for (std::size_t j = 0; j < count; ++j) {
      const Real denom = knots[j + p + 1] - knots[j + rho];
      if (denom != Real(0)) {
        dctrl[rho][j] =
            Real(p - rho + 1) * (dctrl[rho - 1][j + 1] - dctrl[rho - 1][j]) / denom;
      }
    }
  }

  std::vector<Real> coef(n * (p + 1));
  Real factorial(1);
  std::vector<Real> factorials(p + 1);
  for (std::size_t k = 0; k <= p; ++k) {
    if (k > 0) factorial *= Real(k);
    factorials[k] = factorial;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= p; ++k) {
      const Real dval = deboor_eval(knots, k, dctrl[k], p - k, Real(i));
      coef[i * (p + 1) + k] = dval / factorials[k];
    }
  }
  return SplineInterpolant<Real>(p, n, std::move(coef));
}

}  // namespace detail

/// Degree of the interpolant fit_spline uses for m supplied derivatives:
/// cubic for m = 1, 2*floor(m/2)+1 otherwise.
inline std::size_t spline_degree_for_order(std::size_t m) {
  return (m <= 1) ? 3 : 2 * (m / 2) + 1;
}

/// Interpolating spline through (g, values[g]) for g = 0..values.size()-1.
/// m = 1 fits a natural cubic; m >= 2 fits the odd-degree interpolant with a
/// not-a-knot style closure. Values must be strictly monotone (the intended
/// data is a monotone inching trace) and at least degree+1 samples are needed.
template <class Real>
SplineInterpolant<Real> fit_spline(std::span<const Real> values, std::size_t m) {
  if (m < 1) throw invalid_input_error("fit_spline: m must be >= 1");
  const std::size_t degree = spline_degree_for_order(m);
  if (values.size() < degree + 1) {
    throw too_few_samples_error("fit_spline: need at least " + std::to_string(degree + 1) +
                                " samples for degree " + std::to_string(degree) + ", got " +
                                std::to_string(values.size()));
  }
  for (Real x : values) {
    if (!num::isfinite(x)) throw invalid_input_error("fit_spline: non-finite sample");
  }
  const bool increasing = values[1] > values[0];
  for (std::size_t i = 1; i < values.size(); ++i) {
    const bool up = values[i] > values[i - 1];
    if (values[i] == values[i - 1] || up != increasing) {
      throw non_monotone_error("fit_spline: sample values must be strictly monotone");
    }
  }
  if (m == 1) return detail::fit_natural_cubic(values);
  return detail::fit_trimmed_bspline(values, degree);
}

template <class Real>
SplineInterpolant<Real> fit_spline(const std::vector<Real>& values, std::size_t m) {
  return fit_spline(std::span<const Real>(values), m);
}

}  // namespace derivroot
