#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace derivroot {

/// Base class for everything this library throws.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed call: non-finite inputs, bad sizes, out-of-domain arguments.
class invalid_input_error : public error {
 public:
  using error::error;
};

/// A configurable order/size cap was exceeded (series order, Bernoulli table,
/// quadrature node count).
class order_cap_error : public error {
 public:
  using error::error;
};

/// First derivative vanished (or fell below the configured floor) where the
/// method needs to divide by it. For the inching solvers this signals that no
/// root sits downhill without crossing a stationary point.
class zero_derivative_error : public error {
 public:
  using error::error;
};

/// An iterate or sample left the finite range.
class nonfinite_error : public error {
 public:
  using error::error;
};

/// The quadratic step model has no real solution: the requested shift in y
/// overshoots the extremum of the local quadratic.
class discriminant_error : public error {
 public:
  using error::error;
};

/// Both linear and quadratic step coefficients vanished.
class degenerate_quadratic_error : public error {
 public:
  using error::error;
};

/// Newton hops grew past the divergence cap. Carries the iterate history so
/// callers can inspect per-hop growth.
class divergence_error : public error {
 public:
  divergence_error(const std::string& what, std::vector<double> history)
      : error(what), iterates(std::move(history)) {}

  std::vector<double> iterates;
};

/// Singular or numerically rank-deficient matrix in a linear solve.
class singular_matrix_error : public error {
 public:
  using error::error;
};

/// Hessian condition estimate exceeded the configured cap.
class ill_conditioned_error : public error {
 public:
  using error::error;
};

/// Spline fitting got fewer samples than the requested degree allows.
class too_few_samples_error : public error {
 public:
  using error::error;
};

/// Spline fitting requires strictly monotone sample values.
class non_monotone_error : public error {
 public:
  using error::error;
};

/// Fixture registry lookup failed.
class unknown_fixture_error : public error {
 public:
  using error::error;
};

/// Study spec pairs a method with a fixture it cannot run on.
class incompatible_method_error : public error {
 public:
  using error::error;
};

}  // namespace derivroot
