#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>

#if defined(__SIZEOF_FLOAT128__) && __has_include(<quadmath.h>)
#include <quadmath.h>
#define DERIVROOT_HAS_QUADMATH 1
#endif

namespace derivroot::num {

// Small scalar shims so the solvers can be instantiated with double, long
// double, __float128, or any type that supplies abs/sqrt/isfinite via ADL.

template <class Real>
Real abs(Real x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::abs(x);
  } else {
    return x < Real(0) ? -x : x;
  }
}

template <class Real>
bool isfinite(Real x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::isfinite(x);
#ifdef DERIVROOT_HAS_QUADMATH
  } else if constexpr (std::is_same_v<Real, __float128>) {
    return !isnanq(x) && !isinfq(x);
#endif
  } else {
    return x - x == Real(0);
  }
}

template <class Real>
Real sqrt(Real x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::sqrt(x);
#ifdef DERIVROOT_HAS_QUADMATH
  } else if constexpr (std::is_same_v<Real, __float128>) {
    return sqrtq(x);
#endif
  } else {
    using std::sqrt;
    return sqrt(x);
  }
}

/// Kahan-compensated accumulator. The inching loops add N nearly equal steps;
/// plain accumulation would drift by O(sqrt(N)) ulps, which is enough to spoil
/// the exactness contracts at large N.
template <class Real>
class compensated_sum {
 public:
  explicit compensated_sum(Real initial = Real(0)) : sum_(initial) {}

  void add(Real v) {
    const Real y = v - carry_;
    const Real t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }

  Real value() const { return sum_; }

 private:
  Real sum_;
  Real carry_ = Real(0);
};

}  // namespace derivroot::num
