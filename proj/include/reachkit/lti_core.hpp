#pragma once

// The d-dimensional integrator chain x' = A x + b u with |u| <= mu, where A is
// the upper shift matrix and b = e_d. Everything here is exact in the Rational
// backend: exp(tA) is a finite sum because A is nilpotent.

#include <span>
#include <vector>

#include "reachkit/linalg.hpp"
#include "reachkit/rational.hpp"

namespace reachkit {

class IntegratorSystem {
 public:
  // Requires d >= 2 and mu > 0.
  IntegratorSystem(int d, Rational mu);
  static IntegratorSystem with_bound(int d, double mu);

  int dim() const noexcept { return d_; }
  const Rational& mu() const noexcept { return mu_; }
  double mu_value() const noexcept { return mu_double_; }

  template <Scalar T>
  Matrix<T> drift_matrix() const;
  template <Scalar T>
  Vector<T> input_vector() const;

 private:
  int d_;
  Rational mu_;
  double mu_double_;
};

// exp(tA): entry (i, j) is t^(j-i)/(j-i)! above the diagonal, 1 on it, 0 below.
// Valid for negative t as well.
template <Scalar T>
Matrix<T> state_transition(const IntegratorSystem& sys, const T& t);

// xi(s) = (s^(d-1)/(d-1)!, ..., s, 1), the last column of exp(sA).
template <Scalar T>
Vector<T> xi(const IntegratorSystem& sys, const T& s);

// zeta(t) = integral of xi over [0, t]; component i is t^(d-i+1)/(d-i+1)!.
// Requires t >= 0.
template <Scalar T>
Vector<T> zeta(const IntegratorSystem& sys, const T& t);

template <Scalar T>
struct ControlSegment {
  T duration;
  T u;
};

// Exact endpoint under piecewise-constant control. Each segment of length tau
// with value u maps x to exp(tau A) x + u zeta(tau). Throws
// ControlBoundViolation if some |u| exceeds mu.
template <Scalar T>
Vector<T> propagate(const IntegratorSystem& sys, const Vector<T>& x0,
                    std::span<const ControlSegment<T>> controls);

}  // namespace reachkit
