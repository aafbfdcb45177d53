#pragma once

// Univariate polynomials in ascending-coefficient form, real-root isolation on
// an interval, and exact integration of |p| by splitting at sign changes.

#include <vector>

#include "reachkit/rational.hpp"

namespace reachkit {

template <Scalar T>
class Polynomial {
 public:
  Polynomial() = default;
  // coefficients[k] multiplies s^k. Trailing zeros are dropped.
  explicit Polynomial(std::vector<T> coefficients);

  const std::vector<T>& coefficients() const noexcept { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }

  T operator()(const T& s) const;

  Polynomial derivative() const;
  // Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  Polynomial scaled(const T& factor) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<T> coefficients_;
};

template <Scalar T>
T definite_integral(const Polynomial<T>& p, const T& lo, const T& hi);

// All real roots of p in the open interval (lo, hi), ascending, each located to
// within tol. A multiple root is reported once. Throws DegenerateZeroPolynomial
// for p == 0.
std::vector<double> roots_in_interval(const Polynomial<double>& p, double lo, double hi, double tol);
// Uses tol = 1e-12 * (hi - lo).
std::vector<double> roots_in_interval(const Polynomial<double>& p, double lo, double hi);

// Sign structure of p on (0, t): breakpoints are the interior roots and
// signs[k] is the sign of p on the k-th open subinterval.
struct SignPartition {
  std::vector<double> breakpoints;
  std::vector<int> signs;
};

SignPartition sign_partition(const Polynomial<double>& p, double t);

// Integral of |p(s)| over [0, t]; the zero polynomial integrates to 0.
double integrate_abs(const Polynomial<double>& p, double t, double tol);
double integrate_abs(const Polynomial<double>& p, double t);

}  // namespace reachkit
