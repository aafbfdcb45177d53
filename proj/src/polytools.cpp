#include "reachkit/polytools.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reachkit/error.hpp"

namespace reachkit {

template <Scalar T>
Polynomial<T>::Polynomial(std::vector<T> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

template <Scalar T>
T Polynomial<T>::operator()(const T& s) const {
  T value(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value *= s;
    value += *it;
  }
  return value;
}

template <Scalar T>
Polynomial<T> Polynomial<T>::derivative() const {
  if (coefficients_.size() <= 1) return Polynomial();
  std::vector<T> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) d[k - 1] = coefficients_[k] * T(static_cast<long>(k));
  return Polynomial(std::move(d));
}

template <Scalar T>
Polynomial<T> Polynomial<T>::antiderivative() const {
  if (coefficients_.empty()) return Polynomial();
  std::vector<T> a(coefficients_.size() + 1, T(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) a[k + 1] = coefficients_[k] / T(static_cast<long>(k + 1));
  return Polynomial(std::move(a));
}

template <Scalar T>
Polynomial<T> Polynomial<T>::scaled(const T& factor) const {
  std::vector<T> c(coefficients_);
  for (auto& x : c) x *= factor;
  return Polynomial(std::move(c));
}

template <Scalar T>
T definite_integral(const Polynomial<T>& p, const T& lo, const T& hi) {
  const Polynomial<T> anti = p.antiderivative();
  return T(anti(hi) - anti(lo));
}

template class Polynomial<double>;
template class Polynomial<Rational>;
template double definite_integral(const Polynomial<double>&, const double&, const double&);
template Rational definite_integral(const Polynomial<Rational>&, const Rational&, const Rational&);

namespace {

int sign_of(double x) { return (x > 0) - (x < 0); }

// Sum of |a_k| |s|^k: the scale against which a computed p(s) is compared to zero.
double magnitude(const Polynomial<double>& p, double s) {
  double value = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * std::abs(s) + std::abs(*it);
  return value;
}

bool vanishes_at(const Polynomial<double>& p, double s) {
  return std::abs(p(s)) <= 64.0 * std::numeric_limits<double>::epsilon() * magnitude(p, s);
}

// p has a strict sign change on [a, b] and is monotone there.
double bisect(const Polynomial<double>& p, double a, double b, double tol) {
  int sa = sign_of(p(a));
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const int sm = sign_of(p(mid));
    if (sm == 0) return mid;
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Roots of p in (lo, hi). Critical points (roots of p') cut the interval into
// pieces on which p is monotone, so each piece holds at most one simple root
// and a sign test decides it. Critical points where p vanishes are the
// even-multiplicity (touching) roots.
std::vector<double> isolate(const Polynomial<double>& p, double lo, double hi, double tol) {
  std::vector<double> roots;
  if (p.degree() <= 0) return roots;
  if (p.degree() == 1) {
    const double r = -p.coefficients()[0] / p.coefficients()[1];
    if (r > lo && r < hi) roots.push_back(r);
    return roots;
  }
  const std::vector<double> critical = isolate(p.derivative(), lo, hi, tol);
  std::vector<double> knots;
  knots.reserve(critical.size() + 2);
  knots.push_back(lo);
  knots.insert(knots.end(), critical.begin(), critical.end());
  knots.push_back(hi);
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const double a = knots[k];
    const double b = knots[k + 1];
    if (k > 0 && vanishes_at(p, a)) {
      roots.push_back(a);
      continue;
    }
    if (k + 1 < knots.size() - 1 && vanishes_at(p, b)) continue;
    if (sign_of(p(a)) * sign_of(p(b)) < 0) roots.push_back(bisect(p, a, b, tol));
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (!(r > lo && r < hi)) continue;
    if (!merged.empty() && r - merged.back() <= 2.0 * tol) continue;
    merged.push_back(r);
  }
  return merged;
}

}  // namespace

std::vector<double> roots_in_interval(const Polynomial<double>& p, double lo, double hi, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::kDegenerateZeroPolynomial, "root isolation of the zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "root interval must satisfy lo < hi");
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "root tolerance must be positive");
  return isolate(p, lo, hi, tol);
}

std::vector<double> roots_in_interval(const Polynomial<double>& p, double lo, double hi) {
  return roots_in_interval(p, lo, hi, 1e-12 * (hi - lo));
}

SignPartition sign_partition(const Polynomial<double>& p, double t) {
  if (!(t > 0)) throw Error(ErrorCode::kInvalidArgument, "sign partition requires t > 0");
  SignPartition partition;
  if (p.is_zero()) {
    partition.signs.push_back(0);
    return partition;
  }
  partition.breakpoints = roots_in_interval(p, 0.0, t);
  double a = 0.0;
  for (std::size_t k = 0; k <= partition.breakpoints.size(); ++k) {
    const double b = k < partition.breakpoints.size() ? partition.breakpoints[k] : t;
    partition.signs.push_back(sign_of(p(0.5 * (a + b))));
    a = b;
  }
  return partition;
}

double integrate_abs(const Polynomial<double>& p, double t, double tol) {
  if (!(t > 0)) throw Error(ErrorCode::kInvalidArgument, "integrate_abs requires t > 0");
  if (p.is_zero()) return 0.0;
  const Polynomial<double> anti = p.antiderivative();
  const std::vector<double> cuts = roots_in_interval(p, 0.0, t, tol);
  double total = 0.0;
  double a = 0.0;
  double previous = anti(a);
  for (std::size_t k = 0; k <= cuts.size(); ++k) {
    const double b = k < cuts.size() ? cuts[k] : t;
    const double current = anti(b);
    total += std::abs(current - previous);
    previous = current;
    a = b;
  }
  return total;
}

double integrate_abs(const Polynomial<double>& p, double t) { return integrate_abs(p, t, 1e-12 * t); }

}  // namespace reachkit
