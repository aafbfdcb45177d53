#include "reachkit/lti_core.hpp"

#include <cmath>
#include <string>

#include "reachkit/error.hpp"

namespace reachkit {

IntegratorSystem::IntegratorSystem(int d, Rational mu) : d_(d), mu_(std::move(mu)) {
  mu_.canonicalize();
  if (d_ < 2) {
    throw Error(ErrorCode::kInvalidArgument, "integrator dimension must be >= 2, got " + std::to_string(d_));
  }
  if (mu_ <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "control bound must be positive, got " + to_string(mu_));
  }
  mu_double_ = mu_.get_d();
}

IntegratorSystem IntegratorSystem::with_bound(int d, double mu) {
  if (!std::isfinite(mu) || mu <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "control bound must be positive and finite");
  }
  return IntegratorSystem(d, exact_rational(mu));
}

template <Scalar T>
Matrix<T> IntegratorSystem::drift_matrix() const {
  Matrix<T> a(d_, d_);
  for (int i = 0; i + 1 < d_; ++i) a(i, i + 1) = T(1);
  return a;
}

template <Scalar T>
Vector<T> IntegratorSystem::input_vector() const {
  Vector<T> b(d_, T(0));
  b.back() = T(1);
  return b;
}

template <Scalar T>
Matrix<T> state_transition(const IntegratorSystem& sys, const T& t) {
  const int d = sys.dim();
  // powers[k] = t^k / k!
  std::vector<T> powers(d);
  T tk(1);
  for (int k = 0; k < d; ++k) {
    powers[k] = tk * inverse_factorial<T>(k);
    tk *= t;
  }
  Matrix<T> phi(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) phi(i, j) = powers[j - i];
  }
  return phi;
}

template <Scalar T>
Vector<T> xi(const IntegratorSystem& sys, const T& s) {
  const int d = sys.dim();
  Vector<T> v(d);
  T sk(1);
  for (int k = 0; k < d; ++k) {
    v[d - 1 - k] = sk * inverse_factorial<T>(k);
    sk *= s;
  }
  return v;
}

template <Scalar T>
Vector<T> zeta(const IntegratorSystem& sys, const T& t) {
  if (t < 0) throw Error(ErrorCode::kInvalidArgument, "zeta requires t >= 0");
  const int d = sys.dim();
  Vector<T> v(d);
  T tk(t);
  for (int k = 1; k <= d; ++k) {
    v[d - k] = tk * inverse_factorial<T>(k);
    tk *= t;
  }
  return v;
}

template <Scalar T>
Vector<T> propagate(const IntegratorSystem& sys, const Vector<T>& x0,
                    std::span<const ControlSegment<T>> controls) {
  require_dimension(x0.size(), static_cast<std::size_t>(sys.dim()), "initial state");
  const T bound = scalar_from<T>(sys.mu());
  Vector<T> x = x0;
  for (const auto& segment : controls) {
    bool violates = abs_value(segment.u) > bound;
    if constexpr (std::same_as<T, double>) {
      // Tolerate the last-ulp noise of u = +-mu computed in floating point.
      violates = std::abs(segment.u) > bound * (1.0 + 1e-12);
    }
    if (violates) {
      throw Error(ErrorCode::kControlBoundViolation,
                  "control " + std::to_string(to_double(segment.u)) + " exceeds bound " + to_string(sys.mu()));
    }
    if (segment.duration < 0) {
      throw Error(ErrorCode::kInvalidArgument, "control segment duration must be non-negative");
    }
    if (segment.duration == 0) continue;
    x = multiply(state_transition(sys, segment.duration), x);
    if (segment.u != 0) {
      const Vector<T> z = zeta(sys, segment.duration);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += segment.u * z[i];
    }
  }
  return x;
}

template Matrix<double> IntegratorSystem::drift_matrix<double>() const;
template Matrix<Rational> IntegratorSystem::drift_matrix<Rational>() const;
template Vector<double> IntegratorSystem::input_vector<double>() const;
template Vector<Rational> IntegratorSystem::input_vector<Rational>() const;
template Matrix<double> state_transition(const IntegratorSystem&, const double&);
template Matrix<Rational> state_transition(const IntegratorSystem&, const Rational&);
template Vector<double> xi(const IntegratorSystem&, const double&);
template Vector<Rational> xi(const IntegratorSystem&, const Rational&);
template Vector<double> zeta(const IntegratorSystem&, const double&);
template Vector<Rational> zeta(const IntegratorSystem&, const Rational&);
template Vector<double> propagate(const IntegratorSystem&, const Vector<double>&,
                                  std::span<const ControlSegment<double>>);
template Vector<Rational> propagate(const IntegratorSystem&, const Vector<Rational>&,
                                    std::span<const ControlSegment<Rational>>);

}  // namespace reachkit
