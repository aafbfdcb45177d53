#pragma once

// Volume of the integrator reach set from a single point:
//
//   vol = (2 mu)^d t^(d(d+1)/2) / (1! 2! ... (d-1)!) * L(d),
//
// where L(d) is the leading coefficient of the polynomial
//   S_d(n) = sum over 0 <= i_1 < ... < i_d <= n of prod_{a<b} (i_b - i_a),
// a polynomial in n of degree d(d+1)/2. L(d) is obtained exactly by
// interpolating S_d at integer nodes.

#include <span>
#include <vector>

#include "reachkit/convexset.hpp"
#include "reachkit/lti_core.hpp"
#include "reachkit/rational.hpp"
#include "reachkit/reach.hpp"

namespace reachkit {

// Largest d handled by the exterior-algebra recurrence (2^d states).
inline constexpr int kMaxVandermondeDimension = 24;
inline constexpr int kDefaultLimitDimensionCap = 8;

// S_d(n), exact. Requires d >= 2 and n >= 0.
Integer vandermonde_sum(int d, int n);

// S_d(0), S_d(1), ..., S_d(n_max) from a single pass.
std::vector<Integer> vandermonde_sums(int d, int n_max);

struct LimitCoefficient {
  int d = 0;
  // Leading coefficient of S_d, the limit S_d(n) / n^(d(d+1)/2).
  Rational value;
  // Monomial coefficients of S_d in ascending powers of n.
  std::vector<Rational> polynomial;
  // First interpolation node; nodes are first_node .. first_node + degree.
  int first_node = 0;
  // Node outside the interpolation set where the fitted polynomial was
  // re-checked against a direct evaluation of S_d.
  int holdout_node = 0;
};

// Exact L(d). Throws BudgetExceeded for d > cap and InvalidArgument for d < 2.
// Results are memoised per d.
LimitCoefficient limit_coefficient(int d, int cap = kDefaultLimitDimensionCap);

// Exact closed-form volume from a single initial point.
Rational reach_volume(const IntegratorSystem& sys, const Rational& t);

// Closed form for a ReachSpec; throws UnsupportedInitialSet unless X0 is a
// single point.
double reach_volume(const ReachSpec& spec);

struct ConvergenceRow {
  int n = 0;
  double volume = 0.0;
  // |volume - closed form| / closed form.
  double gap = 0.0;
};

// Volumes of discretize_reach(sys, t, n, rule) against the closed form. The
// left-endpoint rule approaches the limit from below; the breakpoint rule,
// which carries one extra generator, from above.
std::vector<ConvergenceRow> volume_convergence(const IntegratorSystem& sys, double t, std::span<const int> n_list,
                                               DiscretizationRule rule = DiscretizationRule::kLeftEndpoint,
                                               std::size_t cap = kDefaultSubsetCap);

// Approximate volume of exp(tA) X0 + integral term for a zonotopic X0 (points,
// boxes, zonotopes and their affine images or sums): the volume of the
// zonotope with the generators of both parts. Throws UnsupportedInitialSet for
// other sets.
double volume_estimate(const ReachSpec& spec, int n, DiscretizationRule rule = DiscretizationRule::kLeftEndpoint,
                       std::size_t cap = kDefaultSubsetCap);

}  // namespace reachkit
