#include "reachkit/reach.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "reachkit/error.hpp"
#include "reachkit/parallel.hpp"

namespace reachkit {
namespace {

Vector<double> unit_direction(std::span<const double> eta) {
  Vector<double> v(eta.begin(), eta.end());
  const double len = norm2(v);
  if (len == 0.0) throw Error(ErrorCode::kZeroDirection, "direction must be non-zero");
  if (std::abs(len - 1.0) > 1e-9) {
    for (auto& x : v) x /= len;
  }
  return v;
}

Vector<double> negated(Vector<double> v) {
  for (auto& x : v) x = -x;
  return v;
}

const Vector<double>& require_point(const ReachSpec& spec, const char* what) {
  if (!spec.initial_point()) {
    throw Error(ErrorCode::kUnsupportedInitialSet,
                std::string(what) + " needs a single-point initial set, got " + spec.initial_set().kind());
  }
  return *spec.initial_point();
}

// The known width maximisers +-zeta/|zeta| followed by +-e_i.
std::vector<Vector<double>> probe_directions(const ReachSpec& spec) {
  const int d = spec.dim();
  Vector<double> z = zeta(spec.system(), spec.horizon());
  const double len = norm2(z);
  for (auto& x : z) x /= len;
  std::vector<Vector<double>> dirs{z, negated(z)};
  for (int i = 0; i < d; ++i) {
    Vector<double> e(d, 0.0);
    e[i] = 1.0;
    dirs.push_back(e);
    dirs.push_back(negated(e));
  }
  return dirs;
}

std::vector<Vector<double>> theta_grid(int count) {
  std::vector<Vector<double>> dirs(count);
  for (int k = 0; k < count; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / count;
    dirs[k] = {std::cos(theta), std::sin(theta)};
  }
  return dirs;
}

double circular_distance(double a, double b) {
  const double two_pi = 2.0 * std::numbers::pi;
  double diff = std::fmod(std::abs(a - b), two_pi);
  return std::min(diff, two_pi - diff);
}

}  // namespace

ReachSpec::ReachSpec(IntegratorSystem sys, ConvexSet x0, double t) : sys_(std::move(sys)), x0_(std::move(x0)), t_(t) {
  if (!std::isfinite(t_) || t_ <= 0) throw Error(ErrorCode::kInvalidArgument, "reach horizon must be positive");
  require_dimension(x0_.dim(), static_cast<std::size_t>(sys_.dim()), "initial set");
  transition_ = state_transition(sys_, t_);
  x0_point_ = as_point(x0_);
}

Polynomial<double> direction_polynomial(const IntegratorSystem& sys, std::span<const double> y) {
  const int d = sys.dim();
  require_dimension(y.size(), static_cast<std::size_t>(d), "direction");
  std::vector<double> coefficients(d);
  for (int k = 0; k < d; ++k) coefficients[k] = y[d - 1 - k] * inverse_factorial<double>(k);
  return Polynomial<double>(std::move(coefficients));
}

double reach_support(const ReachSpec& spec, std::span<const double> y) {
  require_dimension(y.size(), static_cast<std::size_t>(spec.dim()), "support direction");
  const Vector<double> pulled = multiply_transposed(spec.transition(), Vector<double>(y.begin(), y.end()));
  const double initial = support(spec.initial_set(), pulled);
  return initial + spec.system().mu_value() * integrate_abs(direction_polynomial(spec.system(), y), spec.horizon());
}

double width(const ReachSpec& spec, std::span<const double> eta) {
  require_dimension(eta.size(), static_cast<std::size_t>(spec.dim()), "width direction");
  const Vector<double> unit = unit_direction(eta);
  if (spec.has_singleton_start()) {
    return 2.0 * spec.system().mu_value() * integrate_abs(direction_polynomial(spec.system(), unit), spec.horizon());
  }
  return reach_support(spec, unit) + reach_support(spec, negated(unit));
}

Diameter diameter(const ReachSpec& spec) {
  require_point(spec, "closed-form diameter");
  Vector<double> z = zeta(spec.system(), spec.horizon());
  const double len = norm2(z);
  for (auto& x : z) x /= len;
  return {2.0 * spec.system().mu_value() * len, std::move(z), false};
}

Diameter diameter_estimate(const ReachSpec& spec, int samples) {
  std::vector<Vector<double>> dirs = sphere_directions(spec.dim(), samples);
  for (auto& v : probe_directions(spec)) dirs.push_back(std::move(v));
  std::vector<double> widths(dirs.size());
  parallel_for(dirs.size(), [&](std::size_t k) { widths[k] = width(spec, dirs[k]); });
  const auto best = static_cast<std::size_t>(std::max_element(widths.begin(), widths.end()) - widths.begin());
  return {widths[best], dirs[best], true};
}

WidthProfile width_profile(const ReachSpec& spec, int grid) {
  if (grid < 8) throw Error(ErrorCode::kInvalidArgument, "width profile grid must be >= 8");
  WidthProfile profile;
  const int d = spec.dim();
  if (d == 2) {
    profile.directions = theta_grid(grid);
    profile.thetas.resize(grid);
    for (int k = 0; k < grid; ++k) profile.thetas[k] = 2.0 * std::numbers::pi * k / grid;
  } else {
    profile.directions = sphere_directions(d, grid);
    for (auto& v : probe_directions(spec)) profile.directions.push_back(std::move(v));
  }
  profile.widths.resize(profile.directions.size());
  parallel_for(profile.directions.size(), [&](std::size_t k) { profile.widths[k] = width(spec, profile.directions[k]); });
  profile.argmax =
      static_cast<std::size_t>(std::max_element(profile.widths.begin(), profile.widths.end()) - profile.widths.begin());

  Vector<double> z = zeta(spec.system(), spec.horizon());
  const double len = norm2(z);
  for (auto& x : z) x /= len;
  profile.maximizers = {z, negated(z)};
  if (d == 2) {
    const double base = std::atan(2.0 / spec.horizon());
    profile.maximizer_thetas = {base, std::numbers::pi + base};
    const double cell = 2.0 * std::numbers::pi / grid;
    const double theta = profile.thetas[profile.argmax];
    profile.argmax_near_maximizer = std::any_of(profile.maximizer_thetas.begin(), profile.maximizer_thetas.end(),
                                                [&](double m) { return circular_distance(theta, m) <= cell; });
  }
  return profile;
}

std::vector<ControlSegment<double>> extremal_control(const ReachSpec& spec, std::span<const double> eta) {
  require_point(spec, "extremal control");
  const Vector<double> unit = unit_direction(eta);
  const double t = spec.horizon();
  const double mu = spec.system().mu_value();
  const SignPartition partition = sign_partition(direction_polynomial(spec.system(), unit), t);
  // Sign interval [s_k, s_k+1] in backward time s = t - tau.
  std::vector<ControlSegment<double>> controls;
  for (std::size_t k = partition.signs.size(); k-- > 0;) {
    const double lo = k == 0 ? 0.0 : partition.breakpoints[k - 1];
    const double hi = k < partition.breakpoints.size() ? partition.breakpoints[k] : t;
    controls.push_back({hi - lo, mu * partition.signs[k]});
  }
  return controls;
}

BoundaryPoint extremal_point(const ReachSpec& spec, std::span<const double> eta) {
  const Vector<double>& x0 = require_point(spec, "extremal point");
  const Vector<double> unit = unit_direction(eta);
  const double t = spec.horizon();
  const double mu = spec.system().mu_value();
  const SignPartition partition = sign_partition(direction_polynomial(spec.system(), unit), t);
  Vector<double> point = multiply(spec.transition(), x0);
  Vector<double> previous = zeta(spec.system(), 0.0);
  for (std::size_t k = 0; k < partition.signs.size(); ++k) {
    const double hi = k < partition.breakpoints.size() ? partition.breakpoints[k] : t;
    const Vector<double> current = zeta(spec.system(), hi);
    for (std::size_t i = 0; i < point.size(); ++i) point[i] += mu * partition.signs[k] * (current[i] - previous[i]);
    previous = current;
  }
  return {unit, std::move(point)};
}

std::vector<BoundaryPoint> boundary_points(const ReachSpec& spec, int samples) {
  if (samples < 4) throw Error(ErrorCode::kInvalidArgument, "boundary sampling needs at least 4 directions");
  require_point(spec, "boundary points");
  const std::vector<Vector<double>> dirs = spec.dim() == 2 ? theta_grid(samples) : sphere_directions(spec.dim(), samples);
  std::vector<BoundaryPoint> points(dirs.size());
  parallel_for(dirs.size(), [&](std::size_t k) { points[k] = extremal_point(spec, dirs[k]); });
  return points;
}

Tube tube_slices(const ReachSpec& spec, int slices, int samples) {
  if (slices < 2) throw Error(ErrorCode::kInvalidArgument, "tube needs at least 2 slices");
  Tube tube{require_point(spec, "tube slices"), {}};
  for (int k = 1; k <= slices; ++k) {
    const double tau = k == slices ? spec.horizon() : spec.horizon() * k / slices;
    tube.slices.push_back({tau, boundary_points(spec.at_horizon(tau), samples)});
  }
  return tube;
}

std::vector<HausdorffRow> discretization_hausdorff(const ReachSpec& spec, std::span<const int> n_list, int samples,
                                                   DiscretizationRule rule) {
  std::vector<Vector<double>> dirs = sphere_directions(spec.dim(), samples);
  for (auto& v : probe_directions(spec)) dirs.push_back(std::move(v));
  const SupportFunction exact = [&](std::span<const double> y) { return reach_support(spec, y); };
  std::vector<HausdorffRow> rows;
  for (int n : n_list) {
    const Zonotope z = discretize_reach(spec.system(), spec.horizon(), n, rule);
    const SupportFunction approx = [&](std::span<const double> y) {
      const Vector<double> v(y.begin(), y.end());
      return support(spec.initial_set(), multiply_transposed(spec.transition(), v)) + zonotope_support(z, v);
    };
    HausdorffEstimate est = hausdorff_distance(approx, exact, dirs);
    rows.push_back({n, est.distance, std::move(est.direction)});
  }
  return rows;
}

}  // namespace reachkit
