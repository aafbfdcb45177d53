#include "reachkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "reachkit/error.hpp"
#include "reachkit/parallel.hpp"
#include "reachkit/rng.hpp"

namespace reachkit {

std::vector<ControlSegment<double>> bang_bang_segments(const ReachSpec& spec, const BangBang& control) {
  const double t = spec.horizon();
  const double mu = spec.system().mu_value();
  std::vector<ControlSegment<double>> segments;
  double start = 0.0;
  double sign = control.initial_sign >= 0 ? 1.0 : -1.0;
  for (double s : control.switch_times) {
    if (s < start || s > t) throw Error(ErrorCode::kInvalidArgument, "switch times must be ascending within [0, t]");
    segments.push_back({s - start, sign * mu});
    start = s;
    sign = -sign;
  }
  segments.push_back({t - start, sign * mu});
  return segments;
}

Vector<double> bang_bang_endpoint(const ReachSpec& spec, const BangBang& control) {
  if (!spec.initial_point()) {
    throw Error(ErrorCode::kUnsupportedInitialSet, "bang-bang endpoints need a single-point initial set");
  }
  const auto segments = bang_bang_segments(spec, control);
  return propagate<double>(spec.system(), *spec.initial_point(), segments);
}

EndpointCloud sample_extremals(const ReachSpec& spec, int count, int max_switches, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  if (max_switches < 0) throw Error(ErrorCode::kInvalidArgument, "max_switches must be non-negative");
  if (!spec.initial_point()) {
    throw Error(ErrorCode::kUnsupportedInitialSet, "extremal sampling needs a single-point initial set");
  }
  const CounterRng rng(seed);
  const double t = spec.horizon();
  EndpointCloud cloud;
  cloud.points.resize(count);
  cloud.controls.resize(count);
  parallel_for(static_cast<std::size_t>(count), [&](std::size_t k) {
    std::uint64_t counter = 0;
    const auto switches = static_cast<int>(rng.bits(k, counter++) % static_cast<std::uint64_t>(max_switches + 1));
    BangBang control;
    control.initial_sign = (rng.bits(k, counter++) & 1u) ? 1 : -1;
    for (int s = 0; s < switches; ++s) control.switch_times.push_back(t * rng.uniform(k, counter++));
    std::sort(control.switch_times.begin(), control.switch_times.end());
    cloud.points[k] = bang_bang_endpoint(spec, control);
    cloud.controls[k] = std::move(control);
  });
  return cloud;
}

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<Point2> convex_hull_2d(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double hull_area_2d(std::span<const Point2> points) {
  if (points.size() < 3) throw Error(ErrorCode::kDegenerateHull, "hull area needs at least three points");
  const std::vector<Point2> hull = convex_hull_2d(std::vector<Point2>(points.begin(), points.end()));
  if (hull.size() < 3) return 0.0;
  double twice_area = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2& a = hull[i];
    const Point2& b = hull[(i + 1) % hull.size()];
    twice_area += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * std::abs(twice_area);
}

double hull_area_2d(std::span<const Vector<double>> points) {
  std::vector<Point2> planar;
  planar.reserve(points.size());
  for (const auto& p : points) {
    require_dimension(p.size(), 2, "hull point");
    planar.push_back({p[0], p[1]});
  }
  return hull_area_2d(std::span<const Point2>(planar));
}

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

double horner(const std::vector<double>& c, double s) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * s + *it;
  return v;
}

struct Estimate {
  double kronrod;
  double error;
  bool sign_change;  // p changes sign among the sampled nodes
  double peak;       // largest sampled |p|
};

struct NodeScan {
  double lo = 0.0, hi = 0.0, peak = 0.0;
  double operator()(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    peak = std::max(peak, std::abs(v));
    return std::abs(v);
  }
};

Estimate gauss_kronrod(const std::vector<double>& c, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  NodeScan scan;
  scan(horner(c, a));
  scan(horner(c, b));
  const double centre = scan(horner(c, mid));
  double kronrod = kKronrodWeights[7] * centre;
  double gauss = kGaussWeights[3] * centre;
  for (int i = 0; i < 7; ++i) {
    const double x = half * kKronrodNodes[i];
    const double f = scan(horner(c, mid - x)) + scan(horner(c, mid + x));
    kronrod += kKronrodWeights[i] * f;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * f;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half), scan.lo < 0 && scan.hi > 0, scan.peak};
}

// A panel is accepted only when its Kronrod value agrees with the sum over its
// two halves and both halves report small Gauss-Kronrod differences. A panel
// whose samples change sign holds a kink of |p|; agreement there can be
// accidental, so it must also be too small to matter as a whole.
double adapt(const std::vector<double>& c, double a, double b, const Estimate& whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const Estimate left = gauss_kronrod(c, a, mid);
  const Estimate right = gauss_kronrod(c, mid, b);
  const double halves = left.kronrod + right.kronrod;
  // Below the rounding floor further halving cannot improve the sum.
  const double floor = 50 * std::numeric_limits<double>::epsilon() * halves;
  const double budget = std::max(tol, floor);
  const bool kink = whole.sign_change || left.sign_change || right.sign_change;
  const bool settled = std::abs(halves - whole.kronrod) <= budget && left.error + right.error <= budget &&
                       (!kink || (b - a) * whole.peak <= budget);
  if (settled || depth >= 60 || b - a <= 1e-15 * std::max(1.0, std::abs(a))) return halves;
  return adapt(c, a, mid, left, 0.5 * tol, depth + 1) + adapt(c, mid, b, right, 0.5 * tol, depth + 1);
}

constexpr int kInitialPanels = 16;

}  // namespace

double quadrature_abs(const Polynomial<double>& p, double t, double tol) {
  if (!(t > 0)) throw Error(ErrorCode::kInvalidArgument, "quadrature_abs requires t > 0");
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "quadrature tolerance must be positive");
  double total = 0.0;
  for (int k = 0; k < kInitialPanels; ++k) {
    const double a = t * k / kInitialPanels;
    const double b = t * (k + 1) / kInitialPanels;
    total += adapt(p.coefficients(), a, b, gauss_kronrod(p.coefficients(), a, b), tol / kInitialPanels, 0);
  }
  return total;
}

Integer enumerate_vandermonde(int d, int n, std::size_t cap) {
  if (d < 2 || n < 0) throw Error(ErrorCode::kInvalidArgument, "enumeration needs d >= 2 and n >= 0");
  const std::size_t tuples = binomial(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(d));
  if (tuples > cap) {
    throw Error(ErrorCode::kBudgetExceeded, "C(" + std::to_string(n + 1) + ", " + std::to_string(d) +
                                                ") tuples exceed the enumeration cap " + std::to_string(cap));
  }
  Integer total(0);
  if (n + 1 < d) return total;
  std::vector<int> idx(d);
  for (int k = 0; k < d; ++k) idx[k] = k;
  Integer product;
  while (true) {
    product = 1;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) product *= idx[b] - idx[a];
    }
    total += product;
    int k = d - 1;
    while (k >= 0 && idx[k] == n - (d - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

}  // namespace reachkit
