#pragma once

// Forward reach set R(X0, t) of the integrator chain through its support
// function
//   h(y) = h_X0(exp(tA)^T y) + mu * integral_0^t |<y, xi(s)>| ds,
// and the quantities derived from it: widths, the diameter and its maximising
// directions, and boundary points realised by bang-bang extremals.

#include <span>
#include <vector>

#include "reachkit/convexset.hpp"
#include "reachkit/lti_core.hpp"
#include "reachkit/polytools.hpp"

namespace reachkit {

class ReachSpec {
 public:
  // Requires t > 0 and x0.dim() == sys.dim().
  ReachSpec(IntegratorSystem sys, ConvexSet x0, double t);

  const IntegratorSystem& system() const noexcept { return sys_; }
  const ConvexSet& initial_set() const noexcept { return x0_; }
  double horizon() const noexcept { return t_; }
  int dim() const noexcept { return sys_.dim(); }
  // exp(tA) at the horizon.
  const Matrix<double>& transition() const noexcept { return transition_; }

  // The initial point when X0 is a single point.
  const std::optional<Vector<double>>& initial_point() const noexcept { return x0_point_; }
  bool has_singleton_start() const noexcept { return x0_point_.has_value(); }

  // Same system and initial set at another horizon.
  ReachSpec at_horizon(double t) const { return ReachSpec(sys_, x0_, t); }

 private:
  IntegratorSystem sys_;
  ConvexSet x0_;
  double t_;
  Matrix<double> transition_;
  std::optional<Vector<double>> x0_point_;
};

// <y, xi(s)> as a polynomial in s of degree d - 1.
Polynomial<double> direction_polynomial(const IntegratorSystem& sys, std::span<const double> y);

double reach_support(const ReachSpec& spec, std::span<const double> y);

// h(eta) + h(-eta). eta is normalised if its length is off by more than 1e-9;
// throws ZeroDirection for eta = 0.
double width(const ReachSpec& spec, std::span<const double> eta);

struct Diameter {
  double value = 0.0;
  Vector<double> direction;
  // Set when the value comes from sampled maximisation rather than the closed
  // form 2 mu |zeta(t)|.
  bool approximate = false;
};

// Closed form; X0 must be a single point, otherwise UnsupportedInitialSet.
Diameter diameter(const ReachSpec& spec);

// Maximum width over sphere_directions(d, samples) plus +-zeta/|zeta| and
// +-e_i; works for any X0 and is flagged approximate.
Diameter diameter_estimate(const ReachSpec& spec, int samples);

struct WidthProfile {
  // Populated for d = 2 only: theta_k = 2 pi k / grid.
  std::vector<double> thetas;
  std::vector<Vector<double>> directions;
  std::vector<double> widths;
  // Analytic width maximisers +-zeta/|zeta| ...
  std::vector<Vector<double>> maximizers;
  // ... and for d = 2 their angles r pi + arctan(2/t), r = 0, 1.
  std::vector<double> maximizer_thetas;
  std::size_t argmax = 0;
  // d = 2: the grid argmax lies within one grid cell of a maximiser angle.
  bool argmax_near_maximizer = false;
};

// d = 2 uses the theta grid; d >= 3 uses sphere_directions(d, grid) augmented
// with +-zeta/|zeta| and +-e_i. Requires grid >= 8.
WidthProfile width_profile(const ReachSpec& spec, int grid);

struct BoundaryPoint {
  Vector<double> direction;
  Vector<double> point;
};

// The bang-bang control u(tau) = mu sign(<eta, xi(t - tau)>) in forward time,
// one segment per sign interval. X0 must be a single point.
std::vector<ControlSegment<double>> extremal_control(const ReachSpec& spec, std::span<const double> eta);

// exp(tA) x0 + mu * integral sign(<eta, xi(s)>) xi(s) ds, evaluated exactly per
// sign interval. Its inner product with eta equals reach_support(eta).
BoundaryPoint extremal_point(const ReachSpec& spec, std::span<const double> eta);

// Extremal points for outward normals from the theta grid (d = 2) or the
// sphere sampler (d >= 3). Requires samples >= 4 and a single-point X0.
std::vector<BoundaryPoint> boundary_points(const ReachSpec& spec, int samples);

struct TubeSlice {
  double tau = 0.0;
  std::vector<BoundaryPoint> points;
};

struct Tube {
  // The tau = 0 slice, the initial point itself.
  Vector<double> origin;
  // tau_k = k t / slices for k = 1..slices.
  std::vector<TubeSlice> slices;
};

Tube tube_slices(const ReachSpec& spec, int slices, int samples);

struct HausdorffRow {
  int n = 0;
  double distance = 0.0;
  Vector<double> direction;
};

// Sampled Hausdorff distance between the discretised reach set
// exp(tA) X0 + discretize_reach(n) and the exact reach set, for each n. One
// fixed direction set (sphere samples plus +-zeta/|zeta|, +-e_i) is shared by
// every row.
std::vector<HausdorffRow> discretization_hausdorff(const ReachSpec& spec, std::span<const int> n_list, int samples,
                                                   DiscretizationRule rule = DiscretizationRule::kBreakpoints);

}  // namespace reachkit
