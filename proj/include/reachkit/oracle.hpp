#pragma once

// Brute-force validators that share no code path with the closed forms they
// check: sampled bang-bang endpoints, a planar convex hull, adaptive
// quadrature without root information, and literal tuple enumeration.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "reachkit/polytools.hpp"
#include "reachkit/rational.hpp"
#include "reachkit/reach.hpp"

namespace reachkit {

// u(tau) = initial_sign * mu, flipping sign at each switch time.
struct BangBang {
  int initial_sign = 1;
  std::vector<double> switch_times;  // ascending, in (0, t)
};

struct EndpointCloud {
  std::vector<Vector<double>> points;
  std::vector<BangBang> controls;
};

std::vector<ControlSegment<double>> bang_bang_segments(const ReachSpec& spec, const BangBang& control);

// Exact endpoint of a bang-bang control from the initial point.
Vector<double> bang_bang_endpoint(const ReachSpec& spec, const BangBang& control);

// Sample k draws a switch count uniformly from 0..max_switches, an initial
// sign, and sorted uniform switch times on (0, t), all from
// CounterRng(seed) with stream k, so the cloud depends only on
// (seed, count, max_switches).
EndpointCloud sample_extremals(const ReachSpec& spec, int count, int max_switches, std::uint64_t seed);

using Point2 = std::array<double, 2>;

// Counter-clockwise hull vertices (Andrew's monotone chain), collinear points
// dropped.
std::vector<Point2> convex_hull_2d(std::vector<Point2> points);

// Shoelace area of the convex hull. Collinear input has area 0; fewer than
// three points throws DegenerateHull.
double hull_area_2d(std::span<const Vector<double>> points);
double hull_area_2d(std::span<const Point2> points);

// Adaptive Gauss-Kronrod (7/15) quadrature of |p| over [0, t].
double quadrature_abs(const Polynomial<double>& p, double t, double tol = 1e-10);

// Literal loop over all increasing d-tuples of {0..n}. Throws BudgetExceeded
// when C(n+1, d) > cap.
Integer enumerate_vandermonde(int d, int n, std::size_t cap = 1'000'000);

}  // namespace reachkit
