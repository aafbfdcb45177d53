#pragma once

// Compact convex sets described by their support functions
//   h_K(y) = sup { <y, x> : x in K },
// zonotopes with the determinant-sum volume, the Riemann-sum zonotope that
// discretises the integrator reach set, and the support-function form of the
// Hausdorff distance.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "reachkit/linalg.hpp"
#include "reachkit/lti_core.hpp"

namespace reachkit {

// Minkowski sum of the segments [-v_j, v_j], translated by center.
template <Scalar T>
struct BasicZonotope {
  Vector<T> center;
  std::vector<Vector<T>> generators;

  std::size_t dim() const noexcept { return center.size(); }
};

using Zonotope = BasicZonotope<double>;
using ExactZonotope = BasicZonotope<Rational>;

class ConvexSet;

struct Singleton {
  Vector<double> point;
};

struct Box {
  Vector<double> center;
  Vector<double> halfwidths;
};

// { c + Q^(1/2) u : |u| <= 1 } for a symmetric positive semidefinite Q.
struct Ellipsoid {
  Vector<double> center;
  Matrix<double> shape;
};

// { M x + offset : x in inner }.
struct LinearImage {
  Matrix<double> map;
  std::shared_ptr<const ConvexSet> inner;
  Vector<double> offset;
};

struct MinkowskiSum {
  std::vector<std::shared_ptr<const ConvexSet>> terms;
};

class ConvexSet {
 public:
  using Variant = std::variant<Singleton, Box, Ellipsoid, Zonotope, LinearImage, MinkowskiSum>;

  // Each factory validates dimensions and throws DimensionMismatch or
  // InvalidArgument.
  static ConvexSet singleton(Vector<double> point);
  static ConvexSet box(Vector<double> center, Vector<double> halfwidths);
  static ConvexSet ellipsoid(Vector<double> center, Matrix<double> shape);
  static ConvexSet zonotope(Zonotope z);
  static ConvexSet linear_image(Matrix<double> map, ConvexSet inner, Vector<double> offset);
  static ConvexSet minkowski_sum(std::vector<ConvexSet> terms);

  std::size_t dim() const noexcept { return dim_; }
  const Variant& variant() const noexcept { return variant_; }
  // "singleton", "box", "ellipsoid", "zonotope", "linear_image", "minkowski_sum".
  std::string kind() const;

 private:
  ConvexSet(Variant v, std::size_t dim) : variant_(std::move(v)), dim_(dim) {}

  Variant variant_;
  std::size_t dim_;
};

// The point of a set that is a single point (a Singleton, a zero box, a
// generator-free zonotope, or an affine image / sum of such), if any.
std::optional<Vector<double>> as_point(const ConvexSet& set);

// Zonotope form of sets that are zonotopes: singletons, boxes, zonotopes and
// affine images or Minkowski sums thereof.
std::optional<Zonotope> as_zonotope(const ConvexSet& set);

double support(const ConvexSet& set, std::span<const double> y);

// A maximiser of <y, x> over the set. Ties in zonotopes and boxes resolve with
// sign(0) = +1. Throws ZeroDirection for y = 0.
Vector<double> support_point(const ConvexSet& set, std::span<const double> y);

// sum_j |<y, v_j>| + <y, center>.
template <Scalar T>
T zonotope_support(const BasicZonotope<T>& z, const Vector<T>& y);

inline constexpr std::size_t kDefaultSubsetCap = 5'000'000;

// 2^d times the sum of |det| over all d-subsets of generators. Throws
// TooFewGenerators for fewer than d generators and CombinatorialBudgetExceeded
// when C(n, d) > cap. Exact in the Rational backend.
template <Scalar T>
T zonotope_volume(const BasicZonotope<T>& z, std::size_t cap = kDefaultSubsetCap);

// C(n, k), saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k) noexcept;

enum class DiscretizationRule {
  // t_i = i t / n for i = 0..n: n + 1 generators, the breakpoint sum.
  kBreakpoints,
  // t_i = i t / n for i = 0..n-1: one generator per subinterval.
  kLeftEndpoint,
};

// Zonotope centred at 0 with generators (mu t / n) xi(t_i).
template <Scalar T>
BasicZonotope<T> discretize_reach(const IntegratorSystem& sys, const T& t, int n,
                                  DiscretizationRule rule = DiscretizationRule::kBreakpoints);

// Deterministic unit directions on S^(d-1), closed under negation:
//   d = 2: equally spaced angles;
//   d = 3: Fibonacci spiral points and their antipodes;
//   d > 3: fixed-seed Gaussian directions, their antipodes and +-e_i.
// Returns roughly `samples` directions (an even count).
std::vector<Vector<double>> sphere_directions(int d, int samples);

using SupportFunction = std::function<double(std::span<const double>)>;

struct HausdorffEstimate {
  double distance = 0.0;
  Vector<double> direction;
};

// max over the given unit directions of |h1 - h2|: a lower bound on the
// Hausdorff distance of the underlying compact convex sets. Ties keep the
// first direction.
HausdorffEstimate hausdorff_distance(const SupportFunction& h1, const SupportFunction& h2,
                                     const std::vector<Vector<double>>& directions);

// Uses sphere_directions(d, samples) followed by `extra` (normalised).
HausdorffEstimate hausdorff_distance(const SupportFunction& h1, const SupportFunction& h2, int samples,
                                     int d, const std::vector<Vector<double>>& extra = {});

}  // namespace reachkit
