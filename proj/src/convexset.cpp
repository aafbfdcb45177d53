#include "reachkit/convexset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "reachkit/error.hpp"
#include "reachkit/parallel.hpp"
#include "reachkit/rng.hpp"

namespace reachkit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double dot_span(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Vector<double> to_vector(std::span<const double> y) { return Vector<double>(y.begin(), y.end()); }

double quadratic_form(const Matrix<double>& q, std::span<const double> y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) sum += y[i] * q(i, j) * y[j];
  }
  return sum;
}

void require_finite(const Vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " has a non-finite entry");
  }
}

// Symmetric and positive semidefinite up to round-off, checked by an LDL^T
// factorisation that tolerates tiny negative pivots.
void require_psd(const Matrix<double>& q) {
  const std::size_t n = q.rows();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(q(i, j)));
  }
  const double tol = 1e-12 * std::max(scale, 1e-300);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(q(i, j) - q(j, i)) > tol) {
        throw Error(ErrorCode::kInvalidArgument, "ellipsoid shape matrix is not symmetric");
      }
    }
  }
  Matrix<double> a = q;
  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = a(k, k);
    if (pivot < -1e3 * tol) {
      throw Error(ErrorCode::kInvalidArgument, "ellipsoid shape matrix is not positive semidefinite");
    }
    if (pivot <= tol) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
}

}  // namespace

ConvexSet ConvexSet::singleton(Vector<double> point) {
  if (point.empty()) throw Error(ErrorCode::kInvalidArgument, "singleton needs a non-empty point");
  require_finite(point, "singleton point");
  const std::size_t d = point.size();
  return ConvexSet(Singleton{std::move(point)}, d);
}

ConvexSet ConvexSet::box(Vector<double> center, Vector<double> halfwidths) {
  if (center.empty()) throw Error(ErrorCode::kInvalidArgument, "box needs a non-empty center");
  require_dimension(halfwidths.size(), center.size(), "box halfwidths");
  require_finite(center, "box center");
  require_finite(halfwidths, "box halfwidths");
  for (double w : halfwidths) {
    if (w < 0) throw Error(ErrorCode::kInvalidArgument, "box halfwidths must be non-negative");
  }
  const std::size_t d = center.size();
  return ConvexSet(Box{std::move(center), std::move(halfwidths)}, d);
}

ConvexSet ConvexSet::ellipsoid(Vector<double> center, Matrix<double> shape) {
  if (center.empty()) throw Error(ErrorCode::kInvalidArgument, "ellipsoid needs a non-empty center");
  require_dimension(shape.rows(), center.size(), "ellipsoid shape rows");
  require_dimension(shape.cols(), center.size(), "ellipsoid shape columns");
  require_finite(center, "ellipsoid center");
  require_psd(shape);
  const std::size_t d = center.size();
  return ConvexSet(Ellipsoid{std::move(center), std::move(shape)}, d);
}

ConvexSet ConvexSet::zonotope(Zonotope z) {
  if (z.center.empty()) throw Error(ErrorCode::kInvalidArgument, "zonotope needs a non-empty center");
  require_finite(z.center, "zonotope center");
  for (const auto& g : z.generators) {
    require_dimension(g.size(), z.center.size(), "zonotope generator");
    require_finite(g, "zonotope generator");
  }
  const std::size_t d = z.center.size();
  return ConvexSet(std::move(z), d);
}

ConvexSet ConvexSet::linear_image(Matrix<double> map, ConvexSet inner, Vector<double> offset) {
  require_dimension(map.cols(), inner.dim(), "linear map input");
  require_dimension(offset.size(), map.rows(), "linear image offset");
  if (map.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "linear map needs at least one row");
  const std::size_t d = map.rows();
  return ConvexSet(LinearImage{std::move(map), std::make_shared<const ConvexSet>(std::move(inner)), std::move(offset)},
                   d);
}

ConvexSet ConvexSet::minkowski_sum(std::vector<ConvexSet> terms) {
  if (terms.empty()) throw Error(ErrorCode::kInvalidArgument, "Minkowski sum needs at least one term");
  const std::size_t d = terms.front().dim();
  MinkowskiSum sum;
  for (auto& term : terms) {
    require_dimension(term.dim(), d, "Minkowski sum term");
    sum.terms.push_back(std::make_shared<const ConvexSet>(std::move(term)));
  }
  return ConvexSet(std::move(sum), d);
}

std::string ConvexSet::kind() const {
  return std::visit(Overloaded{
                        [](const Singleton&) { return std::string("singleton"); },
                        [](const Box&) { return std::string("box"); },
                        [](const Ellipsoid&) { return std::string("ellipsoid"); },
                        [](const Zonotope&) { return std::string("zonotope"); },
                        [](const LinearImage&) { return std::string("linear_image"); },
                        [](const MinkowskiSum&) { return std::string("minkowski_sum"); },
                    },
                    variant_);
}

std::optional<Zonotope> as_zonotope(const ConvexSet& set) {
  return std::visit(
      Overloaded{
          [](const Singleton& s) -> std::optional<Zonotope> { return Zonotope{s.point, {}}; },
          [](const Box& b) -> std::optional<Zonotope> {
            Zonotope z{b.center, {}};
            for (std::size_t i = 0; i < b.halfwidths.size(); ++i) {
              if (b.halfwidths[i] == 0) continue;
              Vector<double> g(b.center.size(), 0.0);
              g[i] = b.halfwidths[i];
              z.generators.push_back(std::move(g));
            }
            return z;
          },
          [](const Ellipsoid&) -> std::optional<Zonotope> { return std::nullopt; },
          [](const Zonotope& z) -> std::optional<Zonotope> { return z; },
          [](const LinearImage& li) -> std::optional<Zonotope> {
            auto inner = as_zonotope(*li.inner);
            if (!inner) return std::nullopt;
            Zonotope z{multiply(li.map, inner->center), {}};
            for (std::size_t i = 0; i < z.center.size(); ++i) z.center[i] += li.offset[i];
            for (const auto& g : inner->generators) z.generators.push_back(multiply(li.map, g));
            return z;
          },
          [](const MinkowskiSum& ms) -> std::optional<Zonotope> {
            Zonotope z;
            for (const auto& term : ms.terms) {
              auto part = as_zonotope(*term);
              if (!part) return std::nullopt;
              if (z.center.empty()) {
                z.center = part->center;
              } else {
                for (std::size_t i = 0; i < z.center.size(); ++i) z.center[i] += part->center[i];
              }
              z.generators.insert(z.generators.end(), part->generators.begin(), part->generators.end());
            }
            return z;
          },
      },
      set.variant());
}

std::optional<Vector<double>> as_point(const ConvexSet& set) {
  if (const auto* s = std::get_if<Singleton>(&set.variant())) return s->point;
  auto z = as_zonotope(set);
  if (!z) return std::nullopt;
  for (const auto& g : z->generators) {
    if (std::any_of(g.begin(), g.end(), [](double x) { return x != 0.0; })) return std::nullopt;
  }
  return z->center;
}

double support(const ConvexSet& set, std::span<const double> y) {
  require_dimension(y.size(), set.dim(), "support direction");
  return std::visit(Overloaded{
                        [&](const Singleton& s) { return dot_span(y, s.point); },
                        [&](const Box& b) {
                          double h = dot_span(y, b.center);
                          for (std::size_t i = 0; i < y.size(); ++i) h += b.halfwidths[i] * std::abs(y[i]);
                          return h;
                        },
                        [&](const Ellipsoid& e) {
                          return dot_span(y, e.center) + std::sqrt(std::max(0.0, quadratic_form(e.shape, y)));
                        },
                        [&](const Zonotope& z) { return zonotope_support(z, to_vector(y)); },
                        [&](const LinearImage& li) {
                          return dot_span(y, li.offset) + support(*li.inner, multiply_transposed(li.map, to_vector(y)));
                        },
                        [&](const MinkowskiSum& ms) {
                          double h = 0.0;
                          for (const auto& term : ms.terms) h += support(*term, y);
                          return h;
                        },
                    },
                    set.variant());
}

namespace {

// support_point without the non-zero precondition: for y = 0 every point of
// the set is a maximiser and the "center" of each variant is returned.
Vector<double> maximizer(const ConvexSet& set, std::span<const double> y) {
  return std::visit(Overloaded{
                        [&](const Singleton& s) { return s.point; },
                        [&](const Box& b) {
                          Vector<double> x = b.center;
                          for (std::size_t i = 0; i < x.size(); ++i) x[i] += (y[i] >= 0 ? 1.0 : -1.0) * b.halfwidths[i];
                          return x;
                        },
                        [&](const Ellipsoid& e) {
                          Vector<double> x = e.center;
                          const double q = quadratic_form(e.shape, y);
                          if (q <= 0) return x;
                          const Vector<double> qy = multiply(e.shape, to_vector(y));
                          const double r = std::sqrt(q);
                          for (std::size_t i = 0; i < x.size(); ++i) x[i] += qy[i] / r;
                          return x;
                        },
                        [&](const Zonotope& z) {
                          Vector<double> x = z.center;
                          for (const auto& g : z.generators) {
                            const double s = dot_span(y, g) >= 0 ? 1.0 : -1.0;
                            for (std::size_t i = 0; i < x.size(); ++i) x[i] += s * g[i];
                          }
                          return x;
                        },
                        [&](const LinearImage& li) {
                          const Vector<double> inner = maximizer(*li.inner, multiply_transposed(li.map, to_vector(y)));
                          Vector<double> x = multiply(li.map, inner);
                          for (std::size_t i = 0; i < x.size(); ++i) x[i] += li.offset[i];
                          return x;
                        },
                        [&](const MinkowskiSum& ms) {
                          Vector<double> x(ms.terms.front()->dim(), 0.0);
                          for (const auto& term : ms.terms) {
                            const Vector<double> part = maximizer(*term, y);
                            for (std::size_t i = 0; i < x.size(); ++i) x[i] += part[i];
                          }
                          return x;
                        },
                    },
                    set.variant());
}

}  // namespace

Vector<double> support_point(const ConvexSet& set, std::span<const double> y) {
  require_dimension(y.size(), set.dim(), "support direction");
  if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; })) {
    throw Error(ErrorCode::kZeroDirection, "support_point needs a non-zero direction");
  }
  return maximizer(set, y);
}

template <Scalar T>
T zonotope_support(const BasicZonotope<T>& z, const Vector<T>& y) {
  require_dimension(y.size(), z.dim(), "support direction");
  T h = dot(y, z.center);
  for (const auto& g : z.generators) h += abs_value(dot(y, g));
  return h;
}

std::size_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t numerator = n - k + i;
    // result * numerator / i is exact at every step; guard the product.
    if (result > SIZE_MAX / numerator) return SIZE_MAX;
    result = result * numerator / i;
  }
  return result;
}

namespace {

template <Scalar T>
T abs_det(const std::vector<Vector<T>>& gens, const std::vector<std::size_t>& idx) {
  const std::size_t d = idx.size();
  if constexpr (std::same_as<T, double>) {
    if (d == 2) {
      const auto& a = gens[idx[0]];
      const auto& b = gens[idx[1]];
      return std::abs(a[0] * b[1] - a[1] * b[0]);
    }
  }
  Matrix<T> m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = gens[idx[j]][i];
  }
  return abs_value(determinant(std::move(m)));
}

// Visits all increasing (d-1)-tuples drawn from [first, n) appended to `lead`.
template <class Visit>
void for_each_completion(std::size_t lead, std::size_t n, std::size_t d, Visit&& visit) {
  std::vector<std::size_t> idx(d);
  idx[0] = lead;
  if (d == 1) {
    visit(idx);
    return;
  }
  for (std::size_t k = 1; k < d; ++k) idx[k] = lead + k;
  if (idx[d - 1] >= n) return;
  while (true) {
    visit(idx);
    std::size_t k = d - 1;
    while (k >= 1 && idx[k] == n - d + k) --k;
    if (k == 0) return;
    ++idx[k];
    for (std::size_t j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

template <Scalar T>
T zonotope_volume(const BasicZonotope<T>& z, std::size_t cap) {
  const std::size_t d = z.dim();
  const std::size_t n = z.generators.size();
  if (n < d) {
    throw Error(ErrorCode::kTooFewGenerators,
                std::to_string(n) + " generators cannot span dimension " + std::to_string(d));
  }
  const std::size_t subsets = binomial(n, d);
  if (subsets > cap) {
    throw Error(ErrorCode::kCombinatorialBudgetExceeded,
                "C(" + std::to_string(n) + ", " + std::to_string(d) + ") = " +
                    (subsets == SIZE_MAX ? std::string("overflow") : std::to_string(subsets)) +
                    " determinants exceed the cap of " + std::to_string(cap));
  }
  for (const auto& g : z.generators) require_dimension(g.size(), d, "zonotope generator");

  // One chunk per leading index; chunk totals are combined in index order.
  const std::size_t chunks = n - d + 1;
  std::vector<T> partial(chunks, T(0));
  parallel_for(chunks, [&](std::size_t lead) {
    if constexpr (std::same_as<T, double>) {
      std::vector<double> terms;
      terms.reserve(binomial(n - lead - 1, d - 1));
      for_each_completion(lead, n, d, [&](const std::vector<std::size_t>& idx) {
        terms.push_back(abs_det(z.generators, idx));
      });
      partial[lead] = pairwise_sum(terms);
    } else {
      T sum(0);
      for_each_completion(lead, n, d, [&](const std::vector<std::size_t>& idx) {
        sum += abs_det(z.generators, idx);
      });
      partial[lead] = sum;
    }
  });
  T total(0);
  if constexpr (std::same_as<T, double>) {
    total = pairwise_sum(partial);
  } else {
    for (const auto& p : partial) total += p;
  }
  T scale(1);
  for (std::size_t i = 0; i < d; ++i) scale *= T(2);
  return T(scale * total);
}

template <Scalar T>
BasicZonotope<T> discretize_reach(const IntegratorSystem& sys, const T& t, int n, DiscretizationRule rule) {
  if (!(t > 0)) throw Error(ErrorCode::kInvalidArgument, "discretize_reach requires t > 0");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "discretize_reach requires n >= 1");
  const T step = t / T(n);
  const T scale = scalar_from<T>(sys.mu()) * step;
  const int last = rule == DiscretizationRule::kBreakpoints ? n : n - 1;
  BasicZonotope<T> z{Vector<T>(sys.dim(), T(0)), {}};
  z.generators.reserve(last + 1);
  for (int i = 0; i <= last; ++i) {
    Vector<T> g = xi(sys, T(step * T(i)));
    for (auto& x : g) x *= scale;
    z.generators.push_back(std::move(g));
  }
  return z;
}

template double zonotope_support(const BasicZonotope<double>&, const Vector<double>&);
template Rational zonotope_support(const BasicZonotope<Rational>&, const Vector<Rational>&);
template double zonotope_volume(const BasicZonotope<double>&, std::size_t);
template Rational zonotope_volume(const BasicZonotope<Rational>&, std::size_t);
template BasicZonotope<double> discretize_reach(const IntegratorSystem&, const double&, int, DiscretizationRule);
template BasicZonotope<Rational> discretize_reach(const IntegratorSystem&, const Rational&, int, DiscretizationRule);

std::vector<Vector<double>> sphere_directions(int d, int samples) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "sphere dimension must be positive");
  if (samples < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one sphere sample");
  const int base = (samples + 1) / 2;
  std::vector<Vector<double>> dirs;
  if (d == 1) return {{1.0}, {-1.0}};
  dirs.reserve(2 * base + 2 * d);
  if (d == 2) {
    // Half circle here; the antipodes are appended below as exact negations.
    for (int k = 0; k < base; ++k) {
      const double theta = std::numbers::pi * k / base;
      dirs.push_back({std::cos(theta), std::sin(theta)});
    }
  } else if (d == 3) {
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < base; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / base;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden_angle * k;
      dirs.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
  } else {
    const CounterRng rng(0x5EEDD1AEC7104ULL);
    for (int k = 0; k < base; ++k) {
      Vector<double> v(d);
      for (int i = 0; i < d; i += 2) {
        // Box-Muller on two counter-derived uniforms.
        const double u1 = 1.0 - rng.uniform(k, i);
        const double u2 = rng.uniform(k, i + 1);
        const double r = std::sqrt(-2.0 * std::log(u1));
        v[i] = r * std::cos(2.0 * std::numbers::pi * u2);
        if (i + 1 < d) v[i + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
      }
      const double len = norm2(v);
      for (auto& x : v) x /= len;
      dirs.push_back(std::move(v));
    }
    for (int i = 0; i < d; ++i) {
      Vector<double> e(d, 0.0);
      e[i] = 1.0;
      dirs.push_back(e);
    }
  }
  const std::size_t half = dirs.size();
  for (std::size_t k = 0; k < half; ++k) {
    Vector<double> v = dirs[k];
    for (auto& x : v) x = -x;
    dirs.push_back(std::move(v));
  }
  return dirs;
}

HausdorffEstimate hausdorff_distance(const SupportFunction& h1, const SupportFunction& h2,
                                     const std::vector<Vector<double>>& directions) {
  if (directions.empty()) throw Error(ErrorCode::kInvalidArgument, "Hausdorff estimate needs directions");
  std::vector<double> gaps(directions.size());
  parallel_for(directions.size(), [&](std::size_t k) {
    gaps[k] = std::abs(h1(directions[k]) - h2(directions[k]));
  });
  const auto best = std::max_element(gaps.begin(), gaps.end());
  const auto index = static_cast<std::size_t>(best - gaps.begin());
  return {*best, directions[index]};
}

HausdorffEstimate hausdorff_distance(const SupportFunction& h1, const SupportFunction& h2, int samples, int d,
                                     const std::vector<Vector<double>>& extra) {
  std::vector<Vector<double>> dirs = sphere_directions(d, samples);
  for (Vector<double> v : extra) {
    require_dimension(v.size(), static_cast<std::size_t>(d), "extra direction");
    const double len = norm2(v);
    if (len == 0) continue;
    for (auto& x : v) x /= len;
    dirs.push_back(std::move(v));
  }
  return hausdorff_distance(h1, h2, dirs);
}

}  // namespace reachkit
