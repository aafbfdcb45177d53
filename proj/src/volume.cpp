#include "reachkit/volume.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <string>

#include "reachkit/error.hpp"

namespace reachkit {
namespace {

void require_vandermonde_args(int d, int n) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "Vandermonde sum needs d >= 2");
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "Vandermonde sum needs n >= 0");
  if (d > kMaxVandermondeDimension) {
    throw Error(ErrorCode::kBudgetExceeded, "Vandermonde sum limited to d <= " + std::to_string(kMaxVandermondeDimension));
  }
}

}  // namespace

// Sum over increasing tuples of det[v(i_1) | ... | v(i_d)] with
// v(x) = (1, x, ..., x^(d-1)) is the top component of the exterior product
// (1 + v(0)) ^ (1 + v(1)) ^ ... ^ (1 + v(n)). The recurrence tracks the
// coefficient of every basis blade e_T, T a subset of {0..d-1}; for increasing
// nodes each determinant is the positive Vandermonde product.
std::vector<Integer> vandermonde_sums(int d, int n_max) {
  require_vandermonde_args(d, n_max);
  const std::size_t blades = std::size_t{1} << d;
  const std::size_t full = blades - 1;
  std::vector<Integer> coeff(blades);
  coeff[0] = 1;
  std::vector<Integer> sums;
  sums.reserve(n_max + 1);
  std::vector<Integer> powers(d);
  Integer term;
  for (int x = 0; x <= n_max; ++x) {
    powers[0] = 1;
    for (int k = 1; k < d; ++k) powers[k] = powers[k - 1] * x;
    // Descending mask order reads each old coefficient before it is updated,
    // since T | {k} > T.
    for (std::size_t mask = full; mask-- > 0;) {
      if (std::popcount(mask) >= d || coeff[mask] == 0) continue;
      for (int k = 0; k < d; ++k) {
        const std::size_t bit = std::size_t{1} << k;
        if (mask & bit) continue;
        // e_T ^ e_k: move e_k left past the elements of T above k.
        const int above = std::popcount(mask >> (k + 1));
        term = coeff[mask] * powers[k];
        if (above % 2 == 0) {
          coeff[mask | bit] += term;
        } else {
          coeff[mask | bit] -= term;
        }
      }
    }
    sums.push_back(coeff[full]);
  }
  return sums;
}

Integer vandermonde_sum(int d, int n) { return vandermonde_sums(d, n).back(); }

namespace {

LimitCoefficient compute_limit_coefficient(int d) {
  const int degree = d * (d + 1) / 2;
  const int first = d - 1;  // smallest n with a non-empty sum
  const int nodes = degree + 1;
  const int holdout = first + nodes;
  const std::vector<Integer> sums = vandermonde_sums(d, holdout);

  // Newton divided differences on x_j = first + j.
  std::vector<Rational> table(nodes);
  for (int j = 0; j < nodes; ++j) table[j] = Rational(sums[first + j]);
  std::vector<Rational> newton(nodes);
  newton[0] = table[0];
  for (int level = 1; level < nodes; ++level) {
    for (int j = nodes - 1; j >= level; --j) {
      table[j] = (table[j] - table[j - 1]) / Rational(level);
    }
    newton[level] = table[level];
  }

  // Expand the Newton form into monomial coefficients by Horner's rule.
  std::vector<Rational> poly{newton[nodes - 1]};
  for (int level = nodes - 2; level >= 0; --level) {
    const Rational node(first + level);
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= node * poly[k];
    }
    next[0] += newton[level];
    poly = std::move(next);
  }

  Rational at_holdout(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) at_holdout = at_holdout * holdout + *it;
  if (at_holdout != Rational(sums[holdout])) {
    throw Error(ErrorCode::kInvalidArgument, "Vandermonde sum is not a polynomial of degree d(d+1)/2 for d = " +
                                                 std::to_string(d));
  }
  LimitCoefficient result;
  result.d = d;
  result.value = poly.back();
  result.polynomial = std::move(poly);
  result.first_node = first;
  result.holdout_node = holdout;
  if (result.value <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "non-positive leading coefficient for d = " + std::to_string(d));
  }
  return result;
}

}  // namespace

LimitCoefficient limit_coefficient(int d, int cap) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "limit coefficient needs d >= 2");
  if (d > cap) {
    throw Error(ErrorCode::kBudgetExceeded,
                "limit coefficient for d = " + std::to_string(d) + " exceeds the dimension cap " + std::to_string(cap));
  }
  static std::mutex mutex;
  static std::map<int, LimitCoefficient> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  LimitCoefficient result = compute_limit_coefficient(d);
  std::lock_guard lock(mutex);
  return memo.emplace(d, std::move(result)).first->second;
}

Rational reach_volume(const IntegratorSystem& sys, const Rational& t) {
  if (t <= 0) throw Error(ErrorCode::kInvalidArgument, "reach volume needs t > 0");
  const int d = sys.dim();
  Integer superfactorial(1);
  for (int k = 1; k < d; ++k) superfactorial *= factorial(k);
  Rational volume = int_power(Rational(2 * sys.mu()), d) * int_power(t, d * (d + 1) / 2);
  volume /= Rational(superfactorial);
  volume *= limit_coefficient(d, std::max(d, kDefaultLimitDimensionCap)).value;
  volume.canonicalize();
  return volume;
}

double reach_volume(const ReachSpec& spec) {
  if (!spec.has_singleton_start()) {
    throw Error(ErrorCode::kUnsupportedInitialSet,
                "closed-form volume needs a single-point initial set, got " + spec.initial_set().kind());
  }
  return reach_volume(spec.system(), exact_rational(spec.horizon())).get_d();
}

std::vector<ConvergenceRow> volume_convergence(const IntegratorSystem& sys, double t, std::span<const int> n_list,
                                               DiscretizationRule rule, std::size_t cap) {
  const double exact = reach_volume(sys, exact_rational(t)).get_d();
  std::vector<ConvergenceRow> rows;
  for (int n : n_list) {
    const double v = zonotope_volume(discretize_reach(sys, t, n, rule), cap);
    rows.push_back({n, v, std::abs(v - exact) / exact});
  }
  return rows;
}

double volume_estimate(const ReachSpec& spec, int n, DiscretizationRule rule, std::size_t cap) {
  const auto initial = as_zonotope(spec.initial_set());
  if (!initial) {
    throw Error(ErrorCode::kUnsupportedInitialSet,
                "volume estimate needs a zonotopic initial set, got " + spec.initial_set().kind());
  }
  Zonotope z = discretize_reach(spec.system(), spec.horizon(), n, rule);
  for (const auto& g : initial->generators) z.generators.push_back(multiply(spec.transition(), g));
  return zonotope_volume(z, cap);
}

}  // namespace reachkit
