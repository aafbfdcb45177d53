#include "reachkit/reachkit.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "reachkit/convexset_json.hpp"
#include "reachkit/error.hpp"
#include "reachkit/oracle.hpp"
#include "reachkit/parallel.hpp"
#include "reachkit/reach.hpp"
#include "reachkit/table.hpp"
#include "reachkit/volume.hpp"

using namespace reachkit;

struct rk_reach {
  IntegratorSystem sys;
  Rational t_exact;
  ReachSpec spec;
};

struct rk_table {
  Table table;
};

namespace {

thread_local std::string last_error;

rk_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return RK_INVALID_ARGUMENT;
    case ErrorCode::kDimensionMismatch: return RK_DIMENSION_MISMATCH;
    case ErrorCode::kControlBoundViolation: return RK_CONTROL_BOUND_VIOLATION;
    case ErrorCode::kDegenerateZeroPolynomial: return RK_DEGENERATE_ZERO_POLYNOMIAL;
    case ErrorCode::kTooFewGenerators: return RK_TOO_FEW_GENERATORS;
    case ErrorCode::kCombinatorialBudgetExceeded: return RK_COMBINATORIAL_BUDGET_EXCEEDED;
    case ErrorCode::kBudgetExceeded: return RK_BUDGET_EXCEEDED;
    case ErrorCode::kUnsupportedInitialSet: return RK_UNSUPPORTED_INITIAL_SET;
    case ErrorCode::kZeroDirection: return RK_ZERO_DIRECTION;
    case ErrorCode::kDegenerateHull: return RK_DEGENERATE_HULL;
    case ErrorCode::kParseError: return RK_PARSE_ERROR;
  }
  return RK_INTERNAL_ERROR;
}

template <class F>
rk_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return RK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RK_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RK_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown failure";
    return RK_INTERNAL_ERROR;
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, message);
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::span<const double> direction_span(const rk_reach* reach, const double* y, std::size_t len) {
  require(reach != nullptr && y != nullptr, "null argument");
  require_dimension(len, static_cast<std::size_t>(reach->spec.dim()), "direction");
  return {y, len};
}

DiscretizationRule rule_of(rk_rule rule) {
  switch (rule) {
    case RK_RULE_BREAKPOINTS: return DiscretizationRule::kBreakpoints;
    case RK_RULE_LEFT_ENDPOINT: return DiscretizationRule::kLeftEndpoint;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown discretization rule");
}

std::vector<int> n_values(const int* n_list, std::size_t count) {
  require(n_list != nullptr || count == 0, "null n list");
  return std::vector<int>(n_list, n_list + count);
}

rk_table* wrap(Table table) { return new rk_table{std::move(table)}; }

}  // namespace

extern "C" {

const char* rk_version(void) { return "0.1.0"; }

const char* rk_status_name(rk_status status) {
  switch (status) {
    case RK_OK: return "ok";
    case RK_INVALID_ARGUMENT: return to_string(ErrorCode::kInvalidArgument);
    case RK_DIMENSION_MISMATCH: return to_string(ErrorCode::kDimensionMismatch);
    case RK_CONTROL_BOUND_VIOLATION: return to_string(ErrorCode::kControlBoundViolation);
    case RK_DEGENERATE_ZERO_POLYNOMIAL: return to_string(ErrorCode::kDegenerateZeroPolynomial);
    case RK_TOO_FEW_GENERATORS: return to_string(ErrorCode::kTooFewGenerators);
    case RK_COMBINATORIAL_BUDGET_EXCEEDED: return to_string(ErrorCode::kCombinatorialBudgetExceeded);
    case RK_BUDGET_EXCEEDED: return to_string(ErrorCode::kBudgetExceeded);
    case RK_UNSUPPORTED_INITIAL_SET: return to_string(ErrorCode::kUnsupportedInitialSet);
    case RK_ZERO_DIRECTION: return to_string(ErrorCode::kZeroDirection);
    case RK_DEGENERATE_HULL: return to_string(ErrorCode::kDegenerateHull);
    case RK_PARSE_ERROR: return to_string(ErrorCode::kParseError);
    case RK_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* rk_last_error(void) { return last_error.c_str(); }

void rk_string_free(char* s) { delete[] s; }

void rk_set_threads(int k) { set_max_threads(k); }

int rk_get_threads(void) { return max_threads(); }

rk_status rk_reach_create(int d, const char* mu, const char* t, const char* x0_json, rk_reach** out) {
  return guarded([&] {
    require(mu != nullptr && t != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    IntegratorSystem sys(d, parse_rational(mu));
    const Rational horizon = parse_rational(t);
    require(horizon > 0, "horizon t must be positive");
    ConvexSet x0 = x0_json ? convex_set_from_json(x0_json) : ConvexSet::singleton(Vector<double>(d, 0.0));
    ReachSpec spec(sys, std::move(x0), horizon.get_d());
    *out = new rk_reach{sys, horizon, std::move(spec)};
  });
}

void rk_reach_destroy(rk_reach* reach) { delete reach; }

int rk_reach_dim(const rk_reach* reach) { return reach ? reach->spec.dim() : 0; }

int rk_reach_singleton_start(const rk_reach* reach) { return reach && reach->spec.has_singleton_start() ? 1 : 0; }

rk_status rk_support(const rk_reach* reach, const double* y, size_t len, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = reach_support(reach->spec, direction_span(reach, y, len));
  });
}

rk_status rk_width(const rk_reach* reach, const double* eta, size_t len, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = width(reach->spec, direction_span(reach, eta, len));
  });
}

rk_status rk_diameter(const rk_reach* reach, int samples, double* value, double* direction, int* approximate) {
  return guarded([&] {
    require(reach != nullptr && value != nullptr, "null argument");
    const Diameter result =
        reach->spec.has_singleton_start() ? diameter(reach->spec) : diameter_estimate(reach->spec, samples);
    *value = result.value;
    if (direction) std::copy(result.direction.begin(), result.direction.end(), direction);
    if (approximate) *approximate = result.approximate ? 1 : 0;
  });
}

rk_status rk_volume(const rk_reach* reach, char** exact, double* approx) {
  return guarded([&] {
    require(reach != nullptr, "null argument");
    if (!reach->spec.has_singleton_start()) {
      throw Error(ErrorCode::kUnsupportedInitialSet,
                  "closed-form volume needs a single-point initial set, got " + reach->spec.initial_set().kind());
    }
    const Rational v = reach_volume(reach->sys, reach->t_exact);
    if (approx) *approx = v.get_d();
    if (exact) *exact = duplicate(to_string(v));
  });
}

rk_status rk_limit_coefficient(int d, int cap, char** exact, double* approx) {
  return guarded([&] {
    const LimitCoefficient l = limit_coefficient(d, cap > 0 ? cap : kDefaultLimitDimensionCap);
    if (approx) *approx = l.value.get_d();
    if (exact) *exact = duplicate(to_string(l.value));
  });
}

rk_status rk_vandermonde_sum(int d, int n, char** exact) {
  return guarded([&] {
    require(exact != nullptr, "null output");
    *exact = duplicate(to_string(vandermonde_sum(d, n)));
  });
}

rk_status rk_volume_convergence(const rk_reach* reach, const int* n_list, size_t count, rk_rule rule,
                                rk_table** out) {
  return guarded([&] {
    require(reach != nullptr && out != nullptr, "null argument");
    if (!reach->spec.has_singleton_start()) {
      throw Error(ErrorCode::kUnsupportedInitialSet, "volume convergence needs a single-point initial set");
    }
    const std::vector<int> ns = n_values(n_list, count);
    *out = wrap(convergence_table(volume_convergence(reach->sys, reach->spec.horizon(), ns, rule_of(rule))));
  });
}

rk_status rk_volume_estimate(const rk_reach* reach, int n, rk_rule rule, double* out) {
  return guarded([&] {
    require(reach != nullptr && out != nullptr, "null argument");
    *out = volume_estimate(reach->spec, n, rule_of(rule));
  });
}

rk_status rk_width_profile(const rk_reach* reach, int grid, rk_table** out) {
  return guarded([&] {
    require(reach != nullptr && out != nullptr, "null argument");
    *out = wrap(width_profile_table(width_profile(reach->spec, grid)));
  });
}

rk_status rk_boundary(const rk_reach* reach, int samples, rk_table** out) {
  return guarded([&] {
    require(reach != nullptr && out != nullptr, "null argument");
    *out = wrap(boundary_table(boundary_points(reach->spec, samples), reach->spec.horizon()));
  });
}

rk_status rk_tube(const rk_reach* reach, int slices, int samples, rk_table** out) {
  return guarded([&] {
    require(reach != nullptr && out != nullptr, "null argument");
    *out = wrap(tube_table(tube_slices(reach->spec, slices, samples)));
  });
}

rk_status rk_hausdorff(const rk_reach* reach, const int* n_list, size_t count, int samples, rk_table** out) {
  return guarded([&] {
    require(reach != nullptr && out != nullptr, "null argument");
    const std::vector<int> ns = n_values(n_list, count);
    *out = wrap(hausdorff_table(discretization_hausdorff(reach->spec, ns, samples)));
  });
}

rk_status rk_oracle(const rk_reach* reach, int count, int max_switches, uint64_t seed, rk_table** cloud,
                    double* hull_area) {
  return guarded([&] {
    require(reach != nullptr, "null argument");
    const EndpointCloud sampled = sample_extremals(reach->spec, count, max_switches, seed);
    std::optional<double> area;
    if (hull_area) {
      require_dimension(static_cast<std::size_t>(reach->spec.dim()), 2, "hull area state");
      area = hull_area_2d(std::span<const Vector<double>>(sampled.points));
    }
    if (cloud) *cloud = wrap(cloud_table(sampled));
    if (area) *hull_area = *area;
  });
}

void rk_table_destroy(rk_table* table) { delete table; }

size_t rk_table_rows(const rk_table* table) { return table ? table->table.rows.size() : 0; }

size_t rk_table_columns(const rk_table* table) { return table ? table->table.columns.size() : 0; }

const char* rk_table_column_name(const rk_table* table, size_t column) {
  if (!table || column >= table->table.columns.size()) return nullptr;
  return table->table.columns[column].c_str();
}

double rk_table_value(const rk_table* table, size_t row, size_t column) {
  if (!table || row >= table->table.rows.size() || column >= table->table.rows[row].size()) return 0.0;
  return table->table.rows[row][column];
}

size_t rk_table_meta_count(const rk_table* table) { return table ? table->table.meta.size() : 0; }

const char* rk_table_meta_name(const rk_table* table, size_t index) {
  if (!table || index >= table->table.meta.size()) return nullptr;
  return table->table.meta[index].first.c_str();
}

size_t rk_table_meta_size(const rk_table* table, size_t index) {
  if (!table || index >= table->table.meta.size()) return 0;
  return table->table.meta[index].second.size();
}

double rk_table_meta_value(const rk_table* table, size_t index, size_t position) {
  if (!table || index >= table->table.meta.size() || position >= table->table.meta[index].second.size()) return 0.0;
  return table->table.meta[index].second[position];
}

rk_status rk_table_render(const rk_table* table, rk_format format, char** out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = duplicate(format == RK_FORMAT_JSON ? to_json(table->table) : to_csv(table->table));
  });
}

rk_status rk_table_write(const rk_table* table, const char* path, rk_format format) {
  return guarded([&] {
    require(table != nullptr && path != nullptr, "null argument");
    write_table(table->table, path, format == RK_FORMAT_JSON ? TableFormat::kJson : TableFormat::kCsv);
  });
}

}  // extern "C"
