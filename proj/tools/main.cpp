#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reachkit/reachkit.h"
#include "run_config.hpp"

using reachkit::cli::ConfigError;
using reachkit::cli::RunConfig;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

struct Failure {
  rk_status status;
  std::string message;
};

void check(rk_status status) {
  if (status != RK_OK) throw Failure{status, rk_last_error()};
}

int exit_code(rk_status status) {
  switch (status) {
    case RK_OK: return 0;
    case RK_BUDGET_EXCEEDED:
    case RK_COMBINATORIAL_BUDGET_EXCEEDED: return kExitBudget;
    case RK_INTERNAL_ERROR: return kExitFailure;
    default: return kExitConfig;
  }
}

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

std::string owned(char* s) {
  std::string out(s);
  rk_string_free(s);
  return out;
}

using ReachPtr = std::unique_ptr<rk_reach, decltype(&rk_reach_destroy)>;
using TablePtr = std::unique_ptr<rk_table, decltype(&rk_table_destroy)>;

ReachPtr make_reach(const RunConfig& cfg) {
  rk_reach* reach = nullptr;
  check(rk_reach_create(cfg.d, cfg.mu.c_str(), cfg.t.c_str(), cfg.x0.empty() ? nullptr : cfg.x0.c_str(), &reach));
  return ReachPtr(reach, rk_reach_destroy);
}

TablePtr adopt(rk_table* table) { return TablePtr(table, rk_table_destroy); }

rk_format format_of(const RunConfig& cfg) { return cfg.format == "json" ? RK_FORMAT_JSON : RK_FORMAT_CSV; }

rk_rule rule_of(const RunConfig& cfg) { return cfg.rule == "breakpoints" ? RK_RULE_BREAKPOINTS : RK_RULE_LEFT_ENDPOINT; }

std::string render(const rk_table* table, const RunConfig& cfg) {
  char* text = nullptr;
  check(rk_table_render(table, format_of(cfg), &text));
  return owned(text);
}

// Table commands: with -o the table goes to the file and the summary to
// stdout; otherwise the table owns stdout and the summary goes to stderr.
void emit_table(const rk_table* table, const RunConfig& cfg, const std::string& summary) {
  if (!cfg.output.empty()) {
    check(rk_table_write(table, cfg.output.c_str(), format_of(cfg)));
    std::cout << summary << "wrote " << rk_table_rows(table) << " rows to " << cfg.output << "\n";
  } else {
    std::cout << render(table, cfg);
    std::cerr << summary;
  }
}

// Report commands print their report first; an attached table follows on
// stdout or goes to the -o file.
void append_table(const rk_table* table, const RunConfig& cfg) {
  if (!cfg.output.empty()) {
    check(rk_table_write(table, cfg.output.c_str(), format_of(cfg)));
    std::cout << "wrote " << rk_table_rows(table) << " rows to " << cfg.output << "\n";
  } else {
    std::cout << render(table, cfg);
  }
}

double column_max(const rk_table* table, std::size_t column, std::size_t* row_out) {
  double best = -INFINITY;
  for (std::size_t r = 0; r < rk_table_rows(table); ++r) {
    const double v = rk_table_value(table, r, column);
    if (v > best) {
      best = v;
      *row_out = r;
    }
  }
  return best;
}

void cmd_volume(const RunConfig& cfg) {
  ReachPtr reach = make_reach(cfg);
  const bool point_start = rk_reach_singleton_start(reach.get());
  if (!point_start && cfg.estimate == 0) {
    throw Failure{RK_UNSUPPORTED_INITIAL_SET, "the closed-form volume needs a point x0; pass --estimate n for a zonotope"};
  }
  if (point_start) {
    check(rk_limit_coefficient(cfg.d, cfg.cap, nullptr, nullptr));
    char* exact = nullptr;
    double approx = 0.0;
    check(rk_volume(reach.get(), &exact, &approx));
    std::cout << owned(exact) << " ≈ " << fmt(approx) << "\n";
  }
  if (cfg.estimate > 0) {
    double estimate = 0.0;
    check(rk_volume_estimate(reach.get(), cfg.estimate, rule_of(cfg), &estimate));
    std::cout << "estimate(n=" << cfg.estimate << ", rule=" << cfg.rule << ") ≈ " << fmt(estimate)
              << " (approximate)\n";
  }
  if (!cfg.convergence.empty()) {
    rk_table* raw = nullptr;
    check(rk_volume_convergence(reach.get(), cfg.convergence.data(), cfg.convergence.size(), rule_of(cfg), &raw));
    append_table(adopt(raw).get(), cfg);
  }
}

void cmd_diameter(const RunConfig& cfg) {
  ReachPtr reach = make_reach(cfg);
  std::vector<double> direction(static_cast<std::size_t>(cfg.d));
  double value = 0.0;
  int approximate = 0;
  check(rk_diameter(reach.get(), cfg.samples, &value, direction.data(), &approximate));
  std::cout << "diameter ≈ " << fmt(value);
  if (approximate) std::cout << " (approximate, sampled maximum over directions)";
  std::cout << "\ndirection = [";
  for (std::size_t i = 0; i < direction.size(); ++i) std::cout << (i ? ", " : "") << fmt(direction[i]);
  std::cout << "]\n";
  if (cfg.d == 2) {
    double theta = std::atan2(direction[1], direction[0]);
    theta = std::fmod(theta + 2 * std::numbers::pi, std::numbers::pi);
    std::cout << "theta ≈ " << fmt(theta) << " (maximisers at theta + r*pi)\n";
  }
}

void cmd_width(const RunConfig& cfg) {
  ReachPtr reach = make_reach(cfg);
  rk_table* raw = nullptr;
  check(rk_width_profile(reach.get(), cfg.grid, &raw));
  TablePtr table = adopt(raw);
  const std::size_t width_column = rk_table_columns(table.get()) - 1;
  std::size_t row = 0;
  const double best = column_max(table.get(), width_column, &row);
  std::ostringstream summary;
  summary << "width profile: " << rk_table_rows(table.get()) << " directions, max width " << fmt(best);
  if (cfg.d == 2) summary << " at theta " << fmt(rk_table_value(table.get(), row, 0));
  summary << "\n";
  emit_table(table.get(), cfg, summary.str());
}

void cmd_boundary(const RunConfig& cfg) {
  ReachPtr reach = make_reach(cfg);
  rk_table* raw = nullptr;
  check(rk_boundary(reach.get(), cfg.samples, &raw));
  TablePtr table = adopt(raw);
  emit_table(table.get(), cfg, "boundary: " + std::to_string(rk_table_rows(table.get())) + " points at tau = " + cfg.t + "\n");
}

void cmd_tube(const RunConfig& cfg) {
  ReachPtr reach = make_reach(cfg);
  rk_table* raw = nullptr;
  check(rk_tube(reach.get(), cfg.slices, cfg.samples, &raw));
  TablePtr table = adopt(raw);
  emit_table(table.get(), cfg,
             "tube: " + std::to_string(cfg.slices) + " slices of " + std::to_string(cfg.samples) +
                 " boundary points plus the initial point\n");
}

void cmd_hausdorff(const RunConfig& cfg) {
  ReachPtr reach = make_reach(cfg);
  rk_table* raw = nullptr;
  check(rk_hausdorff(reach.get(), cfg.n.data(), cfg.n.size(), cfg.samples, &raw));
  TablePtr table = adopt(raw);
  std::ostringstream summary;
  for (std::size_t r = 0; r < rk_table_rows(table.get()); ++r) {
    summary << "n = " << fmt(rk_table_value(table.get(), r, 0)) << "  delta ≈ " << fmt(rk_table_value(table.get(), r, 1))
            << "\n";
  }
  emit_table(table.get(), cfg, summary.str());
}

void cmd_oracle(const RunConfig& cfg) {
  ReachPtr reach = make_reach(cfg);
  const bool planar = cfg.d == 2;
  rk_table* raw = nullptr;
  double area = 0.0;
  check(rk_oracle(reach.get(), cfg.count, cfg.max_switches, cfg.seed, cfg.output.empty() ? nullptr : &raw,
                  planar ? &area : nullptr));
  TablePtr table = adopt(raw);
  std::cout << "oracle: " << cfg.count << " bang-bang extremals, at most " << cfg.max_switches << " switches, seed "
            << cfg.seed << "\n";
  if (planar) {
    std::cout << "hull area ≈ " << fmt(area) << "\n";
    if (rk_reach_singleton_start(reach.get())) {
      char* exact = nullptr;
      double volume = 0.0;
      check(rk_volume(reach.get(), &exact, &volume));
      std::cout << "volume = " << owned(exact) << " ≈ " << fmt(volume) << "\n";
      std::cout << "relative gap ≈ " << fmt((volume - area) / volume) << "\n";
    }
  } else {
    std::cout << "hull area is computed for d = 2 only\n";
  }
  if (table) {
    check(rk_table_write(table.get(), cfg.output.c_str(), format_of(cfg)));
    std::cout << "wrote " << rk_table_rows(table.get()) << " rows to " << cfg.output << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reach sets of the integrator chain x' = Ax + bu, |u| <= mu"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  std::string n_text;
  std::string convergence_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-d,--dim", cfg.d, "state dimension (>= 2)");
    sub->add_option("--mu", cfg.mu, "control bound, decimal or p/q");
    sub->add_option("-t,--time", cfg.t, "horizon, decimal or p/q");
    sub->add_option("--x0", cfg.x0, "initial set as JSON; default is the origin");
    sub->add_option("-o,--output", cfg.output, "output file");
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("--threads", cfg.threads, "worker cap (0: REACHKIT_THREADS or hardware)");
    sub->add_option("--config", config_path, "JSON file whose keys override flags");
  };

  CLI::App* volume = app.add_subcommand("volume", "closed-form volume, convergence table, zonotope estimate");
  add_common(volume);
  volume->add_option("--convergence", convergence_text, "comma-separated n list for the zonotope table");
  volume->add_option("--estimate", cfg.estimate, "segments for the zonotope volume estimate");
  volume->add_option("--rule", cfg.rule, "left or breakpoints");
  volume->add_option("--cap", cfg.cap, "largest d for the limit coefficient");

  CLI::App* diameter = app.add_subcommand("diameter", "diameter and a maximising direction");
  add_common(diameter);
  diameter->add_option("--samples", cfg.samples, "directions for a non-point x0");

  CLI::App* width = app.add_subcommand("width", "width profile over directions");
  add_common(width);
  width->add_option("--grid", cfg.grid, "number of directions");

  CLI::App* boundary = app.add_subcommand("boundary", "boundary points at the horizon");
  add_common(boundary);
  boundary->add_option("--samples", cfg.samples, "number of outward normals");

  CLI::App* tube = app.add_subcommand("tube", "boundary points of intermediate reach sets");
  add_common(tube);
  tube->add_option("--slices", cfg.slices, "number of slices");
  tube->add_option("--samples", cfg.samples, "outward normals per slice");

  CLI::App* hausdorff = app.add_subcommand("hausdorff", "distance between zonotope discretisations and the reach set");
  add_common(hausdorff);
  hausdorff->add_option("--n", n_text, "comma-separated segment counts");
  hausdorff->add_option("--samples", cfg.samples, "sphere directions");

  CLI::App* oracle = app.add_subcommand("oracle", "sampled bang-bang endpoints and their hull area");
  add_common(oracle);
  oracle->add_option("--count", cfg.count, "number of extremals");
  oracle->add_option("--max-switches", cfg.max_switches, "largest switch count");
  oracle->add_option("--seed", cfg.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (!n_text.empty()) cfg.n = reachkit::cli::parse_int_list(n_text);
    if (!convergence_text.empty()) cfg.convergence = reachkit::cli::parse_int_list(convergence_text);
    if (!config_path.empty()) cfg = reachkit::cli::apply_json(cfg, read_file(config_path));
    reachkit::cli::normalize(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "reachkit-cli: " << e.what() << "\n";
    return kExitConfig;
  }

  int threads = cfg.threads;
  if (threads == 0) {
    if (const char* env = std::getenv("REACHKIT_THREADS")) threads = std::atoi(env);
  }
  rk_set_threads(threads);

  try {
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (name == "volume") cmd_volume(cfg);
    else if (name == "diameter") cmd_diameter(cfg);
    else if (name == "width") cmd_width(cfg);
    else if (name == "boundary") cmd_boundary(cfg);
    else if (name == "tube") cmd_tube(cfg);
    else if (name == "hausdorff") cmd_hausdorff(cfg);
    else cmd_oracle(cfg);
  } catch (const Failure& f) {
    std::cerr << "reachkit-cli: " << f.message << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "reachkit-cli: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
