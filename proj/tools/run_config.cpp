#include "run_config.hpp"

#include <charconv>
#include <set>

#include <json.hpp>

namespace reachkit::cli {
namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {"d",       "mu",      "t",     "x0",      "n",     "convergence",
                                     "estimate", "rule",   "grid",  "samples", "slices", "count",
                                     "max_switches", "seed", "cap", "output",  "format", "threads"};

std::string number_text(const json& value, const char* key) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.dump();
  throw ConfigError(std::string("config key '") + key + "' must be a number or a string");
}

template <class T>
T get_as(const json& value, const char* key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string to_json(const RunConfig& c) {
  json j;
  j["d"] = c.d;
  j["mu"] = c.mu;
  j["t"] = c.t;
  j["x0"] = c.x0.empty() ? json(nullptr) : json::parse(c.x0);
  j["n"] = c.n;
  j["convergence"] = c.convergence;
  j["estimate"] = c.estimate;
  j["rule"] = c.rule;
  j["grid"] = c.grid;
  j["samples"] = c.samples;
  j["slices"] = c.slices;
  j["count"] = c.count;
  j["max_switches"] = c.max_switches;
  j["seed"] = c.seed;
  j["cap"] = c.cap;
  j["output"] = c.output;
  j["format"] = c.format;
  j["threads"] = c.threads;
  return j.dump(2);
}

RunConfig apply_json(const RunConfig& base, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& item : j.items()) {
    if (!kKeys.count(item.key())) throw ConfigError("unknown config key '" + item.key() + "'");
  }
  RunConfig c = base;
  if (j.contains("d")) c.d = get_as<int>(j["d"], "d");
  if (j.contains("mu")) c.mu = number_text(j["mu"], "mu");
  if (j.contains("t")) c.t = number_text(j["t"], "t");
  if (j.contains("x0")) {
    const json& x0 = j["x0"];
    if (x0.is_null()) c.x0.clear();
    else if (x0.is_string()) c.x0 = x0.get<std::string>();
    else c.x0 = x0.dump();
  }
  if (j.contains("n")) c.n = get_as<std::vector<int>>(j["n"], "n");
  if (j.contains("convergence")) c.convergence = get_as<std::vector<int>>(j["convergence"], "convergence");
  if (j.contains("estimate")) c.estimate = get_as<int>(j["estimate"], "estimate");
  if (j.contains("rule")) c.rule = get_as<std::string>(j["rule"], "rule");
  if (j.contains("grid")) c.grid = get_as<int>(j["grid"], "grid");
  if (j.contains("samples")) c.samples = get_as<int>(j["samples"], "samples");
  if (j.contains("slices")) c.slices = get_as<int>(j["slices"], "slices");
  if (j.contains("count")) c.count = get_as<int>(j["count"], "count");
  if (j.contains("max_switches")) c.max_switches = get_as<int>(j["max_switches"], "max_switches");
  if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j["seed"], "seed");
  if (j.contains("cap")) c.cap = get_as<int>(j["cap"], "cap");
  if (j.contains("output")) c.output = get_as<std::string>(j["output"], "output");
  if (j.contains("format")) c.format = get_as<std::string>(j["format"], "format");
  if (j.contains("threads")) c.threads = get_as<int>(j["threads"], "threads");
  return c;
}

RunConfig from_json(const std::string& text) { return apply_json(RunConfig{}, text); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw ConfigError("malformed integer list '" + text + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  return values;
}

void normalize(RunConfig& c) {
  if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json, got '" + c.format + "'");
  if (c.rule != "left" && c.rule != "breakpoints") {
    throw ConfigError("rule must be left or breakpoints, got '" + c.rule + "'");
  }
  if (!c.x0.empty()) {
    try {
      c.x0 = nlohmann::json::parse(c.x0).dump();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("x0 is not valid JSON: ") + e.what());
    }
  }
  for (int n : c.n) {
    if (n < 1) throw ConfigError("n values must be positive");
  }
  for (int n : c.convergence) {
    if (n < 1) throw ConfigError("convergence n values must be positive");
  }
  if (c.estimate < 0) throw ConfigError("estimate must be non-negative");
  if (c.count < 1) throw ConfigError("count must be positive");
  if (c.max_switches < 0) throw ConfigError("max_switches must be non-negative");
}

}  // namespace reachkit::cli
