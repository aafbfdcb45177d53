#include <gtest/gtest.h>

#include "run_config.hpp"

using namespace reachkit::cli;

TEST(RunConfig, RoundTripsThroughJson) {
  RunConfig c;
  c.d = 3;
  c.mu = "5/3";
  c.t = "0.25";
  c.x0 = R"({"center":[0,0,0],"halfwidths":[1,1,1],"type":"box"})";
  c.n = {8, 32};
  c.convergence = {16, 64};
  c.estimate = 12;
  c.rule = "breakpoints";
  c.grid = 99;
  c.samples = 17;
  c.slices = 5;
  c.count = 1234;
  c.max_switches = 3;
  c.seed = 0xFFFFFFFFFFFFFFFFULL;
  c.cap = 7;
  c.output = "out.json";
  c.format = "json";
  c.threads = 2;
  normalize(c);
  EXPECT_EQ(from_json(to_json(c)), c);
  EXPECT_EQ(from_json(to_json(RunConfig{})), RunConfig{});
}

TEST(RunConfig, AppliesOnlyPresentKeys) {
  RunConfig base;
  base.d = 4;
  base.grid = 12;
  const auto c = apply_json(base, R"({"mu": 5, "t": 0.1, "x0": [1, 1, 1, 1], "seed": 9})");
  EXPECT_EQ(c.d, 4);
  EXPECT_EQ(c.grid, 12);
  EXPECT_EQ(c.mu, "5");
  EXPECT_EQ(c.t, "0.1");
  EXPECT_EQ(c.x0, "[1,1,1,1]");
  EXPECT_EQ(c.seed, 9u);
}

TEST(RunConfig, RejectsBadInput) {
  EXPECT_THROW(from_json("{"), ConfigError);
  EXPECT_THROW(from_json("[1]"), ConfigError);
  EXPECT_THROW(from_json(R"({"unknown": 1})"), ConfigError);
  EXPECT_THROW(from_json(R"({"d": "two"})"), ConfigError);
  EXPECT_THROW(from_json(R"({"mu": [1]})"), ConfigError);
  RunConfig c;
  c.format = "xml";
  EXPECT_THROW(normalize(c), ConfigError);
  c = RunConfig{};
  c.rule = "middle";
  EXPECT_THROW(normalize(c), ConfigError);
  c = RunConfig{};
  c.x0 = "[1,";
  EXPECT_THROW(normalize(c), ConfigError);
}

TEST(RunConfig, ParsesIntegerLists) {
  EXPECT_EQ(parse_int_list("16,64,256"), (std::vector<int>{16, 64, 256}));
  EXPECT_EQ(parse_int_list("7"), (std::vector<int>{7}));
  EXPECT_THROW(parse_int_list(""), ConfigError);
  EXPECT_THROW(parse_int_list("1,,2"), ConfigError);
  EXPECT_THROW(parse_int_list("1,x"), ConfigError);
  EXPECT_THROW(parse_int_list("3,"), ConfigError);
}
