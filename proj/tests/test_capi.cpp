#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "reachkit/reachkit.h"

namespace {

struct Reach {
  rk_reach* ptr = nullptr;
  Reach(int d, const char* mu, const char* t, const char* x0 = nullptr) {
    const rk_status s = rk_reach_create(d, mu, t, x0, &ptr);
    if (s != RK_OK) ADD_FAILURE() << rk_last_error();
  }
  ~Reach() { rk_reach_destroy(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  rk_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, CreateReportsErrors) {
  rk_reach* r = nullptr;
  EXPECT_EQ(rk_reach_create(1, "1", "1", nullptr, &r), RK_INVALID_ARGUMENT);
  EXPECT_EQ(r, nullptr);
  EXPECT_NE(std::strlen(rk_last_error()), 0u);
  EXPECT_EQ(rk_reach_create(2, "abc", "1", nullptr, &r), RK_PARSE_ERROR);
  EXPECT_EQ(rk_reach_create(2, "1", "0", nullptr, &r), RK_INVALID_ARGUMENT);
  EXPECT_EQ(rk_reach_create(2, "1", "1", "[1,2,3]", &r), RK_DIMENSION_MISMATCH);
  EXPECT_EQ(rk_reach_create(2, "1", "1", "{\"type\":\"cone\"}", &r), RK_PARSE_ERROR);
  EXPECT_EQ(rk_reach_create(2, nullptr, "1", nullptr, &r), RK_INVALID_ARGUMENT);
  EXPECT_STREQ(rk_status_name(RK_BUDGET_EXCEEDED), "BudgetExceeded");
}

TEST(CApi, LastErrorClearedOnSuccess) {
  rk_reach* r = nullptr;
  EXPECT_NE(rk_reach_create(1, "1", "1", nullptr, &r), RK_OK);
  EXPECT_EQ(rk_reach_create(2, "1", "1", nullptr, &r), RK_OK);
  EXPECT_STREQ(rk_last_error(), "");
  rk_reach_destroy(r);
}

TEST(CApi, SupportWidthDiameter) {
  Reach reach(2, "5", "4", "[1,1]");
  EXPECT_EQ(rk_reach_dim(reach.ptr), 2);
  EXPECT_EQ(rk_reach_singleton_start(reach.ptr), 1);
  const double y[2] = {0, 1};
  double h = 0;
  ASSERT_EQ(rk_support(reach.ptr, y, 2, &h), RK_OK);
  EXPECT_NEAR(h, 21.0, 1e-12);
  EXPECT_EQ(rk_support(reach.ptr, y, 3, &h), RK_DIMENSION_MISMATCH);
  double w = 0;
  const double e1[2] = {1, 0};
  ASSERT_EQ(rk_width(reach.ptr, e1, 2, &w), RK_OK);
  EXPECT_NEAR(w, 80.0, 1e-12);
  const double zero[2] = {0, 0};
  EXPECT_EQ(rk_width(reach.ptr, zero, 2, &w), RK_ZERO_DIRECTION);
  double dia = 0, dir[2] = {0, 0};
  int approx = -1;
  ASSERT_EQ(rk_diameter(reach.ptr, 64, &dia, dir, &approx), RK_OK);
  EXPECT_NEAR(dia, 20 * std::sqrt(20.0), 1e-10);
  EXPECT_EQ(approx, 0);
  EXPECT_NEAR(std::atan2(dir[1], dir[0]), std::atan(0.5), 1e-12);

  Reach boxed(2, "5", "4", R"({"type":"box","center":[0,0],"halfwidths":[1,1]})");
  ASSERT_EQ(rk_diameter(boxed.ptr, 360, &dia, dir, &approx), RK_OK);
  EXPECT_EQ(approx, 1);
}

TEST(CApi, ExactVolumes) {
  Reach r2(2, "5", "4");
  char* exact = nullptr;
  double value = 0;
  ASSERT_EQ(rk_volume(r2.ptr, &exact, &value), RK_OK);
  EXPECT_EQ(take(exact), "3200/3");
  EXPECT_NEAR(value, 3200.0 / 3, 1e-9);
  Reach r4(4, "1", "1");
  ASSERT_EQ(rk_volume(r4.ptr, &exact, nullptr), RK_OK);
  EXPECT_EQ(take(exact), "1/18900");
  Reach frac(3, "1/2", "0.5");
  ASSERT_EQ(rk_volume(frac.ptr, &exact, nullptr), RK_OK);
  // (1/2)^3 (1/2)^6 / 45
  EXPECT_EQ(take(exact), "1/23040");

  ASSERT_EQ(rk_limit_coefficient(3, 0, &exact, &value), RK_OK);
  EXPECT_EQ(take(exact), "1/180");
  EXPECT_EQ(rk_limit_coefficient(9, 8, &exact, &value), RK_BUDGET_EXCEEDED);
  ASSERT_EQ(rk_vandermonde_sum(3, 3, &exact), RK_OK);
  EXPECT_EQ(take(exact), "16");

  Reach boxed(2, "5", "4", R"({"type":"box","center":[0,0],"halfwidths":[1,1]})");
  EXPECT_EQ(rk_volume(boxed.ptr, &exact, &value), RK_UNSUPPORTED_INITIAL_SET);
  double est = 0;
  ASSERT_EQ(rk_volume_estimate(boxed.ptr, 64, RK_RULE_LEFT_ENDPOINT, &est), RK_OK);
  EXPECT_GT(est, 3200.0 / 3);
}

TEST(CApi, Tables) {
  Reach reach(2, "5", "4");
  const int ns[] = {16, 64};
  rk_table* t = nullptr;
  ASSERT_EQ(rk_volume_convergence(reach.ptr, ns, 2, RK_RULE_LEFT_ENDPOINT, &t), RK_OK);
  EXPECT_EQ(rk_table_rows(t), 2u);
  EXPECT_EQ(rk_table_columns(t), 3u);
  EXPECT_STREQ(rk_table_column_name(t, 1), "vol_n");
  EXPECT_EQ(rk_table_column_name(t, 7), nullptr);
  EXPECT_NEAR(rk_table_value(t, 0, 1), 3200.0 / 3 * (1 - 1.0 / 256), 1e-9);
  char* csv = nullptr;
  ASSERT_EQ(rk_table_render(t, RK_FORMAT_CSV, &csv), RK_OK);
  EXPECT_EQ(take(csv).substr(0, 12), "n,vol_n,gap\n");
  rk_table_destroy(t);

  ASSERT_EQ(rk_width_profile(reach.ptr, 360, &t), RK_OK);
  EXPECT_EQ(rk_table_rows(t), 360u);
  bool found = false;
  for (std::size_t m = 0; m < rk_table_meta_count(t); ++m) {
    if (std::string(rk_table_meta_name(t, m)) == "maximizer_thetas") {
      found = true;
      EXPECT_EQ(rk_table_meta_size(t, m), 2u);
      EXPECT_NEAR(rk_table_meta_value(t, m, 0), std::atan(0.5), 1e-15);
    }
  }
  EXPECT_TRUE(found);
  rk_table_destroy(t);

  ASSERT_EQ(rk_boundary(reach.ptr, 16, &t), RK_OK);
  EXPECT_EQ(rk_table_rows(t), 16u);
  rk_table_destroy(t);
  EXPECT_EQ(rk_boundary(reach.ptr, 2, &t), RK_INVALID_ARGUMENT);

  ASSERT_EQ(rk_tube(reach.ptr, 20, 8, &t), RK_OK);
  EXPECT_EQ(rk_table_rows(t), 161u);
  rk_table_destroy(t);

  const int hn[] = {16, 64, 256};
  ASSERT_EQ(rk_hausdorff(reach.ptr, hn, 3, 64, &t), RK_OK);
  EXPECT_GT(rk_table_value(t, 0, 1), rk_table_value(t, 2, 1));
  rk_table_destroy(t);
}

TEST(CApi, OracleAndBudget) {
  Reach reach(2, "5", "4");
  rk_table* cloud = nullptr;
  double area = 0;
  ASSERT_EQ(rk_oracle(reach.ptr, 5000, 1, 11, &cloud, &area), RK_OK);
  EXPECT_EQ(rk_table_rows(cloud), 5000u);
  EXPECT_LT(area, 3200.0 / 3 * (1 + 1e-6));
  EXPECT_GT(area, 3200.0 / 3 * 0.98);
  rk_table_destroy(cloud);

  Reach spatial(3, "1", "1");
  EXPECT_EQ(rk_oracle(spatial.ptr, 10, 2, 1, nullptr, &area), RK_DIMENSION_MISMATCH);
  const int huge[] = {100000};
  rk_table* t = nullptr;
  EXPECT_EQ(rk_volume_convergence(spatial.ptr, huge, 1, RK_RULE_LEFT_ENDPOINT, &t), RK_COMBINATORIAL_BUDGET_EXCEEDED);
  EXPECT_EQ(t, nullptr);
}

TEST(CApi, WriteTableAtomically) {
  Reach reach(2, "1", "1");
  rk_table* t = nullptr;
  ASSERT_EQ(rk_boundary(reach.ptr, 8, &t), RK_OK);
  const auto path = std::filesystem::temp_directory_path() / "reachkit_capi.json";
  ASSERT_EQ(rk_table_write(t, path.c_str(), RK_FORMAT_JSON), RK_OK);
  EXPECT_TRUE(std::filesystem::exists(path));
  std::filesystem::remove(path);
  const auto bad = std::filesystem::temp_directory_path() / "reachkit_missing_dir" / "x.csv";
  EXPECT_EQ(rk_table_write(t, bad.c_str(), RK_FORMAT_CSV), RK_INVALID_ARGUMENT);
  EXPECT_FALSE(std::filesystem::exists(bad));
  rk_table_destroy(t);
}

TEST(CApi, ThreadsAndThreadLocalErrors) {
  rk_set_threads(3);
  EXPECT_EQ(rk_get_threads(), 3);
  rk_set_threads(0);
  EXPECT_GE(rk_get_threads(), 1);
  rk_reach* r = nullptr;
  EXPECT_NE(rk_reach_create(1, "1", "1", nullptr, &r), RK_OK);
  std::string other;
  std::thread([&] { other = rk_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(rk_last_error()), "");
}
