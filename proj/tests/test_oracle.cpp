#include <gtest/gtest.h>

#include <numbers>

#include "reachkit/oracle.hpp"
#include "reachkit/parallel.hpp"
#include "reachkit/rng.hpp"
#include "test_support.hpp"

using namespace reachkit;
using namespace testing_support;

namespace {

ReachSpec point_spec(int d, double mu, double t) {
  return ReachSpec(IntegratorSystem::with_bound(d, mu), ConvexSet::singleton(Vector<double>(d, 0.0)), t);
}

}  // namespace

TEST(CounterRng, ReferenceValues) {
  // splitmix64 finaliser of 0 and 1.
  EXPECT_EQ(CounterRng::mix(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(CounterRng::mix(1), 0x910A2DEC89025CC1ULL);
  const CounterRng rng(42);
  EXPECT_EQ(rng.bits(3, 7), CounterRng::mix(CounterRng::mix(42 ^ CounterRng::mix(3)) + 7));
  for (std::uint64_t c = 0; c < 1000; ++c) {
    const double u = rng.uniform(1, c);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(BangBang, ZeroSwitchEndpointIsScaledZeta) {
  for (int d = 2; d <= 5; ++d) {
    const auto spec = point_spec(d, 2.0, 1.5);
    const auto p = bang_bang_endpoint(spec, BangBang{1, {}});
    const auto z = zeta(spec.system(), 1.5);
    for (int i = 0; i < d; ++i) EXPECT_NEAR(p[i], 2.0 * z[i], 1e-14);
    const auto n = bang_bang_endpoint(spec, BangBang{-1, {}});
    for (int i = 0; i < d; ++i) EXPECT_NEAR(n[i], -2.0 * z[i], 1e-14);
  }
}

TEST(BangBang, ZeroSwitchPointAttainsSupportAlongZeta) {
  const auto spec = point_spec(2, 5, 4);
  const auto p = bang_bang_endpoint(spec, BangBang{1, {}});
  const auto z = zeta(spec.system(), 4.0);
  const double len = norm2(z);
  const Vector<double> eta{z[0] / len, z[1] / len};
  EXPECT_LT(std::abs(dot(eta, p) - reach_support(spec, eta)), 1e-9);
}

TEST(BangBang, SegmentsFollowSwitchTimes) {
  const auto spec = point_spec(2, 3, 4);
  const auto segments = bang_bang_segments(spec, BangBang{-1, {1.0, 2.5}});
  ASSERT_EQ(segments.size(), 3u);
  EXPECT_DOUBLE_EQ(segments[0].duration, 1.0);
  EXPECT_DOUBLE_EQ(segments[0].u, -3.0);
  EXPECT_DOUBLE_EQ(segments[1].duration, 1.5);
  EXPECT_DOUBLE_EQ(segments[1].u, 3.0);
  EXPECT_DOUBLE_EQ(segments[2].duration, 1.5);
  EXPECT_DOUBLE_EQ(segments[2].u, -3.0);
  EXPECT_THROW(bang_bang_segments(spec, BangBang{1, {2.0, 1.0}}), Error);
  EXPECT_THROW(bang_bang_segments(spec, BangBang{1, {5.0}}), Error);
}

TEST(SampleExtremals, ContainedInReachSet) {
  std::mt19937_64 rng(60);
  for (int d = 2; d <= 4; ++d) {
    const auto spec = point_spec(d, 5, 4);
    const auto cloud = sample_extremals(spec, 10000 / d, d, 99);
    ASSERT_EQ(cloud.points.size(), static_cast<std::size_t>(10000 / d));
    std::vector<Vector<double>> dirs;
    std::vector<double> supports;
    for (int k = 0; k < 100; ++k) {
      dirs.push_back(random_unit(rng, d));
      supports.push_back(reach_support(spec, dirs.back()));
    }
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
      EXPECT_LE(cloud.controls[i].switch_times.size(), static_cast<std::size_t>(d));
      for (std::size_t k = 0; k < dirs.size(); ++k) {
        EXPECT_LE(dot(dirs[k], cloud.points[i]), supports[k] + 1e-8);
      }
    }
  }
}

TEST(SampleExtremals, DeterministicAcrossThreadCounts) {
  const auto spec = point_spec(2, 5, 4);
  set_max_threads(1);
  const auto serial = sample_extremals(spec, 5000, 2, 7);
  set_max_threads(4);
  const auto parallel = sample_extremals(spec, 5000, 2, 7);
  set_max_threads(0);
  EXPECT_EQ(serial.points, parallel.points);
  const auto other = sample_extremals(spec, 5000, 2, 8);
  EXPECT_NE(serial.points, other.points);
  // A prefix of a larger cloud is the smaller cloud.
  const auto longer = sample_extremals(spec, 6000, 2, 7);
  EXPECT_TRUE(std::equal(serial.points.begin(), serial.points.end(), longer.points.begin()));
}

TEST(SampleExtremals, Validation) {
  const auto spec = point_spec(2, 1, 1);
  EXPECT_THROW(sample_extremals(spec, 0, 1, 1), Error);
  EXPECT_THROW(sample_extremals(spec, 10, -1, 1), Error);
  const ReachSpec boxed(IntegratorSystem::with_bound(2, 1.0), ConvexSet::box({0, 0}, {1, 1}), 1.0);
  EXPECT_THROW(sample_extremals(boxed, 10, 1, 1), Error);
}

TEST(SampleExtremals, ExtremalsWithCorrectSignPatternAttainSupport) {
  // For d = 2 the control sign(<eta, xi(t - tau)>) switches at most once;
  // sampling its single switch time recovers the support along eta.
  const auto spec = point_spec(2, 5, 4);
  for (int k = 0; k < 50; ++k) {
    const double theta = 2 * std::numbers::pi * (k + 0.5) / 50;
    const Vector<double> eta{std::cos(theta), std::sin(theta)};
    const auto control = extremal_control(spec, eta);
    BangBang bb{control.front().u > 0 ? 1 : -1, {}};
    double elapsed = 0.0;
    for (std::size_t i = 0; i + 1 < control.size(); ++i) {
      elapsed += control[i].duration;
      bb.switch_times.push_back(elapsed);
    }
    EXPECT_LE(bb.switch_times.size(), 1u);
    const auto p = bang_bang_endpoint(spec, bb);
    EXPECT_NEAR(dot(eta, p), reach_support(spec, eta), 1e-9);
  }
}

TEST(Hull, Examples) {
  const std::vector<Point2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  EXPECT_DOUBLE_EQ(hull_area_2d(std::span<const Point2>(square)), 1.0);
  const std::vector<Point2> triangle{{0, 0}, {2, 0}, {0, 2}};
  EXPECT_DOUBLE_EQ(hull_area_2d(std::span<const Point2>(triangle)), 2.0);
  EXPECT_EQ(convex_hull_2d(square).size(), 4u);
  const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  EXPECT_EQ(hull_area_2d(std::span<const Point2>(line)), 0.0);
  const std::vector<Point2> two{{0, 0}, {1, 1}};
  try {
    hull_area_2d(std::span<const Point2>(two));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateHull);
  }
  const std::vector<Vector<double>> wrong{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_THROW(hull_area_2d(std::span<const Vector<double>>(wrong)), Error);
}

TEST(Hull, RegularPolygonArea) {
  std::vector<Point2> pts;
  const int n = 1000;
  for (int k = 0; k < n; ++k) {
    const double a = 2 * std::numbers::pi * k / n;
    pts.push_back({std::cos(a), std::sin(a)});
    pts.push_back({0.3 * std::cos(a), 0.2 * std::sin(a)});
  }
  EXPECT_NEAR(hull_area_2d(std::span<const Point2>(pts)), 0.5 * n * std::sin(2 * std::numbers::pi / n), 1e-12);
}

TEST(Hull, PlanarCloudApproachesClosedForm) {
  const auto spec = point_spec(2, 5, 4);
  const auto cloud = sample_extremals(spec, 20000, 1, 3);
  const double area = hull_area_2d(std::span<const Vector<double>>(cloud.points));
  const double v = 3200.0 / 3;
  EXPECT_LE(area, v * (1 + 1e-6));
  EXPECT_GT(area, 0.99 * v);
}

TEST(Quadrature, Examples) {
  EXPECT_NEAR(quadrature_abs(Polynomial<double>({-1.0, 1.0}), 2.0), 1.0, 1e-10);
  EXPECT_NEAR(quadrature_abs(Polynomial<double>({0.0, 0.0, 3.0}), 1.0), 1.0, 1e-12);
  EXPECT_EQ(quadrature_abs(Polynomial<double>(std::vector<double>{}), 1.0), 0.0);
  EXPECT_THROW(quadrature_abs(Polynomial<double>({1.0}), 0.0), Error);
}

TEST(EnumerateVandermonde, Examples) {
  EXPECT_EQ(enumerate_vandermonde(2, 3), 10);
  EXPECT_EQ(enumerate_vandermonde(3, 2), 2);
  EXPECT_EQ(enumerate_vandermonde(3, 3), 16);
  try {
    enumerate_vandermonde(5, 200);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}
