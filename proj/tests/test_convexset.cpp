#include <gtest/gtest.h>

#include <numbers>

#include "reachkit/convexset.hpp"
#include "reachkit/convexset_json.hpp"
#include "reachkit/oracle.hpp"
#include "test_support.hpp"

using namespace reachkit;
using namespace testing_support;

namespace {

double support_of(const ConvexSet& set, const Vector<double>& y) { return support(set, std::span<const double>(y)); }

ConvexSet zonotope_set(Vector<double> center, std::vector<Vector<double>> generators) {
  return ConvexSet::zonotope(Zonotope{std::move(center), std::move(generators)});
}

}  // namespace

TEST(Support, Examples) {
  EXPECT_DOUBLE_EQ(support_of(ConvexSet::singleton({1, 1}), {0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(support_of(zonotope_set({0, 0}, {{1, 0}, {0, 1}}), {1, 1}), 2.0);
  EXPECT_DOUBLE_EQ(support_of(ConvexSet::ellipsoid({0, 0}, Matrix<double>::identity(2)), {3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(support_of(ConvexSet::box({1, -1}, {2, 3}), {1, 1}), 5.0);
}

TEST(Support, ZeroDirectionGivesZero) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 20; ++trial) EXPECT_EQ(support_of(random_set(rng, 3), {0, 0, 0}), 0.0);
}

TEST(Support, DimensionMismatch) {
  try {
    support_of(ConvexSet::singleton({1, 1}), {1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  EXPECT_THROW(ConvexSet::minkowski_sum({ConvexSet::singleton({1}), ConvexSet::singleton({1, 2})}), Error);
}

TEST(ConvexSetFactories, Validation) {
  EXPECT_THROW(ConvexSet::box({0, 0}, {1, -1}), Error);
  EXPECT_THROW(ConvexSet::ellipsoid({0, 0}, Matrix<double>::from_rows({{1, 0}, {0, -1}})), Error);
  EXPECT_THROW(ConvexSet::ellipsoid({0, 0}, Matrix<double>::from_rows({{1, 2}, {0, 1}})), Error);
  EXPECT_THROW(ConvexSet::minkowski_sum({}), Error);
  EXPECT_EQ(ConvexSet::box({0, 0}, {1, 1}).kind(), "box");
}

TEST(SupportPoint, Examples) {
  const Vector<double> y1{1, -1};
  EXPECT_EQ(support_point(ConvexSet::box({0, 0}, {1, 1}), y1), (Vector<double>{1, -1}));
  const Vector<double> y2{0, 2};
  const auto e = support_point(ConvexSet::ellipsoid({0, 0}, Matrix<double>::identity(2)), y2);
  EXPECT_NEAR(e[0], 0.0, 1e-15);
  EXPECT_NEAR(e[1], 1.0, 1e-15);
  // <(1,0),(0,1)> = 0 takes sign +1, so both generators enter positively.
  const Vector<double> y3{0, 1};
  EXPECT_EQ(support_point(zonotope_set({0, 0}, {{1, 0}, {1, 1}}), y3), (Vector<double>{2, 1}));
}

TEST(SupportPoint, ZeroDirectionRejected) {
  const Vector<double> zero{0, 0};
  try {
    support_point(ConvexSet::box({0, 0}, {1, 1}), zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDirection);
  }
}

TEST(SupportPoint, AttainsSupportAndLiesInside) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 3;
    const auto set = random_set(rng, d);
    const auto y = random_vector(rng, d);
    const auto x = support_point(set, y);
    const double h = support_of(set, y);
    EXPECT_NEAR(dot(y, x), h, 1e-10 * std::max(1.0, std::abs(h))) << set.kind();
    for (int k = 0; k < 100; ++k) {
      const auto z = random_vector(rng, d);
      EXPECT_GE(support_of(set, z), dot(z, x) - 1e-10 * std::max(1.0, std::abs(dot(z, x))));
    }
  }
}

TEST(Support, CalculusProperties) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + trial % 3;
    const auto k = random_set(rng, d);
    const auto y = random_vector(rng, d);
    const auto z = random_vector(rng, d);
    Vector<double> sum(d);
    for (int i = 0; i < d; ++i) sum[i] = y[i] + z[i];
    const double hy = support_of(k, y), hz = support_of(k, z);
    EXPECT_LE(support_of(k, sum), hy + hz + 1e-12 * (1 + std::abs(hy) + std::abs(hz)));
    const double alpha = uniform(rng, 0.01, 10.0);
    Vector<double> scaled(d);
    for (int i = 0; i < d; ++i) scaled[i] = alpha * y[i];
    EXPECT_NEAR(support_of(k, scaled), alpha * hy, 1e-12 * std::max(1.0, std::abs(alpha * hy)));
  }
}

TEST(Support, MinkowskiAndLinearImageRules) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 3;
    const auto a = random_set(rng, d);
    const auto b = random_set(rng, d);
    const auto y = random_vector(rng, d);
    EXPECT_EQ(support_of(ConvexSet::minkowski_sum({a, b}), y), support_of(a, y) + support_of(b, y));
    Matrix<double> m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = uniform(rng, -2, 2);
    const auto offset = random_vector(rng, d);
    const double want = dot(y, offset) + support_of(a, multiply_transposed(m, y));
    EXPECT_NEAR(support_of(ConvexSet::linear_image(m, a, offset), y), want, 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST(Zonotope, SupportIsCentrallySymmetric) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    Zonotope z{random_vector(rng, 3), {random_vector(rng, 3), random_vector(rng, 3)}};
    const auto y = random_vector(rng, 3);
    Vector<double> neg{-y[0], -y[1], -y[2]};
    EXPECT_NEAR(zonotope_support(z, y) - dot(y, z.center), zonotope_support(z, neg) + dot(y, z.center), 1e-12);
  }
}

TEST(ZonotopeVolume, Examples) {
  EXPECT_DOUBLE_EQ(zonotope_volume(Zonotope{{0, 0}, {{1, 0}, {0, 1}}}), 4.0);
  EXPECT_DOUBLE_EQ(zonotope_volume(Zonotope{{0, 0}, {{1, 0}, {0, 1}, {1, 1}}}), 12.0);
  EXPECT_DOUBLE_EQ(zonotope_volume(Zonotope{{0, 0, 0}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), 8.0);
  const Zonotope hexagon{{0, 0}, {{1, 0}, {0, 1}, {1, 1}}};
  const auto corners = zonotope_corner_points(hexagon);
  EXPECT_NEAR(hull_area_2d(std::span<const Vector<double>>(corners)), 12.0, 1e-12);
}

TEST(ZonotopeVolume, FlatAndErrors) {
  EXPECT_EQ(zonotope_volume(Zonotope{{0, 0}, {{1, 1}, {2, 2}}}), 0.0);
  try {
    zonotope_volume(Zonotope{{0, 0, 0}, {{1, 0, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewGenerators);
  }
  std::vector<Vector<double>> many(200, Vector<double>{1, 2, 3});
  try {
    zonotope_volume(Zonotope{{0, 0, 0}, many}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCombinatorialBudgetExceeded);
  }
}

TEST(ZonotopeVolume, ExactRationalBackend) {
  using Q = Rational;
  ExactZonotope z{{Q(0), Q(0)}, {{Q(1, 3), Q(0)}, {Q(0), Q(2, 7)}, {Q(1, 2), Q(1, 5)}}};
  // 4 * (|det(g1,g2)| + |det(g1,g3)| + |det(g2,g3)|)
  const Q want = Q(4) * (Q(2, 21) + Q(1, 15) + Q(1, 7));
  EXPECT_EQ(zonotope_volume(z), want);
}

TEST(ZonotopeVolume, MatchesHullAreaOfCorners) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vector<double>> g;
    const int n = 2 + trial % 7;
    for (int k = 0; k < n; ++k) g.push_back(random_vector(rng, 2));
    const Zonotope z{random_vector(rng, 2), g};
    const auto corners = zonotope_corner_points(z);
    const double area = hull_area_2d(std::span<const Vector<double>>(corners));
    EXPECT_NEAR(zonotope_volume(z), area, 1e-9 * area);
  }
}

TEST(ZonotopeVolume, UnipotentInvariance) {
  std::mt19937_64 rng(36);
  for (int d = 2; d <= 4; ++d) {
    const auto sys = IntegratorSystem(d, Rational(2));
    const auto z = discretize_reach(sys, 1.5, 8);
    const double base = zonotope_volume(z);
    const auto exact = discretize_reach(sys, Rational(3, 2), 8);
    const Rational exact_base = zonotope_volume(exact);
    for (int trial = 0; trial < 5; ++trial) {
      const double tau = uniform(rng, -3.0, 3.0);
      Zonotope moved = z;
      const auto m = state_transition(sys, tau);
      for (auto& g : moved.generators) g = multiply(m, g);
      EXPECT_NEAR(zonotope_volume(moved), base, 1e-9 * base);

      const Rational q = random_rational(rng, 9, 4);
      ExactZonotope exact_moved = exact;
      const auto mq = state_transition(sys, q);
      for (auto& g : exact_moved.generators) g = multiply(mq, g);
      EXPECT_EQ(zonotope_volume(exact_moved), exact_base);
    }
  }
}

TEST(DiscretizeReach, Examples) {
  const auto a = discretize_reach(IntegratorSystem(2, Rational(1)), Rational(1), 1);
  EXPECT_EQ(a.generators, (std::vector<Vector<Rational>>{{0, 1}, {1, 1}}));
  const auto b = discretize_reach(IntegratorSystem(2, Rational(5)), Rational(4), 2);
  EXPECT_EQ(b.generators, (std::vector<Vector<Rational>>{{0, 10}, {20, 10}, {40, 10}}));
  EXPECT_EQ(b.center, (Vector<Rational>{0, 0}));
  const auto left = discretize_reach(IntegratorSystem(2, Rational(5)), Rational(4), 2, DiscretizationRule::kLeftEndpoint);
  EXPECT_EQ(left.generators, (std::vector<Vector<Rational>>{{0, 10}, {20, 10}}));
  EXPECT_THROW(discretize_reach(IntegratorSystem(2, Rational(1)), 1.0, 0), Error);
  EXPECT_THROW(discretize_reach(IntegratorSystem(2, Rational(1)), 0.0, 4), Error);
}

TEST(SphereDirections, UnitAndClosedUnderNegation) {
  for (int d : {2, 3, 5}) {
    const auto dirs = sphere_directions(d, 50);
    ASSERT_GE(dirs.size(), 50u);
    for (const auto& v : dirs) {
      EXPECT_NEAR(norm2(v), 1.0, 1e-12);
      Vector<double> neg(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
      bool found = false;
      for (const auto& w : dirs) found |= w == neg;
      EXPECT_TRUE(found);
    }
    EXPECT_EQ(dirs, sphere_directions(d, 50));
  }
}

TEST(Hausdorff, Examples) {
  const auto segment = [](double r) {
    return ConvexSet::zonotope(Zonotope{{0, 0}, {{r, 0}}});
  };
  const auto h = [](const ConvexSet& s) { return SupportFunction([s](std::span<const double> y) { return support(s, y); }); };
  EXPECT_EQ(hausdorff_distance(h(segment(1)), h(segment(1)), 64, 2).distance, 0.0);
  const auto seg = hausdorff_distance(h(segment(1)), h(segment(2)), 64, 2);
  EXPECT_NEAR(seg.distance, 1.0, 1e-12);
  EXPECT_NEAR(std::abs(seg.direction[0]), 1.0, 1e-12);
  const auto ball = ConvexSet::ellipsoid({0, 0}, Matrix<double>::identity(2));
  const auto box = ConvexSet::box({0, 0}, {1, 1});
  const auto est = hausdorff_distance(h(ball), h(box), 64, 2);
  // Dense sweep oracle.
  double sweep = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double a = 2 * std::numbers::pi * k / 100000;
    sweep = std::max(sweep, std::abs(std::cos(a)) + std::abs(std::sin(a)) - 1.0);
  }
  EXPECT_NEAR(sweep, std::sqrt(2.0) - 1.0, 1e-9);
  EXPECT_NEAR(est.distance, std::sqrt(2.0) - 1.0, 1e-12);
}

TEST(Hausdorff, SymmetricAndTriangle) {
  std::mt19937_64 rng(37);
  const auto dirs = sphere_directions(3, 200);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_set(rng, 3), b = random_set(rng, 3), c = random_set(rng, 3);
    const auto h = [](const ConvexSet& s) { return SupportFunction([s](std::span<const double> y) { return support(s, y); }); };
    const double ab = hausdorff_distance(h(a), h(b), dirs).distance;
    const double ba = hausdorff_distance(h(b), h(a), dirs).distance;
    const double bc = hausdorff_distance(h(b), h(c), dirs).distance;
    const double ac = hausdorff_distance(h(a), h(c), dirs).distance;
    EXPECT_EQ(ab, ba);
    EXPECT_LE(ac, ab + bc + 1e-9);
  }
}

TEST(ConvexSetJson, RoundTripPreservesSupport) {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 3;
    const auto set = random_set(rng, d);
    const auto back = convex_set_from_json(convex_set_to_json(set));
    EXPECT_EQ(back.kind(), set.kind());
    for (int k = 0; k < 10; ++k) {
      const auto y = random_vector(rng, d);
      EXPECT_EQ(support_of(back, y), support_of(set, y));
    }
  }
}

TEST(ConvexSetJson, ParsesDescriptors) {
  EXPECT_EQ(convex_set_from_json("[1, 2]").kind(), "singleton");
  EXPECT_EQ(convex_set_from_json(R"({"type":"box","center":[0,0],"halfwidths":[1,2]})").kind(), "box");
  const auto z = convex_set_from_json(R"({"type":"zonotope","center":[0,0],"generators":[[1,0],[0,1]]})");
  EXPECT_TRUE(as_zonotope(z).has_value());
  try {
    convex_set_from_json("{\"type\":\"cone\"}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
  EXPECT_THROW(convex_set_from_json("not json"), Error);
}
