#include <gtest/gtest.h>

#include <cmath>

#include "sixcircles/centers.hpp"
#include "sixcircles/circles.hpp"
#include "sixcircles/random.hpp"

using namespace sixcircles;

namespace {

using P = Point<double>;
using T = Triangle<double>;

const T kRight({0, 3}, {0, 0}, {4, 0});

T random_triangle(CounterRng& rng) {
  for (;;) {
    const P a{rng.uniform01(), rng.uniform01()}, b{rng.uniform01(), rng.uniform01()},
        c{rng.uniform01(), rng.uniform01()};
    if (std::abs(orient(a, b, c)) > 0.05) return T(a, b, c);
  }
}

// Circle through the three tangency constraints found by bisector intersection,
// independent of the equidistance solver.
Circle<double> bisector_incircle(const T& t) {
  auto bisector = [&](const P& v, const P& p, const P& q) {
    const P u = (p - v) / distance(p, v);
    const P w = (q - v) / distance(q, v);
    return Line<double>(v, v + u + w);
  };
  const P c = line_intersection(bisector(t.A(), t.B(), t.C()), bisector(t.B(), t.C(), t.A()));
  const Line<double> bc(t.B(), t.C());
  return Circle<double>{c, distance_point_to_line(c, bc),
                        {bc, Line<double>(t.C(), t.A()), Line<double>(t.A(), t.B())}};
}

}  // namespace

TEST(Inradius, Examples) {
  EXPECT_DOUBLE_EQ(inradius(kRight), 1);
  const double k = 2 * std::sqrt(3.0);
  EXPECT_NEAR(inradius(T({0, 0}, {k, 0}, {k / 2, 3})), 1, 1e-15);
  EXPECT_DOUBLE_EQ(inradius(T({0, 21}, {0, 0}, {28, 0})), 7);
}

TEST(Exradius, Examples) {
  // Sides a = 4, b = 5, c = 3.
  EXPECT_DOUBLE_EQ(exradius(kRight, Side::c), 2);
  EXPECT_DOUBLE_EQ(exradius(kRight, Side::a), 3);
  EXPECT_DOUBLE_EQ(exradius(kRight, Side::b), 6);
  EXPECT_NEAR(exradius(T({0, 0}, {2, 0}, {1, std::sqrt(3.0)}), Side::a), std::sqrt(3.0), 1e-15);
  EXPECT_DOUBLE_EQ(exradius(T({0, 9}, {0, 0}, {12, 0}), Side::a), 9);
}

TEST(Incircle, CenterAndRadius) {
  const auto c = incircle(kRight);
  EXPECT_NEAR(c.center.x, 1, 1e-15);
  EXPECT_NEAR(c.center.y, 1, 1e-15);
  EXPECT_DOUBLE_EQ(c.radius, 1);
  EXPECT_LE(tangency_residual(c), 1e-15);
}

TEST(Excircle, BeyondBC) {
  const auto c = excircle(kRight, Side::a);
  EXPECT_NEAR(c.center.x, 3, 1e-14);
  EXPECT_NEAR(c.center.y, -3, 1e-14);
  EXPECT_DOUBLE_EQ(c.radius, 3);
  EXPECT_LE(tangency_residual(c), 1e-12);
  const P contact = host_contact(c);
  EXPECT_NEAR(contact.x, 3, 1e-14);
  EXPECT_NEAR(contact.y, 0, 1e-14);
}

TEST(Excircle, MirrorInvariance) {
  // The reflection reverses orientation, so B and C trade places and sides b, c swap names.
  const T m({0, 3}, {0, 0}, {-4, 0});
  EXPECT_DOUBLE_EQ(excircle(m, Side::a).radius, excircle(kRight, Side::a).radius);
  EXPECT_DOUBLE_EQ(excircle(m, Side::b).radius, excircle(kRight, Side::c).radius);
  EXPECT_DOUBLE_EQ(excircle(m, Side::c).radius, excircle(kRight, Side::b).radius);
  EXPECT_DOUBLE_EQ(incircle(m).radius, incircle(kRight).radius);
}

TEST(SixCircles, CentroidConfig1FirstRadius) {
  const auto sub = subdivide(kRight, cevian_triad(kRight, Center::Centroid));
  const auto set = six_circles(sub, Family::ExcirclesConfig1);
  EXPECT_NEAR(set.radii[0], 6 / (1 + std::sqrt(13.0)), 1e-15);
  EXPECT_NEAR(set.radii[0], 1.302776, 1e-6);
}

TEST(SixCircles, EquilateralCentroidIsSymmetric) {
  const T t({0, 0}, {2, 0}, {1, std::sqrt(3.0)});
  const auto sub = subdivide(t, cevian_triad(t, Center::Centroid));
  for (Family f : {Family::Incircles, Family::ExcirclesConfig1, Family::ExcirclesConfig2,
                   Family::LargeIncircles}) {
    const auto set = six_circles(sub, f);
    for (int i = 1; i < 6; ++i) EXPECT_NEAR(set.radii[i], set.radii[0], 1e-14) << family_name(f);
  }
}

TEST(SixCircles, IncircleRadiiMatchBisectorConstruction) {
  CounterRng rng(31, 0);
  for (int k = 0; k < 500; ++k) {
    const T t = random_triangle(rng);
    const auto sub = subdivide(t, cevian_triad_through(t, (3.0 * t.A() + 4.0 * t.B() + 5.0 * t.C()) / 12.0));
    const auto set = six_circles(sub, Family::Incircles);
    for (int i = 0; i < 6; ++i) {
      const auto oracle = bisector_incircle(sub.small[i]);
      EXPECT_NEAR(set.radii[i], oracle.radius, 1e-12 * oracle.radius);
      EXPECT_NEAR(set.circles[i].center.x, oracle.center.x, 1e-12);
      EXPECT_NEAR(set.circles[i].center.y, oracle.center.y, 1e-12);
    }
  }
}

TEST(Subdivide, CentroidAreasAndSemiperimeters) {
  const auto sub = subdivide(kRight, cevian_triad(kRight, Center::Centroid));
  double total = 0;
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(sub.small_area[i], 1.0, 1e-14);
    total += sub.small_area[i];
  }
  EXPECT_NEAR(total, 6, 1e-14);
  const double odd = sub.large_semi[0] + sub.large_semi[2] + sub.large_semi[4];
  const double even = sub.large_semi[1] + sub.large_semi[3] + sub.large_semi[5];
  EXPECT_NEAR(odd - even, 0, 1e-14);
}

TEST(Subdivide, AreasPartitionTheTriangle) {
  CounterRng rng(32, 0);
  for (int k = 0; k < 500; ++k) {
    const T t = random_triangle(rng);
    const auto sub = subdivide(t, cevian_triad(t, Center::Incenter));
    double total = 0;
    for (double a : sub.small_area) total += a;
    EXPECT_NEAR(total, area(t), 1e-14);
  }
}

TEST(TangencyResidual, PerturbedRadius) {
  auto c = incircle(kRight);
  c.radius += 1e-3;
  EXPECT_NEAR(tangency_residual(c), 1e-3, 1e-15);
}

TEST(TangencyResidual, ConstructionContract) {
  CounterRng rng(33, 0);
  const double bound = std::ldexp(1.0, -53 + 12);
  for (int k = 0; k < 1000; ++k) {
    const T t = random_triangle(rng);
    const double scale = coordinate_scale(t);
    EXPECT_LE(tangency_residual(incircle(t)), bound * scale);
    for (Side s : {Side::a, Side::b, Side::c}) EXPECT_LE(tangency_residual(excircle(t, s)), bound * 64 * scale);
  }
}

// Both excircle families attach circle i to segment i, and do so strictly inside it.
TEST(Properties, FamiliesTouchTheirSegments) {
  CounterRng rng(34, 0);
  for (int k = 0; k < 1000; ++k) {
    const T t = random_triangle(rng);
    const auto sub = subdivide(t, cevian_triad(t, Center::Centroid));
    for (Family f : {Family::Incircles, Family::ExcirclesConfig1, Family::ExcirclesConfig2,
                     Family::LargeIncircles}) {
      const auto set = six_circles(sub, f);
      for (int i = 0; i < 6; ++i) EXPECT_TRUE(touches_segment(sub, set.circles[i], i)) << family_name(f) << i;
    }
  }
}

TEST(Properties, Homogeneity) {
  CounterRng rng(35, 0);
  for (int k = 0; k < 200; ++k) {
    const T t = random_triangle(rng);
    const double lambda = 3.5;
    const T s(lambda * t.A(), lambda * t.B(), lambda * t.C());
    EXPECT_NEAR(inradius(s), lambda * inradius(t), 1e-14);
    EXPECT_NEAR(exradius(s, Side::b), lambda * exradius(t, Side::b), 1e-13 * exradius(s, Side::b));
  }
}
