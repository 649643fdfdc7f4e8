#include <gtest/gtest.h>

#include <cmath>

#include "sixcircles/centers.hpp"
#include "sixcircles/random.hpp"

using namespace sixcircles;

namespace {

using P = Point<double>;
using T = Triangle<double>;

const T kRight({0, 3}, {0, 0}, {4, 0});

void expect_point(const P& p, double x, double y, double tol = 1e-14) {
  EXPECT_NEAR(p.x, x, tol);
  EXPECT_NEAR(p.y, y, tol);
}

T random_triangle(CounterRng& rng) {
  for (;;) {
    const P a{rng.uniform01(), rng.uniform01()}, b{rng.uniform01(), rng.uniform01()},
        c{rng.uniform01(), rng.uniform01()};
    if (std::abs(orient(a, b, c)) > 0.02) return T(a, b, c);
  }
}

}  // namespace

TEST(CenterPoint, RightTriangle) {
  expect_point(center_point(kRight, Center::Centroid), 4.0 / 3.0, 1);
  expect_point(center_point(kRight, Center::Orthocenter), 0, 0);
  expect_point(center_point(kRight, Center::Incenter), 1, 1);
  expect_point(center_point(kRight, Center::Circumcenter), 2, 1.5);
}

TEST(CenterPoint, ExactProfile) {
  const Triangle<Exact> t({0, 3}, {0, 0}, {4, 0});
  const auto g = center_point(t, Center::Centroid);
  EXPECT_EQ(g.x, Exact(4) / 3);
  EXPECT_EQ(g.y, Exact(1));
  EXPECT_EQ(center_point(t, Center::Orthocenter), (Point<Exact>{0, 0}));
  EXPECT_THROW(center_point(t, Center::Incenter), GeometryError);
}

TEST(CevianTriad, CentroidGivesMidpoints) {
  const auto tr = cevian_triad(kRight, Center::Centroid);
  expect_point(tr.D, 2, 0);
  expect_point(tr.E, 2, 1.5);
  expect_point(tr.F, 0, 1.5);
}

TEST(CevianTriad, NagelFootOnBC) {
  // BD = s - c = 6 - 3.
  expect_point(cevian_triad(kRight, Center::Nagel).D, 3, 0, 1e-13);
  // BD = s - b = 1.
  expect_point(cevian_triad(kRight, Center::Gergonne).D, 1, 0, 1e-13);
}

TEST(CevianTriad, OrthocenterOnVertexRejected) {
  EXPECT_THROW(cevian_triad(kRight, Center::Orthocenter), CenterNotInterior);
}

TEST(CevaProduct, Examples) {
  const Triangle<Exact> t({0, 3}, {0, 0}, {4, 0});
  EXPECT_EQ(ceva_product(t, cevian_triad(t, Center::Centroid)), Exact(1));
  EXPECT_NEAR(ceva_product(kRight, cevian_triad(kRight, Center::Gergonne)), 1, 1e-12);
  EXPECT_NEAR(ceva_product(kRight, cevian_triad(kRight, Center::Nagel)), 1, 1e-12);
}

TEST(NagelCevianLengths, WorkedValue) {
  const auto len = nagel_cevian_lengths(4.0, 5.0, 3.0);
  EXPECT_NEAR(len[0], std::sqrt(18.0), 1e-15);
  EXPECT_NEAR(len[0], 4.2426407, 1e-7);
  // Coordinate oracle: A = (0,3), D = (3,0).
  const double ad = distance(P{0, 3}, P{3, 0});
  EXPECT_LE(std::abs(len[0] - ad) / ad, 1e-12);
}

TEST(NagelCevianLengths, EquilateralAndInvalid) {
  const auto len = nagel_cevian_lengths(1.0, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(len[0], len[1]);
  EXPECT_DOUBLE_EQ(len[1], len[2]);
  EXPECT_THROW(nagel_cevian_lengths(1.0, 2.0, 3.0), InvalidSides);
}

TEST(NagelSectionRatios, Examples) {
  const auto r = nagel_section_ratios(4.0, 5.0, 3.0);
  EXPECT_DOUBLE_EQ(r[0], 2);
  EXPECT_DOUBLE_EQ(r[1], 5);
  EXPECT_DOUBLE_EQ(r[2], 1);
  const auto e = nagel_section_ratios(1.0, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(e[0], 2);
  // AN : ND = 2 : 1 on A = (0,3), D = (3,0) puts N at (2,1).
  expect_point(center_point(kRight, Center::Nagel), 2, 1, 1e-13);
}

TEST(Properties, CeviansConcurrent) {
  CounterRng rng(21, 0);
  const double tol = std::ldexp(1.0, -53 + 10);
  for (int i = 0; i < 10000; ++i) {
    const T t = random_triangle(rng);
    const double scale = coordinate_scale(t);
    for (Center c : {Center::Centroid, Center::Incenter, Center::Gergonne, Center::Nagel}) {
      const auto tr = cevian_triad(t, c);
      EXPECT_LE(concurrency_defect(t, tr), tol * scale);
    }
    if (is_acute(t)) {
      for (Center c : {Center::Orthocenter, Center::Circumcenter}) {
        EXPECT_LE(concurrency_defect(t, cevian_triad(t, c)), tol * scale);
      }
    }
  }
}

TEST(Properties, ContactLengths) {
  CounterRng rng(22, 0);
  for (int i = 0; i < 1000; ++i) {
    const T t = random_triangle(rng);
    const auto sl = side_lengths(t);
    const double s = sl.semiperimeter();
    const auto g = cevian_triad(t, Center::Gergonne);
    EXPECT_NEAR(distance(t.B(), g.D), s - sl.b, 1e-12);
    EXPECT_NEAR(distance(g.D, t.C()), s - sl.c, 1e-12);
    const auto n = cevian_triad(t, Center::Nagel);
    EXPECT_NEAR(distance(t.A(), n.F), s - sl.b, 1e-12);
    EXPECT_NEAR(distance(n.D, t.C()), s - sl.b, 1e-12);
    EXPECT_NEAR(distance(n.F, t.B()), s - sl.a, 1e-12);
    EXPECT_NEAR(distance(t.C(), n.E), s - sl.a, 1e-12);
    EXPECT_NEAR(distance(t.B(), n.D), s - sl.c, 1e-12);
    EXPECT_NEAR(distance(n.E, t.A()), s - sl.c, 1e-12);
  }
}

// Rotation plus uniform scaling maps each center onto the image of the center.
TEST(Properties, SimilarityCovariance) {
  CounterRng rng(23, 0);
  const double ca = std::cos(0.7) * 1.9, sa = std::sin(0.7) * 1.9;
  auto map = [&](const P& p) { return P{ca * p.x - sa * p.y + 0.3, sa * p.x + ca * p.y - 0.2}; };
  for (int i = 0; i < 1000; ++i) {
    const T t = random_triangle(rng);
    const T u(map(t.A()), map(t.B()), map(t.C()));
    for (Center c : {Center::Centroid, Center::Orthocenter, Center::Circumcenter, Center::Incenter,
                     Center::Gergonne, Center::Nagel}) {
      const P want = map(center_point(t, c));
      const P got = center_point(u, c);
      // Obtuse circumcenters and orthocenters sit far out; compare relative to their size.
      const double size = std::max({1.0, std::abs(want.x), std::abs(want.y)});
      EXPECT_NEAR(got.x, want.x, 1e-11 * size);
      EXPECT_NEAR(got.y, want.y, 1e-11 * size);
    }
  }
}
