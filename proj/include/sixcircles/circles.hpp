#pragma once

// Incircles, excircles, the six-triangle subdivision cut out by a cevian
// triad, and the six-circle families built on it.

#include <array>
#include <string_view>
#include <utility>

#include "sixcircles/centers.hpp"

namespace sixcircles {

/// A circle together with the three lines it is constructed to touch.
/// tangents[0] is the host line (the side the circle is attached to).
template <Approx T>
struct Circle {
  Point<T> center;
  T radius;
  std::array<Line<T>, 3> tangents;
};

template <Approx T>
T inradius(const Triangle<T>& t) {
  return area(t) / semiperimeter(t);
}

template <Approx T>
T exradius(const Triangle<T>& t, Side side) {
  const auto sl = side_lengths(t);
  return area(t) / (sl.semiperimeter() - sl.length(side));
}

namespace detail {

/// Lines of the triangle's sides, each directed so the interior is on the left.
template <Approx T>
std::array<Line<T>, 3> side_lines(const Triangle<T>& t) {
  return {Line<T>(t.B(), t.C()), Line<T>(t.C(), t.A()), Line<T>(t.A(), t.B())};
}

/// Point whose signed distance to lines[j] equals signs[j] * radius, using
/// the two lines whose normals are furthest from parallel.
template <Approx T>
Point<T> equidistant_center(const std::array<Line<T>, 3>& lines, const std::array<int, 3>& signs,
                            const T& radius) {
  std::array<Point<T>, 3> normals;
  std::array<T, 3> offsets;
  for (int j = 0; j < 3; ++j) {
    const Point<T> d = lines[j].direction();
    const T len = math::sqrt(dot(d, d));
    normals[j] = Point<T>{-d.y / len, d.x / len};
    offsets[j] = dot(normals[j], lines[j].from()) + T(signs[j]) * radius;
  }
  int p = 0;
  int q = 1;
  T best = math::abs(cross(normals[0], normals[1]));
  for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 2}}) {
    const T c = math::abs(cross(normals[i], normals[j]));
    if (c > best) {
      best = c;
      p = i;
      q = j;
    }
  }
  const T det = cross(normals[p], normals[q]);
  // Cramer's rule on n_p . X = o_p, n_q . X = o_q.
  return {(offsets[p] * normals[q].y - offsets[q] * normals[p].y) / det,
          (normals[p].x * offsets[q] - normals[q].x * offsets[p]) / det};
}

inline int side_index(Side s) { return static_cast<int>(s); }

}  // namespace detail

template <Approx T>
Circle<T> incircle(const Triangle<T>& t) {
  const auto lines = detail::side_lines(t);
  const T r = inradius(t);
  return {detail::equidistant_center(lines, {1, 1, 1}, r), r, lines};
}

/// Excircle beyond the given side: negative signed distance to that side,
/// positive to the other two.
template <Approx T>
Circle<T> excircle(const Triangle<T>& t, Side side) {
  auto lines = detail::side_lines(t);
  std::array<int, 3> signs{1, 1, 1};
  signs[detail::side_index(side)] = -1;
  const T r = exradius(t, side);
  const Point<T> c = detail::equidistant_center(lines, signs, r);
  // Host line first.
  std::swap(lines[0], lines[detail::side_index(side)]);
  return {c, r, lines};
}

/// Incircle with the host side listed first.
template <Approx T>
Circle<T> incircle_on(const Triangle<T>& t, Side host) {
  Circle<T> c = incircle(t);
  std::swap(c.tangents[0], c.tangents[detail::side_index(host)]);
  return c;
}

template <Approx T>
T tangency_residual(const Circle<T>& c) {
  T worst(0);
  for (const auto& l : c.tangents) {
    worst = std::max(worst, math::abs(distance_point_to_line(c.center, l) - c.radius));
  }
  return worst;
}

/// Foot of the perpendicular from the center to the host line.
template <Approx T>
Point<T> host_contact(const Circle<T>& c) {
  return project(c.center, c.tangents[0]);
}

/// The six small triangles around P and the six large cevian triangles,
/// indexed 0..5 for labels 1..6. Labels follow the side segments
/// 1 = BD, 2 = DC, 3 = CE, 4 = EA, 5 = AF, 6 = FB.
///
/// small[i] = triangle (P, segment i);  large[i] = triangle (opposite vertex,
/// segment i). Each is stored with A as apex so that side a is segment i.
template <Approx T>
struct Subdivision {
  Triangle<T> whole;
  CevianTriad<T> triad;
  std::array<std::pair<Point<T>, Point<T>>, 6> segment_ends;
  std::array<T, 6> segment;
  std::array<Triangle<T>, 6> small;
  std::array<Triangle<T>, 6> large;
  std::array<T, 6> small_area;
  std::array<T, 6> small_semi;
  std::array<T, 6> large_area;
  std::array<T, 6> large_semi;
};

template <Approx T>
Subdivision<T> subdivide(const Triangle<T>& t, const CevianTriad<T>& triad) {
  const auto& [A, B, C] = std::array{t.A(), t.B(), t.C()};
  const std::array<std::pair<Point<T>, Point<T>>, 6> ends{
      std::pair{B, triad.D}, std::pair{triad.D, C}, std::pair{C, triad.E},
      std::pair{triad.E, A}, std::pair{A, triad.F}, std::pair{triad.F, B}};
  const std::array<Point<T>, 6> opposite{A, A, B, B, C, C};

  auto build = [&](int i, const Point<T>& apex) {
    return Triangle<T>(apex, ends[i].first, ends[i].second);
  };
  Subdivision<T> sub{t,
                     triad,
                     ends,
                     {},
                     {build(0, triad.P), build(1, triad.P), build(2, triad.P), build(3, triad.P),
                      build(4, triad.P), build(5, triad.P)},
                     {build(0, opposite[0]), build(1, opposite[1]), build(2, opposite[2]),
                      build(3, opposite[3]), build(4, opposite[4]), build(5, opposite[5])},
                     {},
                     {},
                     {},
                     {}};
  for (int i = 0; i < 6; ++i) {
    sub.segment[i] = distance(ends[i].first, ends[i].second);
    sub.small_area[i] = area(sub.small[i]);
    sub.small_semi[i] = semiperimeter(sub.small[i]);
    sub.large_area[i] = area(sub.large[i]);
    sub.large_semi[i] = semiperimeter(sub.large[i]);
  }
  return sub;
}

enum class Family {
  Incircles,         ///< incircles of the small triangles
  ExcirclesConfig1,  ///< excircles of the large triangles beyond segment i
  ExcirclesConfig2,  ///< excircles of the small triangles beyond segment i
  LargeIncircles,    ///< incircles of the large triangles
};

constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::Incircles:
      return "incircles";
    case Family::ExcirclesConfig1:
      return "excircles-config1";
    case Family::ExcirclesConfig2:
      return "excircles-config2";
    default:
      return "large-incircles";
  }
}

template <Approx T>
struct SixCircleSet {
  Family family;
  std::array<T, 6> radii;
  std::array<Circle<T>, 6> circles;
};

namespace detail {

template <Approx T>
Circle<T> family_circle(const Subdivision<T>& sub, Family family, int i) {
  switch (family) {
    case Family::Incircles:
      return incircle_on(sub.small[i], Side::a);
    case Family::ExcirclesConfig1:
      return excircle(sub.large[i], Side::a);
    case Family::ExcirclesConfig2:
      return excircle(sub.small[i], Side::a);
    default:
      return incircle_on(sub.large[i], Side::a);
  }
}

template <Approx T, std::size_t... I>
SixCircleSet<T> build_six(const Subdivision<T>& sub, Family family, std::index_sequence<I...>) {
  std::array<Circle<T>, 6> circles{family_circle(sub, family, static_cast<int>(I))...};
  return {family, {circles[I].radius...}, circles};
}

}  // namespace detail

template <Approx T>
SixCircleSet<T> six_circles(const Subdivision<T>& sub, Family family) {
  return detail::build_six(sub, family, std::make_index_sequence<6>{});
}

/// Whether circle i's contact with its host line falls strictly inside
/// segment i of the subdivision.
template <Approx T>
bool touches_segment(const Subdivision<T>& sub, const Circle<T>& c, int i) {
  const T u = segment_parameter(host_contact(c), sub.segment_ends[i].first,
                                sub.segment_ends[i].second);
  return u > 0 && u < 1;
}

}  // namespace sixcircles
