#pragma once

// Named triangle centers and the cevian triads through them.

#include <array>
#include <optional>
#include <string_view>

#include "sixcircles/geometry.hpp"

namespace sixcircles {

enum class Center { Orthocenter, Centroid, Circumcenter, Incenter, Gergonne, Nagel, Custom };

constexpr std::string_view center_name(Center c) {
  switch (c) {
    case Center::Orthocenter:
      return "orthocenter";
    case Center::Centroid:
      return "centroid";
    case Center::Circumcenter:
      return "circumcenter";
    case Center::Incenter:
      return "incenter";
    case Center::Gergonne:
      return "gergonne";
    case Center::Nagel:
      return "nagel";
    default:
      return "custom";
  }
}

/// Whether the center has rational coordinates for rational vertices.
constexpr bool is_rational_center(Center c) {
  return c == Center::Orthocenter || c == Center::Centroid || c == Center::Circumcenter;
}

/// Interior point P with cevian feet D on BC, E on CA, F on AB.
template <Field T>
struct CevianTriad {
  Center kind = Center::Custom;
  Point<T> P;
  Point<T> D;
  Point<T> E;
  Point<T> F;
};

template <Field T>
Point<T> perpendicular(const Point<T>& v) {
  return {-v.y, v.x};
}

namespace detail {

/// Intersection of cevians A->D and B->E, where D lies on BC at distance
/// bd from B and E lies on CA at distance ce from C.
template <Approx T>
Point<T> cevian_meet(const Triangle<T>& t, const T& bd, const T& ce) {
  const auto s = side_lengths(t);
  const Point<T> d = lerp(t.B(), t.C(), bd / s.a);
  const Point<T> e = lerp(t.C(), t.A(), ce / s.b);
  return line_intersection(Line<T>(t.A(), d), Line<T>(t.B(), e));
}

}  // namespace detail

template <Field T>
Point<T> center_point(const Triangle<T>& t, Center kind) {
  switch (kind) {
    case Center::Centroid:
      return (t.A() + t.B() + t.C()) / T(3);
    case Center::Orthocenter: {
      const Line<T> alt_a(t.A(), t.A() + perpendicular(t.C() - t.B()));
      const Line<T> alt_b(t.B(), t.B() + perpendicular(t.A() - t.C()));
      return line_intersection(alt_a, alt_b);
    }
    case Center::Circumcenter: {
      const Point<T> mid_ab = (t.A() + t.B()) / T(2);
      const Point<T> mid_bc = (t.B() + t.C()) / T(2);
      const Line<T> bis_ab(mid_ab, mid_ab + perpendicular(t.B() - t.A()));
      const Line<T> bis_bc(mid_bc, mid_bc + perpendicular(t.C() - t.B()));
      return line_intersection(bis_ab, bis_bc);
    }
    default:
      break;
  }
  if constexpr (Approx<T>) {
    const auto sl = side_lengths(t);
    const T s = sl.semiperimeter();
    switch (kind) {
      case Center::Incenter:
        return (sl.a * t.A() + sl.b * t.B() + sl.c * t.C()) / (sl.a + sl.b + sl.c);
      case Center::Gergonne:
        // Incircle contacts: BD = s - b, CE = s - c.
        return detail::cevian_meet(t, s - sl.b, s - sl.c);
      case Center::Nagel:
        // Excircle contacts: BD = s - c, CE = s - a.
        return detail::cevian_meet(t, s - sl.c, s - sl.a);
      default:
        break;
    }
    throw GeometryError("custom center has no canonical point");
  } else {
    throw GeometryError(std::string(center_name(kind)) + " requires an approximate width");
  }
}

/// Cevian triad through an arbitrary strictly interior point.
template <Field T>
CevianTriad<T> cevian_triad_through(const Triangle<T>& t, const Point<T>& p,
                                    Center kind = Center::Custom) {
  if (!point_in_triangle(t, p)) throw CenterNotInterior(std::string(center_name(kind)));
  CevianTriad<T> triad;
  triad.kind = kind;
  triad.P = p;
  triad.D = line_intersection(Line<T>(t.A(), p), Line<T>(t.B(), t.C()));
  triad.E = line_intersection(Line<T>(t.B(), p), Line<T>(t.C(), t.A()));
  triad.F = line_intersection(Line<T>(t.C(), p), Line<T>(t.A(), t.B()));
  return triad;
}

template <Field T>
CevianTriad<T> cevian_triad(const Triangle<T>& t, Center kind) {
  return cevian_triad_through(t, center_point(t, kind), kind);
}

/// (BD/DC)(CE/EA)(AF/FB), from the feet's parameters along each side.
template <Field T>
T ceva_product(const Triangle<T>& t, const CevianTriad<T>& triad) {
  auto ratio = [](const Point<T>& foot, const Point<T>& from, const Point<T>& to) {
    const T u = segment_parameter(foot, from, to);
    return u / (T(1) - u);
  };
  return ratio(triad.D, t.B(), t.C()) * ratio(triad.E, t.C(), t.A()) *
         ratio(triad.F, t.A(), t.B());
}

/// Largest distance from P to the three cevian lines, for concurrency checks.
template <Approx T>
T concurrency_defect(const Triangle<T>& t, const CevianTriad<T>& triad) {
  return std::max({distance_point_to_line(triad.P, Line<T>(t.A(), triad.D)),
                   distance_point_to_line(triad.P, Line<T>(t.B(), triad.E)),
                   distance_point_to_line(triad.P, Line<T>(t.C(), triad.F))});
}

template <Approx T>
void require_triangle_sides(const T& a, const T& b, const T& c) {
  if (!(a > 0 && b > 0 && c > 0 && a < b + c && b < c + a && c < a + b)) throw InvalidSides();
}

/// Cevian lengths AD, BE, CF to the excircle contact points, in closed form:
/// AD = sqrt(s^2 - 4K^2 / (a (s - a))) and cyclic, with K from Heron.
template <Approx T>
std::array<T, 3> nagel_cevian_lengths(const T& a, const T& b, const T& c) {
  require_triangle_sides(a, b, c);
  const T s = (a + b + c) / T(2);
  const T k2 = s * (s - a) * (s - b) * (s - c);
  auto len = [&](const T& x) { return math::sqrt(s * s - T(4) * k2 / (x * (s - x))); };
  return {len(a), len(b), len(c)};
}

/// Section ratios AN/ND, BN/NE, CN/NF at the Nagel point: x / (s - x).
template <Approx T>
std::array<T, 3> nagel_section_ratios(const T& a, const T& b, const T& c) {
  require_triangle_sides(a, b, c);
  const T s = (a + b + c) / T(2);
  return {a / (s - a), b / (s - b), c / (s - c)};
}

}  // namespace sixcircles
