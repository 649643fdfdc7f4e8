#pragma once

// Planar primitives over any Field scalar. Operations that need square roots
// or trigonometry are restricted to the approximate profile.

#include <algorithm>
#include <array>
#include <utility>

#include "sixcircles/errors.hpp"
#include "sixcircles/scalar.hpp"

namespace sixcircles {

template <Field T>
struct Point {
  T x{};
  T y{};

  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const T& k, const Point& p) { return {k * p.x, k * p.y}; }
  friend Point operator/(const Point& p, const T& k) { return {p.x / k, p.y / k}; }
  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
};

template <Field To, Field From>
Point<To> convert(const Point<From>& p) {
  return {convert<To>(p.x), convert<To>(p.y)};
}

template <Field T>
T dot(const Point<T>& u, const Point<T>& v) {
  return u.x * v.x + u.y * v.y;
}

template <Field T>
T cross(const Point<T>& u, const Point<T>& v) {
  return u.x * v.y - u.y * v.x;
}

/// Twice the signed area of (p, q, r); positive when counterclockwise.
template <Field T>
T orient(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
  return cross(q - p, r - p);
}

template <Field T>
T squared_distance(const Point<T>& p, const Point<T>& q) {
  const Point<T> d = q - p;
  return dot(d, d);
}

template <Approx T>
T distance(const Point<T>& p, const Point<T>& q) {
  return math::sqrt(squared_distance(p, q));
}

/// Point at parameter t on segment p->q.
template <Field T>
Point<T> lerp(const Point<T>& p, const Point<T>& q, const T& t) {
  return p + t * (q - p);
}

/// Oriented line through two distinct anchors.
template <Field T>
class Line {
 public:
  Line(const Point<T>& from, const Point<T>& to) : from_(from), to_(to) {
    if (from == to) throw GeometryError("line anchors coincide");
  }

  const Point<T>& from() const { return from_; }
  const Point<T>& to() const { return to_; }
  Point<T> direction() const { return to_ - from_; }

  /// Positive for points to the left of the direction of travel.
  T side(const Point<T>& p) const { return orient(from_, to_, p); }

 private:
  Point<T> from_;
  Point<T> to_;
};

enum class Vertex { A, B, C };
/// Side named by the vertex it faces: a = BC, b = CA, c = AB.
enum class Side { a, b, c };

/// Non-degenerate triangle stored counterclockwise. A clockwise input has B
/// and C exchanged, so vertex A and side a keep their identity.
template <Field T>
class Triangle {
 public:
  Triangle(const Point<T>& a, const Point<T>& b, const Point<T>& c) : a_(a), b_(b), c_(c) {
    const T o = orient(a_, b_, c_);
    if (o == 0) throw DegenerateTriangle();
    if (o < 0) std::swap(b_, c_);
  }

  const Point<T>& A() const { return a_; }
  const Point<T>& B() const { return b_; }
  const Point<T>& C() const { return c_; }

  const Point<T>& vertex(Vertex v) const {
    switch (v) {
      case Vertex::A:
        return a_;
      case Vertex::B:
        return b_;
      default:
        return c_;
    }
  }

  /// Endpoints of a side, in counterclockwise order.
  std::pair<Point<T>, Point<T>> side(Side s) const {
    switch (s) {
      case Side::a:
        return {b_, c_};
      case Side::b:
        return {c_, a_};
      default:
        return {a_, b_};
    }
  }

  std::array<Point<T>, 3> vertices() const { return {a_, b_, c_}; }

 private:
  Point<T> a_;
  Point<T> b_;
  Point<T> c_;
};

template <Field To, Field From>
Triangle<To> convert(const Triangle<From>& t) {
  return Triangle<To>(convert<To>(t.A()), convert<To>(t.B()), convert<To>(t.C()));
}

template <Field T>
T area(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
  return math::abs(orient(p, q, r)) / T(2);
}

template <Field T>
T area(const Triangle<T>& t) {
  return area(t.A(), t.B(), t.C());
}

template <Approx T>
struct SideLengths {
  T a, b, c;
  T semiperimeter() const { return (a + b + c) / T(2); }
  T length(Side s) const { return s == Side::a ? a : (s == Side::b ? b : c); }
};

/// Squared side lengths, exact when T is.
template <Field T>
std::array<T, 3> squared_sides(const Triangle<T>& t) {
  return {squared_distance(t.B(), t.C()), squared_distance(t.C(), t.A()),
          squared_distance(t.A(), t.B())};
}

template <Approx T>
SideLengths<T> side_lengths(const Triangle<T>& t) {
  const auto sq = squared_sides(t);
  return {math::sqrt(sq[0]), math::sqrt(sq[1]), math::sqrt(sq[2])};
}

template <Approx T>
T semiperimeter(const Triangle<T>& t) {
  return side_lengths(t).semiperimeter();
}

/// Largest absolute coordinate, used to scale tolerances.
template <Field T>
T coordinate_scale(std::initializer_list<Point<T>> pts) {
  T s(0);
  for (const auto& p : pts) s = std::max({s, math::abs(p.x), math::abs(p.y)});
  return s;
}

template <Field T>
T coordinate_scale(const Triangle<T>& t) {
  return coordinate_scale({t.A(), t.B(), t.C()});
}

/// Intersection of two lines. Exact for Exact; for approximate widths the
/// lines are rejected as parallel when |cross| <= 2^(10-w) * scale^2.
template <Field T>
Point<T> line_intersection(const Line<T>& l1, const Line<T>& l2) {
  const Point<T> d1 = l1.direction();
  const Point<T> d2 = l2.direction();
  const T denom = cross(d1, d2);
  if constexpr (Approx<T>) {
    const T scale = std::max({math::abs(d1.x), math::abs(d1.y), math::abs(d2.x), math::abs(d2.y)});
    if (math::abs(denom) <= math::width_tolerance<T>(10) * scale * scale) throw ParallelLines();
  } else {
    if (denom == 0) throw ParallelLines();
  }
  const T t = cross(l2.from() - l1.from(), d2) / denom;
  return l1.from() + t * d1;
}

/// Signed distance, positive to the left of the line's direction.
template <Approx T>
T signed_distance(const Point<T>& p, const Line<T>& l) {
  return l.side(p) / math::sqrt(dot(l.direction(), l.direction()));
}

template <Approx T>
T distance_point_to_line(const Point<T>& p, const Line<T>& l) {
  return math::abs(signed_distance(p, l));
}

/// Orthogonal projection of p onto the line.
template <Field T>
Point<T> project(const Point<T>& p, const Line<T>& l) {
  const Point<T> d = l.direction();
  const T t = dot(p - l.from(), d) / dot(d, d);
  return l.from() + t * d;
}

/// Parameter of the projection of p onto segment from->to (0 at from, 1 at to).
template <Field T>
T segment_parameter(const Point<T>& p, const Point<T>& from, const Point<T>& to) {
  const Point<T> d = to - from;
  return dot(p - from, d) / dot(d, d);
}

/// Angle at vertex v in radians, in (0, pi).
template <Approx T>
T vertex_angle(const Triangle<T>& t, Vertex v) {
  const Point<T>& o = t.vertex(v);
  const Point<T>& p = v == Vertex::A ? t.B() : (v == Vertex::B ? t.C() : t.A());
  const Point<T>& q = v == Vertex::A ? t.C() : (v == Vertex::B ? t.A() : t.B());
  const Point<T> u = p - o;
  const Point<T> w = q - o;
  return math::atan2(math::abs(cross(u, w)), dot(u, w));
}

/// Strictly inside: all three orientation tests positive (t is counterclockwise).
template <Field T>
bool point_in_triangle(const Triangle<T>& t, const Point<T>& p) {
  return orient(t.A(), t.B(), p) > 0 && orient(t.B(), t.C(), p) > 0 && orient(t.C(), t.A(), p) > 0;
}

/// Acute iff every vertex sees the other two with a positive dot product.
template <Field T>
bool is_acute(const Triangle<T>& t) {
  return dot(t.B() - t.A(), t.C() - t.A()) > 0 && dot(t.C() - t.B(), t.A() - t.B()) > 0 &&
         dot(t.A() - t.C(), t.B() - t.C()) > 0;
}

}  // namespace sixcircles
