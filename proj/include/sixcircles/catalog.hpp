#pragma once

// Registry of the cevian circle identities and their evaluation on a triangle.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sixcircles/circles.hpp"
#include "sixcircles/expr.hpp"

namespace sixcircles {

enum class IdentityId {
  THM_2_1,
  THM_2_2,
  LEM_3_1,
  THM_3_1,
  THM_3_2,
  LEM_4_1,
  THM_4_1,
  LEM_5_1,
  LEM_5_2,
  THM_5_1,
  LEM_5_3,
  THM_5_2,
  THM_6_2,
  THM_6_3,
  CONS_6_2,
  THM_7_1,
  THM_7_2,
  THM_8_1,
  THM_8_2,
  THM_8_3,
  THM_8_4,
  NEG_CONTROL,
};

inline constexpr std::size_t kIdentityCount = 22;

/// Triangle shape required by an identity.
enum class Constraint { None, Acute, AngleB60, AngleB120 };

std::string_view constraint_name(Constraint c);

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  std::string_view anchor;
  std::string_view description;
  Center center;
  Constraint constraint;
  Family family;  ///< circle family drawn in figures
  Expr lhs;
  Expr rhs;
  bool expected_true = true;
};

/// All entries, in declaration order of IdentityId.
std::span<const IdentityInfo> catalog();
const IdentityInfo& info(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Angle tolerance for the 60/120 degree constraints, in radians.
inline constexpr double kAngleTolerance = 1e-9;
inline constexpr double kDefaultTolerance = 1e-9;

/// Fixed interior point with barycentric weights (1/4, 1/3, 5/12); used by
/// the generic-point identities when no point is supplied.
template <Field T>
Point<T> default_free_point(const Triangle<T>& t) {
  return (T(3) * t.A() + T(4) * t.B() + T(5) * t.C()) / T(12);
}

template <Approx T>
struct EvalOptions {
  std::optional<Point<T>> free_point;
  double tolerance = kDefaultTolerance;
};

struct IdentityReport {
  IdentityId id = IdentityId::THM_2_1;
  std::array<Point<double>, 3> triangle{};
  double lhs = 0;
  double rhs = 0;
  double abs_residual = 0;
  double rel_residual = 0;
  bool pass = false;
  int precision_width = 53;
  /// Largest tangency residual over the constructed circles, divided by the
  /// triangle's coordinate scale.
  double tangency_residual = 0;
  bool contacts_inside = true;
  int circles_checked = 0;
};

/// |lhs - rhs| / max(|lhs|, |rhs|); zero when both vanish.
template <Approx T>
T relative_residual(const T& lhs, const T& rhs) {
  const T denom = std::max(math::abs(lhs), math::abs(rhs));
  if (denom == 0) return T(0);
  return math::abs(lhs - rhs) / denom;
}

/// Leaf values for one triangle and cevian triad. Circle families are built
/// on demand.
template <Approx T>
class Bindings {
 public:
  explicit Bindings(Subdivision<T> sub) : sub_(std::move(sub)) {
    cos_half_ = {math::cos(vertex_angle(sub_.whole, Vertex::A) / T(2)),
                 math::cos(vertex_angle(sub_.whole, Vertex::B) / T(2)),
                 math::cos(vertex_angle(sub_.whole, Vertex::C) / T(2))};
  }

  const Subdivision<T>& subdivision() const { return sub_; }

  const SixCircleSet<T>& circles(Family f) {
    auto& slot = sets_[static_cast<int>(f)];
    if (!slot) slot = six_circles(sub_, f);
    return *slot;
  }

  /// Families that have been built so far.
  std::vector<const SixCircleSet<T>*> built() const {
    std::vector<const SixCircleSet<T>*> out;
    for (const auto& s : sets_)
      if (s) out.push_back(&*s);
    return out;
  }

  static std::optional<Family> family_of(Quantity q) {
    switch (q) {
      case Quantity::Inradius:
        return Family::Incircles;
      case Quantity::ExradiusC1:
        return Family::ExcirclesConfig1;
      case Quantity::ExradiusC2:
        return Family::ExcirclesConfig2;
      case Quantity::LargeInradius:
        return Family::LargeIncircles;
      default:
        return std::nullopt;
    }
  }

  /// Build every family referenced by the expression.
  void prepare(const Expr& e) {
    for_each_leaf(e, [&](Quantity q, int) {
      if (auto f = family_of(q)) circles(*f);
    });
  }

  /// Requires prepare() for circle quantities.
  T value(Quantity q, int i) const {
    switch (q) {
      case Quantity::SmallSemi:
        return sub_.small_semi[i];
      case Quantity::LargeSemi:
        return sub_.large_semi[i];
      case Quantity::SmallArea:
        return sub_.small_area[i];
      case Quantity::Segment:
        return sub_.segment[i];
      case Quantity::CosHalfA:
        return cos_half_[0];
      case Quantity::CosHalfB:
        return cos_half_[1];
      case Quantity::CosHalfC:
        return cos_half_[2];
      default:
        return sets_[static_cast<int>(*family_of(q))]->radii[i];
    }
  }

  T operator()(Quantity q, int i) const { return value(q, i); }

 private:
  Subdivision<T> sub_;
  std::array<std::optional<SixCircleSet<T>>, 4> sets_;
  std::array<T, 3> cos_half_;
};

/// Throws ConstraintViolated when the triangle does not meet the constraint.
template <Approx T>
void check_constraint(const Triangle<T>& t, Constraint c) {
  switch (c) {
    case Constraint::None:
      return;
    case Constraint::Acute:
      if (!is_acute(t)) throw ConstraintViolated("acute triangle");
      return;
    default: {
      const double degrees = c == Constraint::AngleB60 ? 60.0 : 120.0;
      const T target = T(degrees) * math::pi<T>() / T(180);
      if (math::abs(vertex_angle(t, Vertex::B) - target) > T(kAngleTolerance)) {
        throw ConstraintViolated(std::string("angle B = ") + (degrees == 60.0 ? "60" : "120") +
                                 " degrees");
      }
      return;
    }
  }
}

/// Cevian triad an identity is stated on.
template <Approx T>
CevianTriad<T> identity_triad(const IdentityInfo& entry, const Triangle<T>& t,
                              const std::optional<Point<T>>& free_point) {
  if (entry.center == Center::Custom) {
    return cevian_triad_through(t, free_point.value_or(default_free_point(t)));
  }
  return cevian_triad(t, entry.center);
}

/// Bindings for an identity with every referenced family built.
template <Approx T>
Bindings<T> bind_identity(const IdentityInfo& entry, const Triangle<T>& t,
                          const std::optional<Point<T>>& free_point = std::nullopt) {
  check_constraint(t, entry.constraint);
  Bindings<T> b(subdivide(t, identity_triad(entry, t, free_point)));
  b.prepare(entry.lhs);
  b.prepare(entry.rhs);
  return b;
}

template <Approx T>
IdentityReport evaluate_identity(IdentityId id, const Triangle<T>& t,
                                 const EvalOptions<T>& options = {}) {
  const IdentityInfo& entry = info(id);
  const Bindings<T> b = bind_identity(entry, t, options.free_point);
  const T lhs = evaluate<T>(entry.lhs, b);
  const T rhs = evaluate<T>(entry.rhs, b);
  const T rel = relative_residual(lhs, rhs);

  IdentityReport r;
  r.id = id;
  r.triangle = {convert<double>(t.A()), convert<double>(t.B()), convert<double>(t.C())};
  r.lhs = math::to_double(lhs);
  r.rhs = math::to_double(rhs);
  r.abs_residual = math::to_double(math::abs(lhs - rhs));
  r.rel_residual = math::to_double(rel);
  r.pass = r.rel_residual <= options.tolerance;
  r.precision_width = width_of<T>();

  const T scale = coordinate_scale(t);
  T worst(0);
  for (const auto* set : b.built()) {
    for (int i = 0; i < 6; ++i) {
      worst = std::max(worst, tangency_residual(set->circles[i]));
      r.contacts_inside = r.contacts_inside && touches_segment(b.subdivision(), set->circles[i], i);
      ++r.circles_checked;
    }
  }
  r.tangency_residual = math::to_double(worst / scale);
  return r;
}

/// Evaluate a rational-coordinate triangle at mantissa width w.
IdentityReport evaluate_identity(IdentityId id, const Triangle<Exact>& t, int width,
                                 double tolerance = kDefaultTolerance);

/// r_i R_i / K_i for the small triangles (incircle and beyond-segment
/// excircle); opposite labels (1,4), (2,5), (3,6) share a vertical angle at P.
template <Approx T>
std::array<T, 6> angle_products(const Subdivision<T>& sub) {
  std::array<T, 6> out;
  for (int i = 0; i < 6; ++i) {
    out[i] = inradius(sub.small[i]) * exradius(sub.small[i], Side::a) / sub.small_area[i];
  }
  return out;
}

/// Relative residuals of the three vertical-angle pairings.
template <Approx T>
std::array<T, 3> pairing_residuals(const Subdivision<T>& sub) {
  const auto p = angle_products(sub);
  return {relative_residual(p[0], p[3]), relative_residual(p[1], p[4]),
          relative_residual(p[2], p[5])};
}

/// Ratio of the excircles of ABD (beyond BD) and ADC (beyond DC), with D the
/// incircle contact on BC, against BD/DC. Returns {lhs, rhs}.
template <Approx T>
std::pair<T, T> lemma_4_1_ratio(const Triangle<T>& t) {
  const auto sl = side_lengths(t);
  const Point<T> d = lerp(t.B(), t.C(), (sl.semiperimeter() - sl.b) / sl.a);
  const T r1 = exradius(Triangle<T>(t.A(), t.B(), d), Side::a);
  const T r2 = exradius(Triangle<T>(t.A(), d, t.C()), Side::a);
  return {r1 / r2, distance(t.B(), d) / distance(d, t.C())};
}

extern template IdentityReport evaluate_identity<F53>(IdentityId, const Triangle<F53>&,
                                                      const EvalOptions<F53>&);
extern template IdentityReport evaluate_identity<F113>(IdentityId, const Triangle<F113>&,
                                                       const EvalOptions<F113>&);
extern template IdentityReport evaluate_identity<F150>(IdentityId, const Triangle<F150>&,
                                                       const EvalOptions<F150>&);
extern template IdentityReport evaluate_identity<F300>(IdentityId, const Triangle<F300>&,
                                                       const EvalOptions<F300>&);

}  // namespace sixcircles
