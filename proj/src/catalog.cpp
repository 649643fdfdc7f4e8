#include "sixcircles/catalog.hpp"

#include <algorithm>

namespace sixcircles {

namespace {

using Q = Quantity;

Expr v(Q q, int label) { return Expr::var(q, label); }

Expr recip(Expr e) {
  // 1 / e, spelled as a quotient with a unit numerator.
  return Expr::quotient(Expr::product({}), std::move(e));
}

Expr product_of(Q q, std::initializer_list<int> labels) {
  std::vector<Expr> f;
  for (int l : labels) f.push_back(v(q, l));
  return Expr::product(std::move(f));
}

Expr sum_of(Q q, std::initializer_list<int> labels) {
  std::vector<Expr> t;
  for (int l : labels) t.push_back(v(q, l));
  return Expr::sum(std::move(t));
}

Expr reciprocal_sum(Q q, std::initializer_list<int> labels) {
  std::vector<Expr> t;
  for (int l : labels) t.push_back(recip(v(q, l)));
  return Expr::sum(std::move(t));
}

Expr weighted_reciprocals(std::initializer_list<std::pair<Q, int>> terms) {
  std::vector<Expr> t;
  for (auto [w, l] : terms) t.push_back(Expr::quotient(Expr::unindexed(w), v(Q::ExradiusC2, l)));
  return Expr::sum(std::move(t));
}

Expr semi_minus_base(std::initializer_list<int> labels) {
  std::vector<Expr> f;
  for (int l : labels) f.push_back(Expr::difference(v(Q::SmallSemi, l), v(Q::Segment, l)));
  return Expr::product(std::move(f));
}

std::vector<IdentityInfo> build_catalog() {
  std::vector<IdentityInfo> c;
  auto add = [&](IdentityId id, std::string_view name, std::string_view anchor,
                 std::string_view description, Center center, Constraint constraint, Family family,
                 Expr lhs, Expr rhs, bool expected = true) {
    c.push_back({id, name, anchor, description, center, constraint, family, std::move(lhs),
                 std::move(rhs), expected});
  };
  const auto odd = {1, 3, 5};
  const auto even = {2, 4, 6};

  add(IdentityId::THM_2_1, "THM_2_1", "Theorem 2.1",
      "orthocenter, excircles of the large cevian triangles, product", Center::Orthocenter,
      Constraint::Acute, Family::ExcirclesConfig1, product_of(Q::ExradiusC1, odd),
      product_of(Q::ExradiusC1, even));
  add(IdentityId::THM_2_2, "THM_2_2", "Theorem 2.2",
      "orthocenter, excircles of the small triangles, product", Center::Orthocenter,
      Constraint::Acute, Family::ExcirclesConfig2, product_of(Q::ExradiusC2, odd),
      product_of(Q::ExradiusC2, even));
  add(IdentityId::LEM_3_1, "LEM_3_1", "Lemma 3.1",
      "centroid, semiperimeters of the large cevian triangles, sum", Center::Centroid,
      Constraint::None, Family::ExcirclesConfig1, sum_of(Q::LargeSemi, odd),
      sum_of(Q::LargeSemi, even));
  add(IdentityId::THM_3_1, "THM_3_1", "Theorem 3.1",
      "centroid, excircles of the large cevian triangles, reciprocal sum", Center::Centroid,
      Constraint::None, Family::ExcirclesConfig1, reciprocal_sum(Q::ExradiusC1, odd),
      reciprocal_sum(Q::ExradiusC1, even));
  add(IdentityId::THM_3_2, "THM_3_2", "Theorem 3.2",
      "centroid, excircles of the small triangles, reciprocal sum", Center::Centroid,
      Constraint::None, Family::ExcirclesConfig2, reciprocal_sum(Q::ExradiusC2, odd),
      reciprocal_sum(Q::ExradiusC2, even));
  add(IdentityId::LEM_4_1, "LEM_4_1", "Lemma 4.1",
      "incircle contact cevian AD, excircle ratio equals BD/DC", Center::Gergonne,
      Constraint::None, Family::ExcirclesConfig1,
      Expr::quotient(v(Q::ExradiusC1, 1), v(Q::ExradiusC1, 2)),
      Expr::quotient(v(Q::Segment, 1), v(Q::Segment, 2)));
  add(IdentityId::THM_4_1, "THM_4_1", "Theorem 4.1",
      "gergonne point, excircles of the large cevian triangles, product", Center::Gergonne,
      Constraint::None, Family::ExcirclesConfig1, product_of(Q::ExradiusC1, odd),
      product_of(Q::ExradiusC1, even));
  add(IdentityId::LEM_5_1, "LEM_5_1", "Lemma 5.1", "nagel point, small triangle areas, product",
      Center::Nagel, Constraint::None, Family::Incircles, product_of(Q::SmallArea, odd),
      product_of(Q::SmallArea, even));
  add(IdentityId::LEM_5_2, "LEM_5_2", "Lemma 5.2",
      "nagel point, small triangle semiperimeters, product", Center::Nagel, Constraint::None,
      Family::Incircles, product_of(Q::SmallSemi, odd), product_of(Q::SmallSemi, even));
  add(IdentityId::THM_5_1, "THM_5_1", "Theorem 5.1", "nagel point, incircles, product",
      Center::Nagel, Constraint::None, Family::Incircles, product_of(Q::Inradius, odd),
      product_of(Q::Inradius, even));
  add(IdentityId::LEM_5_3, "LEM_5_3", "Lemma 5.3",
      "nagel point, semiperimeter minus base segment, product", Center::Nagel, Constraint::None,
      Family::ExcirclesConfig2, semi_minus_base(odd), semi_minus_base(even));
  add(IdentityId::THM_5_2, "THM_5_2", "Theorem 5.2",
      "nagel point, excircles of the small triangles, product", Center::Nagel, Constraint::None,
      Family::ExcirclesConfig2, product_of(Q::ExradiusC2, odd), product_of(Q::ExradiusC2, even));
  add(IdentityId::THM_6_2, "THM_6_2", "Theorem 6.2",
      "any cevian AD, two incircles and two excircles, reciprocal sum", Center::Custom,
      Constraint::None, Family::LargeIncircles,
      Expr::sum({recip(v(Q::LargeInradius, 1)), recip(v(Q::ExradiusC1, 2))}),
      Expr::sum({recip(v(Q::LargeInradius, 2)), recip(v(Q::ExradiusC1, 1))}));
  add(IdentityId::THM_6_3, "THM_6_3", "Theorem 6.3",
      "any interior point, six incircles and six excircles, product", Center::Custom,
      Constraint::None, Family::Incircles,
      Expr::product({product_of(Q::Inradius, odd), product_of(Q::ExradiusC2, odd)}),
      Expr::product({product_of(Q::Inradius, even), product_of(Q::ExradiusC2, even)}));
  add(IdentityId::CONS_6_2, "CONS_6_2", "Consequence of Theorem 6.2",
      "any interior point, twelve circles, alternating reciprocal sum", Center::Custom,
      Constraint::None, Family::Incircles,
      Expr::sum({reciprocal_sum(Q::Inradius, odd), reciprocal_sum(Q::ExradiusC2, even)}),
      Expr::sum({reciprocal_sum(Q::Inradius, even), reciprocal_sum(Q::ExradiusC2, odd)}));
  add(IdentityId::THM_7_1, "THM_7_1", "Theorem 7.1", "circumcenter, incircles, reciprocal sum",
      Center::Circumcenter, Constraint::Acute, Family::Incircles, reciprocal_sum(Q::Inradius, odd),
      reciprocal_sum(Q::Inradius, even));
  add(IdentityId::THM_7_2, "THM_7_2", "Theorem 7.2",
      "circumcenter, excircles of the small triangles, reciprocal sum", Center::Circumcenter,
      Constraint::Acute, Family::ExcirclesConfig2, reciprocal_sum(Q::ExradiusC2, odd),
      reciprocal_sum(Q::ExradiusC2, even));
  add(IdentityId::THM_8_1, "THM_8_1", "Theorem 8.1",
      "incenter with B = 60 degrees, incircles, reciprocal sum", Center::Incenter,
      Constraint::AngleB60, Family::Incircles, reciprocal_sum(Q::Inradius, {1, 4, 5}),
      reciprocal_sum(Q::Inradius, {2, 3, 6}));
  add(IdentityId::THM_8_2, "THM_8_2", "Theorem 8.2",
      "incenter with B = 60 degrees, excircles of the small triangles, reciprocal sum",
      Center::Incenter, Constraint::AngleB60, Family::ExcirclesConfig2,
      reciprocal_sum(Q::ExradiusC2, {1, 4, 5}), reciprocal_sum(Q::ExradiusC2, {2, 3, 6}));
  add(IdentityId::THM_8_3, "THM_8_3", "Theorem 8.3",
      "incenter with B = 120 degrees, excircles of the small triangles, reciprocal sum",
      Center::Incenter, Constraint::AngleB120, Family::ExcirclesConfig2,
      reciprocal_sum(Q::ExradiusC2, {1, 3, 4, 6}), reciprocal_sum(Q::ExradiusC2, {2, 5}));
  add(IdentityId::THM_8_4, "THM_8_4", "Theorem 8.4",
      "incenter, excircles of the small triangles, half-angle cosine weighted reciprocal sum",
      Center::Incenter, Constraint::None, Family::ExcirclesConfig2,
      weighted_reciprocals({{Q::CosHalfC, 1}, {Q::CosHalfA, 3}, {Q::CosHalfB, 5}}),
      weighted_reciprocals({{Q::CosHalfB, 2}, {Q::CosHalfC, 4}, {Q::CosHalfA, 6}}));
  add(IdentityId::NEG_CONTROL, "NEG_CONTROL", "negative control",
      "orthocenter, excircles of the large cevian triangles, deliberately false product",
      Center::Orthocenter, Constraint::Acute, Family::ExcirclesConfig1,
      product_of(Q::ExradiusC1, {1, 2, 3}), product_of(Q::ExradiusC1, {4, 5, 6}),
      /*expected=*/false);
  return c;
}

}  // namespace

std::span<const IdentityInfo> catalog() {
  static const std::vector<IdentityInfo> entries = build_catalog();
  return entries;
}

const IdentityInfo& info(IdentityId id) { return catalog()[static_cast<std::size_t>(id)]; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::string_view constraint_name(Constraint c) {
  switch (c) {
    case Constraint::None:
      return "none";
    case Constraint::Acute:
      return "acute";
    case Constraint::AngleB60:
      return "angle-B-60";
    default:
      return "angle-B-120";
  }
}

IdentityReport evaluate_identity(IdentityId id, const Triangle<Exact>& t, int width,
                                 double tolerance) {
  return with_width(width, [&]<class T>(T) {
    EvalOptions<T> opts;
    opts.tolerance = tolerance;
    return evaluate_identity<T>(id, convert<T>(t), opts);
  });
}

template IdentityReport evaluate_identity<F53>(IdentityId, const Triangle<F53>&,
                                               const EvalOptions<F53>&);
template IdentityReport evaluate_identity<F113>(IdentityId, const Triangle<F113>&,
                                                const EvalOptions<F113>&);
template IdentityReport evaluate_identity<F150>(IdentityId, const Triangle<F150>&,
                                                const EvalOptions<F150>&);
template IdentityReport evaluate_identity<F300>(IdentityId, const Triangle<F300>&,
                                                const EvalOptions<F300>&);

}  // namespace sixcircles
