#include "sixcircles/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sixcircles/catalog.hpp"
#include "sixcircles/random.hpp"

namespace sixcircles {

std::string_view scan_kind_name(ScanKind k) {
  return k == ScanKind::InradiusExradiusLine ? "inradius-exradius-line" : "fixed-angle";
}

namespace {

using P2 = Point<double>;

double draw(CounterRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform01(); }

}  // namespace

ScanReport invariant_scan(ScanKind kind, const ApexInvariantSpec& spec, std::size_t n,
                          std::uint64_t seed) {
  if (!(spec.t_min < spec.t_max)) throw SpecError("placement bounds are empty");
  ScanReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.min = std::numeric_limits<double>::infinity();
  rep.max = -std::numeric_limits<double>::infinity();

  const P2& A = spec.apex;
  if (kind == ScanKind::InradiusExradiusLine) {
    if (spec.first == spec.second) throw SpecError("base line anchors coincide");
    const Line<double> base(spec.first, spec.second);
    const double h = distance_point_to_line(A, base);
    if (!(h > 0)) throw SpecError("apex lies on the base line");
    if (spec.t_max - spec.t_min <= spec.min_gap) throw SpecError("placement range below min_gap");
    rep.target = 2.0 / h;
  } else {
    const P2 u = spec.first - A;
    const P2 v = spec.second - A;
    if (u == P2{0, 0} || v == P2{0, 0}) throw SpecError("ray direction is zero");
    if (!(cross(u, v) != 0)) throw SpecError("rays are not distinct");
    if (!(spec.t_min > 0)) throw SpecError("ray parameters must be positive");
    rep.target = std::tan(std::atan2(std::abs(cross(u, v)), dot(u, v)) / 2.0);
  }

  for (std::uint64_t k = 0; k < n; ++k) {
    CounterRng rng(seed, k);
    P2 B;
    P2 C;
    if (kind == ScanKind::InradiusExradiusLine) {
      double tb = 0;
      double tc = 0;
      do {
        tb = draw(rng, spec.t_min, spec.t_max);
        tc = draw(rng, spec.t_min, spec.t_max);
      } while (std::abs(tb - tc) < spec.min_gap);
      B = lerp(spec.first, spec.second, tb);
      C = lerp(spec.first, spec.second, tc);
    } else {
      B = A + draw(rng, spec.t_min, spec.t_max) * (spec.first - A);
      C = A + draw(rng, spec.t_min, spec.t_max) * (spec.second - A);
    }
    const Triangle<double> t(A, B, C);
    const double value =
        kind == ScanKind::InradiusExradiusLine ? line_invariant(t) : angle_invariant(t);
    rep.min = std::min(rep.min, value);
    rep.max = std::max(rep.max, value);
    rep.max_target_error = std::max(rep.max_target_error, relative_residual(value, rep.target));

    const Circle<double> ex = excircle(t, Side::a);
    rep.max_tangency_residual =
        std::max({rep.max_tangency_residual, tangency_residual(ex) / coordinate_scale(t),
                  tangency_residual(incircle(t)) / coordinate_scale(t)});
    if (kind == ScanKind::FixedAngle) {
      const P2 contact = project(ex.center, Line<double>(A, B));
      rep.max_contact_error = std::max(rep.max_contact_error,
                                       relative_residual(distance(A, contact), semiperimeter(t)));
    }
  }
  rep.spread = n == 0 ? 0.0 : (rep.max - rep.min) / std::abs(rep.target);
  return rep;
}

}  // namespace sixcircles
