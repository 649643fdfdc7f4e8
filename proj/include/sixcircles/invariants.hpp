#pragma once

// Apex invariants: 1/r - 1/r_a along a fixed base line, and r r_a / K inside
// a fixed angle.

#include <cstdint>
#include <string_view>

#include "sixcircles/circles.hpp"

namespace sixcircles {

enum class ScanKind {
  InradiusExradiusLine,  ///< B, C move along a fixed line L not through A
  FixedAngle,            ///< B, C move along fixed rays from A
};

std::string_view scan_kind_name(ScanKind k);

/// Apex A with either a base line through `first` and `second`, or rays from
/// A toward `first` and `second`. Placements use parameters in [t_min, t_max]
/// along the line (from `first` toward `second`) or along each ray.
struct ApexInvariantSpec {
  Point<double> apex{0, 3};
  Point<double> first{0, 0};
  Point<double> second{1, 0};
  double t_min = -3.0;
  double t_max = 3.0;
  /// Minimum parameter gap between B and C on the line.
  double min_gap = 0.25;
};

/// 1/r - 1/r_a for triangle ABC, r_a touching BC.
template <Approx T>
T line_invariant(const Triangle<T>& t) {
  return T(1) / inradius(t) - T(1) / exradius(t, Side::a);
}

/// r r_a / K for triangle ABC, r_a touching BC.
template <Approx T>
T angle_invariant(const Triangle<T>& t) {
  return inradius(t) * exradius(t, Side::a) / area(t);
}

struct ScanReport {
  ScanKind kind = ScanKind::InradiusExradiusLine;
  std::size_t n = 0;
  double min = 0;
  double max = 0;
  double target = 0;          ///< 2/h or tan(theta/2)
  double spread = 0;          ///< (max - min) / |target|
  double max_target_error = 0;  ///< max relative error against target
  /// FixedAngle only: max relative error of |AT| against s, T the excircle
  /// contact on ray AB.
  double max_contact_error = 0;
  double max_tangency_residual = 0;

  bool within(double tolerance) const {
    return spread <= tolerance && max_target_error <= tolerance &&
           max_contact_error <= tolerance;
  }
};

/// Throws SpecError for an apex on the line or coincident rays.
ScanReport invariant_scan(ScanKind kind, const ApexInvariantSpec& spec, std::size_t n,
                          std::uint64_t seed);

}  // namespace sixcircles
