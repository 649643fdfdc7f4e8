#pragma once

// Constrained sampling, batch trials, precision ladders, relabeling search
// and closed-form oracle cross-checks.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sixcircles/catalog.hpp"

namespace sixcircles {

enum class SamplerFamily { General, Acute, AngleB };

std::string_view sampler_family_name(SamplerFamily f);

struct SamplerSpec {
  SamplerFamily family = SamplerFamily::General;
  /// Angle at B for SamplerFamily::AngleB, in degrees.
  double angle_b_degrees = 60.0;
  /// Smallest admissible angle, radians.
  double min_angle = 0.1;
  /// Coordinates are multiples of 2^-grid_bits in [-1, 1].
  int grid_bits = 20;
  std::uint64_t seed = 1;
};

/// Width-independent description of sample k. Vertices are dyadic except for
/// the AngleB family, where A = length * (cos theta, sin theta) is formed at
/// the working width.
struct Sample {
  std::uint64_t index = 0;
  SamplerFamily family = SamplerFamily::General;
  std::array<std::array<Dyadic, 2>, 3> vertices{};  // A, B, C; A unused for AngleB
  Dyadic apex_length;                                // AngleB only
  double angle_b_degrees = 0;
  std::array<Dyadic, 3> free_weights{};  // barycentric, sum to 1
};

/// Deterministic k-th sample for the spec. Throws SpecError when no
/// admissible triangle is found within the attempt budget.
Sample draw_sample(const SamplerSpec& spec, std::uint64_t k);

template <Approx T>
Triangle<T> realize(const Sample& s) {
  auto pt = [](const std::array<Dyadic, 2>& p) { return Point<T>{p[0].as<T>(), p[1].as<T>()}; };
  if (s.family == SamplerFamily::AngleB) {
    const T theta = T(s.angle_b_degrees) * math::pi<T>() / T(180);
    const T len = s.apex_length.as<T>();
    return Triangle<T>(Point<T>{len * math::cos(theta), len * math::sin(theta)}, pt(s.vertices[1]),
                       pt(s.vertices[2]));
  }
  return Triangle<T>(pt(s.vertices[0]), pt(s.vertices[1]), pt(s.vertices[2]));
}

template <Approx T>
Point<T> realize_free_point(const Sample& s, const Triangle<T>& t) {
  return s.free_weights[0].as<T>() * t.A() + s.free_weights[1].as<T>() * t.B() +
         s.free_weights[2].as<T>() * t.C();
}

template <Approx T>
Triangle<T> sample_triangle(const SamplerSpec& spec, std::uint64_t k) {
  return realize<T>(draw_sample(spec, k));
}

/// Whether a triangle satisfies the sampler's family predicate and quality bound.
template <Approx T>
bool satisfies_family(const SamplerSpec& spec, const Triangle<T>& t) {
  const T a = vertex_angle(t, Vertex::A);
  const T b = vertex_angle(t, Vertex::B);
  const T c = vertex_angle(t, Vertex::C);
  const T q(spec.min_angle);
  if (a < q || b < q || c < q) return false;
  switch (spec.family) {
    case SamplerFamily::Acute:
      return is_acute(t);
    case SamplerFamily::AngleB: {
      const T target = T(spec.angle_b_degrees) * math::pi<T>() / T(180);
      return math::abs(b - target) <= T(kAngleTolerance);
    }
    default:
      return true;
  }
}

SamplerSpec default_sampler(const IdentityInfo& entry, std::uint64_t seed = 1);
std::size_t default_trial_count(const SamplerSpec& spec);
/// Throws SpecError unless every triangle the spec emits meets the constraint.
void check_compatible(const IdentityInfo& entry, const SamplerSpec& spec);

inline constexpr std::size_t kHistogramBins = 22;
/// Bin 0 holds exact zeros; bin i >= 1 holds residuals with
/// floor(log10) = i - 21, clamped to [-20, 0].
std::size_t histogram_bin(double rel_residual);
std::string histogram_label(std::size_t bin);

struct WorstSample {
  std::uint64_t index = 0;
  int width = 53;
  double rel_residual = 0;
  std::array<Point<double>, 3> triangle{};
  std::string error;  ///< set when evaluation threw
};

struct TrialSummary {
  IdentityId id = IdentityId::THM_2_1;
  SamplerSpec spec;
  std::size_t n = 0;
  std::size_t pass_count = 0;
  std::size_t error_count = 0;    ///< evaluations that threw
  std::size_t contact_failures = 0;
  double max_rel_residual = 0;
  double max_tangency_residual = 0;
  std::vector<int> widths;
  std::vector<double> max_rel_by_width;
  std::array<std::size_t, kHistogramBins> histogram{};
  double tolerance = kDefaultTolerance;
  double wall_ms = 0;
  std::optional<WorstSample> worst;

  /// Every sample held at every width, with valid tangencies.
  bool all_pass() const {
    return pass_count == n && error_count == 0 && contact_failures == 0 &&
           max_tangency_residual <= kTangencyBound;
  }
  double failure_rate() const {
    return n == 0 ? 0.0 : static_cast<double>(n - pass_count) / static_cast<double>(n);
  }

  static constexpr double kTangencyBound = 1e-9;
};

struct TrialRequest {
  IdentityId id = IdentityId::THM_2_1;
  SamplerSpec spec;
  std::size_t n = 0;
  std::vector<int> widths{53};
  double tolerance = kDefaultTolerance;
};

/// Reference implementation, one sample after another.
TrialSummary run_trials_serial(const TrialRequest& request);
/// OpenMP over samples; bit-identical to the serial result except wall_ms.
TrialSummary run_trials(const TrialRequest& request, int threads = 0);

/// Relative residuals of samples 0..count-1 at each width; result[w][k].
std::vector<std::vector<double>> precision_ladder(IdentityId id, const SamplerSpec& spec,
                                                  std::size_t count, const std::vector<int>& widths);

enum class RelabelGroup {
  Dihedral,   ///< rotations and reflections of the six labels around P (12)
  Symmetric,  ///< all 720 permutations
};

std::vector<Permutation> relabelings(RelabelGroup group);

/// Relabelings under which the identity holds on samples 0..m-1 at width 53
/// and tolerance 1e-9. Throws NoPermutationFound when none does.
std::vector<Permutation> permutation_search(IdentityId id, const SamplerSpec& spec, std::size_t m,
                                            RelabelGroup group = RelabelGroup::Dihedral);

std::string permutation_string(const Permutation& p);

struct OracleCheck {
  std::string name;
  std::size_t count = 0;
  std::size_t failures = 0;
  double max_rel_error = 0;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  double tolerance = 1e-10;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.failures != 0) return false;
    return true;
  }
};

/// Closed-form lengths and radii against coordinate constructions on n
/// general triangles.
OracleReport oracle_crosschecks(std::uint64_t seed, std::size_t n, double tolerance = 1e-10);

}  // namespace sixcircles
