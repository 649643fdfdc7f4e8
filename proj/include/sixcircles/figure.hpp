#pragma once

// SVG figures of a triangle, its cevians and the circles of one identity.

#include <optional>
#include <string>
#include <vector>

#include "sixcircles/catalog.hpp"

namespace sixcircles {

/// Two-tone palette: circles on the left-hand side of an identity are drawn
/// in the first tone, right-hand side circles in the second.
enum class Tone { Left, Right };

struct SceneCircle {
  Circle<double> circle;
  std::string label;
  Tone tone = Tone::Left;
  int index = 0;  ///< zero-based segment label
};

struct FigureScene {
  IdentityId id = IdentityId::THM_2_1;
  Triangle<double> triangle;
  CevianTriad<double> triad;
  std::vector<SceneCircle> circles;
  double stroke_width = 1.5;
  int canvas_width = 800;
  double margin = 24;
  std::string left_color = "#f2c500";
  std::string right_color = "#2e9e44";
};

/// Scene for an identity on the given vertices. Every circle is re-validated:
/// tangency residual <= 1e-9 * scale and host contact inside its segment.
/// Throws ConstructionFailed on degenerate input or a failed validation.
FigureScene build_scene(IdentityId id, const std::array<Point<double>, 3>& vertices,
                        std::optional<Point<double>> free_point = std::nullopt);

/// Scene on sample k of the identity's default sampler.
FigureScene build_scene(IdentityId id, std::uint64_t seed, std::uint64_t k = 0);

/// Well-formed SVG 1.1 document; deterministic for a fixed scene.
std::string render_figure(const FigureScene& scene);

}  // namespace sixcircles
