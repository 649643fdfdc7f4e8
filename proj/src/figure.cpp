#include "sixcircles/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "sixcircles/harness.hpp"

namespace sixcircles {

namespace {

constexpr double kSceneTangencyBound = 1e-9;

void collect_circles(const Expr& e, const Bindings<double>& b, Tone tone,
                     std::set<std::pair<Quantity, int>>& seen, std::vector<SceneCircle>& out) {
  for_each_leaf(e, [&](Quantity q, int i) {
    const auto family = Bindings<double>::family_of(q);
    if (!family || !seen.insert({q, i}).second) return;
    const auto* set = [&]() -> const SixCircleSet<double>* {
      for (const auto* s : b.built())
        if (s->family == *family) return s;
      return nullptr;
    }();
    out.push_back({set->circles[i], quantity_symbol(q) + std::to_string(i + 1), tone, i});
  });
}

}  // namespace

FigureScene build_scene(IdentityId id, const std::array<Point<double>, 3>& vertices,
                        std::optional<Point<double>> free_point) {
  const IdentityInfo& entry = info(id);
  try {
    const Triangle<double> t(vertices[0], vertices[1], vertices[2]);
    const Bindings<double> b = bind_identity(entry, t, free_point);
    FigureScene scene{id, t, b.subdivision().triad, {}};
    std::set<std::pair<Quantity, int>> seen;
    collect_circles(entry.lhs, b, Tone::Left, seen, scene.circles);
    collect_circles(entry.rhs, b, Tone::Right, seen, scene.circles);

    const double scale = coordinate_scale(t);
    for (const auto& sc : scene.circles) {
      if (!(tangency_residual(sc.circle) <= kSceneTangencyBound * scale)) {
        throw ConstructionFailed("circle " + sc.label + " fails tangency validation");
      }
      if (!touches_segment(b.subdivision(), sc.circle, sc.index)) {
        throw ConstructionFailed("circle " + sc.label + " does not touch its segment");
      }
    }
    return scene;
  } catch (const DegenerateTriangle& e) {
    throw ConstructionFailed(std::string("cannot draw ") + std::string(entry.name) + ": " +
                             e.what());
  }
}

FigureScene build_scene(IdentityId id, std::uint64_t seed, std::uint64_t k) {
  const Sample s = draw_sample(default_sampler(info(id), seed), k);
  const Triangle<double> t = realize<double>(s);
  return build_scene(id, {t.A(), t.B(), t.C()}, realize_free_point(s, t));
}

namespace {

struct Viewport {
  double min_x, max_y, scale, margin;
  double x(double v) const { return margin + (v - min_x) * scale; }
  double y(double v) const { return margin + (max_y - v) * scale; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_figure(const FigureScene& scene) {
  const Triangle<double>& t = scene.triangle;
  double min_x = std::min({t.A().x, t.B().x, t.C().x});
  double max_x = std::max({t.A().x, t.B().x, t.C().x});
  double min_y = std::min({t.A().y, t.B().y, t.C().y});
  double max_y = std::max({t.A().y, t.B().y, t.C().y});
  for (const auto& sc : scene.circles) {
    min_x = std::min(min_x, sc.circle.center.x - sc.circle.radius);
    max_x = std::max(max_x, sc.circle.center.x + sc.circle.radius);
    min_y = std::min(min_y, sc.circle.center.y - sc.circle.radius);
    max_y = std::max(max_y, sc.circle.center.y + sc.circle.radius);
  }
  const double span_x = std::max(max_x - min_x, 1e-12);
  const double span_y = std::max(max_y - min_y, 1e-12);
  const double inner = scene.canvas_width - 2 * scene.margin;
  const Viewport vp{min_x, max_y, inner / span_x, scene.margin};
  const double height = span_y * vp.scale + 2 * scene.margin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << scene.canvas_width
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << scene.canvas_width << " "
      << num(height) << "\">\n";
  svg << "  <title>" << info(scene.id).name << ": " << to_string(info(scene.id).lhs) << " = "
      << to_string(info(scene.id).rhs) << "</title>\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& sc : scene.circles) {
    const std::string& color = sc.tone == Tone::Left ? scene.left_color : scene.right_color;
    svg << "  <circle cx=\"" << num(vp.x(sc.circle.center.x)) << "\" cy=\""
        << num(vp.y(sc.circle.center.y)) << "\" r=\"" << num(sc.circle.radius * vp.scale)
        << "\" fill=\"" << color << "\" fill-opacity=\"0.45\" stroke=\"" << color
        << "\" stroke-width=\"" << num(scene.stroke_width) << "\"/>\n";
  }

  const auto& tr = scene.triad;
  svg << "  <polygon points=\"" << num(vp.x(t.A().x)) << "," << num(vp.y(t.A().y)) << " "
      << num(vp.x(t.B().x)) << "," << num(vp.y(t.B().y)) << " " << num(vp.x(t.C().x)) << ","
      << num(vp.y(t.C().y)) << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
      << num(scene.stroke_width) << "\"/>\n";
  for (const auto& [from, to] : {std::pair{t.A(), tr.D}, std::pair{t.B(), tr.E}, std::pair{t.C(), tr.F}}) {
    svg << "  <line x1=\"" << num(vp.x(from.x)) << "\" y1=\"" << num(vp.y(from.y)) << "\" x2=\""
        << num(vp.x(to.x)) << "\" y2=\"" << num(vp.y(to.y)) << "\" stroke=\"black\" stroke-width=\""
        << num(scene.stroke_width * 0.7) << "\"/>\n";
  }

  auto label = [&](const Point<double>& p, const std::string& text, int size) {
    svg << "  <text x=\"" << num(vp.x(p.x)) << "\" y=\"" << num(vp.y(p.y))
        << "\" font-family=\"sans-serif\" font-size=\"" << size
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << text << "</text>\n";
  };
  for (const auto& sc : scene.circles) label(sc.circle.center, sc.label, 13);
  const Point<double> g = (t.A() + t.B() + t.C()) / 3.0;
  auto outward = [&](const Point<double>& p) {
    const Point<double> d = p - g;
    return p + (14.0 / vp.scale / std::sqrt(dot(d, d))) * d;
  };
  label(outward(t.A()), "A", 15);
  label(outward(t.B()), "B", 15);
  label(outward(t.C()), "C", 15);
  label(outward(tr.D), "D", 13);
  label(outward(tr.E), "E", 13);
  label(outward(tr.F), "F", 13);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sixcircles
