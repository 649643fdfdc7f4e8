#include "sixcircles/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace sixcircles {

using ordered_json = nlohmann::ordered_json;

bool meets_expectation(const TrialSummary& s) {
  if (info(s.id).expected_true) return s.all_pass();
  return s.n > 0 && s.failure_rate() >= kRejectionRate;
}

namespace {

ordered_json point_json(const Point<double>& p) { return ordered_json::array({p.x, p.y}); }

ordered_json sampler_json(const SamplerSpec& spec) {
  ordered_json j;
  j["family"] = sampler_family_name(spec.family);
  if (spec.family == SamplerFamily::AngleB) j["angle_b_degrees"] = spec.angle_b_degrees;
  j["min_angle"] = spec.min_angle;
  j["grid_bits"] = spec.grid_bits;
  return j;
}

ordered_json summary_json(const TrialSummary& s) {
  const IdentityInfo& e = info(s.id);
  ordered_json j;
  j["id"] = e.name;
  j["paper_anchor"] = e.anchor;
  j["n"] = s.n;
  j["pass"] = s.all_pass();
  j["max_rel_residual"] = s.max_rel_residual;
  j["wall_ms"] = s.wall_ms;
  j["expected"] = e.expected_true;
  j["meets_expectation"] = meets_expectation(s);
  j["pass_count"] = s.pass_count;
  j["errors"] = s.error_count;
  j["contact_failures"] = s.contact_failures;
  j["max_tangency_residual"] = s.max_tangency_residual;
  j["sampler"] = sampler_json(s.spec);
  ordered_json by_width = ordered_json::object();
  for (std::size_t i = 0; i < s.widths.size(); ++i) {
    by_width[std::to_string(s.widths[i])] = s.max_rel_by_width[i];
  }
  j["max_rel_by_width"] = by_width;
  ordered_json hist = ordered_json::object();
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    if (s.histogram[b] != 0) hist[histogram_label(b)] = s.histogram[b];
  }
  j["histogram"] = hist;
  if (s.worst) {
    ordered_json w;
    w["index"] = s.worst->index;
    w["width"] = s.worst->width;
    w["rel_residual"] = s.worst->rel_residual;
    w["A"] = point_json(s.worst->triangle[0]);
    w["B"] = point_json(s.worst->triangle[1]);
    w["C"] = point_json(s.worst->triangle[2]);
    if (!s.worst->error.empty()) w["error"] = s.worst->error;
    j["worst"] = w;
  }
  return j;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string write_report(const std::vector<TrialSummary>& summaries, const RunInfo& run,
                         ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json doc;
    doc["run"]["seed"] = run.seed;
    doc["run"]["widths"] = run.widths;
    doc["run"]["tolerance"] = run.tolerance;
    doc["results"] = ordered_json::array();
    for (const auto& s : summaries) doc["results"].push_back(summary_json(s));
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << pad("id", 13) << pad("anchor", 28) << pad("n", 8) << pad("passed", 8)
      << pad("max_rel", 11) << pad("ms", 9) << "verdict\n";
  for (const auto& s : summaries) {
    const IdentityInfo& e = info(s.id);
    std::string verdict = s.all_pass() ? "holds" : "fails";
    if (!e.expected_true) verdict += meets_expectation(s) ? " (expected)" : " (NOT REJECTED)";
    char ms[16];
    std::snprintf(ms, sizeof ms, "%.0f", s.wall_ms);
    out << pad(std::string(e.name), 13) << pad(std::string(e.anchor), 28)
        << pad(std::to_string(s.n), 8) << pad(std::to_string(s.pass_count), 8)
        << pad(sci(s.max_rel_residual), 11) << pad(ms, 9) << verdict << "\n";
  }
  return out.str();
}

std::string write_catalog(ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : catalog()) {
      ordered_json j;
      j["id"] = e.name;
      j["paper_anchor"] = e.anchor;
      j["center"] = center_name(e.center);
      j["constraint"] = constraint_name(e.constraint);
      j["family"] = family_name(e.family);
      j["expression"] = to_string(e.lhs) + " = " + to_string(e.rhs);
      j["expected"] = e.expected_true;
      j["description"] = e.description;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << pad("id", 13) << pad("center", 14) << pad("constraint", 13) << pad("family", 19)
      << "identity  [anchor]\n";
  for (const auto& e : catalog()) {
    out << pad(std::string(e.name), 13) << pad(std::string(center_name(e.center)), 14)
        << pad(std::string(constraint_name(e.constraint)), 13)
        << pad(std::string(family_name(e.family)), 19) << to_string(e.lhs) << " = "
        << to_string(e.rhs) << "  [" << e.anchor << "]\n";
  }
  return out.str();
}

std::string write_scans(const std::vector<ScanReport>& scans, double tolerance,
                        ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : scans) {
      ordered_json j;
      j["kind"] = scan_kind_name(s.kind);
      j["n"] = s.n;
      j["min"] = s.min;
      j["max"] = s.max;
      j["target"] = s.target;
      j["spread"] = s.spread;
      j["max_target_error"] = s.max_target_error;
      if (s.kind == ScanKind::FixedAngle) j["max_contact_error"] = s.max_contact_error;
      j["max_tangency_residual"] = s.max_tangency_residual;
      j["pass"] = s.within(tolerance);
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& s : scans) {
    out << pad(std::string(scan_kind_name(s.kind)), 24) << "n=" << pad(std::to_string(s.n), 7)
        << "target=" << pad(sci(s.target), 11) << "spread=" << pad(sci(s.spread), 11)
        << "target_err=" << pad(sci(s.max_target_error), 11);
    if (s.kind == ScanKind::FixedAngle) out << "contact_err=" << pad(sci(s.max_contact_error), 11);
    out << (s.within(tolerance) ? "ok" : "FAIL") << "\n";
  }
  return out.str();
}

std::string write_oracles(const OracleReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json doc;
    doc["tolerance"] = report.tolerance;
    doc["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json j;
      j["name"] = c.name;
      j["count"] = c.count;
      j["failures"] = c.failures;
      j["max_rel_error"] = c.max_rel_error;
      doc["checks"].push_back(j);
    }
    doc["pass"] = report.all_pass();
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << pad(c.name, 28) << pad(std::to_string(c.count), 8) << "max_rel=" << pad(sci(c.max_rel_error), 11)
        << (c.failures == 0 ? "ok" : "FAIL (" + std::to_string(c.failures) + ")") << "\n";
  }
  return out.str();
}

std::string strip_timing(const std::string& json_text) {
  ordered_json doc = ordered_json::parse(json_text);
  auto strip = [](auto& self, ordered_json& j) -> void {
    if (j.is_object()) {
      j.erase("wall_ms");
      for (auto& [k, v] : j.items()) self(self, v);
    } else if (j.is_array()) {
      for (auto& v : j) self(self, v);
    }
  };
  strip(strip, doc);
  return doc.dump();
}

}  // namespace sixcircles
