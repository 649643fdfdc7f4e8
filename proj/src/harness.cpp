#include "sixcircles/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "sixcircles/random.hpp"

namespace sixcircles {

std::string_view sampler_family_name(SamplerFamily f) {
  switch (f) {
    case SamplerFamily::General:
      return "general";
    case SamplerFamily::Acute:
      return "acute";
    default:
      return "angle-b";
  }
}

namespace {

constexpr int kMaxAttempts = 100000;
constexpr int kWeightBits = 10;

void validate(const SamplerSpec& spec) {
  if (!(spec.min_angle > 0 && spec.min_angle < std::numbers::pi / 3)) {
    throw SpecError("min_angle must lie in (0, pi/3)");
  }
  if (spec.grid_bits < 4 || spec.grid_bits > 40) throw SpecError("grid_bits must lie in [4, 40]");
  if (spec.family == SamplerFamily::AngleB) {
    const double theta = spec.angle_b_degrees * std::numbers::pi / 180.0;
    if (!(theta > spec.min_angle && std::numbers::pi - theta >= 2 * spec.min_angle)) {
      throw SpecError("angle at B leaves no room for the quality bound");
    }
  }
}

std::array<Dyadic, 3> draw_weights(CounterRng& rng) {
  constexpr std::int64_t one = std::int64_t{1} << kWeightBits;
  constexpr std::int64_t lo = one / 16;
  const std::int64_t i = rng.uniform_int(lo, one - 2 * lo);
  const std::int64_t j = rng.uniform_int(lo, one - lo - i);
  return {Dyadic{i, kWeightBits}, Dyadic{j, kWeightBits}, Dyadic{one - i - j, kWeightBits}};
}

}  // namespace

Sample draw_sample(const SamplerSpec& spec, std::uint64_t k) {
  validate(spec);
  CounterRng rng(spec.seed, k);
  const int g = spec.grid_bits;
  const std::int64_t full = std::int64_t{1} << g;

  Sample s;
  s.index = k;
  s.family = spec.family;
  s.angle_b_degrees = spec.angle_b_degrees;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (spec.family == SamplerFamily::AngleB) {
      s.vertices[0] = {Dyadic{0, g}, Dyadic{0, g}};
      s.vertices[1] = {Dyadic{0, g}, Dyadic{0, g}};
      s.vertices[2] = {Dyadic{rng.uniform_int(full / 4, full), g}, Dyadic{0, g}};
      s.apex_length = Dyadic{rng.uniform_int(full / 4, full), g};
    } else {
      for (auto& v : s.vertices) {
        v = {Dyadic{rng.uniform_int(-full, full), g}, Dyadic{rng.uniform_int(-full, full), g}};
      }
    }
    try {
      if (satisfies_family(spec, realize<double>(s))) {
        s.free_weights = draw_weights(rng);
        return s;
      }
    } catch (const DegenerateTriangle&) {
    }
  }
  throw SpecError("sampler found no admissible triangle for sample " + std::to_string(k));
}

SamplerSpec default_sampler(const IdentityInfo& entry, std::uint64_t seed) {
  SamplerSpec spec;
  spec.seed = seed;
  switch (entry.constraint) {
    case Constraint::Acute:
      spec.family = SamplerFamily::Acute;
      break;
    case Constraint::AngleB60:
      spec.family = SamplerFamily::AngleB;
      spec.angle_b_degrees = 60.0;
      break;
    case Constraint::AngleB120:
      spec.family = SamplerFamily::AngleB;
      spec.angle_b_degrees = 120.0;
      break;
    default:
      spec.family = SamplerFamily::General;
      break;
  }
  return spec;
}

std::size_t default_trial_count(const SamplerSpec& spec) {
  return spec.family == SamplerFamily::AngleB ? 2000 : 10000;
}

void check_compatible(const IdentityInfo& entry, const SamplerSpec& spec) {
  const bool ok = [&] {
    switch (entry.constraint) {
      case Constraint::None:
        return true;
      case Constraint::Acute:
        return spec.family == SamplerFamily::Acute;
      case Constraint::AngleB60:
        return spec.family == SamplerFamily::AngleB && spec.angle_b_degrees == 60.0;
      default:
        return spec.family == SamplerFamily::AngleB && spec.angle_b_degrees == 120.0;
    }
  }();
  if (!ok) {
    throw SpecError(std::string(entry.name) + " requires " +
                    std::string(constraint_name(entry.constraint)) + " triangles; sampler '" +
                    std::string(sampler_family_name(spec.family)) + "' does not guarantee it");
  }
}

std::size_t histogram_bin(double rel) {
  if (rel == 0) return 0;
  if (!(rel > 0) || !std::isfinite(rel)) return kHistogramBins - 1;
  const int e = static_cast<int>(std::floor(std::log10(rel)));
  return static_cast<std::size_t>(std::clamp(e, -20, 0) + 21);
}

std::string histogram_label(std::size_t bin) {
  if (bin == 0) return "0";
  if (bin == 1) return "<1e-19";
  if (bin == kHistogramBins - 1) return ">=1e+00";
  return "1e" + std::to_string(static_cast<int>(bin) - 21);
}

namespace {

struct SampleOutcome {
  bool pass = true;
  bool contacts_inside = true;
  double worst_rel = 0;
  int worst_width = 53;
  double tangency = 0;
  std::vector<double> rel_by_width;
  std::array<Point<double>, 3> triangle{};
  std::string error;
};

SampleOutcome evaluate_sample(const TrialRequest& req, std::uint64_t k) {
  SampleOutcome out;
  out.rel_by_width.assign(req.widths.size(), 0.0);
  try {
    const Sample s = draw_sample(req.spec, k);
    for (std::size_t wi = 0; wi < req.widths.size(); ++wi) {
      const IdentityReport r = with_width(req.widths[wi], [&]<class T>(T) {
        const Triangle<T> t = realize<T>(s);
        EvalOptions<T> opts;
        opts.free_point = realize_free_point(s, t);
        opts.tolerance = req.tolerance;
        return evaluate_identity<T>(req.id, t, opts);
      });
      const double rel = std::isnan(r.rel_residual) ? std::numeric_limits<double>::infinity()
                                                    : r.rel_residual;
      out.rel_by_width[wi] = rel;
      out.pass = out.pass && r.pass;
      out.contacts_inside = out.contacts_inside && r.contacts_inside;
      out.tangency = std::max(out.tangency, r.tangency_residual);
      if (wi == 0 || rel > out.worst_rel) {
        out.worst_rel = rel;
        out.worst_width = req.widths[wi];
      }
      if (wi == 0) out.triangle = r.triangle;
    }
  } catch (const std::exception& e) {
    out.pass = false;
    out.error = e.what();
    out.worst_rel = std::numeric_limits<double>::infinity();
  }
  return out;
}

/// Associative, commutative accumulator; ties on the worst sample resolve to
/// the smaller index so any merge order gives the same result.
struct Partial {
  std::size_t n = 0;
  std::size_t pass = 0;
  std::size_t errors = 0;
  std::size_t contact_failures = 0;
  double max_rel = 0;
  double max_tangency = 0;
  std::vector<double> max_by_width;
  std::array<std::size_t, kHistogramBins> histogram{};
  std::optional<WorstSample> worst;

  explicit Partial(std::size_t widths) : max_by_width(widths, 0.0) {}

  void add(std::uint64_t k, const SampleOutcome& o) {
    ++n;
    if (o.pass && o.error.empty()) ++pass;
    if (!o.error.empty()) ++errors;
    if (!o.contacts_inside) ++contact_failures;
    max_rel = std::max(max_rel, o.worst_rel);
    max_tangency = std::max(max_tangency, o.tangency);
    for (std::size_t i = 0; i < o.rel_by_width.size(); ++i) {
      max_by_width[i] = std::max(max_by_width[i], o.rel_by_width[i]);
    }
    ++histogram[histogram_bin(o.worst_rel)];
    offer(WorstSample{k, o.worst_width, o.worst_rel, o.triangle, o.error});
  }

  void offer(const WorstSample& w) {
    if (!worst || w.rel_residual > worst->rel_residual ||
        (w.rel_residual == worst->rel_residual && w.index < worst->index)) {
      worst = w;
    }
  }

  void merge(const Partial& other) {
    n += other.n;
    pass += other.pass;
    errors += other.errors;
    contact_failures += other.contact_failures;
    max_rel = std::max(max_rel, other.max_rel);
    max_tangency = std::max(max_tangency, other.max_tangency);
    for (std::size_t i = 0; i < max_by_width.size(); ++i) {
      max_by_width[i] = std::max(max_by_width[i], other.max_by_width[i]);
    }
    for (std::size_t i = 0; i < kHistogramBins; ++i) histogram[i] += other.histogram[i];
    if (other.worst) offer(*other.worst);
  }
};

void validate(const TrialRequest& req) {
  if (req.widths.empty()) throw SpecError("at least one precision width is required");
  for (int w : req.widths) with_width(w, [](auto) { return 0; });
  check_compatible(info(req.id), req.spec);
  validate(req.spec);
}

TrialSummary finish(const TrialRequest& req, const Partial& p, double wall_ms) {
  TrialSummary s;
  s.id = req.id;
  s.spec = req.spec;
  s.n = p.n;
  s.pass_count = p.pass;
  s.error_count = p.errors;
  s.contact_failures = p.contact_failures;
  s.max_rel_residual = p.max_rel;
  s.max_tangency_residual = p.max_tangency;
  s.widths = req.widths;
  s.max_rel_by_width = p.max_by_width;
  s.histogram = p.histogram;
  s.tolerance = req.tolerance;
  s.wall_ms = wall_ms;
  s.worst = p.worst;
  return s;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

TrialSummary run_trials_serial(const TrialRequest& req) {
  validate(req);
  const auto start = std::chrono::steady_clock::now();
  Partial total(req.widths.size());
  for (std::uint64_t k = 0; k < req.n; ++k) total.add(k, evaluate_sample(req, k));
  return finish(req, total, elapsed_ms(start));
}

TrialSummary run_trials(const TrialRequest& req, int threads) {
  validate(req);
  const auto start = std::chrono::steady_clock::now();
  Partial total(req.widths.size());
  const auto n = static_cast<std::int64_t>(req.n);
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team)
  {
    Partial local(req.widths.size());
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t k = 0; k < n; ++k) {
      local.add(static_cast<std::uint64_t>(k), evaluate_sample(req, static_cast<std::uint64_t>(k)));
    }
#pragma omp critical(sixcircles_trial_merge)
    total.merge(local);
  }
  return finish(req, total, elapsed_ms(start));
}

std::vector<std::vector<double>> precision_ladder(IdentityId id, const SamplerSpec& spec,
                                                  std::size_t count,
                                                  const std::vector<int>& widths) {
  TrialRequest req{id, spec, count, widths, kDefaultTolerance};
  validate(req);
  std::vector<std::vector<double>> out(widths.size(), std::vector<double>(count, 0.0));
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 0; k < n; ++k) {
    const SampleOutcome o = evaluate_sample(req, static_cast<std::uint64_t>(k));
    for (std::size_t wi = 0; wi < widths.size(); ++wi) {
      out[wi][static_cast<std::size_t>(k)] =
          o.error.empty() ? o.rel_by_width[wi] : std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

std::vector<Permutation> relabelings(RelabelGroup group) {
  std::vector<Permutation> out;
  if (group == RelabelGroup::Dihedral) {
    for (int r = 0; r < 6; ++r) {
      Permutation rot{};
      Permutation ref{};
      for (int i = 0; i < 6; ++i) {
        rot[i] = (i + r) % 6;
        ref[i] = (r - i + 6) % 6;
      }
      out.push_back(rot);
      out.push_back(ref);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  Permutation p = kIdentityPermutation;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Permutation> permutation_search(IdentityId id, const SamplerSpec& spec, std::size_t m,
                                            RelabelGroup group) {
  const IdentityInfo& entry = info(id);
  check_compatible(entry, spec);
  std::vector<Permutation> alive = relabelings(group);
  for (std::uint64_t k = 0; k < m && !alive.empty(); ++k) {
    const Sample s = draw_sample(spec, k);
    const Triangle<double> t = realize<double>(s);
    const Bindings<double> b = bind_identity(entry, t, std::optional(realize_free_point(s, t)));
    std::erase_if(alive, [&](const Permutation& p) {
      const double lhs = evaluate<double>(entry.lhs, b, p);
      const double rhs = evaluate<double>(entry.rhs, b, p);
      return !(relative_residual(lhs, rhs) <= kDefaultTolerance);
    });
  }
  if (alive.empty()) throw NoPermutationFound(std::string(entry.name));
  return alive;
}

std::string permutation_string(const Permutation& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('1' + v);
  return s;
}

namespace {

using P2 = Point<double>;

P2 unit(const P2& v) { return v / std::sqrt(dot(v, v)); }

double rel_error(double x, double y) { return relative_residual(x, y); }

/// Incenter from the internal bisectors at A and B.
P2 bisector_incenter(const Triangle<double>& t) {
  const P2 da = unit(t.B() - t.A()) + unit(t.C() - t.A());
  const P2 db = unit(t.C() - t.B()) + unit(t.A() - t.B());
  return line_intersection(Line<double>(t.A(), t.A() + da), Line<double>(t.B(), t.B() + db));
}

/// Excenter beyond the side opposite `apex`, from the external bisectors at
/// the other two vertices.
P2 bisector_excenter(const P2& apex, const P2& u, const P2& v) {
  const P2 du = unit(v - u) - unit(apex - u);
  const P2 dv = unit(u - v) - unit(apex - v);
  return line_intersection(Line<double>(u, u + du), Line<double>(v, v + dv));
}

}  // namespace

OracleReport oracle_crosschecks(std::uint64_t seed, std::size_t n, double tolerance) {
  enum Check {
    kCevianLengths,
    kSectionRatios,
    kIncircleContacts,
    kGergonneFeet,
    kExcircleContacts,
    kNagelFeet,
    kInradius,
    kExradius,
    kTangentLength,
    kCheckCount
  };
  OracleReport report;
  report.tolerance = tolerance;
  report.checks = {{"nagel-cevian-lengths"},   {"nagel-section-ratios"}, {"incircle-contact-lengths"},
                   {"gergonne-feet"},          {"excircle-contact-lengths"}, {"nagel-feet"},
                   {"inradius-formula"},       {"exradius-formula"},     {"excircle-tangent-length"}};

  auto record = [&](Check c, double x, double y) {
    auto& chk = report.checks[c];
    const double e = rel_error(x, y);
    ++chk.count;
    if (!(e <= tolerance)) ++chk.failures;
    chk.max_rel_error = std::max(chk.max_rel_error, std::isnan(e) ? INFINITY : e);
  };

  SamplerSpec spec;
  spec.seed = seed;
  for (std::uint64_t k = 0; k < n; ++k) {
    const Triangle<double> t = sample_triangle<double>(spec, k);
    const auto sl = side_lengths(t);
    const double s = sl.semiperimeter();
    const P2 &A = t.A(), &B = t.B(), &C = t.C();

    const auto nagel = cevian_triad(t, Center::Nagel);
    const auto lengths = nagel_cevian_lengths(sl.a, sl.b, sl.c);
    record(kCevianLengths, lengths[0], distance(A, nagel.D));
    record(kCevianLengths, lengths[1], distance(B, nagel.E));
    record(kCevianLengths, lengths[2], distance(C, nagel.F));

    const auto ratios = nagel_section_ratios(sl.a, sl.b, sl.c);
    record(kSectionRatios, ratios[0], distance(A, nagel.P) / distance(nagel.P, nagel.D));
    record(kSectionRatios, ratios[1], distance(B, nagel.P) / distance(nagel.P, nagel.E));
    record(kSectionRatios, ratios[2], distance(C, nagel.P) / distance(nagel.P, nagel.F));

    record(kNagelFeet, distance(B, nagel.D), s - sl.c);
    record(kNagelFeet, distance(C, nagel.E), s - sl.a);
    record(kNagelFeet, distance(A, nagel.F), s - sl.b);

    const auto gergonne = cevian_triad(t, Center::Gergonne);
    record(kGergonneFeet, distance(B, gergonne.D), s - sl.b);
    record(kGergonneFeet, distance(C, gergonne.E), s - sl.c);
    record(kGergonneFeet, distance(A, gergonne.F), s - sl.a);

    const P2 in = bisector_incenter(t);
    record(kInradius, inradius(t), distance_point_to_line(in, Line<double>(B, C)));
    record(kIncircleContacts, distance(B, project(in, Line<double>(B, C))), s - sl.b);
    record(kIncircleContacts, distance(C, project(in, Line<double>(C, A))), s - sl.c);
    record(kIncircleContacts, distance(A, project(in, Line<double>(A, B))), s - sl.a);

    const P2 ex_a = bisector_excenter(A, B, C);
    const P2 ex_b = bisector_excenter(B, C, A);
    const P2 ex_c = bisector_excenter(C, A, B);
    record(kExradius, exradius(t, Side::a), distance_point_to_line(ex_a, Line<double>(B, C)));
    record(kExradius, exradius(t, Side::b), distance_point_to_line(ex_b, Line<double>(C, A)));
    record(kExradius, exradius(t, Side::c), distance_point_to_line(ex_c, Line<double>(A, B)));
    record(kExcircleContacts, distance(B, project(ex_a, Line<double>(B, C))), s - sl.c);
    record(kExcircleContacts, distance(C, project(ex_b, Line<double>(C, A))), s - sl.a);
    record(kExcircleContacts, distance(A, project(ex_c, Line<double>(A, B))), s - sl.b);

    // The excircle beyond a side touches the extensions of the other two at
    // distance s from the opposite vertex.
    record(kTangentLength, distance(A, project(ex_a, Line<double>(A, B))), s);
    record(kTangentLength, distance(A, project(ex_a, Line<double>(A, C))), s);
    record(kTangentLength, distance(B, project(ex_b, Line<double>(B, C))), s);
    record(kTangentLength, distance(C, project(ex_c, Line<double>(C, A))), s);
  }
  return report;
}

}  // namespace sixcircles
