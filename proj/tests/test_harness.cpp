#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sixcircles/harness.hpp"
#include "sixcircles/invariants.hpp"

using namespace sixcircles;

namespace {

bool same_summary(const TrialSummary& a, const TrialSummary& b) {
  return a.n == b.n && a.pass_count == b.pass_count && a.error_count == b.error_count &&
         a.contact_failures == b.contact_failures && a.max_rel_residual == b.max_rel_residual &&
         a.max_tangency_residual == b.max_tangency_residual && a.max_rel_by_width == b.max_rel_by_width &&
         a.histogram == b.histogram && a.worst.has_value() == b.worst.has_value() &&
         (!a.worst || (a.worst->index == b.worst->index && a.worst->rel_residual == b.worst->rel_residual));
}

}  // namespace

TEST(Sampler, Deterministic) {
  SamplerSpec spec;
  spec.seed = 7;
  const auto a = sample_triangle<double>(spec, 0);
  const auto b = sample_triangle<double>(spec, 0);
  EXPECT_EQ(a.A(), b.A());
  EXPECT_EQ(a.B(), b.B());
  EXPECT_EQ(a.C(), b.C());
  EXPECT_FALSE(sample_triangle<double>(spec, 1).A() == a.A());
}

TEST(Sampler, AcuteFamily) {
  const SamplerSpec spec{SamplerFamily::Acute};
  for (std::uint64_t k = 0; k < 2000; ++k) {
    const auto t = sample_triangle<double>(spec, k);
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) EXPECT_LT(vertex_angle(t, v), std::numbers::pi / 2);
    EXPECT_TRUE(satisfies_family(spec, t));
  }
}

TEST(Sampler, AngleBFamilies) {
  for (double deg : {60.0, 120.0}) {
    SamplerSpec spec{SamplerFamily::AngleB};
    spec.angle_b_degrees = deg;
    const double target = deg * std::numbers::pi / 180;
    const double ulp = std::nextafter(target, 4.0) - target;
    for (std::uint64_t k = 0; k < 2000; ++k) {
      const auto t = sample_triangle<double>(spec, k);
      EXPECT_LE(std::abs(vertex_angle(t, Vertex::B) - target), 4 * ulp) << k;
      // The same sample at a wider mantissa is the same triangle.
      const auto w = sample_triangle<F150>(spec, k);
      EXPECT_NEAR(math::to_double(w.A().x), t.A().x, 1e-15);
    }
  }
}

TEST(Sampler, DefaultsCoverTheCatalog) {
  for (const auto& entry : catalog()) {
    const SamplerSpec spec = default_sampler(entry);
    EXPECT_NO_THROW(check_compatible(entry, spec)) << entry.name;
    EXPECT_EQ(default_trial_count(spec), spec.family == SamplerFamily::AngleB ? 2000u : 10000u);
  }
  EXPECT_THROW(check_compatible(info(IdentityId::THM_2_1), SamplerSpec{}), SpecError);
  SamplerSpec wrong{SamplerFamily::AngleB};
  wrong.angle_b_degrees = 120;
  EXPECT_THROW(check_compatible(info(IdentityId::THM_8_1), wrong), SpecError);
}

TEST(Histogram, Bins) {
  EXPECT_EQ(histogram_bin(0.0), 0u);
  EXPECT_EQ(histogram_bin(1e-30), 1u);
  EXPECT_EQ(histogram_bin(5e-13), histogram_bin(1e-13));
  EXPECT_EQ(histogram_bin(0.5), kHistogramBins - 2);
  EXPECT_EQ(histogram_bin(1.0), kHistogramBins - 1);
  EXPECT_EQ(histogram_label(0), "0");
}

TEST(RunTrials, NagelIncircles) {
  const TrialRequest req{IdentityId::THM_5_1, SamplerSpec{}, 1000};
  const auto s = run_trials(req);
  EXPECT_EQ(s.pass_count, 1000u);
  EXPECT_LE(s.max_rel_residual, 1e-9);
  EXPECT_TRUE(s.all_pass());
}

TEST(RunTrials, NegativeControlNeverPasses) {
  const TrialRequest req{IdentityId::NEG_CONTROL, SamplerSpec{SamplerFamily::Acute}, 100};
  const auto s = run_trials(req);
  EXPECT_EQ(s.pass_count, 0u);
  EXPECT_GE(s.failure_rate(), 0.99);
}

TEST(RunTrials, WideMantissaOnObtuseAngle) {
  SamplerSpec spec{SamplerFamily::AngleB};
  spec.angle_b_degrees = 120;
  const TrialRequest req{IdentityId::THM_8_3, spec, 1000, {150}};
  const auto s = run_trials(req);
  EXPECT_TRUE(s.all_pass());
  EXPECT_LE(s.max_rel_residual, 1e-30);
}

TEST(RunTrials, ParallelMatchesSerial) {
  for (IdentityId id : {IdentityId::THM_3_2, IdentityId::THM_7_1, IdentityId::NEG_CONTROL}) {
    const TrialRequest req{id, default_sampler(info(id), 3), 500, {53, 113}};
    const auto ref = run_trials_serial(req);
    for (int threads : {1, 2, 4}) EXPECT_TRUE(same_summary(ref, run_trials(req, threads))) << threads;
  }
}

TEST(RunTrials, IncompatibleSpecRejected) {
  EXPECT_THROW(run_trials({IdentityId::THM_7_2, SamplerSpec{}, 10}), SpecError);
}

TEST(PrecisionLadder, ConvergesForTrueIdentities) {
  for (IdentityId id : {IdentityId::LEM_5_2, IdentityId::LEM_5_3, IdentityId::THM_8_3, IdentityId::THM_8_4}) {
    const auto ladder = precision_ladder(id, default_sampler(info(id)), 20, {150, 300});
    EXPECT_LE(*std::max_element(ladder[0].begin(), ladder[0].end()), 1e-30);
    EXPECT_LE(*std::max_element(ladder[1].begin(), ladder[1].end()), 1e-70);
  }
  const auto neg = precision_ladder(IdentityId::NEG_CONTROL, default_sampler(info(IdentityId::NEG_CONTROL)), 20,
                                    {53, 300});
  for (std::size_t k = 0; k < 20; ++k) {
    EXPECT_GT(neg[1][k], 1e-6);
    EXPECT_NEAR(neg[1][k], neg[0][k], 1e-9);
  }
}

TEST(PermutationSearch, Results) {
  const auto centroid = permutation_search(IdentityId::THM_3_1, SamplerSpec{}, 30);
  EXPECT_NE(std::find(centroid.begin(), centroid.end(), kIdentityPermutation), centroid.end());

  const auto& e = info(IdentityId::THM_8_1);
  const auto found = permutation_search(e.id, default_sampler(e), 30);
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(found.front(), kIdentityPermutation);

  EXPECT_THROW(permutation_search(IdentityId::NEG_CONTROL, default_sampler(info(IdentityId::NEG_CONTROL)), 30),
               NoPermutationFound);
  EXPECT_EQ(relabelings(RelabelGroup::Dihedral).size(), 12u);
  EXPECT_EQ(relabelings(RelabelGroup::Symmetric).size(), 720u);
  EXPECT_EQ(permutation_string(kIdentityPermutation), "123456");
}

TEST(Oracles, AllAgree) {
  const auto report = oracle_crosschecks(1, 2000);
  EXPECT_TRUE(report.all_pass());
  EXPECT_EQ(report.checks.size(), 9u);
  for (const auto& c : report.checks) EXPECT_LE(c.max_rel_error, 1e-10) << c.name;
}

TEST(Invariants, SpotValues) {
  const Triangle<double> t({0, 3}, {0, 0}, {4, 0});
  EXPECT_NEAR(line_invariant(t), 2.0 / 3.0, 1e-15);
  // Right angle at B, so view the triangle from B: r r_b / K = tan(pi/4).
  const Triangle<double> from_b({0, 0}, {4, 0}, {0, 3});
  EXPECT_NEAR(angle_invariant(from_b), 1, 1e-15);
}

TEST(Invariants, Scans) {
  const auto line = invariant_scan(ScanKind::InradiusExradiusLine, ApexInvariantSpec{}, 1000, 1);
  EXPECT_TRUE(line.within(1e-10));
  EXPECT_NEAR(line.target, 2.0 / 3.0, 1e-15);
  ApexInvariantSpec rays{{0, 0}, {1, 0}, {0.5, 0.8}, 0.2, 3.0};
  const auto angle = invariant_scan(ScanKind::FixedAngle, rays, 1000, 1);
  EXPECT_TRUE(angle.within(1e-10));
  EXPECT_NEAR(angle.target, std::tan(std::atan2(0.8, 0.5) / 2), 1e-15);
  EXPECT_LE(angle.max_tangency_residual, 1e-9);

  ApexInvariantSpec bad;
  bad.apex = {5, 0};
  EXPECT_THROW(invariant_scan(ScanKind::InradiusExradiusLine, bad, 10, 1), SpecError);
}
