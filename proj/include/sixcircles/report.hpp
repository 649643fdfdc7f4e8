#pragma once

// Machine-readable and aligned-text reports.

#include <cstdint>
#include <string>
#include <vector>

#include "sixcircles/harness.hpp"
#include "sixcircles/invariants.hpp"

namespace sixcircles {

enum class ReportFormat { Text, Json };

struct RunInfo {
  std::uint64_t seed = 1;
  std::vector<int> widths{53};
  double tolerance = kDefaultTolerance;
};

/// Failure rate a negative control must reach to count as rejected.
inline constexpr double kRejectionRate = 0.99;

/// Whether a summary matches its catalog expectation: true identities hold on
/// every sample, the negative control fails on at least kRejectionRate.
bool meets_expectation(const TrialSummary& s);

/// {run: {seed, widths, tolerance}, results: [...]} with stable key order.
std::string write_report(const std::vector<TrialSummary>& summaries, const RunInfo& run,
                         ReportFormat format);

std::string write_catalog(ReportFormat format);
std::string write_scans(const std::vector<ScanReport>& scans, double tolerance, ReportFormat format);
std::string write_oracles(const OracleReport& report, ReportFormat format);

/// Remove every "wall_ms" member, for determinism comparisons.
std::string strip_timing(const std::string& json_text);

}  // namespace sixcircles
