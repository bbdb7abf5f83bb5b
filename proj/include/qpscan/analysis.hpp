#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qpscan/toeplitz_norms.hpp"
#include "qpscan/types.hpp"

namespace qpscan {

struct AnalysisConfig {
  int max_lag = 1024;
  std::vector<int> sizes;                      // empty -> geometric default
  int grid_count = 3000;
  std::vector<int> scan_sizes = {100, 300, 500};
  double min_mass = 0.02;
  double plateau_threshold = 0.005;
  double dt = 0.08;
  std::uint64_t seed = 1;                      // eigensolver start vectors

  void validate() const;
  /// The size grid actually used: `sizes`, or the default geometric grid
  /// of 24 points from 16 to min(max_lag, 4096).
  std::vector<int> resolved_sizes() const;
};

enum class Verdict { stable_consistent, unstable_evidence, inconclusive };

const char* verdict_name(Verdict v);

struct StabilityReport {
  DiagnosticCurve hs_curve;
  DiagnosticCurve eigen_curve;
  DiagnosticCurve abs_curve;
  std::vector<std::pair<int, std::vector<JumpEstimate>>> jumps_by_size;
  Verdict verdict = Verdict::inconclusive;
  double plateau_estimate = 0.0;
};

/// Intercept a of the least-squares fit value(N) ~ a + b/N over the upper
/// half of the curve's sizes, clamped to >= 0.
double plateau_fit(const DiagnosticCurve& hs_curve);

/// unstable-evidence iff plateau > threshold and at least one jump was
/// detected; stable-consistent iff neither indicator fires; inconclusive
/// when exactly one does.
Verdict decide_verdict(double plateau_estimate, double plateau_threshold,
                       bool any_jump);

/// Full pipeline: estimate + normalize the correlation, compute the three
/// diagnostic curves, the plateau fit, the theta scans with jump detection,
/// and the verdict.
StabilityReport run_analysis(const TimeSeries& ts, const AnalysisConfig& config);

/// The theta scans alone (one per scan size), on the normalized empirical
/// correlation.
std::vector<ThetaScan> run_scans(const TimeSeries& ts, const AnalysisConfig& config);

}  // namespace qpscan
