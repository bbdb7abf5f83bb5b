#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpscan {

/// Raised for defective input data (unreadable files, non-finite samples,
/// degenerate correlations with b(0) <= 0). Maps to CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an iterative solver fails to reach its tolerance within the
/// iteration budget. Maps to CLI exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A finite real sample sequence with its sampling interval (seconds).
struct TimeSeries {
  std::vector<double> samples;
  double dt = 1.0;

  void validate() const;
};

/// Correlation lags b(0..K) plus the sampling interval they were taken at.
/// `normalized` means values[0] == 1 exactly.
struct CorrelationSequence {
  std::vector<double> values;
  double dt = 1.0;
  bool normalized = false;

  int max_lag() const { return static_cast<int>(values.size()) - 1; }
  void validate() const;
};

/// One symmetric atom pair {+theta, -theta} of the spectral measure.
/// `pair_mass` is the combined mass of the pair; each individual atom
/// carries pair_mass / 2.
struct SpectralAtom {
  double theta = 0.0;      // rad/sample, in (0, pi)
  double pair_mass = 0.0;  // > 0
};

/// Mixed spectral measure: uniform density noise_level/(2*pi) on [-pi, pi]
/// plus a finite list of symmetric atom pairs.
struct SyntheticSpectrum {
  double noise_level = 0.0;  // p >= 0
  std::vector<SpectralAtom> atoms;

  double total_mass() const;
  bool is_normalized(double tol = 1e-9) const;
  // require_normalized additionally checks total mass == 1 within tol.
  void validate(bool require_normalized = false) const;
};

enum class StatisticKind { hs_ratio, eigen_ratio, abs_sum, cont_hs, cont_abs };

const char* statistic_kind_name(StatisticKind kind);

/// A diagnostic statistic evaluated along increasing truncation sizes N
/// (or horizons T). Values in [-1e-12, 0) are clamped to zero on
/// construction; anything more negative is rejected.
struct DiagnosticCurve {
  std::vector<double> sizes;
  std::vector<double> values;
  StatisticKind kind = StatisticKind::hs_ratio;
};

DiagnosticCurve make_curve(StatisticKind kind, std::vector<double> sizes,
                           std::vector<double> values);

/// Theta_N(theta)/N sampled on a uniform grid over [-pi, pi].
struct ThetaScan {
  std::vector<double> thetas;
  std::vector<double> values;
  int n = 0;             // truncation size N used
  double dt = 1.0;       // sampling interval, for frequency conversion
  bool dips_negative = false;  // set when values fall below -1e-9

  int grid_count() const { return static_cast<int>(thetas.size()) - 1; }
  double grid_spacing() const;
};

/// A detected discontinuity of the spectral distribution function.
/// `mass` follows the individual-atom convention.
struct JumpEstimate {
  double theta = 0.0;         // rad/sample, in [0, pi]
  double mass = 0.0;          // >= 0
  double frequency_hz = 0.0;  // theta / (2*pi*dt)
};

}  // namespace qpscan
