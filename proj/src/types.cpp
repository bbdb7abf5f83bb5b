#include "qpscan/types.hpp"

#include <cmath>
#include <cstdio>

namespace qpscan {

void TimeSeries::validate() const {
  if (samples.empty()) throw DataError("time series is empty");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("sampling interval must be positive and finite");
  }
  for (double v : samples) {
    if (!std::isfinite(v)) throw DataError("time series contains a non-finite sample");
  }
}

void CorrelationSequence::validate() const {
  if (values.empty()) throw std::invalid_argument("correlation sequence is empty");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("sampling interval must be positive and finite");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw DataError("correlation sequence contains a non-finite value");
  }
  if (normalized && values[0] != 1.0) {
    throw std::invalid_argument("normalized correlation must have b(0) = 1");
  }
}

double SyntheticSpectrum::total_mass() const {
  double total = noise_level;
  for (const auto& atom : atoms) total += atom.pair_mass;
  return total;
}

bool SyntheticSpectrum::is_normalized(double tol) const {
  return std::fabs(total_mass() - 1.0) <= tol;
}

void SyntheticSpectrum::validate(bool require_normalized) const {
  constexpr double kPi = 3.14159265358979323846;
  if (!(noise_level >= 0.0) || !std::isfinite(noise_level)) {
    throw std::invalid_argument("noise level must be >= 0 and finite");
  }
  double prev = 0.0;
  for (const auto& atom : atoms) {
    if (!(atom.theta > 0.0) || !(atom.theta < kPi)) {
      throw std::invalid_argument("atom location must lie strictly inside (0, pi)");
    }
    if (!(atom.theta > prev)) {
      throw std::invalid_argument("atom locations must be strictly increasing");
    }
    if (!(atom.pair_mass > 0.0) || !std::isfinite(atom.pair_mass)) {
      throw std::invalid_argument("atom pair mass must be positive and finite");
    }
    prev = atom.theta;
  }
  if (require_normalized && !is_normalized()) {
    throw std::invalid_argument("spectrum is not normalized (p + sum of pair masses != 1)");
  }
}

const char* statistic_kind_name(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::hs_ratio: return "hs_ratio";
    case StatisticKind::eigen_ratio: return "eigen_ratio";
    case StatisticKind::abs_sum: return "abs_sum";
    case StatisticKind::cont_hs: return "cont_hs";
    case StatisticKind::cont_abs: return "cont_abs";
  }
  return "unknown";
}

DiagnosticCurve make_curve(StatisticKind kind, std::vector<double> sizes,
                           std::vector<double> values) {
  if (sizes.size() != values.size()) {
    throw std::invalid_argument("curve sizes and values differ in length");
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (!(sizes[i] > sizes[i - 1])) {
      throw std::invalid_argument("curve sizes must be strictly increasing");
    }
  }
  for (double& v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("curve value is not finite");
    if (v < 0.0) {
      if (v < -1e-12) {
        throw std::invalid_argument("curve value below round-off tolerance");
      }
      std::fprintf(stderr, "qpscan: warning: clamping tiny negative %s value %g to 0\n",
                   statistic_kind_name(kind), v);
      v = 0.0;
    }
  }
  return DiagnosticCurve{std::move(sizes), std::move(values), kind};
}

double ThetaScan::grid_spacing() const {
  constexpr double kPi = 3.14159265358979323846;
  const int g = grid_count();
  return g > 0 ? 2.0 * kPi / g : 0.0;
}

}  // namespace qpscan
