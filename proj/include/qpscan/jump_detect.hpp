#pragma once

#include <vector>

#include "qpscan/types.hpp"

namespace qpscan {

/// Theta_N(theta) = b(0) + 2 sum_{k=1}^{N-1} (1 - k/N) b(k) cos(k theta),
/// with b taken relative to b(0). For a non-negative spectral measure this
/// equals the Fejer-kernel average of the measure around theta.
double theta_statistic(const CorrelationSequence& corr, int n, double theta);

/// Theta_N(theta)/N over a uniform grid of grid_count segments covering
/// [-pi, pi] (grid_count + 1 points). Values are computed once per |theta|
/// and mirrored, so the symmetry value(-theta) == value(theta) is exact.
ThetaScan theta_scan(const CorrelationSequence& corr, int n, int grid_count);

/// Local maxima of the scan over [0, pi] with value >= min_mass, greedily
/// suppressing maxima within min_separation of an already-accepted larger
/// peak. min_separation <= 0 selects the default max(1/N, grid spacing).
/// Result is sorted by descending mass.
std::vector<JumpEstimate> detect_jumps(const ThetaScan& scan, double min_mass,
                                       double min_separation = 0.0);

/// Folds a continuous-time frequency lambda (rad/s) into the Nyquist
/// interval [-Omega, Omega): (frac(lambda/(2 Omega) + 1/2) - 1/2) * 2 Omega,
/// with frac(x) = x - floor(x) in [0, 1) for all real x.
double fold_frequency(double lambda, double omega);

/// theta (rad/sample) -> physical frequency in Hz: theta / (2 pi dt).
double theta_to_hz(double theta, double dt);

}  // namespace qpscan
