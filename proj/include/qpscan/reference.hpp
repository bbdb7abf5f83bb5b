#pragma once

#include <span>
#include <vector>

#include "qpscan/types.hpp"

namespace qpscan::reference {

// Serial reference implementations of the parallel kernels. These follow
// the defining formulas as directly as possible and are kept for testing
// and benchmarking against the OpenMP versions.

/// Literal form of the correlation estimator:
/// b(k) = [sum_p xi(p+k) xi(p)] / (n-k) - m^2.
CorrelationSequence estimate_correlation(const TimeSeries& ts, int max_lag);

/// Direct per-point evaluation of Theta_N/N over the full grid.
ThetaScan theta_scan(const CorrelationSequence& corr, int n, int grid_count);

/// Per-size loop over hs_ratio.
DiagnosticCurve hs_ratio_curve(const CorrelationSequence& corr,
                               const std::vector<int>& sizes);

/// Brute-force (1/N^2) sum_{j,k} b(j-k)^2, the double sum defining the
/// Hilbert-Schmidt ratio. O(N^2).
double hs_ratio_double_sum(const CorrelationSequence& corr, int n);

/// Dense O(N^2) symmetric Toeplitz matrix-vector product.
void toeplitz_matvec(std::span<const double> first_column,
                     std::span<const double> x, std::span<double> y);

}  // namespace qpscan::reference
