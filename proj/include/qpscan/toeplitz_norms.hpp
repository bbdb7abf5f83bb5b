#pragma once

#include <cstdint>
#include <vector>

#include "qpscan/types.hpp"

namespace qpscan {

struct EigenSolveOptions {
  double rel_tolerance = 1e-8;  // relative residual ||Q v - lambda v|| / lambda
  int max_iterations = 0;       // matrix-vector product budget; 0 -> 10*N + 200
  std::uint64_t seed = 1;       // start-vector randomization

  void validate() const;
};

/// (1/N^2) ||Q_N||_2^2 = 1/N + (2/N^2) sum_{k=1}^{N-1} (N-k) b(k)^2
/// with b taken relative to b(0). Cost O(N).
double hs_ratio(const CorrelationSequence& corr, int n);

DiagnosticCurve hs_ratio_curve(const CorrelationSequence& corr,
                               const std::vector<int>& sizes);

/// lambda_m(Q_N)/N via Lanczos with full reorthogonalization on the
/// implicit Toeplitz operator (FFT matvec, O(N log N) per product).
/// Throws ConvergenceError when the relative-residual test cannot be met
/// within the iteration budget.
double max_eigen_ratio(const CorrelationSequence& corr, int n,
                       const EigenSolveOptions& opts = {});

DiagnosticCurve eigen_ratio_curve(const CorrelationSequence& corr,
                                  const std::vector<int>& sizes,
                                  const EigenSolveOptions& opts = {});

/// Largest eigenvalue of the explicitly formed N x N Toeplitz matrix by a
/// dense symmetric eigensolver; exact to working precision. Guarded to
/// N <= 2048.
double dense_max_eigen_oracle(const CorrelationSequence& corr, int n);

/// Exact largest eigenvalue of the purely atomic Toeplitz matrix through
/// the 2s x 2s Gram reduction: entries sqrt(mu_a mu_a') (e_a', e_a) with
/// the 2s individual atom masses mu. noise_level is ignored.
double atomic_gram_max_eigen(const SyntheticSpectrum& spec, int n);

/// Gram reduction over an explicit list of individual atoms
/// (location in (-pi, pi], mass > 0). Exposed for degenerate test cases.
double gram_max_eigen_individual(
    const std::vector<std::pair<double, double>>& atoms, int n);

/// (1/N) sum_{p=0}^{N-1} |b(p)| / b(0)
double abs_sum_ratio(const CorrelationSequence& corr, int n);

DiagnosticCurve abs_sum_ratio_curve(const CorrelationSequence& corr,
                                    const std::vector<int>& sizes);

/// Row-sum bound for symmetric Toeplitz: |b(0)| + 2 sum_{p=1}^{N-1} |b(p)|.
/// Always >= the true operator norm.
double toeplitz_norm_upper_bound(const CorrelationSequence& corr, int n);

/// (2/T) int_0^T (1 - t/T) b(t)^2 dt by composite trapezoid on the native
/// lag grid, with b normalized to b(0) = 1. Requires T <= max_lag * dt.
double continuous_hs_functional(const CorrelationSequence& corr, double t_horizon);

/// (1/T) int_0^T |b(t)| dt by composite trapezoid on the native lag grid.
double continuous_abs_functional(const CorrelationSequence& corr, double t_horizon);

/// Least-squares slope of log ||Q_N||_2 against log N for an hs_ratio
/// curve (||Q_N||_2 = N sqrt(value)). Needs at least 4 sizes spanning a
/// factor >= 8.
double holder_exponent_fit(const DiagnosticCurve& curve);

}  // namespace qpscan
