#pragma once

#include "qpscan/types.hpp"

namespace qpscan {

/// Empirical correlation estimate of a measured series:
///   m    = (1/n) sum_{p=0}^{n-1} xi(p)
///   b(k) = [ sum_{p=0}^{n-1-k} xi(p+k) xi(p) ] / (n-k) - m^2
/// returned for lags 0..max_lag with normalized = false.
/// Evaluated in mean-centered form (algebraically identical, numerically
/// stable under large offsets). Requires 1 <= max_lag < n.
CorrelationSequence estimate_correlation(const TimeSeries& ts, int max_lag);

/// Divides every lag by b(0) and sets the normalized flag.
/// b(0) <= 0 is a hard error: every downstream ratio divides by it.
CorrelationSequence normalize(const CorrelationSequence& corr);

/// Exact correlation of a mixed spectrum:
///   b(0) = p + sum_a m_a,   b(k) = sum_a m_a cos(k theta_a)  (k >= 1).
CorrelationSequence analytic_correlation(const SyntheticSpectrum& spec, int max_lag);

}  // namespace qpscan
