#include "qpscan/correlation.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace qpscan {

CorrelationSequence estimate_correlation(const TimeSeries& ts, int max_lag) {
  ts.validate();
  const long n = static_cast<long>(ts.samples.size());
  if (max_lag < 1 || max_lag >= n) {
    throw std::invalid_argument("max_lag must satisfy 1 <= max_lag < sample count");
  }

  const double* x = ts.samples.data();
  double mean = 0.0;
  for (long p = 0; p < n; ++p) mean += x[p];
  mean /= static_cast<double>(n);

  // Mean-centered evaluation of the raw estimator. With y = x - m and
  // prefix sums P of y,
  //   b(k) = [sum y(p+k) y(p) + m (P[n-k] + P[n] - P[k])] / (n-k)
  // which is identical to sum x(p+k) x(p) / (n-k) - m^2 in exact
  // arithmetic but avoids the cancellation of two large terms.
  std::vector<double> centered(ts.samples.size());
  for (long p = 0; p < n; ++p) centered[p] = x[p] - mean;
  std::vector<double> prefix(ts.samples.size() + 1, 0.0);
  for (long p = 0; p < n; ++p) prefix[p + 1] = prefix[p] + centered[p];

  std::vector<double> lags(static_cast<std::size_t>(max_lag) + 1, 0.0);
  const double* y = centered.data();
#pragma omp parallel for schedule(static)
  for (int k = 0; k <= max_lag; ++k) {
    const long count = n - k;
    double acc = 0.0;
    for (long p = 0; p < count; ++p) acc += y[p + k] * y[p];
    acc += mean * (prefix[count] + prefix[n] - prefix[k]);
    lags[static_cast<std::size_t>(k)] = acc / static_cast<double>(count);
  }

  for (int k = 1; k <= max_lag; ++k) {
    if (std::fabs(lags[static_cast<std::size_t>(k)]) > lags[0] + 1e-12) {
      std::fprintf(stderr,
                   "qpscan: warning: empirical |b(%d)| exceeds b(0) "
                   "(%g vs %g)\n",
                   k, lags[static_cast<std::size_t>(k)], lags[0]);
      break;
    }
  }

  return CorrelationSequence{std::move(lags), ts.dt, false};
}

CorrelationSequence normalize(const CorrelationSequence& corr) {
  corr.validate();
  const double b0 = corr.values[0];
  if (!(b0 > 0.0)) {
    throw DataError("degenerate correlation: b(0) <= 0");
  }
  std::vector<double> scaled(corr.values.size());
  for (std::size_t i = 0; i < corr.values.size(); ++i) scaled[i] = corr.values[i] / b0;
  scaled[0] = 1.0;
  return CorrelationSequence{std::move(scaled), corr.dt, true};
}

CorrelationSequence analytic_correlation(const SyntheticSpectrum& spec, int max_lag) {
  spec.validate();
  if (max_lag < 0) throw std::invalid_argument("max_lag must be >= 0");

  std::vector<double> lags(static_cast<std::size_t>(max_lag) + 1, 0.0);
  lags[0] = spec.total_mass();
  for (int k = 1; k <= max_lag; ++k) {
    double b = 0.0;
    for (const auto& atom : spec.atoms) b += atom.pair_mass * std::cos(k * atom.theta);
    lags[static_cast<std::size_t>(k)] = b;
  }
  const bool unit = lags[0] == 1.0;
  return CorrelationSequence{std::move(lags), 1.0, unit};
}

}  // namespace qpscan
