#include "qpscan/toeplitz_norms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "qpscan/dense_eigen.hpp"
#include "qpscan/fft_conv.hpp"
#include "qpscan/simulate.hpp"

namespace qpscan {

namespace {

void check_size(const CorrelationSequence& corr, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > corr.values.size()) {
    throw std::invalid_argument("truncation size N out of range");
  }
}

// b(0) used as the normalization denominator; rejected when <= 0.
double base_value(const CorrelationSequence& corr) {
  if (corr.normalized) return 1.0;
  if (!(corr.values[0] > 0.0)) throw DataError("degenerate correlation: b(0) <= 0");
  return corr.values[0];
}

std::vector<double> curve_sizes(const CorrelationSequence& corr,
                                const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("empty size list");
  std::vector<double> out;
  out.reserve(sizes.size());
  int prev = 0;
  for (int n : sizes) {
    check_size(corr, n);
    if (n <= prev) throw std::invalid_argument("sizes must be strictly increasing");
    prev = n;
    out.push_back(static_cast<double>(n));
  }
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(std::vector<double>& y, double alpha, const std::vector<double>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

double nrm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Largest eigenvalue by Lanczos with full reorthogonalization. Convergence
// is accepted only after the actual relative residual ||Q u - theta u|| /
// |theta| passes opts.rel_tolerance; the cheap bound beta * |s_last| just
// decides when to test. Restarts from the best Ritz vector when the
// Krylov-dimension cap is hit.
double lanczos_max_eigen(const ToeplitzOperator& op, double norm_bound,
                         const EigenSolveOptions& opts) {
  const int n = op.size();
  const int budget = opts.max_iterations > 0 ? opts.max_iterations : 10 * n + 200;
  const int max_dim = std::min(n, 300);
  const double beta_tiny = 1e-14 * std::max(1.0, norm_bound);

  RngStream rng(opts.seed);
  std::vector<double> v(static_cast<std::size_t>(n));
  auto randomize = [&] {
    for (double& c : v) c = rng.normal();
    const double nv = nrm2(v);
    for (double& c : v) c /= nv;
  };
  randomize();

  int used = 0;
  bool have_restart = false;
  std::vector<double> restart_vec;

  while (used < budget) {
    std::vector<std::vector<double>> basis{v};
    std::vector<double> alpha, beta;
    std::vector<double> w(static_cast<std::size_t>(n));
    bool subspace_exact = false;  // invariant subspace or full dimension

    for (int j = 0; j < max_dim && used < budget; ++j) {
      op.apply(basis[static_cast<std::size_t>(j)].data(), w.data());
      ++used;
      if (j > 0) axpy(w, -beta[static_cast<std::size_t>(j - 1)], basis[static_cast<std::size_t>(j - 1)]);
      alpha.push_back(dot(basis[static_cast<std::size_t>(j)], w));
      axpy(w, -alpha.back(), basis[static_cast<std::size_t>(j)]);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& vi : basis) axpy(w, -dot(vi, w), vi);
      }
      const double b = nrm2(w);
      const int dim = j + 1;
      subspace_exact = b <= beta_tiny || dim == n;
      const bool exhausted = subspace_exact || dim == max_dim;

      const bool do_check = dim <= 48 || dim % 6 == 0 || exhausted;
      if (do_check) {
        std::vector<double> diag = alpha;
        std::vector<double> sub = beta;
        std::vector<double> z;
        tridiagonal_eigen(diag, sub, z);
        const double theta = diag.back();
        const double* s = &z[static_cast<std::size_t>(dim) * (dim - 1)];
        const double bound = subspace_exact ? 0.0 : std::fabs(b * s[dim - 1]);
        if (bound <= opts.rel_tolerance * std::fabs(theta) || exhausted) {
          std::vector<double> u(static_cast<std::size_t>(n), 0.0);
          for (int i = 0; i < dim; ++i) axpy(u, s[i], basis[static_cast<std::size_t>(i)]);
          const double nu = nrm2(u);
          for (double& c : u) c /= nu;
          std::vector<double> qu(static_cast<std::size_t>(n));
          op.apply(u.data(), qu.data());
          ++used;
          axpy(qu, -theta, u);
          if (nrm2(qu) <= opts.rel_tolerance * std::fabs(theta)) return theta;
          restart_vec = std::move(u);
          have_restart = true;
        }
      }
      if (exhausted) break;
      beta.push_back(b);
      for (double& c : w) c /= b;
      basis.push_back(w);
    }

    if (have_restart && !subspace_exact) {
      v = restart_vec;  // continue from the best Ritz vector so far
    } else {
      randomize();  // exact subspace that still failed the residual test
    }
  }
  throw ConvergenceError("Lanczos eigensolver did not converge within " +
                         std::to_string(budget) + " matrix-vector products");
}

double trapezoid_weighted(const CorrelationSequence& corr, double t_horizon,
                          bool squared, double scale) {
  corr.validate();
  if (!(t_horizon > 0.0)) throw std::invalid_argument("horizon T must be positive");
  const double dt = corr.dt;
  const long steps = static_cast<long>(std::floor(t_horizon / dt + 1e-9));
  const long max_lag = static_cast<long>(corr.values.size()) - 1;
  if (steps < 1 || steps > max_lag) {
    throw std::invalid_argument("horizon T exceeds the available lag span");
  }
  double acc = 0.0;
  for (long j = 0; j <= steps; ++j) {
    const double t = j * dt;
    const double b = corr.values[static_cast<std::size_t>(j)] * scale;
    double f = squared ? (1.0 - t / t_horizon) * b * b : std::fabs(b);
    if (j == 0 || j == steps) f *= 0.5;
    acc += f;
  }
  return acc * dt;
}

}  // namespace

void EigenSolveOptions::validate() const {
  if (!(rel_tolerance > 0.0) || !(rel_tolerance < 1.0)) {
    throw std::invalid_argument("rel_tolerance must lie in (0, 1)");
  }
  if (max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
}

double hs_ratio(const CorrelationSequence& corr, int n) {
  corr.validate();
  check_size(corr, n);
  const double b0 = base_value(corr);
  double acc = 0.0;
  for (int k = 1; k < n; ++k) {
    const double b = corr.values[static_cast<std::size_t>(k)] / b0;
    acc += static_cast<double>(n - k) * b * b;
  }
  const double nd = static_cast<double>(n);
  return 1.0 / nd + 2.0 * acc / (nd * nd);
}

DiagnosticCurve hs_ratio_curve(const CorrelationSequence& corr,
                               const std::vector<int>& sizes) {
  corr.validate();
  std::vector<double> xs = curve_sizes(corr, sizes);
  base_value(corr);
  std::vector<double> values(sizes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < sizes.size(); ++i) values[i] = hs_ratio(corr, sizes[i]);
  return make_curve(StatisticKind::hs_ratio, std::move(xs), std::move(values));
}

double max_eigen_ratio(const CorrelationSequence& corr, int n,
                       const EigenSolveOptions& opts) {
  corr.validate();
  check_size(corr, n);
  opts.validate();
  if (n == 1) return corr.values[0];
  ToeplitzOperator op(corr.values, n);
  return lanczos_max_eigen(op, toeplitz_norm_upper_bound(corr, n), opts) /
         static_cast<double>(n);
}

DiagnosticCurve eigen_ratio_curve(const CorrelationSequence& corr,
                                  const std::vector<int>& sizes,
                                  const EigenSolveOptions& opts) {
  corr.validate();
  opts.validate();
  std::vector<double> xs = curve_sizes(corr, sizes);
  std::vector<double> values(sizes.size());
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    try {
      values[i] = max_eigen_ratio(corr, sizes[i], opts);
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        message = e.what();
      }
      values[i] = 0.0;
    }
  }
  if (failed) throw ConvergenceError(message);
  return make_curve(StatisticKind::eigen_ratio, std::move(xs), std::move(values));
}

double dense_max_eigen_oracle(const CorrelationSequence& corr, int n) {
  corr.validate();
  check_size(corr, n);
  if (n > 2048) {
    throw std::invalid_argument("dense oracle guarded to N <= 2048");
  }
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      a[static_cast<std::size_t>(j) * n + k] =
          corr.values[static_cast<std::size_t>(std::abs(j - k))];
    }
  }
  return symmetric_max_eigenvalue(std::move(a), n);
}

double gram_max_eigen_individual(
    const std::vector<std::pair<double, double>>& atoms, int n) {
  if (atoms.empty()) throw std::invalid_argument("no atoms");
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  const int m = static_cast<int>(atoms.size());
  std::vector<std::complex<double>> a(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      const double weight = std::sqrt(atoms[static_cast<std::size_t>(r)].second *
                                      atoms[static_cast<std::size_t>(c)].second);
      std::complex<double> inner;
      if (r == c) {
        inner = static_cast<double>(n);
      } else {
        // (e_c, e_r) = (exp(iN d) - 1) / (exp(i d) - 1), d = x_c - x_r
        const double d = atoms[static_cast<std::size_t>(c)].first -
                         atoms[static_cast<std::size_t>(r)].first;
        const std::complex<double> num =
            std::polar(1.0, static_cast<double>(n) * d) - 1.0;
        const std::complex<double> den = std::polar(1.0, d) - 1.0;
        inner = num / den;
      }
      a[static_cast<std::size_t>(r) * m + c] = weight * inner;
    }
  }
  return hermitian_max_eigenvalue(std::move(a), m);
}

double atomic_gram_max_eigen(const SyntheticSpectrum& spec, int n) {
  spec.validate();
  if (spec.atoms.empty()) throw std::invalid_argument("spectrum has no atoms");
  std::vector<std::pair<double, double>> individual;
  individual.reserve(2 * spec.atoms.size());
  for (const auto& atom : spec.atoms) {
    individual.emplace_back(atom.theta, atom.pair_mass / 2.0);
    individual.emplace_back(-atom.theta, atom.pair_mass / 2.0);
  }
  return gram_max_eigen_individual(individual, n);
}

double abs_sum_ratio(const CorrelationSequence& corr, int n) {
  corr.validate();
  check_size(corr, n);
  const double b0 = base_value(corr);
  double acc = 0.0;
  for (int p = 0; p < n; ++p) acc += std::fabs(corr.values[static_cast<std::size_t>(p)]);
  return acc / (b0 * static_cast<double>(n));
}

DiagnosticCurve abs_sum_ratio_curve(const CorrelationSequence& corr,
                                    const std::vector<int>& sizes) {
  corr.validate();
  std::vector<double> xs = curve_sizes(corr, sizes);
  base_value(corr);
  std::vector<double> values(sizes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < sizes.size(); ++i) values[i] = abs_sum_ratio(corr, sizes[i]);
  return make_curve(StatisticKind::abs_sum, std::move(xs), std::move(values));
}

double toeplitz_norm_upper_bound(const CorrelationSequence& corr, int n) {
  corr.validate();
  check_size(corr, n);
  double acc = std::fabs(corr.values[0]);
  for (int p = 1; p < n; ++p) acc += 2.0 * std::fabs(corr.values[static_cast<std::size_t>(p)]);
  return acc;
}

double continuous_hs_functional(const CorrelationSequence& corr, double t_horizon) {
  const double b0 = base_value(corr);
  return 2.0 / t_horizon * trapezoid_weighted(corr, t_horizon, true, 1.0 / b0);
}

double continuous_abs_functional(const CorrelationSequence& corr, double t_horizon) {
  return trapezoid_weighted(corr, t_horizon, false, 1.0) / t_horizon;
}

double holder_exponent_fit(const DiagnosticCurve& curve) {
  if (curve.kind != StatisticKind::hs_ratio) {
    throw std::invalid_argument("holder fit expects an hs_ratio curve");
  }
  if (curve.sizes.size() < 4) throw std::invalid_argument("need at least 4 sizes");
  if (!(curve.sizes.back() >= 8.0 * curve.sizes.front())) {
    throw std::invalid_argument("sizes must span a factor of at least 8");
  }
  const std::size_t count = curve.sizes.size();
  std::vector<double> xs(count), ys(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(curve.values[i] > 0.0)) {
      throw std::invalid_argument("holder fit requires positive curve values");
    }
    xs[i] = std::log(curve.sizes[i]);
    // ||Q_N||_2 = N sqrt(hs_ratio)
    ys[i] = std::log(curve.sizes[i] * std::sqrt(curve.values[i]));
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(count);
  my /= static_cast<double>(count);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  return sxy / sxx;
}

}  // namespace qpscan
