#include "qpscan/fft_conv.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace qpscan {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// Plans are created once per transform length and kept for the process
// lifetime. Creation is serialized (FFTW planning is not thread-safe);
// fftw_execute_dft on distinct arrays is.
PlanPair plans_for(std::size_t len) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair> cache;

  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(len);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> dummy(len);
  auto* buf = reinterpret_cast<fftw_complex*>(dummy.data());
  // FFTW_UNALIGNED lets the plans run on any caller buffer.
  PlanPair pair;
  pair.forward = fftw_plan_dft_1d(static_cast<int>(len), buf, buf, FFTW_FORWARD,
                                  FFTW_ESTIMATE | FFTW_UNALIGNED);
  pair.backward = fftw_plan_dft_1d(static_cast<int>(len), buf, buf, FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (pair.forward == nullptr || pair.backward == nullptr) {
    throw std::runtime_error("FFTW plan creation failed");
  }
  cache.emplace(len, pair);
  return pair;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& data, bool inverse) {
  if (data.empty()) return;
  PlanPair plans = plans_for(data.size());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(inverse ? plans.backward : plans.forward, buf, buf);
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(data.size());
    for (auto& v : data) v *= scale;
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t len = 1;
  while (len < n) len <<= 1;
  return len;
}

ToeplitzOperator::ToeplitzOperator(std::span<const double> first_column, int n)
    : n_(n) {
  if (n < 1 || static_cast<std::size_t>(n) > first_column.size()) {
    throw std::invalid_argument("Toeplitz operator size exceeds available lags");
  }
  len_ = next_pow2(2 * static_cast<std::size_t>(n) - 1);
  // Circulant column: c[0..n-1] = b(0..n-1), c[len-j] = b(j).
  symbol_.assign(len_, {0.0, 0.0});
  for (int j = 0; j < n; ++j) symbol_[static_cast<std::size_t>(j)] = first_column[j];
  for (int j = 1; j < n; ++j) symbol_[len_ - static_cast<std::size_t>(j)] = first_column[j];
  fft_inplace(symbol_, false);
}

void ToeplitzOperator::apply(const double* x, double* y) const {
  std::vector<std::complex<double>> work(len_, {0.0, 0.0});
  for (int j = 0; j < n_; ++j) work[static_cast<std::size_t>(j)] = x[j];
  fft_inplace(work, false);
  for (std::size_t j = 0; j < len_; ++j) work[j] *= symbol_[j];
  fft_inplace(work, true);
  for (int j = 0; j < n_; ++j) y[j] = work[static_cast<std::size_t>(j)].real();
}

}  // namespace qpscan
