#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qpscan {

/// In-place complex FFT (unnormalized forward, 1/n-normalized inverse).
/// Backed by cached FFTW plans; safe to call concurrently on distinct buffers.
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse);

std::size_t next_pow2(std::size_t n);

/// Symmetric Toeplitz operator Q = (c(|j-k|)) applied through circulant
/// embedding into the smallest power-of-two length >= 2N-1. One apply
/// costs two FFTs of that length. Stateless apart from the precomputed
/// circulant symbol, so a single instance may be shared across threads.
class ToeplitzOperator {
 public:
  ToeplitzOperator(std::span<const double> first_column, int n);

  int size() const { return n_; }

  /// y = Q x. x and y must hold size() doubles; aliasing is allowed.
  void apply(const double* x, double* y) const;

 private:
  int n_;
  std::size_t len_;
  std::vector<std::complex<double>> symbol_;  // FFT of the circulant column
};

}  // namespace qpscan
