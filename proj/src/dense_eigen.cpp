#include "qpscan/dense_eigen.hpp"

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace qpscan {

namespace {

void check_info(int info, const char* routine) {
  if (info != 0) {
    throw std::runtime_error(std::string(routine) + " failed with info=" +
                             std::to_string(info));
  }
}

}  // namespace

double symmetric_max_eigenvalue(std::vector<double> a, int n) {
  if (n < 1 || a.size() < static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("symmetric_max_eigenvalue: bad dimensions");
  }
  std::vector<double> w(static_cast<std::size_t>(n));
  check_info(LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, w.data()),
             "dsyev");
  return w.back();
}

double hermitian_max_eigenvalue(std::vector<std::complex<double>> a, int n) {
  if (n < 1 || a.size() < static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("hermitian_max_eigenvalue: bad dimensions");
  }
  std::vector<double> w(static_cast<std::size_t>(n));
  check_info(LAPACKE_zheev(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, w.data()),
             "zheev");
  return w.back();
}

void tridiagonal_eigen(std::vector<double>& diag, std::vector<double>& sub,
                       std::vector<double>& vectors) {
  const int n = static_cast<int>(diag.size());
  if (n < 1 || sub.size() + 1 < diag.size()) {
    throw std::invalid_argument("tridiagonal_eigen: bad dimensions");
  }
  vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  check_info(LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', n, diag.data(), sub.data(),
                           vectors.data(), n),
             "dstev");
}

}  // namespace qpscan
