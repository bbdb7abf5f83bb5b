#pragma once

#include <complex>
#include <vector>

namespace qpscan {

/// Largest eigenvalue of a dense real symmetric matrix (row-major n x n).
/// The matrix is taken by value and destroyed.
double symmetric_max_eigenvalue(std::vector<double> a, int n);

/// Largest eigenvalue of a dense Hermitian matrix (row-major n x n).
double hermitian_max_eigenvalue(std::vector<std::complex<double>> a, int n);

/// All eigenvalues (ascending) and eigenvectors of a symmetric tridiagonal
/// matrix with diagonal `diag` and subdiagonal `sub` (size n-1). On return
/// `diag` holds the eigenvalues and `vectors` the column-major n x n
/// eigenvector matrix.
void tridiagonal_eigen(std::vector<double>& diag, std::vector<double>& sub,
                       std::vector<double>& vectors);

}  // namespace qpscan
