#pragma once

#include <vector>

#include "shnr/matrix.hpp"

namespace shnr {

/// Relative threshold below which eigenvalues/singular values count as
/// zero. All rank decisions in the library go through this one knob.
inline constexpr double kDefaultRtol = 1e-10;

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, eigenvectors in columns
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix. The input is
/// symmetrized as (M + M^*)/2 after the Hermitian check
/// max|M - M^*| <= tol.
HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol = kDefaultRtol);

/// Eigenvalues only (ascending); skips eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = kDefaultRtol);

struct Svd {
  ComplexMatrix u;             // m x k, orthonormal columns
  std::vector<double> sigma;   // k = min(m, n), descending
  ComplexMatrix v;             // n x k, orthonormal columns
};

/// One-sided (Hestenes) Jacobi SVD, M = U diag(sigma) V^*.
Svd svd(const ComplexMatrix& m);

std::vector<double> singular_values(const ComplexMatrix& m);

/// Operator 2-norm (largest singular value).
double spectral_norm(const ComplexMatrix& m);

struct TopSingular {
  double sigma = 0.0;
  Vector right;  // unit x with M x = sigma y
  Vector left;   // unit y
};

/// Largest singular value with a singular pair, for small matrices in hot
/// loops. Computed from the top eigenpair of M^*M.
TopSingular top_singular(const ComplexMatrix& m);

/// Moore-Penrose inverse; singular values <= rtol * sigma_max are dropped.
ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double rtol = kDefaultRtol);

/// Hermitian PSD square root. Eigenvalues in [-rtol*lambda_max, 0) are
/// clamped to zero; anything more negative is NotPositive.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, double rtol = kDefaultRtol);

/// Orthogonal projector onto the span of eigenvectors with eigenvalue
/// > rtol * lambda_max.
ComplexMatrix range_projector(const ComplexMatrix& a, double rtol = kDefaultRtol);

}  // namespace shnr
