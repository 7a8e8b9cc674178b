#pragma once

#include <cstddef>
#include <span>

#include "shnr/linalg.hpp"
#include "shnr/matrix.hpp"

namespace shnr {

/// Everything derived from a positive semidefinite A that the operator
/// quantities need. Immutable after build_context; safe to share across
/// threads.
class SemiHilbertContext {
 public:
  std::size_t dim() const noexcept { return a_.rows(); }
  std::size_t rank() const noexcept { return rank_; }
  double rtol() const noexcept { return rtol_; }
  /// lambda_max(A).
  double scale() const noexcept { return scale_; }

  const ComplexMatrix& a() const noexcept { return a_; }
  /// A^{1/2}.
  const ComplexMatrix& half() const noexcept { return half_; }
  /// (A^{1/2})^dagger.
  const ComplexMatrix& half_pinv() const noexcept { return half_pinv_; }
  /// A^dagger.
  const ComplexMatrix& a_pinv() const noexcept { return a_pinv_; }
  /// Orthogonal projector onto R(A).
  const ComplexMatrix& proj() const noexcept { return proj_; }
  /// n x r orthonormal basis of R(A) (eigenvectors of A, ascending).
  const ComplexMatrix& basis() const noexcept { return basis_; }
  /// r x n map basis^* A^{1/2}.
  const ComplexMatrix& to_range() const noexcept { return to_range_; }
  /// n x r map (A^{1/2})^dagger basis.
  const ComplexMatrix& from_range() const noexcept { return from_range_; }

 private:
  friend SemiHilbertContext build_context(const ComplexMatrix& a, double rtol);

  ComplexMatrix a_, half_, half_pinv_, a_pinv_, proj_, basis_, to_range_, from_range_;
  std::size_t rank_ = 0;
  double rtol_ = kDefaultRtol;
  double scale_ = 0.0;
};

/// Errors: NonSquare, NotHermitian, NotPositive, ZeroOperator.
SemiHilbertContext build_context(const ComplexMatrix& a, double rtol = kDefaultRtol);

/// <x, y>_A = y^* A x.
Complex a_inner(const SemiHilbertContext& ctx, std::span<const Complex> x, std::span<const Complex> y);
/// ||x||_A; the imaginary part of <x, x>_A is discarded.
double a_norm_vec(const SemiHilbertContext& ctx, std::span<const Complex> x);

/// rtol * lambda_max(A) * (1 + ||T||_2), the scale used by every predicate.
double tolerance(const SemiHilbertContext& ctx, const ComplexMatrix& t);

/// ||(I - P) T^* A||_2.
double membership_residual(const SemiHilbertContext& ctx, const ComplexMatrix& t);
/// Whether T admits an A-adjoint, i.e. R(T^* A) lies in R(A). In finite
/// dimension this is the same as T(ker A) being inside ker A, which is also
/// the A-boundedness condition.
bool is_member(const SemiHilbertContext& ctx, const ComplexMatrix& t);
/// Throws NotMember (naming `what`) unless is_member holds.
void require_member(const SemiHilbertContext& ctx, const ComplexMatrix& t, const char* what);

/// T^# = A^dagger T^* A.
ComplexMatrix a_adjoint(const SemiHilbertContext& ctx, const ComplexMatrix& t);
/// (T + T^#)/2.
ComplexMatrix re_a(const SemiHilbertContext& ctx, const ComplexMatrix& t);
/// (T - T^#)/(2i).
ComplexMatrix im_a(const SemiHilbertContext& ctx, const ComplexMatrix& t);

/// A^{1/2} T (A^{1/2})^dagger, the image of T on R(A). Every A-seminorm
/// quantity of T is an ordinary quantity of this matrix.
ComplexMatrix compress(const SemiHilbertContext& ctx, const ComplexMatrix& t);
/// The compression written in the basis of R(A): an r x r matrix.
ComplexMatrix reduce(const SemiHilbertContext& ctx, const ComplexMatrix& t);
/// Inverse of reduce on members that vanish on ker A: returns
/// (A^{1/2})^dagger B M B^* A^{1/2} for the basis B of R(A).
ComplexMatrix lift(const SemiHilbertContext& ctx, const ComplexMatrix& m);

/// ||T||_A.
double a_operator_norm(const SemiHilbertContext& ctx, const ComplexMatrix& t);
/// omega_A(T) with the default theta settings.
double omega_a(const SemiHilbertContext& ctx, const ComplexMatrix& t);

bool is_a_selfadjoint(const SemiHilbertContext& ctx, const ComplexMatrix& t);
bool is_a_positive(const SemiHilbertContext& ctx, const ComplexMatrix& t);
bool is_a_normal(const SemiHilbertContext& ctx, const ComplexMatrix& t);
bool is_a_unitary(const SemiHilbertContext& ctx, const ComplexMatrix& t);

}  // namespace shnr
