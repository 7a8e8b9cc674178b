#include "shnr/semihilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shnr/circle_search.hpp"

namespace shnr {
namespace {

void require_operator_shape(const SemiHilbertContext& ctx, const ComplexMatrix& t, const char* what) {
  if (!t.is_square() || t.rows() != ctx.dim()) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": operator is " +
                                             std::to_string(t.rows()) + "x" +
                                             std::to_string(t.cols()) + ", A is " +
                                             std::to_string(ctx.dim()) + "x" +
                                             std::to_string(ctx.dim()));
  }
}

// ||m||_2 <= tol, using the Frobenius norm as a cheap sufficient test.
bool two_norm_at_most(const ComplexMatrix& m, double tol) {
  if (norm_fro(m) <= tol) return true;
  return spectral_norm(m) <= tol;
}

}  // namespace

SemiHilbertContext build_context(const ComplexMatrix& a, double rtol) {
  require_square(a, "build_context");
  if (!(rtol > 0.0)) throw Error(Errc::InvalidArgument, "build_context: rtol must be positive");
  const HermitianEigen eig = hermitian_eig(a, rtol * std::max(1.0, norm_max(a)));
  const std::size_t n = a.rows();
  if (n == 0) throw Error(Errc::ZeroOperator, "build_context: empty matrix");

  const double top = eig.eigenvalues.back();
  if (eig.eigenvalues.front() < -rtol * std::max(top, 0.0)) {
    throw Error(Errc::NotPositive, "build_context: A has eigenvalue " +
                                       std::to_string(eig.eigenvalues.front()));
  }
  if (!(top > 0.0)) throw Error(Errc::ZeroOperator, "build_context: A must be non-zero");

  SemiHilbertContext ctx;
  ctx.a_ = hermitian_part(a);
  ctx.rtol_ = rtol;
  ctx.scale_ = top;

  const double cutoff = rtol * top;
  std::vector<std::size_t> range;
  for (std::size_t k = 0; k < n; ++k)
    if (eig.eigenvalues[k] > cutoff) range.push_back(k);
  const std::size_t r = range.size();
  ctx.rank_ = r;

  ctx.basis_ = ComplexMatrix(n, r);
  ctx.to_range_ = ComplexMatrix(r, n);
  ctx.from_range_ = ComplexMatrix(n, r);
  for (std::size_t c = 0; c < r; ++c) {
    const double lambda = eig.eigenvalues[range[c]];
    const double root = std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex v = eig.eigenvectors(i, range[c]);
      ctx.basis_(i, c) = v;
      ctx.to_range_(c, i) = root * std::conj(v);
      ctx.from_range_(i, c) = v / root;
    }
  }

  ctx.half_ = ComplexMatrix(n, n);
  ctx.half_pinv_ = ComplexMatrix(n, n);
  ctx.a_pinv_ = ComplexMatrix(n, n);
  ctx.proj_ = ComplexMatrix(n, n);
  for (std::size_t c = 0; c < r; ++c) {
    const double lambda = eig.eigenvalues[range[c]];
    const double root = std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Complex vv = ctx.basis_(i, c) * std::conj(ctx.basis_(j, c));
        ctx.half_(i, j) += root * vv;
        ctx.half_pinv_(i, j) += vv / root;
        ctx.a_pinv_(i, j) += vv / lambda;
        ctx.proj_(i, j) += vv;
      }
    }
  }
  ctx.half_ = hermitian_part(ctx.half_);
  ctx.half_pinv_ = hermitian_part(ctx.half_pinv_);
  ctx.a_pinv_ = hermitian_part(ctx.a_pinv_);
  ctx.proj_ = hermitian_part(ctx.proj_);
  return ctx;
}

Complex a_inner(const SemiHilbertContext& ctx, std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != ctx.dim() || y.size() != ctx.dim()) {
    throw Error(Errc::DimensionMismatch, "a_inner: vector length does not match A");
  }
  const Vector ax = ctx.a() * x;
  return inner(ax, y);
}

double a_norm_vec(const SemiHilbertContext& ctx, std::span<const Complex> x) {
  return std::sqrt(std::max(0.0, a_inner(ctx, x, x).real()));
}

double tolerance(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return ctx.rtol() * ctx.scale() * (1.0 + spectral_norm(t));
}

double membership_residual(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  require_operator_shape(ctx, t, "membership");
  const ComplexMatrix x = t.adjoint() * ctx.a();
  return spectral_norm(x - ctx.proj() * x);
}

bool is_member(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  require_operator_shape(ctx, t, "is_member");
  const ComplexMatrix x = t.adjoint() * ctx.a();
  return two_norm_at_most(x - ctx.proj() * x, tolerance(ctx, t));
}

void require_member(const SemiHilbertContext& ctx, const ComplexMatrix& t, const char* what) {
  if (!is_member(ctx, t)) {
    throw Error(Errc::NotMember, std::string(what) + ": R(T^* A) is not contained in R(A) (residual " +
                                     std::to_string(membership_residual(ctx, t)) + ")");
  }
}

ComplexMatrix a_adjoint(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  require_member(ctx, t, "a_adjoint");
  return ctx.a_pinv() * (t.adjoint() * ctx.a());
}

ComplexMatrix re_a(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return 0.5 * (t + a_adjoint(ctx, t));
}

ComplexMatrix im_a(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return Complex(0.0, -0.5) * (t - a_adjoint(ctx, t));
}

ComplexMatrix compress(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  require_member(ctx, t, "compress");
  return ctx.half() * t * ctx.half_pinv();
}

ComplexMatrix reduce(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  require_member(ctx, t, "reduce");
  return ctx.to_range() * t * ctx.from_range();
}

ComplexMatrix lift(const SemiHilbertContext& ctx, const ComplexMatrix& m) {
  if (m.rows() != ctx.rank() || m.cols() != ctx.rank()) {
    throw Error(Errc::DimensionMismatch, "lift: expected an r x r matrix with r = rank(A)");
  }
  return ctx.from_range() * m * ctx.to_range();
}

double a_operator_norm(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return spectral_norm(reduce(ctx, t));
}

double omega_a(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return numerical_radius(reduce(ctx, t)).value;
}

bool is_a_selfadjoint(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  require_operator_shape(ctx, t, "is_a_selfadjoint");
  const ComplexMatrix at = ctx.a() * t;
  return two_norm_at_most(at - at.adjoint(), tolerance(ctx, t));
}

bool is_a_positive(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  if (!is_a_selfadjoint(ctx, t)) return false;
  const std::vector<double> ev = hermitian_eigenvalues(hermitian_part(ctx.a() * t), 1e300);
  return ev.front() >= -tolerance(ctx, t);
}

bool is_a_normal(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  const ComplexMatrix s = a_adjoint(ctx, t);
  const double tol = ctx.rtol() * (1.0 + spectral_norm(t)) * (1.0 + spectral_norm(s));
  return two_norm_at_most(s * t - t * s, tol);
}

bool is_a_unitary(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  const ComplexMatrix m = reduce(ctx, t);
  const ComplexMatrix id = ComplexMatrix::identity(m.rows());
  const double norm_m = spectral_norm(m);
  const double tol = 10.0 * ctx.rtol() * (1.0 + norm_m * norm_m);
  return two_norm_at_most(m.adjoint() * m - id, tol) && two_norm_at_most(m * m.adjoint() - id, tol);
}

}  // namespace shnr
