#include "shnr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace shnr {
namespace {

constexpr int kMaxSweeps = 80;

// Unitary 2x2 rotation acting on coordinates (p, q). Built as D*J where
// D = diag(1, conj(phase)) makes the (p,q) entry real and J is the real
// Jacobi rotation that annihilates it.
struct Rotation {
  Complex pp, pq, qp, qq;
};

Rotation make_rotation(double app, double aqq, Complex apq) {
  const double mag = std::abs(apq);
  const Complex phase = apq / mag;
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  return {c, s, -s * std::conj(phase), c * std::conj(phase)};
}

// M <- M G on columns p, q.
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mp = m(k, p);
    const Complex mq = m(k, q);
    m(k, p) = mp * g.pp + mq * g.qp;
    m(k, q) = mp * g.pq + mq * g.qq;
  }
}

// M <- G^* M on rows p, q.
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mp = m(p, k);
    const Complex mq = m(q, k);
    m(p, k) = std::conj(g.pp) * mp + std::conj(g.qp) * mq;
    m(q, k) = std::conj(g.pq) * mp + std::conj(g.qq) * mq;
  }
}

ComplexMatrix checked_symmetrize(const ComplexMatrix& m, double tol) {
  require_square(m, "hermitian_eig");
  const std::size_t n = m.rows();
  ComplexMatrix h(n, n);
  double deviation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      deviation = std::max(deviation, std::abs(m(i, j) - std::conj(m(j, i))));
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  if (deviation > tol) {
    throw Error(Errc::NotHermitian,
                "max |M - M^*| = " + std::to_string(deviation) + " exceeds " + std::to_string(tol));
  }
  return h;
}

// Cyclic Jacobi on a Hermitian matrix (already symmetrized). Returns the
// diagonalized matrix in `a`; accumulates rotations into `v` if non-null.
void jacobi_sweeps(ComplexMatrix& a, ComplexMatrix* v) {
  const std::size_t n = a.rows();
  const double fro2 = std::pow(norm_fro(a), 2);
  if (fro2 == 0.0) return;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= 1e-31 * fro2) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (std::abs(apq) == 0.0) continue;
        const Rotation g = make_rotation(a(p, p).real(), a(q, q).real(), apq);
        rotate_columns(a, p, q, g);
        rotate_rows(a, p, q, g);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (v != nullptr) rotate_columns(*v, p, q, g);
      }
    }
  }
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol) {
  ComplexMatrix a = checked_symmetrize(m, tol);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi_sweeps(a, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  ComplexMatrix a = checked_symmetrize(m, tol);
  jacobi_sweeps(a, nullptr);
  std::vector<double> ev(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

Svd svd(const ComplexMatrix& m) {
  if (m.rows() < m.cols()) {
    Svd t = svd(m.adjoint());
    return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
  }
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  ComplexMatrix u = m;
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(u(k, p));
          beta += std::norm(u(k, q));
          gamma += std::conj(u(k, p)) * u(k, q);
        }
        if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || std::abs(gamma) == 0.0) continue;
        rotated = true;
        const Rotation g = make_rotation(alpha, beta, gamma);
        rotate_columns(u, p, q, g);
        rotate_columns(v, p, q, g);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = norm(u.column(j));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  // Columns belonging to zero singular values are left as zero vectors in U.
  Svd out{ComplexMatrix(rows, n), std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.sigma[k] = sigma[j];
    for (std::size_t i = 0; i < rows; ++i)
      out.u(i, k) = sigma[j] > 0.0 ? u(i, j) / sigma[j] : Complex{};
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) { return svd(m).sigma; }

double spectral_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  if (m.rows() > 8 || m.cols() > 8) return svd(m).sigma.front();
  // Small case: largest eigenvalue of the Gram matrix, no vectors needed.
  ComplexMatrix a = m.rows() < m.cols() ? m * m.adjoint() : m.adjoint() * m;
  a = hermitian_part(a);
  jacobi_sweeps(a, nullptr);
  double top = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) top = std::max(top, a(i, i).real());
  return std::sqrt(top);
}

TopSingular top_singular(const ComplexMatrix& m) {
  const ComplexMatrix gram = m.adjoint() * m;
  ComplexMatrix a = hermitian_part(gram);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi_sweeps(a, &v);
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (a(i, i).real() > a(best, best).real()) best = i;

  TopSingular out;
  out.sigma = std::sqrt(std::max(a(best, best).real(), 0.0));
  out.right = v.column(best);
  out.left = m * out.right;
  const double len = norm(out.left);
  if (len > 0.0) {
    for (auto& e : out.left) e /= len;
    out.sigma = len;
  } else {
    out.left.assign(m.rows(), Complex{});
    if (!out.left.empty()) out.left[0] = 1.0;
  }
  return out;
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double rtol) {
  if (!(rtol > 0.0)) throw Error(Errc::InvalidArgument, "pseudo_inverse: rtol must be positive");
  const Svd s = svd(m);
  ComplexMatrix out(m.cols(), m.rows());
  if (s.sigma.empty() || s.sigma.front() == 0.0) return out;
  const double cutoff = rtol * s.sigma.front();
  for (std::size_t k = 0; k < s.sigma.size(); ++k) {
    if (s.sigma[k] <= cutoff) break;
    const double inv = 1.0 / s.sigma[k];
    for (std::size_t i = 0; i < m.cols(); ++i)
      for (std::size_t j = 0; j < m.rows(); ++j) out(i, j) += s.v(i, k) * inv * std::conj(s.u(j, k));
  }
  return out;
}

namespace {

HermitianEigen checked_psd_eig(const ComplexMatrix& a, double rtol, const char* what) {
  require_square(a, what);
  HermitianEigen e = hermitian_eig(a, rtol * std::max(1.0, norm_max(a)));
  const double top = e.eigenvalues.empty() ? 0.0 : std::max(e.eigenvalues.back(), 0.0);
  if (!e.eigenvalues.empty() && e.eigenvalues.front() < -rtol * top) {
    throw Error(Errc::NotPositive, std::string(what) + ": eigenvalue " +
                                       std::to_string(e.eigenvalues.front()) +
                                       " is below -rtol*lambda_max");
  }
  return e;
}

}  // namespace

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double rtol) {
  const HermitianEigen e = checked_psd_eig(a, rtol, "psd_sqrt");
  const std::size_t n = a.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(e.eigenvalues[k], 0.0));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += e.eigenvectors(i, k) * root * std::conj(e.eigenvectors(j, k));
  }
  return hermitian_part(out);
}

ComplexMatrix range_projector(const ComplexMatrix& a, double rtol) {
  const HermitianEigen e = checked_psd_eig(a, rtol, "range_projector");
  const std::size_t n = a.rows();
  ComplexMatrix out(n, n);
  if (n == 0) return out;
  const double cutoff = rtol * std::max(e.eigenvalues.back(), 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(e.eigenvalues[k] > cutoff)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += e.eigenvectors(i, k) * std::conj(e.eigenvectors(j, k));
  }
  return hermitian_part(out);
}

}  // namespace shnr
