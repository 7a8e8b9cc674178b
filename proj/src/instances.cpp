#include "shnr/instances.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shnr/linalg.hpp"

namespace shnr {

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double s = std::sqrt(0.5);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t i, std::uint64_t j,
                          std::uint64_t k) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t s = splitmix64(base ^ h);
  s = splitmix64(s ^ i);
  s = splitmix64(s ^ (j + 0x1234567ULL));
  return splitmix64(s ^ (k + 0x89abcdefULL));
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (auto& e : g.entries()) e = rng.complex_normal();
  return g;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix q = ginibre(n, n, rng);
  // Modified Gram-Schmidt, twice for stability; redraw degenerate columns.
  for (std::size_t j = 0; j < n; ++j) {
    for (;;) {
      Vector v = q.column(j);
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < j; ++k) {
          const Vector qk = q.column(k);
          const Complex c = inner(v, qk);
          for (std::size_t i = 0; i < n; ++i) v[i] -= c * qk[i];
        }
      }
      const double len = norm(v);
      if (len > 1e-8) {
        for (auto& e : v) e /= len;
        q.set_column(j, v);
        break;
      }
      for (std::size_t i = 0; i < n; ++i) q(i, j) = rng.complex_normal();
    }
  }
  return q;
}

Vector random_vector(std::size_t n, Rng& rng) {
  Vector v(n);
  for (auto& e : v) e = rng.complex_normal();
  return v;
}

Vector random_unit_vector(std::size_t n, Rng& rng) {
  Vector v = random_vector(n, rng);
  while (norm(v) == 0.0) v = random_vector(n, rng);
  normalize(v);
  return v;
}

ComplexMatrix random_psd(std::size_t n, std::size_t rank, std::uint64_t seed) {
  if (rank < 1 || rank > n) {
    throw Error(Errc::RankOutOfRange, "random_psd: rank " + std::to_string(rank) +
                                          " outside [1, " + std::to_string(n) + "]");
  }
  Rng rng(seed);
  const ComplexMatrix q = random_unitary(n, rng);
  std::vector<double> spectrum(n, 0.0);
  for (std::size_t k = 0; k < rank; ++k) spectrum[k] = 0.2 + 0.8 * rng.uniform();
  return hermitian_part(q * ComplexMatrix::diagonal(spectrum) * q.adjoint());
}

namespace {

ComplexMatrix kernel_complement(const SemiHilbertContext& ctx) {
  return ComplexMatrix::identity(ctx.dim()) - ctx.proj();
}

}  // namespace

ComplexMatrix random_member(const SemiHilbertContext& ctx, Rng& rng) {
  const ComplexMatrix g = ginibre(ctx.dim(), ctx.dim(), rng);
  return g - ctx.proj() * g * kernel_complement(ctx);
}

ComplexMatrix random_member(const SemiHilbertContext& ctx, std::uint64_t seed) {
  Rng rng(seed);
  return random_member(ctx, rng);
}

ComplexMatrix random_a_selfadjoint(const SemiHilbertContext& ctx, Rng& rng) {
  return re_a(ctx, random_member(ctx, rng));
}

ComplexMatrix random_a_positive(const SemiHilbertContext& ctx, Rng& rng) {
  const ComplexMatrix b = ginibre(ctx.rank(), ctx.rank(), rng);
  const ComplexMatrix q = kernel_complement(ctx);
  return lift(ctx, b * b.adjoint()) + q * ginibre(ctx.dim(), ctx.dim(), rng) * q;
}

ComplexMatrix random_a_unitary(const SemiHilbertContext& ctx, Rng& rng) {
  return lift(ctx, random_unitary(ctx.rank(), rng)) + kernel_complement(ctx);
}

ComplexMatrix random_a_normal(const SemiHilbertContext& ctx, Rng& rng) {
  const std::size_t r = ctx.rank();
  const ComplexMatrix u = random_unitary(r, rng);
  std::vector<Complex> d(r);
  for (auto& e : d) e = rng.complex_normal();
  const ComplexMatrix q = kernel_complement(ctx);
  return lift(ctx, u * ComplexMatrix::diagonal(d) * u.adjoint()) +
         q * ginibre(ctx.dim(), ctx.dim(), rng) * q;
}

ComplexMatrix random_nilpotent_member(const SemiHilbertContext& ctx, Rng& rng) {
  const std::size_t r = ctx.rank();
  if (r < 2) throw Error(Errc::RankOutOfRange, "random_nilpotent_member: needs rank(A) >= 2");
  const ComplexMatrix w = random_unitary(r, rng);
  const ComplexMatrix core = ComplexMatrix::outer(w.column(0), w.column(1));
  return lift(ctx, core) + kernel_complement(ctx) * ginibre(ctx.dim(), ctx.dim(), rng);
}

ComplexMatrix normalized(ComplexMatrix t) {
  const double s = spectral_norm(t);
  if (s > 0.0) t *= 1.0 / s;
  return t;
}

}  // namespace shnr
