#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "shnr/instances.hpp"
#include "shnr/semihilbert.hpp"

using namespace shnr;
using doctest::Approx;

namespace {

const ComplexMatrix kE1{{1, 0}, {0, 0}};
const ComplexMatrix kNil{{0, 1}, {0, 0}};
const ComplexMatrix kLowerBlock{{2, 0}, {3, 7}};
const ComplexMatrix kPinnedT{{0, 1, 0}, {0, 0, 0}, {0, 0, 2}};

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Parse;
}

SemiHilbertContext random_context(std::size_t n, std::size_t rank, std::uint64_t seed) {
  return build_context(random_psd(n, rank, seed));
}

}  // namespace

TEST_CASE("build_context on fixed A") {
  const auto id = build_context(ComplexMatrix::identity(2));
  CHECK(id.rank() == 2);
  CHECK(oracle::max_abs_diff(id.proj(), ComplexMatrix::identity(2)) < 1e-15);
  CHECK(oracle::max_abs_diff(id.half(), ComplexMatrix::identity(2)) < 1e-15);

  const auto d = build_context(kE1);
  CHECK(d.rank() == 1);
  CHECK(oracle::max_abs_diff(d.proj(), kE1) < 1e-15);
  CHECK(d.scale() == Approx(1.0));

  CHECK(error_code([] { build_context(ComplexMatrix{{-1, 0}, {0, 1}}); }) == Errc::NotPositive);
  CHECK(error_code([] { build_context(ComplexMatrix(2, 2)); }) == Errc::ZeroOperator);
  CHECK(error_code([] { build_context(ComplexMatrix{{1, 1}, {0, 1}}); }) == Errc::NotHermitian);
  CHECK(error_code([] { build_context(ComplexMatrix(2, 3)); }) == Errc::NonSquare);
}

TEST_CASE("context invariants on random rank-deficient A") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const auto ctx = random_context(n, r, derive_seed(3, "ctx", n, r));
      CHECK(ctx.rank() == r);
      const double tol = 10 * ctx.rtol() * ctx.scale();
      CHECK(norm_max(ctx.half() * ctx.half() - ctx.a()) <= tol);
      CHECK(norm_max(ctx.half() * ctx.half_pinv() - ctx.proj()) <= 1e-9);
      CHECK(norm_max(ctx.proj() * ctx.a() - ctx.a()) <= tol);
      CHECK(norm_max(ctx.a() * ctx.proj() - ctx.a()) <= tol);
    }
  }
}

TEST_CASE("A-inner product") {
  Rng rng(21);
  const auto id = build_context(ComplexMatrix::identity(3));
  const Vector x = random_vector(3, rng);
  const Vector y = random_vector(3, rng);
  CHECK(std::abs(a_inner(id, x, y) - inner(x, y)) < 1e-14);

  const auto d = build_context(kE1);
  const Vector e2{0, 1};
  CHECK(a_inner(d, e2, e2) == Complex(0.0));
  CHECK(a_norm_vec(d, e2) == 0.0);

  const auto ctx = random_context(4, 2, 5);
  const Vector u = random_vector(4, rng);
  const Vector v = random_vector(4, rng);
  CHECK(std::abs(a_inner(ctx, u, v) - std::conj(a_inner(ctx, v, u))) < 1e-12);
  CHECK(error_code([&] { a_inner(ctx, u, Vector(3)); }) == Errc::DimensionMismatch);
}

TEST_CASE("membership predicate") {
  const auto id = build_context(ComplexMatrix::identity(2));
  Rng rng(22);
  CHECK(is_member(id, ginibre(2, 2, rng)));

  const auto d = build_context(kE1);
  CHECK_FALSE(is_member(d, kNil));
  CHECK(membership_residual(d, kNil) == Approx(1.0));
  CHECK(is_member(d, kLowerBlock));

  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const auto ctx = random_context(n, r, derive_seed(4, "mem", n, r));
      for (int k = 0; k < 50; ++k) CHECK(is_member(ctx, random_member(ctx, rng)));
    }
  }
}

TEST_CASE("random_member leaves A invertible matrices alone and zeroes the forced block") {
  const auto d = build_context(kE1);
  const ComplexMatrix t = random_member(d, 7);
  CHECK(t(0, 1) == Complex(0.0));

  const auto full = build_context(ComplexMatrix::identity(3));
  Rng a(8), b(8);
  CHECK(random_member(full, a) == ginibre(3, 3, b));
}

TEST_CASE("A-adjoint") {
  const auto id = build_context(ComplexMatrix::identity(2));
  Rng rng(23);
  const ComplexMatrix g = ginibre(2, 2, rng);
  CHECK(oracle::max_abs_diff(a_adjoint(id, g), g.adjoint()) < 1e-14);

  const auto d = build_context(kE1);
  const ComplexMatrix s = a_adjoint(d, kLowerBlock);
  CHECK(oracle::max_abs_diff(s, ComplexMatrix{{2, 0}, {0, 0}}) < 1e-14);
  CHECK(norm_max(d.a() * s - kLowerBlock.adjoint() * d.a()) < 1e-14);
  CHECK(error_code([&] { a_adjoint(d, kNil); }) == Errc::NotMember);

  for (std::size_t r = 1; r <= 4; ++r) {
    const auto ctx = random_context(4, r, derive_seed(5, "adj", r));
    const ComplexMatrix t = random_member(ctx, rng);
    const ComplexMatrix ts = a_adjoint(ctx, t);
    const ComplexMatrix& p = ctx.proj();
    CHECK(norm_max(ctx.a() * ts - t.adjoint() * ctx.a()) < 1e-9);
    CHECK(norm_max(p * ts - ts) < 1e-9);
    CHECK(norm_max(ts * p - ts) < 1e-9);
    CHECK(norm_max(a_adjoint(ctx, ts) - p * t * p) < 1e-9);
  }
}

TEST_CASE("real and imaginary A-parts") {
  const auto id = build_context(ComplexMatrix::identity(2));
  const ComplexMatrix h{{1, {2, 1}}, {{2, -1}, -3}};
  CHECK(oracle::max_abs_diff(re_a(id, h), h) < 1e-15);
  CHECK(norm_max(im_a(id, h)) < 1e-15);

  CHECK(oracle::max_abs_diff(re_a(id, kNil), ComplexMatrix{{0, 0.5}, {0.5, 0}}) < 1e-15);
  CHECK(oracle::max_abs_diff(im_a(id, kNil), ComplexMatrix{{0, {0, -0.5}}, {{0, 0.5}, 0}}) < 1e-15);

  Rng rng(24);
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto ctx = random_context(4, r, derive_seed(6, "parts", r));
    const ComplexMatrix t = random_member(ctx, rng);
    const ComplexMatrix re = re_a(ctx, t);
    const ComplexMatrix im = im_a(ctx, t);
    CHECK(is_a_selfadjoint(ctx, re));
    CHECK(is_a_selfadjoint(ctx, im));
    const ComplexMatrix are = ctx.a() * re;
    CHECK(norm_max(are - are.adjoint()) < 1e-10);
    CHECK(norm_max(ctx.a() * (re + Complex(0, 1) * im) - ctx.a() * t) < 1e-10);
  }
}

TEST_CASE("compression") {
  const auto id = build_context(ComplexMatrix::identity(3));
  CHECK(oracle::max_abs_diff(compress(id, kPinnedT), kPinnedT) < 1e-15);
  const auto d = build_context(kE1);
  CHECK(oracle::max_abs_diff(compress(d, kLowerBlock), ComplexMatrix{{2, 0}, {0, 0}}) < 1e-15);

  Rng rng(25);
  const auto ctx = random_context(4, 3, 9);
  const ComplexMatrix t = random_member(ctx, rng);
  const ComplexMatrix tc = compress(ctx, t);
  CHECK(norm_max(compress(ctx, a_adjoint(ctx, t)) - tc.adjoint()) < 1e-10);
  for (int k = 0; k < 100; ++k) {
    const Vector x = random_vector(4, rng);
    const Vector y = ctx.half() * x;
    CHECK(std::abs(a_inner(ctx, t * x, x) - inner(tc * y, y)) < 1e-10);
  }
  // reduce and lift are inverse on members that vanish on ker A.
  const ComplexMatrix m = reduce(ctx, t);
  CHECK(m.rows() == 3);
  CHECK(norm_max(reduce(ctx, lift(ctx, m)) - m) < 1e-10);
}

TEST_CASE("A-operator norm") {
  const auto id = build_context(ComplexMatrix::identity(2));
  CHECK(a_operator_norm(id, kNil) == Approx(1.0).epsilon(1e-14));

  const auto d = build_context(kE1);
  CHECK(a_operator_norm(d, kLowerBlock) == Approx(2.0).epsilon(1e-14));
  CHECK(error_code([&] { a_operator_norm(d, kNil); }) == Errc::NotMember);

  Rng rng(26);
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto ctx = random_context(4, r, derive_seed(7, "norm", r));
    const ComplexMatrix t = random_member(ctx, rng);
    const ComplexMatrix s = random_member(ctx, rng);
    const ComplexMatrix ts = a_adjoint(ctx, t);
    const double nt = a_operator_norm(ctx, t);
    CHECK(a_operator_norm(ctx, ts * t) == Approx(nt * nt).epsilon(1e-10));
    CHECK(a_operator_norm(ctx, t * ts) == Approx(nt * nt).epsilon(1e-10));
    CHECK(a_operator_norm(ctx, ts) == Approx(nt).epsilon(1e-10));
    CHECK(a_operator_norm(ctx, t * s) <= nt * a_operator_norm(ctx, s) * (1 + 1e-12));

    // Sampling oracle: ||T x||_A / ||x||_A never exceeds the norm and gets close.
    double sampled = 0.0;
    for (int k = 0; k < 4000; ++k) {
      const Vector x = random_vector(4, rng);
      const double ax = a_norm_vec(ctx, x);
      if (ax > 1e-8) sampled = std::max(sampled, a_norm_vec(ctx, t * x) / ax);
    }
    CHECK(sampled <= nt * (1 + 1e-10));
    CHECK(sampled >= 0.95 * nt);
  }
}

TEST_CASE("A-numerical radius") {
  const auto i2 = build_context(ComplexMatrix::identity(2));
  CHECK(omega_a(i2, kNil) == Approx(0.5).epsilon(1e-12));
  const auto i3 = build_context(ComplexMatrix::identity(3));
  CHECK(omega_a(i3, kPinnedT) == Approx(2.0).epsilon(1e-12));

  Rng rng(27);
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto ctx = random_context(4, r, derive_seed(8, "omega", r));
    const ComplexMatrix t = random_member(ctx, rng);
    const double w = omega_a(ctx, t);
    const double nt = a_operator_norm(ctx, t);
    CHECK(w >= 0.5 * nt * (1 - 1e-10));
    CHECK(w <= nt * (1 + 1e-10));
    CHECK(omega_a(ctx, a_adjoint(ctx, t)) == Approx(w).epsilon(1e-8));

    const ComplexMatrix h = random_a_selfadjoint(ctx, rng);
    CHECK(omega_a(ctx, h) == Approx(a_operator_norm(ctx, h)).epsilon(1e-8));
    const ComplexMatrix nrm = random_a_normal(ctx, rng);
    CHECK(std::abs(omega_a(ctx, nrm) - a_operator_norm(ctx, nrm)) <= 1e-8);
  }
}

TEST_CASE("operator class predicates") {
  const auto id = build_context(ComplexMatrix::identity(2));
  CHECK(is_a_selfadjoint(id, ComplexMatrix{{1, {0, 1}}, {{0, -1}, 2}}));
  CHECK_FALSE(is_a_selfadjoint(id, kNil));
  CHECK(is_a_positive(id, ComplexMatrix{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_a_positive(id, ComplexMatrix{{1, 2}, {2, 1}}));
  CHECK(is_a_normal(id, ComplexMatrix{{0, -1}, {1, 0}}));
  CHECK_FALSE(is_a_normal(id, kNil));
  const double c = std::cos(0.3), s = std::sin(0.3);
  CHECK(is_a_unitary(id, ComplexMatrix{{c, -s}, {s, c}}));
  CHECK_FALSE(is_a_unitary(id, 2.0 * ComplexMatrix::identity(2)));

  const auto diag = build_context(ComplexMatrix{{3, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK(is_a_normal(diag, ComplexMatrix{{1, 0, 0}, {0, {0, 2}, 0}, {0, 0, 5}}));

  const auto i3 = build_context(ComplexMatrix::identity(3));
  CHECK_FALSE(is_a_normal(i3, kPinnedT));

  const auto d = build_context(kE1);
  CHECK(error_code([&] { is_a_normal(d, kNil); }) == Errc::NotMember);
}

TEST_CASE("constructed operator classes pass their predicates") {
  Rng rng(28);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const auto ctx = random_context(n, r, derive_seed(9, "classes", n, r));
      CHECK(is_a_selfadjoint(ctx, random_a_selfadjoint(ctx, rng)));
      CHECK(is_a_positive(ctx, random_a_positive(ctx, rng)));
      CHECK(is_a_normal(ctx, random_a_normal(ctx, rng)));
      CHECK(is_a_unitary(ctx, random_a_unitary(ctx, rng)));
      if (r >= 2) {
        const ComplexMatrix t = random_nilpotent_member(ctx, rng);
        CHECK(is_member(ctx, t));
        CHECK(norm_max(ctx.a() * t * t) < 1e-10);
      } else {
        CHECK_THROWS_AS(random_nilpotent_member(ctx, rng), Error);
      }
    }
  }
}
