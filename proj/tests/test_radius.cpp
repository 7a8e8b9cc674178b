#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "shnr/instances.hpp"
#include "shnr/radius.hpp"
#include "shnr/seminorms.hpp"

using namespace shnr;
using doctest::Approx;

namespace {

const ComplexMatrix kNil{{0, 1}, {0, 0}};

SemiHilbertContext ctx_for(std::size_t n, std::size_t r, std::uint64_t salt) {
  return build_context(random_psd(n, r, derive_seed(88, "radius-tests", n, r, salt)));
}

ThetaOptConfig coarse() {
  ThetaOptConfig c;
  c.grid_points = 32;
  return c;
}

}  // namespace

TEST_CASE("theta config validation") {
  ThetaOptConfig c;
  c.grid_points = 4;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.refine_tol = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
  CHECK_NOTHROW(ThetaOptConfig{}.validate());
}

TEST_CASE("golden section finds an interior maximum") {
  const auto [x, v] = golden_section_max([](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0, 1e-10);
  CHECK(x == Approx(0.3).epsilon(1e-8));
  CHECK(v == Approx(0.0));
}

TEST_CASE("circle search certifies its gap") {
  // f(theta) = |cos theta a + sin theta b| for a 2-vector norm: the exact
  // maximum of the Euclidean case is the largest singular value of [a b].
  const double a0 = 1.0, a1 = 0.2, b0 = -0.7, b1 = 1.3;
  const auto f = [&](double t) {
    return std::hypot(std::cos(t) * a0 + std::sin(t) * b0, std::cos(t) * a1 + std::sin(t) * b1);
  };
  const double exact = spectral_norm(ComplexMatrix{{a0, b0}, {a1, b1}});
  for (int grid : {8, 32, 720}) {
    ThetaOptConfig cfg;
    cfg.grid_points = grid;
    const CircleMax m = maximize_seminorm_on_circle(f, cfg);
    CHECK(m.value <= exact * (1 + 1e-15));
    CHECK(exact - m.value <= m.bound + 1e-15);
    CHECK(m.value == Approx(exact).epsilon(1e-11));
  }
  CHECK(maximize_seminorm_on_circle([](double) { return 0.0; }, {}).value == 0.0);
}

TEST_CASE("A-norm radius equals the A-numerical radius") {
  const auto i2 = build_context(ComplexMatrix::identity(2));
  CHECK(omega_a_fast(i2, kNil).value == Approx(0.5).epsilon(1e-12));
  CHECK(generalized_radius(i2, a_norm_seminorm(), kNil).value == Approx(0.5).epsilon(1e-12));

  // Normal T with A = I: the spectral radius.
  const ComplexMatrix d = ComplexMatrix::diagonal(std::vector<Complex>{{1, 1}, -0.5, {0, 2}});
  const auto i3 = build_context(ComplexMatrix::identity(3));
  CHECK(omega_a_fast(i3, d).value == Approx(2.0).epsilon(1e-12));

  Rng rng(41);
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto ctx = ctx_for(4, r, 0);
    const ComplexMatrix t = random_member(ctx, rng);
    const double fast = omega_a_fast(ctx, t).value;
    CHECK(generalized_radius(ctx, a_norm_seminorm(), t).value == Approx(fast).epsilon(1e-8));
    CHECK(omega_a(ctx, t) == Approx(fast).epsilon(1e-12));
  }
}

TEST_CASE("theta radius agrees with the vector-ascent oracle at n <= 3") {
  Rng rng(42);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const auto ctx = ctx_for(n, r, 1);
      for (int rep = 0; rep < 4; ++rep) {
        const ComplexMatrix t = random_member(ctx, rng);
        const double w = omega_a_fast(ctx, t).value;
        const double o = oracle::numerical_radius_ascent(reduce(ctx, t), rng);
        CHECK(std::abs(w - o) <= 1e-4 * std::max(1.0, w));
      }
    }
  }
}

TEST_CASE("re and im forms agree") {
  Rng rng(43);
  for (const auto& n : {a_norm_seminorm(), big_omega_seminorm(), a_alpha_seminorm(0.5)}) {
    for (std::size_t r = 1; r <= 3; ++r) {
      const auto ctx = ctx_for(3, r, 2);
      const ComplexMatrix t = random_member(ctx, rng);
      const double re = generalized_radius(ctx, n, t, coarse()).value;
      const double im = generalized_radius_im_form(ctx, n, t, coarse()).value;
      CHECK(re == Approx(im).epsilon(1e-6));
    }
  }
  const auto i2 = build_context(ComplexMatrix::identity(2));
  const ComplexMatrix h{{2, {0, 1}}, {{0, -1}, -1}};
  CHECK(generalized_radius_im_form(i2, a_norm_seminorm(), h).value == Approx(spectral_norm(h)).epsilon(1e-10));
  CHECK(generalized_radius(i2, a_norm_seminorm(), h).value == Approx(spectral_norm(h)).epsilon(1e-10));
  CHECK(generalized_radius_im_form(i2, big_omega_seminorm(), ComplexMatrix(2, 2)).value == 0.0);
}

TEST_CASE("radius of the other seminorms") {
  Rng rng(44);
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto ctx = ctx_for(4, r, 3);
    const ComplexMatrix t = random_member(ctx, rng);
    const double w = omega_a_fast(ctx, t).value;
    CHECK(generalized_radius(ctx, big_omega_seminorm(), t, coarse()).value ==
          Approx(std::numbers::sqrt2 * w).epsilon(1e-6));
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0})
      CHECK(generalized_radius(ctx, a_alpha_seminorm(alpha), t, coarse()).value == Approx(w).epsilon(1e-6));
  }
}

TEST_CASE("phase, adjoint and projection invariance") {
  Rng rng(45);
  const auto n = a_norm_seminorm();
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto ctx = ctx_for(4, r, 4);
    const ComplexMatrix t = random_member(ctx, rng);
    const double w = generalized_radius(ctx, n, t).value;
    const Complex phase = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
    CHECK(generalized_radius(ctx, n, phase * t).value == Approx(w).epsilon(1e-8));
    CHECK(generalized_radius(ctx, n, a_adjoint(ctx, t)).value == Approx(w).epsilon(1e-8));
    CHECK(generalized_radius(ctx, n, ctx.proj() * t).value == Approx(w).epsilon(1e-8));
    CHECK(generalized_radius(ctx, n, t * ctx.proj()).value == Approx(w).epsilon(1e-8));
    const ComplexMatrix u = random_a_unitary(ctx, rng);
    CHECK(generalized_radius(ctx, n, a_adjoint(ctx, u) * t * u).value == Approx(w).epsilon(1e-6));
  }
}

TEST_CASE("the radius is itself a seminorm") {
  Rng rng(46);
  const auto n = big_omega_seminorm();
  for (std::size_t r = 1; r <= 3; ++r) {
    const auto ctx = ctx_for(3, r, 5);
    const ComplexMatrix t = random_member(ctx, rng);
    const ComplexMatrix s = random_member(ctx, rng);
    const double wt = generalized_radius(ctx, n, t, coarse()).value;
    const double ws = generalized_radius(ctx, n, s, coarse()).value;
    CHECK(generalized_radius(ctx, n, t + s, coarse()).value <= (wt + ws) * (1 + 1e-7));
    CHECK(generalized_radius(ctx, n, Complex(-2.5, 1) * t, coarse()).value ==
          Approx(std::abs(Complex(-2.5, 1)) * wt).epsilon(1e-7));
  }
}

TEST_CASE("non-members are rejected") {
  const auto d = build_context(ComplexMatrix{{1, 0}, {0, 0}});
  CHECK_THROWS_AS(generalized_radius(d, a_norm_seminorm(), kNil), Error);
  CHECK_THROWS_AS(omega_a_fast(d, kNil), Error);
  CHECK(generalized_radius(d, big_omega_seminorm(), ComplexMatrix(2, 2)).value == 0.0);
}
