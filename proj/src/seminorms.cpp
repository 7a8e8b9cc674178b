#include "shnr/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shnr/circle_search.hpp"
#include "shnr/instances.hpp"
#include "shnr/linalg.hpp"

namespace shnr {

bool SeminormFlags::covers(const SeminormFlags& required) const {
  return (!required.submultiplicative || submultiplicative) &&
         (!required.selfadjoint_invariant || selfadjoint_invariant) &&
         (!required.weakly_unitary_invariant || weakly_unitary_invariant) &&
         (!required.a_increasing || a_increasing) && (!required.power_property || power_property);
}

namespace {

constexpr double kTiny = 1e-300;

// a*x + b*y into out (same shapes).
void combine(Complex a, const ComplexMatrix& x, Complex b, const ComplexMatrix& y, ComplexMatrix& out) {
  const auto o = out.entries();
  const auto xe = x.entries();
  const auto ye = y.entries();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] = a * xe[k] + b * ye[k];
}

double dot_re(const Vector& x, const Vector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (std::conj(y[i]) * x[i]).real();
  return s;
}

// ---- ||.||_{A,alpha} --------------------------------------------------------

class AlphaObjective {
 public:
  AlphaObjective(const ComplexMatrix& m, double alpha) : m_(m), ms_(m.adjoint()), alpha_(alpha) {}

  double value(const Vector& y) const {
    const Vector my = m_ * y;
    const double q = std::abs(inner(my, y));
    const double l = norm(my);
    return alpha_ * q * q + (1.0 - alpha_) * l * l;
  }

  // Tangent component of the Wirtinger gradient at unit y.
  Vector tangent_gradient(const Vector& y) const {
    const Vector my = m_ * y;
    const Vector msy = ms_ * y;
    const Vector mmy = ms_ * my;
    const Complex q = inner(my, y);
    Vector g(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      g[i] = alpha_ * (std::conj(q) * my[i] + q * msy[i]) + (1.0 - alpha_) * mmy[i];
    const double radial = dot_re(g, y);
    for (std::size_t i = 0; i < y.size(); ++i) g[i] -= radial * y[i];
    return g;
  }

 private:
  const ComplexMatrix& m_;
  ComplexMatrix ms_;
  double alpha_;
};

struct AscentState {
  Vector y;
  double g = 0.0;
  double step = 1.0;
  bool done = false;
};

// Armijo-backtracked projected gradient steps; returns when converged or
// after `iters` steps.
void ascend(const AlphaObjective& f, AscentState& s, int iters, double grad_tol) {
  for (int it = 0; it < iters && !s.done; ++it) {
    const Vector d = f.tangent_gradient(s.y);
    const double dn = norm(d);
    if (dn <= grad_tol * std::max(s.g, kTiny)) {
      s.done = true;
      return;
    }
    double eta = s.step;
    bool moved = false;
    while (eta > 1e-20) {
      Vector trial(s.y.size());
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = s.y[i] + eta * d[i];
      normalize(trial);
      const double gt = f.value(trial);
      if (gt >= s.g + 2e-4 * eta * dn * dn) {
        s.y = std::move(trial);
        s.g = gt;
        s.step = eta * 2.0;
        moved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!moved) {
      s.done = true;
      return;
    }
  }
}

// ---- Omega ----------------------------------------------------------------

struct OmegaPoint {
  double value;
  Complex a, b;
};

}  // namespace

double alpha_norm_of(const ComplexMatrix& m, double alpha, const AlphaConfig& cfg) {
  require_square(m, "alpha_norm");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(Errc::AlphaOutOfRange, "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  const std::size_t n = m.rows();
  if (n == 0 || norm_max(m) == 0.0) return 0.0;

  const AlphaObjective f(m, alpha);
  const double scale = norm_fro(m);
  std::vector<AscentState> states;
  const auto add_start = [&](Vector y) {
    if (norm(y) == 0.0) return;
    normalize(y);
    AscentState s;
    s.g = f.value(y);
    s.y = std::move(y);
    s.step = 0.5 / (scale * scale);
    states.push_back(std::move(s));
  };

  add_start(top_singular(m).right);
  const ComplexMatrix ms = m.adjoint();
  ComplexMatrix h(n, n);
  for (int k = 0; k < 8 && static_cast<int>(states.size()) < cfg.starts; ++k) {
    const Complex e = std::polar(0.5, k * std::numbers::pi / 8.0);
    combine(e, m, std::conj(e), ms, h);
    const HermitianEigen eig = hermitian_eig(h, 1e300);
    const std::size_t pick =
        std::abs(eig.eigenvalues.front()) > std::abs(eig.eigenvalues.back()) ? 0 : n - 1;
    add_start(eig.eigenvectors.column(pick));
  }
  Rng rng(cfg.seed);
  while (static_cast<int>(states.size()) < cfg.starts) add_start(random_unit_vector(n, rng));

  for (auto& s : states) ascend(f, s, cfg.warmup_iters, cfg.grad_tol);
  std::stable_sort(states.begin(), states.end(),
                   [](const AscentState& l, const AscentState& r) { return l.g > r.g; });
  double best = 0.0;
  const std::size_t keep = std::min<std::size_t>(states.size(), std::max(cfg.survivors, 1));
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (k < keep) ascend(f, states[k], cfg.max_iters, cfg.grad_tol);
    best = std::max(best, states[k].g);
  }
  return std::sqrt(best);
}

double big_omega_of(const ComplexMatrix& m, const OmegaConfig& cfg) {
  require_square(m, "big_omega");
  if (cfg.t_steps < 2 || cfg.psi_steps < 1 || cfg.starts < 1) {
    throw Error(Errc::InvalidArgument, "OmegaConfig: need t_steps >= 2, psi_steps >= 1, starts >= 1");
  }
  if (m.rows() == 0 || norm_max(m) == 0.0) return 0.0;
  const ComplexMatrix ms = m.adjoint();
  ComplexMatrix w(m.rows(), m.cols());
  const auto sigma = [&](Complex a, Complex b) {
    combine(a, m, b, ms, w);
    return top_singular(w);
  };
  const auto sigma_value = [&](Complex a, Complex b) {
    combine(a, m, b, ms, w);
    return spectral_norm(w);
  };

  std::vector<OmegaPoint> grid;
  const double pi = std::numbers::pi;
  for (int i = 0; i < cfg.t_steps; ++i) {
    const double t = i * (0.5 * pi) / (cfg.t_steps - 1);
    const bool pole = (i == 0 || i == cfg.t_steps - 1);
    for (int k = 0; k < (pole ? 1 : cfg.psi_steps); ++k) {
      const Complex a = std::cos(t);
      const Complex b = std::polar(std::sin(t), 2.0 * pi * k / cfg.psi_steps);
      grid.push_back({sigma_value(a, b), a, b});
    }
  }
  std::stable_sort(grid.begin(), grid.end(),
                   [](const OmegaPoint& l, const OmegaPoint& r) { return l.value > r.value; });

  double best = grid.front().value;
  const std::size_t starts = std::min<std::size_t>(grid.size(), cfg.starts);
  for (std::size_t s = 0; s < starts; ++s) {
    Complex a = grid[s].a;
    Complex b = grid[s].b;
    for (int it = 0; it < cfg.max_iters; ++it) {
      const TopSingular ts = sigma(a, b);
      const Complex z1 = inner(m * ts.right, ts.left);
      const Complex z2 = inner(ms * ts.right, ts.left);
      const double nz = std::hypot(std::abs(z1), std::abs(z2));
      best = std::max({best, ts.sigma, nz});
      if (!(nz > ts.sigma * (1.0 + cfg.rel_tol))) break;
      a = std::conj(z1) / nz;
      b = std::conj(z2) / nz;
    }
  }
  return best;
}

double big_omega_pair_of(const ComplexMatrix& m, const PairFormConfig& cfg) {
  require_square(m, "big_omega_pair_form");
  const std::size_t n = m.rows();
  if (n == 0 || norm_max(m) == 0.0) return 0.0;
  const ComplexMatrix ms = m.adjoint();
  ComplexMatrix pair(n, 2);

  // Best y for fixed x (or x for fixed y): top left singular vector of [p q].
  const auto best_partner = [&](const Vector& p, const Vector& q) {
    pair.set_column(0, p);
    pair.set_column(1, q);
    return top_singular(pair);
  };

  Rng rng(cfg.seed);
  double best = 0.0;
  for (int s = 0; s < cfg.starts; ++s) {
    Vector x = s == 0 ? top_singular(m).right : random_unit_vector(n, rng);
    double prev = -1.0;
    for (int it = 0; it < cfg.max_iters; ++it) {
      const TopSingular for_y = best_partner(m * x, ms * x);
      const Vector& y = for_y.left;
      // |y^* M x| = |<x, M^* y>| and |y^* M^* x| = |<x, M y>|.
      const TopSingular for_x = best_partner(ms * y, m * y);
      x = for_x.left;
      best = std::max({best, for_y.sigma, for_x.sigma});
      if (for_x.sigma - prev <= cfg.rel_tol * for_x.sigma) break;
      prev = for_x.sigma;
    }
  }
  return best;
}

double gamma_of(const ComplexMatrix& m) {
  require_square(m, "gamma_a");
  const ComplexMatrix ms = m.adjoint();
  const double first = std::sqrt(spectral_norm(m * ms + ms * m));
  const double norm_m = spectral_norm(m);
  const double second = std::sqrt(norm_m * norm_m + numerical_radius(m * m).value);
  return std::min(first, second);
}

double alpha_norm(const SemiHilbertContext& ctx, const ComplexMatrix& t, double alpha) {
  return alpha_norm_of(reduce(ctx, t), alpha);
}

double big_omega(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return big_omega_of(reduce(ctx, t));
}

double big_omega_pair_form(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                           const PairFormConfig& cfg) {
  return big_omega_pair_of(reduce(ctx, t), cfg);
}

double gamma_a(const SemiHilbertContext& ctx, const ComplexMatrix& t) {
  return gamma_of(reduce(ctx, t));
}

SeminormDescriptor a_norm_seminorm() {
  SeminormDescriptor d;
  d.id = "a_norm";
  d.flags = {true, true, true, true, true};
  d.evaluate = [](const SemiHilbertContext& ctx, const ComplexMatrix& t) {
    return a_operator_norm(ctx, t);
  };
  d.on_range = [](const ComplexMatrix& m) { return spectral_norm(m); };
  return d;
}

SeminormDescriptor a_alpha_seminorm(double alpha, const AlphaConfig& cfg) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(Errc::AlphaOutOfRange, "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  SeminormDescriptor d;
  d.id = "a_alpha";
  d.alpha = alpha;
  d.flags.weakly_unitary_invariant = true;
  // Equal to ||.||_A on A-selfadjoint arguments, which is all these two
  // properties look at.
  d.flags.a_increasing = true;
  d.flags.power_property = true;
  d.on_range = [alpha, cfg](const ComplexMatrix& m) { return alpha_norm_of(m, alpha, cfg); };
  d.evaluate = [alpha, cfg](const SemiHilbertContext& ctx, const ComplexMatrix& t) {
    return alpha_norm_of(reduce(ctx, t), alpha, cfg);
  };
  return d;
}

SeminormDescriptor big_omega_seminorm(const OmegaConfig& cfg) {
  SeminormDescriptor d;
  d.id = "big_omega";
  d.flags.selfadjoint_invariant = true;
  d.flags.weakly_unitary_invariant = true;
  d.on_range = [cfg](const ComplexMatrix& m) { return big_omega_of(m, cfg); };
  d.evaluate = [cfg](const SemiHilbertContext& ctx, const ComplexMatrix& t) {
    return big_omega_of(reduce(ctx, t), cfg);
  };
  return d;
}

SeminormDescriptor big_omega_pair_seminorm(const PairFormConfig& cfg) {
  SeminormDescriptor d = big_omega_seminorm();
  d.id = "big_omega_pair";
  d.on_range = [cfg](const ComplexMatrix& m) { return big_omega_pair_of(m, cfg); };
  d.evaluate = [cfg](const SemiHilbertContext& ctx, const ComplexMatrix& t) {
    return big_omega_pair_of(reduce(ctx, t), cfg);
  };
  return d;
}

bool ProbeReport::consistent_with(const SeminormFlags& declared, double tol) const {
  if (nonnegativity.max_violation > tol || homogeneity.max_violation > tol ||
      triangle.max_violation > tol) {
    return false;
  }
  const auto ok = [tol](bool flag, const PropertyProbe& p) { return !flag || p.max_violation <= tol; };
  return ok(declared.submultiplicative, submultiplicative) &&
         ok(declared.selfadjoint_invariant, selfadjoint_invariant) &&
         ok(declared.weakly_unitary_invariant, weakly_unitary_invariant) &&
         ok(declared.a_increasing, a_increasing) && ok(declared.power_property, power_property);
}

namespace {

void record(PropertyProbe& p, double violation) {
  ++p.trials;
  p.max_violation = std::max(p.max_violation, violation);
}

double rel_excess(double lhs, double rhs) { return std::max(0.0, lhs - rhs) / std::max(rhs, kTiny); }

double rel_gap(double x, double y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), kTiny});
}

}  // namespace

ProbeReport probe_properties(const SemiHilbertContext& ctx, const SeminormDescriptor& nd, int trials,
                             std::uint64_t seed) {
  if (trials < 1) throw Error(Errc::InvalidArgument, "probe_properties: trials must be >= 1");
  const auto n = [&](const ComplexMatrix& t) { return nd.evaluate(ctx, t); };
  ProbeReport rep;
  for (int k = 0; k < trials; ++k) {
    Rng rng(derive_seed(seed, "probe", static_cast<std::uint64_t>(k)));
    const ComplexMatrix t = normalized(random_member(ctx, rng));
    const ComplexMatrix s = normalized(random_member(ctx, rng));
    const double nt = n(t);
    const double ns = n(s);

    record(rep.nonnegativity, std::max(0.0, -nt));
    const Complex lambda = rng.complex_normal() * 2.0;
    record(rep.homogeneity, rel_gap(n(lambda * t), std::abs(lambda) * nt));
    record(rep.triangle, rel_excess(n(t + s), nt + ns));
    record(rep.submultiplicative, rel_excess(n(t * s), nt * ns));
    record(rep.selfadjoint_invariant, rel_gap(n(a_adjoint(ctx, t)), nt));

    const ComplexMatrix u = random_a_unitary(ctx, rng);
    record(rep.weakly_unitary_invariant, rel_gap(n(a_adjoint(ctx, u) * t * u), nt));

    const ComplexMatrix lower = normalized(random_a_positive(ctx, rng));
    const ComplexMatrix upper = lower + rng.uniform() * normalized(random_a_positive(ctx, rng));
    record(rep.a_increasing, rel_excess(n(lower), n(upper)));

    const ComplexMatrix h = normalized(random_a_selfadjoint(ctx, rng));
    const double nh = n(h);
    const ComplexMatrix h2 = h * h;
    const ComplexMatrix hp = (k % 2 == 0) ? h2 : ComplexMatrix(h2 * h);
    record(rep.power_property, rel_gap(n(hp), std::pow(nh, k % 2 == 0 ? 2 : 3)));
  }
  return rep;
}

}  // namespace shnr
