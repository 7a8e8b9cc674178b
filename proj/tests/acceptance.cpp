// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// all of them pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shnr/instances.hpp"
#include "shnr/io.hpp"
#include "shnr/radius.hpp"
#include "shnr/seminorms.hpp"
#include "shnr/suite.hpp"

using namespace shnr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ThetaOptConfig suite_theta() { return InstanceGenConfig{}.eval_settings().theta; }

// (A, T) pairs over dims {2,3,4} and the three rank profiles, `per_cell`
// each.
struct Pair {
  SemiHilbertContext ctx;
  ComplexMatrix t;
};

std::vector<Pair> random_pairs(const char* tag, int per_cell, std::vector<std::size_t> dims = {2, 3, 4}) {
  std::vector<Pair> out;
  for (std::size_t n : dims) {
    for (auto p : {RankProfile::Full, RankProfile::MinusOne, RankProfile::Half}) {
      const std::size_t r = rank_for(p, n);
      for (int i = 0; i < per_cell; ++i) {
        Rng rng(derive_seed(2024, tag, n, r, i));
        auto ctx = build_context(random_psd(n, r, rng.bits()));
        ComplexMatrix t = normalized(random_member(ctx, rng));
        out.push_back({std::move(ctx), std::move(t)});
      }
    }
  }
  return out;
}

void ac1() {
  const auto t0 = Clock::now();
  const auto ctx = build_context(ComplexMatrix::identity(3));
  const ComplexMatrix t{{0, 1, 0}, {0, 0, 0}, {0, 0, 2}};
  const double target = 2 * std::numbers::sqrt2;
  const double om = big_omega(ctx, t);
  const double w = generalized_radius(ctx, big_omega_seminorm(), t).value;
  const bool normal = is_a_normal(ctx, t);
  const double secs = seconds_since(t0);
  const bool ok = std::abs(om - target) <= 1e-4 && std::abs(w - target) <= 1e-4 && !normal && secs < 1.0;
  report("AC1", ok,
         fmt("pinned instance: Omega = %.12f, w_Omega = %.12f (2 sqrt 2 = %.12f), normal = %s, %.3f s", om, w,
             target, normal ? "true" : "false", secs));
}

void ac2() {
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& [ctx, t] : random_pairs("ac2", 100)) {
    const double wa = omega_a_fast(ctx, t).value;
    const double wo = generalized_radius(ctx, big_omega_seminorm(), t, suite_theta()).value;
    worst = std::max(worst, std::abs(wo - std::numbers::sqrt2 * wa) / wa);
    ++count;
  }
  report("AC2", worst <= 1e-6,
         fmt("w_Omega = sqrt2 w_A on %zu instances (dims 2-4, 3 rank profiles): max rel error %.2e", count,
             worst));
}

void ac3() {
  double worst = 0.0;
  std::size_t count = 0;
  const auto pairs = random_pairs("ac3", 12);  // 108 instances
  for (std::size_t k = 0; k < 100; ++k) {
    const auto& [ctx, t] = pairs[k];
    const double wa = omega_a_fast(ctx, t).value;
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double w = generalized_radius(ctx, a_alpha_seminorm(alpha), t, suite_theta()).value;
      worst = std::max(worst, std::abs(w - wa) / wa);
      ++count;
    }
  }
  report("AC3", worst <= 1e-6,
         fmt("w_{A,alpha} = w_A for alpha in {0,.25,.5,.75,1}, 100 instances (%zu radii): max rel error %.2e",
             count, worst));
}

void ac4() {
  InstanceGenConfig cfg;  // seed 42, dims {2,3,4}, 200 per cell, tol 1e-6
  const auto t0 = Clock::now();
  const SuiteReport r = run_suite(cfg);
  const double secs = seconds_since(t0);
  std::size_t instances = 0;
  double min_slack = 1.0;
  for (const auto& c : r.results) {
    instances += c.instances_run;
    min_slack = std::min(min_slack, c.min_slack);
  }
  const bool ok = r.results.size() == 27 && r.passed() && secs <= 300.0;
  report("AC4", ok,
         fmt("full catalog: %zu checks, %zu instances, %zu violations, %zu incomplete, min slack %.2e, %.1f s",
             r.results.size(), instances, r.total_violations(), r.total_incomplete(), min_slack, secs));
}

void ac5() {
  const auto i2 = build_context(ComplexMatrix::identity(2));
  const ComplexMatrix nil{{0, 1}, {0, 0}};
  const double lower_gap = std::abs(omega_a_fast(i2, nil).value - a_operator_norm(i2, nil) / 2);

  double normal_gap = 0.0, omega_gap = 0.0;
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + k % 3;
    std::vector<double> a_diag(n);
    std::vector<Complex> t_diag(n);
    for (std::size_t i = 0; i < n; ++i) {
      a_diag[i] = i + 1 < n || k % 2 == 0 ? 0.2 + rng.uniform() : 0.0;
      t_diag[i] = rng.complex_normal();
    }
    const auto ctx = build_context(ComplexMatrix::diagonal(std::span<const double>(a_diag)));
    const ComplexMatrix t = ComplexMatrix::diagonal(std::span<const Complex>(t_diag));
    if (!is_a_normal(ctx, t)) {
      normal_gap = INFINITY;
      continue;
    }
    normal_gap = std::max(normal_gap, std::abs(omega_a_fast(ctx, t).value - a_operator_norm(ctx, t)));
    const double wo = generalized_radius(ctx, big_omega_seminorm(), t).value;
    omega_gap = std::max(omega_gap, std::abs(wo - big_omega(ctx, t)));
  }
  const bool ok = lower_gap <= 1e-8 && normal_gap <= 1e-8 && omega_gap <= 1e-6;
  report("AC5", ok,
         fmt("sharp cases: |w_A - ||T||_A/2| = %.1e (nilpotent); on 30 diagonal A-normal instances "
             "max |w_A - ||T||_A| = %.1e, max |w_Omega - Omega| = %.1e",
             lower_gap, normal_gap, omega_gap));
}

void ac6() {
  double worst_w = 0.0, worst_o = 0.0;
  std::size_t count = 0;
  Rng rng(6);
  const auto pairs = random_pairs("ac6", 9, {2, 3});  // 54 instances
  for (std::size_t k = 0; k < 50; ++k) {
    const auto& [ctx, t] = pairs[k];
    const ComplexMatrix m = reduce(ctx, t);
    worst_w = std::max(worst_w, std::abs(omega_a_fast(ctx, t).value - oracle::numerical_radius_ascent(m, rng)));
    worst_o = std::max(worst_o, std::abs(big_omega(ctx, t) - big_omega_pair_form(ctx, t)));
    ++count;
  }
  report("AC6", worst_w <= 1e-4 && worst_o <= 1e-4,
         fmt("oracles on %zu instances, n <= 3: theta radius vs vector ascent %.1e, Omega grid vs pair form %.1e",
             count, worst_w, worst_o));
}

void ac7() {
  double penrose = 0.0, root = 0.0;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int k = 0; k < 100; ++k) {
      const std::size_t rank = 1 + static_cast<std::size_t>(k) % n;
      const ComplexMatrix a = random_psd(n, rank, derive_seed(7, "ac7", n, k));
      const ComplexMatrix x = pseudo_inverse(a);
      const ComplexMatrix ax = a * x;
      const ComplexMatrix xa = x * a;
      penrose = std::max({penrose, norm_max(ax * a - a), norm_max(xa * x - x), norm_max(ax.adjoint() - ax),
                          norm_max(xa.adjoint() - xa)});
      const ComplexMatrix r = psd_sqrt(a);
      root = std::max(root, norm_max(r * r - a));
      ++count;
    }
  }
  report("AC7", penrose <= 1e-10 && root <= 1e-10,
         fmt("kernels on %zu random PSD matrices, n = 1..8: max Penrose residual %.1e, max sqrt residual %.1e",
             count, penrose, root));
}

void ac8() {
  InstanceGenConfig cfg;
  cfg.dims = {2, 3};
  cfg.instances_per_check = 3;
  cfg.threads = 1;
  const std::string a = dump_report(run_suite(cfg));
  const std::string b = dump_report(run_suite(cfg));
  cfg.threads = 4;
  const std::string c = dump_report(run_suite(cfg));
  report("AC8", a == b && a == c,
         fmt("report bytes (%zu) identical across repeated runs: %s, across 1 vs 4 threads: %s", a.size(),
             a == b ? "yes" : "no", a == c ? "yes" : "no"));
}

}  // namespace

int main() {
  const std::vector<void (*)()> criteria{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(fmt("AC%zu", i + 1).c_str(), false, std::string("error: ") + e.what());
    }
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAIL" : "PASS", failures, criteria.size());
  return failures ? 1 : 0;
}
