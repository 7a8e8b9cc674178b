// Command-line front end: compute, check, membership, replay.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shnr/checks.hpp"
#include "shnr/io.hpp"
#include "shnr/radius.hpp"
#include "shnr/seminorms.hpp"
#include "shnr/semihilbert.hpp"
#include "shnr/suite.hpp"

namespace {

using namespace shnr;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotMember = 3;
constexpr int kExitBadA = 4;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::NotMember: return kExitNotMember;
    case Errc::NotPositive:
    case Errc::NotHermitian:
    case Errc::ZeroOperator: return kExitBadA;
    default: return kExitUsage;
  }
}

double rtol_from_env() {
  const char* s = std::getenv("SHNR_RTOL");
  if (!s || !*s) return kDefaultRtol;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (*end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw Error(Errc::InvalidArgument, std::string("SHNR_RTOL must be a positive number, got '") + s + "'");
  }
  return v;
}

void print_scalar(double v, bool full) {
  if (full) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);  // shortest round-trip form
    std::printf("%.*s\n", static_cast<int>(res.ptr - buf), buf);
  } else {
    std::printf("%#.12g\n", v);
  }
}

struct ComputeArgs {
  std::string a_path, t_path, quantity;
  std::optional<double> alpha;
  std::string seminorm = "a_norm";
  bool full = false;
  int theta_grid = 720;
};

int cmd_compute(const ComputeArgs& args) {
  const SemiHilbertContext ctx = build_context(read_matrix_file(args.a_path), rtol_from_env());
  const ComplexMatrix t = read_matrix_file(args.t_path);
  const std::string& q = args.quantity;
  ThetaOptConfig theta;
  theta.grid_points = args.theta_grid;
  theta.validate();

  if (q == "adjoint" || q == "re_a" || q == "im_a") {
    const ComplexMatrix m = q == "adjoint" ? a_adjoint(ctx, t) : q == "re_a" ? re_a(ctx, t) : im_a(ctx, t);
    std::cout << matrix_to_json(m).dump(2) << '\n';
    return kExitOk;
  }
  double v = 0.0;
  if (q == "norm_a") {
    v = a_operator_norm(ctx, t);
  } else if (q == "omega_a") {
    v = omega_a_fast(ctx, t, theta).value;
  } else if (q == "alpha_norm") {
    if (!args.alpha) throw Error(Errc::InvalidArgument, "alpha_norm needs --alpha");
    v = alpha_norm_of(reduce(ctx, t), *args.alpha);
  } else if (q == "big_omega") {
    v = big_omega(ctx, t);
  } else if (q == "gamma_a") {
    v = gamma_a(ctx, t);
  } else if (q == "gen_radius") {
    const SeminormDescriptor n = seminorm_by_id(args.seminorm, args.alpha);
    v = generalized_radius(ctx, n, t, theta).value;
  } else {
    throw Error(Errc::InvalidArgument, "unknown quantity '" + q + "'");
  }
  print_scalar(v, args.full);
  return kExitOk;
}

int cmd_membership(const std::string& a_path, const std::string& t_path) {
  const SemiHilbertContext ctx = build_context(read_matrix_file(a_path), rtol_from_env());
  const ComplexMatrix t = read_matrix_file(t_path);
  const bool member = is_member(ctx, t);
  std::printf("%s residual %.6g\n", member ? "member" : "non-member", membership_residual(ctx, t));
  return member ? kExitOk : kExitNotMember;
}

struct CheckArgs {
  std::vector<std::size_t> dims{2, 3, 4};
  std::size_t instances = 200;
  std::uint64_t seed = 42;
  std::vector<std::string> ranks{"full", "n-1", "half"};
  double tol = 1e-6;
  std::vector<std::string> only;
  std::string out;
  unsigned threads = 0;
  int theta_grid = 32;
  bool quiet = false;
};

int cmd_check(const CheckArgs& args) {
  InstanceGenConfig cfg;
  cfg.dims = args.dims;
  cfg.instances_per_check = args.instances;
  cfg.seed = args.seed;
  cfg.rank_profiles.clear();
  for (const auto& r : args.ranks) cfg.rank_profiles.push_back(parse_rank_profile(r));
  cfg.tol_rel = args.tol;
  cfg.only = args.only;
  cfg.threads = args.threads;
  cfg.theta_grid = args.theta_grid;
  cfg.rtol = rtol_from_env();
  cfg.validate();

  const SuiteReport report = run_suite(cfg);
  if (!args.out.empty()) write_report_file(args.out, report);
  if (!args.quiet) {
    for (const auto& r : report.results) {
      std::printf("%-4s instances %6zu  violations %zu  incomplete %zu  min_slack %+.3e", r.id.c_str(),
                  r.instances_run, r.violations, r.incomplete, r.min_slack);
      if (find_check(r.id).kind == CheckKind::Conditional) {
        std::printf("  premise %zu verified %zu", r.premise_held, r.implication_verified);
      }
      std::printf("\n");
      for (const auto& [k, v] : r.observations) std::printf("     %s = %.12g\n", k.c_str(), v);
      for (const auto& e : r.errors) std::printf("     incomplete: %s\n", e.c_str());
    }
    std::printf("%s: %zu violations, %zu incomplete\n", report.passed() ? "PASS" : "FAIL",
                report.total_violations(), report.total_incomplete());
  }
  return report.passed() ? kExitOk : kExitViolation;
}

int cmd_replay(const std::string& path) {
  const SuiteReport report = read_report_file(path);
  const EvalSettings settings = report.config.eval_settings();
  bool ok = true;
  for (const auto& r : report.results) {
    if (!r.witness) continue;
    const double slack = replay_witness(r.id, *r.witness, settings);
    const double diff = std::abs(slack - r.witness->comparison.slack);
    const bool same = diff <= 1e-12;
    ok = ok && same;
    std::printf("%-4s %s/%s recorded %+.6e replayed %+.6e %s\n", r.id.c_str(),
                r.witness->comparison.seminorm.c_str(), r.witness->comparison.label.c_str(),
                r.witness->comparison.slack, slack, same ? "ok" : "MISMATCH");
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-Hilbertian operator quantities and inequality checks"};
  app.require_subcommand(1);
  app.footer(
      "Scalars print with 12 significant digits; --full prints the shortest round-trip form.\n"
      "SHNR_RTOL overrides the rank tolerance (default 1e-10).\n"
      "Exit codes: 0 ok, 1 violations, 2 usage/parse/shape, 3 not a member, 4 A not PSD/Hermitian/non-zero.");

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute one quantity for A and T");
  c->add_option("A", compute.a_path, "matrix file for A")->required();
  c->add_option("T", compute.t_path, "matrix file for T")->required();
  c->add_option("quantity", compute.quantity,
                "norm_a | omega_a | adjoint | re_a | im_a | alpha_norm | big_omega | gamma_a | gen_radius")
      ->required();
  c->add_option("--alpha", compute.alpha, "alpha in [0, 1] for alpha_norm / a_alpha");
  c->add_option("--seminorm", compute.seminorm, "a_norm | a_alpha | big_omega | big_omega_pair (gen_radius)");
  c->add_option("--theta-grid", compute.theta_grid, "theta grid points over [0, pi)")->capture_default_str();
  c->add_flag("--full", compute.full, "print with round-trip precision");

  CheckArgs check;
  auto* k = app.add_subcommand("check", "Run the inequality catalog on random instances");
  k->add_option("--dims", check.dims, "dimensions, comma separated")->delimiter(',')->capture_default_str();
  k->add_option("--instances", check.instances, "instances per check and (dim, rank) cell")
      ->capture_default_str();
  k->add_option("--seed", check.seed, "base seed")->capture_default_str();
  k->add_option("--ranks", check.ranks, "rank profiles: full, n-1, half")->delimiter(',');
  k->add_option("--tol", check.tol, "relative slack tolerance")->capture_default_str();
  k->add_option("--only", check.only, "check ids, comma separated")->delimiter(',');
  k->add_option("--out", check.out, "report path (JSON)");
  k->add_option("--threads", check.threads, "worker threads (0: all cores)");
  k->add_option("--theta-grid", check.theta_grid, "theta grid points per radius")->capture_default_str();
  k->add_flag("--quiet", check.quiet, "no per-check lines");

  std::string mem_a, mem_t;
  auto* m = app.add_subcommand("membership", "Decide whether T admits an A-adjoint");
  m->add_option("A", mem_a, "matrix file for A")->required();
  m->add_option("T", mem_t, "matrix file for T")->required();

  std::string replay_path;
  auto* r = app.add_subcommand("replay", "Re-evaluate the witnesses of a report");
  r->add_option("report", replay_path, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute);
    if (k->parsed()) return cmd_check(check);
    if (m->parsed()) return cmd_membership(mem_a, mem_t);
    if (r->parsed()) return cmd_replay(replay_path);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
