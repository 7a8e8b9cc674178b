#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "shnr/checks.hpp"
#include "shnr/instances.hpp"
#include "shnr/io.hpp"
#include "shnr/suite.hpp"

using namespace shnr;
using doctest::Approx;

namespace {

const ComplexMatrix kNil{{0, 1}, {0, 0}};

EvalSettings quick_settings() {
  EvalSettings s;
  s.theta.grid_points = 32;
  return s;
}

InstanceGenConfig small_config() {
  InstanceGenConfig cfg;
  cfg.dims = {2, 3};
  cfg.instances_per_check = 2;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& c = catalog();
  REQUIRE(c.size() == 27);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < c.size(); ++i) {
    char expect[8];
    std::snprintf(expect, sizeof expect, "C%02zu", i + 1);
    CHECK(c[i].id == expect);
    CHECK_FALSE(c[i].statement.empty());
    CHECK_FALSE(c[i].seminorm_ids.empty());
    ids.insert(c[i].id);
  }
  CHECK(ids.size() == 27);
  CHECK(find_check("C26").pinned);
  CHECK(std::count_if(c.begin(), c.end(), [](const CheckSpec& s) { return s.pinned; }) == 1);
  CHECK_THROWS_AS(find_check("C28"), Error);
  CHECK(find_check("C27").kind == CheckKind::Conditional);
  CHECK(find_check("C19").arity == Arity::Vectors);
  CHECK(find_check("C15").arity == Arity::TSX);
}

TEST_CASE("every required flag set is met by the A-norm and by each assigned seminorm") {
  const auto a = a_norm_seminorm().flags;
  for (const auto& spec : catalog()) {
    CHECK(a.covers(spec.required_flags));
    for (const auto& sid : spec.seminorm_ids) CHECK(seminorm_by_id(sid, 0.5).flags.covers(spec.required_flags));
  }
  const auto& c26 = find_check("C26").seminorm_ids;
  CHECK(c26 == std::vector<std::string>{"big_omega", "big_omega_pair"});
  CHECK_THROWS_AS(seminorm_by_id("schatten"), Error);
  CHECK(seminorm_by_id("a_alpha").alpha == 0.5);
  CHECK_THROWS_AS(seminorm_by_id("a_alpha", 1.5), Error);
}

TEST_CASE("slack definitions") {
  CHECK(inequality_slack(1.0, 2.0) == Approx(0.5));
  CHECK(inequality_slack(2.0, 1.0) == Approx(-1.0));
  CHECK(inequality_slack(0.0, 0.0) == 0.0);
  CHECK(inequality_slack(1.0, 0.0) == Approx(-1e300));
  CHECK(inequality_slack(1e-10, -1.0) >= -1e300);
  CHECK(equality_slack(3.0, 3.0) == 0.0);
  CHECK_FALSE(std::signbit(equality_slack(0.0, 0.0)));
  CHECK(equality_slack(1.0, 2.0) == Approx(-0.5));
  CHECK(equality_slack(-1.0, 1.0) == Approx(-2.0));
}

TEST_CASE("instances are deterministic, normalized and members") {
  for (const auto& spec : catalog()) {
    if (spec.pinned) continue;
    for (std::size_t rank : {1u, 3u}) {
      const Instance a = make_instance(spec, 3, rank, 42, 5);
      const Instance b = make_instance(spec, 3, rank, 42, 5);
      CHECK(a.a == b.a);
      CHECK(a.operators == b.operators);
      CHECK(a.variant == b.variant);
      const auto ctx = build_context(a.a);
      CHECK(ctx.rank() == rank);
      for (const auto& [name, m] : a.operators) {
        CHECK(is_member(ctx, m));
        if (name != "U") CHECK(spectral_norm(m) == Approx(1.0).epsilon(1e-12));
      }
    }
  }
  const Instance x = make_instance(find_check("C01"), 3, 2, 42, 0);
  const Instance y = make_instance(find_check("C01"), 3, 2, 43, 0);
  CHECK_FALSE(x.operators == y.operators);
}

TEST_CASE("C17 hits both sharp cases") {
  const CheckSpec& spec = find_check("C17");
  Instance nil;
  nil.a = ComplexMatrix::identity(2);
  nil.operators["T"] = kNil;
  nil.variant = "nilpotent";
  const auto out = evaluate_check(spec, nil, quick_settings());
  const auto lower = std::find_if(out.begin(), out.end(), [](const Comparison& c) { return c.label == "lower"; });
  REQUIRE(lower != out.end());
  CHECK(std::abs(lower->slack) <= 1e-12);

  Instance normal;
  normal.a = ComplexMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  normal.operators["T"] = ComplexMatrix{{{0, 1}, 0, 0}, {0, -0.5, 0}, {0, 0, 3}};
  normal.variant = "normal";
  for (const auto& c : evaluate_check(spec, normal, quick_settings())) {
    CHECK(c.slack >= -1e-12);
    if (c.label == "upper" || c.label == "sharp-upper") CHECK(std::abs(c.slack) <= 1e-12);
  }
}

TEST_CASE("pinned check reproduces the fixed values") {
  const CheckSpec& spec = find_check("C26");
  const auto out = evaluate_check(spec, pinned_instance(spec), quick_settings());
  int seen = 0;
  for (const auto& c : out) {
    CHECK(c.slack >= -1e-6);
    if (c.label == "Omega" || c.label == "w_Omega") {
      CHECK(c.lhs == Approx(2 * std::sqrt(2.0)).epsilon(1e-6));
      ++seen;
    }
  }
  CHECK(seen == 4);
  CHECK_THROWS_AS(pinned_instance(find_check("C01")), Error);
}

TEST_CASE("run_suite on a small config: zero violations, replayable witnesses") {
  InstanceGenConfig cfg = small_config();
  cfg.only = {"C01", "C03", "C05", "C13", "C17", "C19", "C21", "C24", "C26", "C27"};
  const SuiteReport r = run_suite(cfg);
  REQUIRE(r.results.size() == cfg.only.size());
  CHECK(r.passed());
  for (const auto& c : r.results) {
    CHECK(c.violations == 0);
    CHECK(c.min_slack >= -cfg.tol_rel);
    REQUIRE(c.witness);
    const double replayed = replay_witness(c.id, *c.witness, cfg.eval_settings());
    CHECK(std::abs(replayed - c.witness->comparison.slack) <= 1e-12);
  }
  CHECK(r.results.back().premise_held >= r.results.back().implication_verified);
  CHECK(r.results.back().premise_held > 0);
  CHECK(r.results[8].instances_run == 1);
  CHECK(r.results[0].instances_run == 2 * 3 * 2);
}

TEST_CASE("run_suite output does not depend on thread count") {
  InstanceGenConfig cfg = small_config();
  cfg.only = {"C02", "C12", "C22", "C27"};
  cfg.threads = 1;
  const std::string one = dump_report(run_suite(cfg));
  cfg.threads = 3;
  const std::string three = dump_report(run_suite(cfg));
  CHECK(one == three);
}

TEST_CASE("config validation") {
  InstanceGenConfig cfg;
  cfg.dims = {1};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.instances_per_check = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.only = {"C99"};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.tol_rel = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  CHECK(rank_for(RankProfile::Half, 3) == 2);
  CHECK(rank_for(RankProfile::MinusOne, 2) == 1);
  CHECK(rank_for(RankProfile::Full, 4) == 4);
  CHECK(parse_rank_profile("n-1") == RankProfile::MinusOne);
  CHECK_THROWS_AS(parse_rank_profile("third"), Error);
}

TEST_CASE("failed instances are recorded as incomplete, not violations") {
  // An instance whose A is not PSD cannot be evaluated.
  Instance bad;
  bad.a = ComplexMatrix{{1, 0}, {0, -1}};
  bad.operators["T"] = kNil;
  CHECK_THROWS_AS(evaluate_check(find_check("C01"), bad, quick_settings()), Error);
}
