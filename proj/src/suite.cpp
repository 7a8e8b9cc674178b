#include "shnr/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

namespace shnr {

std::string_view to_string(RankProfile p) {
  switch (p) {
    case RankProfile::Full: return "full";
    case RankProfile::MinusOne: return "n-1";
    case RankProfile::Half: return "half";
  }
  return "?";
}

RankProfile parse_rank_profile(std::string_view s) {
  if (s == "full") return RankProfile::Full;
  if (s == "n-1") return RankProfile::MinusOne;
  if (s == "half") return RankProfile::Half;
  throw Error(Errc::InvalidArgument, "unknown rank profile '" + std::string(s) +
                                         "' (expected full, n-1 or half)");
}

std::size_t rank_for(RankProfile p, std::size_t n) {
  switch (p) {
    case RankProfile::Full: return n;
    case RankProfile::MinusOne: return std::max<std::size_t>(n - 1, 1);
    case RankProfile::Half: return (n + 1) / 2;
  }
  return n;
}

void InstanceGenConfig::validate() const {
  if (dims.empty()) throw Error(Errc::InvalidArgument, "no dimensions given");
  for (const auto d : dims)
    if (d < 2) throw Error(Errc::InvalidArgument, "dimensions must be >= 2");
  if (rank_profiles.empty()) throw Error(Errc::InvalidArgument, "no rank profiles given");
  if (instances_per_check < 1) throw Error(Errc::InvalidArgument, "instances per check must be >= 1");
  if (!(tol_rel > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  if (!(rtol > 0.0)) throw Error(Errc::InvalidArgument, "rtol must be positive");
  for (const auto& id : only) find_check(id);
  eval_settings().theta.validate();
}

EvalSettings InstanceGenConfig::eval_settings() const {
  EvalSettings s;
  s.theta.grid_points = theta_grid;
  // The slack tolerance is far above these, so the suite can stop earlier
  // than the interactive default.
  s.theta.refine_tol = 1e-6;
  s.theta.value_rtol = 1e-10;
  s.tol_rel = tol_rel;
  s.rtol = rtol;
  return s;
}

std::size_t SuiteReport::total_violations() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.violations;
  return n;
}

std::size_t SuiteReport::total_incomplete() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.incomplete;
  return n;
}

namespace {

struct WorkItem {
  std::size_t check;  // index into the selected list
  std::size_t dim, rank, index;
};

struct ItemResult {
  bool ok = true;
  std::string error;
  std::vector<Comparison> comparisons;
};

}  // namespace

SuiteReport run_suite(const InstanceGenConfig& cfg) {
  cfg.validate();
  std::vector<const CheckSpec*> selected;
  for (const auto& spec : catalog()) {
    if (cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), spec.id) != cfg.only.end()) {
      selected.push_back(&spec);
    }
  }

  std::vector<WorkItem> items;
  for (std::size_t c = 0; c < selected.size(); ++c) {
    if (selected[c]->pinned) {
      items.push_back({c, 3, 3, 0});
      continue;
    }
    for (const auto d : cfg.dims)
      for (const auto p : cfg.rank_profiles)
        for (std::size_t i = 0; i < cfg.instances_per_check; ++i)
          items.push_back({c, d, rank_for(p, d), i});
  }

  const EvalSettings settings = cfg.eval_settings();
  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= items.size()) return;
      const WorkItem& w = items[k];
      const CheckSpec& spec = *selected[w.check];
      try {
        const Instance inst = make_instance(spec, w.dim, w.rank, cfg.seed, w.index);
        results[k].comparisons = evaluate_check(spec, inst, settings);
      } catch (const std::exception& e) {
        results[k].ok = false;
        results[k].error = e.what();
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(items.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport report;
  report.config = cfg;
  report.results.resize(selected.size());
  std::vector<double> worst(selected.size(), std::numeric_limits<double>::infinity());
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> worst_at(selected.size());
  for (std::size_t c = 0; c < selected.size(); ++c) report.results[c].id = selected[c]->id;

  for (std::size_t k = 0; k < items.size(); ++k) {
    const WorkItem& w = items[k];
    CheckResult& r = report.results[w.check];
    ++r.instances_run;
    const ItemResult& ir = results[k];
    if (!ir.ok) {
      ++r.incomplete;
      if (r.errors.size() < 5) {
        r.errors.push_back("dim " + std::to_string(w.dim) + " rank " + std::to_string(w.rank) +
                           " #" + std::to_string(w.index) + ": " + ir.error);
      }
      continue;
    }
    bool violated = false;
    for (std::size_t j = 0; j < ir.comparisons.size(); ++j) {
      const Comparison& cmp = ir.comparisons[j];
      ++r.comparisons;
      const bool bad = cmp.slack < -cfg.tol_rel;
      violated = violated || bad;
      if (cmp.conditional) {
        ++r.premise_held;
        if (!bad) ++r.implication_verified;
      }
      if (cmp.slack < worst[w.check]) {
        worst[w.check] = cmp.slack;
        worst_at[w.check] = std::pair{k, j};
      }
    }
    if (violated) ++r.violations;
    if (selected[w.check]->pinned) {
      for (const auto& cmp : ir.comparisons) r.observations.emplace_back(cmp.seminorm + "/" + cmp.label, cmp.lhs);
    }
  }

  for (std::size_t c = 0; c < selected.size(); ++c) {
    CheckResult& r = report.results[c];
    if (!worst_at[c]) continue;
    r.min_slack = worst[c];
    r.max_violation = std::max(0.0, -worst[c]);
    const auto [k, j] = *worst_at[c];
    const WorkItem& w = items[k];
    Witness wit;
    wit.dim = w.dim;
    wit.rank = w.rank;
    wit.index = w.index;
    wit.instance = make_instance(*selected[c], w.dim, w.rank, cfg.seed, w.index);
    wit.comparison = results[k].comparisons[j];
    r.witness = std::move(wit);
  }
  return report;
}

double replay_witness(const std::string& check_id, const Witness& w, const EvalSettings& settings) {
  const CheckSpec& spec = find_check(check_id);
  for (const auto& cmp : evaluate_check(spec, w.instance, settings)) {
    if (cmp.seminorm == w.comparison.seminorm && cmp.label == w.comparison.label) return cmp.slack;
  }
  throw Error(Errc::InvalidArgument, "witness comparison " + w.comparison.seminorm + "/" +
                                         w.comparison.label + " not produced on replay");
}

}  // namespace shnr
