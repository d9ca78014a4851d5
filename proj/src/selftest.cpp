#include "pvc4/selftest.hpp"

#include "pvc4/bench.hpp"
#include "pvc4/errors.hpp"
#include "pvc4/generate.hpp"
#include "pvc4/oracle.hpp"

namespace pvc4 {

bool SuiteTally::clean() const {
  return mismatches == 0 && leaf_violations == 0 && observation_violations == 0 && totality_failures == 0;
}

void SuiteTally::merge(const SuiteTally& other) {
  cases += other.cases;
  mismatches += other.mismatches;
  disjoint_solves += other.disjoint_solves;
  leaf_violations += other.leaf_violations;
  nodes += other.nodes;
  observation_violations += other.observation_violations;
  totality_failures += other.totality_failures;
  for (int r = 1; r <= kRuleCount; ++r) rule_fires[r] += other.rule_fires[r];
  for (const auto& n : other.notes) note(n);
}

void SuiteTally::note(const std::string& line) {
  if (notes.size() < 10) notes.push_back(line);
}

namespace {

SolveOptions instrumented(SuiteTally& tally) {
  SolveOptions options;
  options.on_node = [&tally](const NodeEvent& event) {
    ++tally.nodes;
    ++tally.rule_fires[event.application.match.rule_id];
    const auto problems = check_observations(event.instance, event.application.match.rule_id);
    if (!problems.empty()) {
      ++tally.observation_violations;
      tally.note("observation: " + problems.front());
    }
  };
  options.on_disjoint_solve = [&tally](int k0, const SolveStats& stats) {
    ++tally.disjoint_solves;
    if (stats.leaves > leaf_bound(k0)) {
      ++tally.leaf_violations;
      tally.note("leaf bound: k0=" + std::to_string(k0) + " leaves=" + std::to_string(stats.leaves));
    }
  };
  return options;
}

// Runs `body`, booking solver exceptions as totality failures.
template <typename F>
void guarded(SuiteTally& tally, const std::string& label, F&& body) {
  try {
    body();
  } catch (const InvariantViolation& e) {
    ++tally.totality_failures;
    tally.note(label + ": " + e.what());
  } catch (const NodeBudgetExceeded& e) {
    ++tally.totality_failures;
    tally.note(label + ": " + e.what());
  }
}

void compare_minimize(SuiteTally& tally, const Graph& g, const std::string& label) {
  const SolveOptions options = instrumented(tally);
  ++tally.cases;
  guarded(tally, label, [&] {
    const MinimizeResult got = minimize(g, options);
    const auto want = oracle::brute_min_pvc4(g);
    const bool valid = static_cast<int>(got.cover.size()) == got.size && verify_cover(g, got.cover);
    if (got.size != static_cast<int>(want.min_size) || !valid) {
      ++tally.mismatches;
      tally.note(label + ": minimize " + std::to_string(got.size) + ", oracle " + std::to_string(want.min_size));
    }
  });
}

// Solves `inst` at every budget 0..|V2| and compares with the oracle minimum.
void compare_disjoint(SuiteTally& tally, const Instance& inst, const std::string& label) {
  const SolveOptions options = instrumented(tally);
  const std::size_t opt = oracle::brute_min_disjoint(inst)->min_size;
  for (int k = 0; k <= static_cast<int>(inst.v2_size()); ++k) {
    ++tally.cases;
    guarded(tally, label + " k=" + std::to_string(k), [&] {
      const CoverResult r = solve_disjoint(inst.with_budget(k), options);
      bool ok = r.cover.has_value() == (static_cast<std::size_t>(k) >= opt);
      if (r.cover) {
        ok = ok && r.cover->size() <= static_cast<std::size_t>(k) && verify_cover(inst.graph(), *r.cover) &&
             !intersects(*r.cover, inst.v1());
      }
      if (!ok) {
        ++tally.mismatches;
        tally.note(label + " k=" + std::to_string(k) + ": disagrees with oracle minimum " + std::to_string(opt));
      }
    });
  }
}

}  // namespace

SuiteTally check_labeled_graphs(int max_n) {
  SuiteTally tally;
  for (int n = 1; n <= max_n; ++n) {
    auto graphs = oracle::enumerate_labeled_graphs(static_cast<std::size_t>(n));
    std::uint64_t index = 0;
    while (auto g = graphs.next()) {
      compare_minimize(tally, *g, "labeled n=" + std::to_string(n) + " #" + std::to_string(index++));
    }
  }
  return tally;
}

SuiteTally check_random_graphs(int n, int count, std::uint64_t seed) {
  SuiteTally tally;
  for (int i = 0; i < count; ++i) {
    const double p = 0.15 + 0.05 * (i % 10);
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    compare_minimize(tally, gen::gnp(n, p, s), "gnp n=" + std::to_string(n) + " seed=" + std::to_string(s));
  }
  return tally;
}

SuiteTally check_disjoint_instances(int count, std::uint64_t seed, int max_v2) {
  SuiteTally tally;
  int made = 0;
  for (std::uint64_t s = seed; made < count; ++s) {
    const int n = 8 + static_cast<int>(s % 15);
    const double p = 0.1 + 0.05 * static_cast<double>(s % 7);
    const auto inst = gen::make_disjoint_instance(gen::gnp(n, p, s), s);
    if (!inst || static_cast<int>(inst->v2_size()) > max_v2) continue;
    ++made;
    compare_disjoint(tally, *inst, "disjoint seed=" + std::to_string(s));
  }
  return tally;
}

SuiteTally check_rule_fixtures(int rule_id, int count, std::uint64_t seed) {
  SuiteTally tally;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const std::string label = "rule " + std::to_string(rule_id) + " seed=" + std::to_string(s);
    ++tally.cases;
    try {
      const Instance inst = gen::rule_trigger(rule_id, s);
      const RuleApplication application = select_rule(inst);
      if (application.match.rule_id != rule_id) {
        ++tally.mismatches;
        tally.note(label + ": selected rule " + std::to_string(application.match.rule_id));
        continue;
      }
      const auto problems = oracle::check_rule_outcome(inst, application);
      if (!problems.empty()) {
        ++tally.mismatches;
        tally.note(label + ": " + problems.front());
      }
      compare_disjoint(tally, inst, label);
    } catch (const InvariantViolation& e) {
      ++tally.totality_failures;
      tally.note(label + ": " + e.what());
    } catch (const std::runtime_error& e) {
      // rule_trigger gave up: the fixture count falls short.
      ++tally.mismatches;
      tally.note(label + ": " + e.what());
    }
  }
  return tally;
}

}  // namespace pvc4
