#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pvc4/solver.hpp"

namespace pvc4 {

/// Counters shared by the oracle-equivalence suites. Every search run by a
/// suite is instrumented: each disjoint search is held to leaf_bound of its
/// initial budget and each node to check_observations.
struct SuiteTally {
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t disjoint_solves = 0;
  std::uint64_t leaf_violations = 0;
  std::uint64_t nodes = 0;
  std::uint64_t observation_violations = 0;
  /// InvariantViolation (no rule matched, rule 24 rejected its component)
  /// or NodeBudgetExceeded.
  std::uint64_t totality_failures = 0;
  std::array<std::uint64_t, kRuleCount + 1> rule_fires{};
  /// The first few failure descriptions.
  std::vector<std::string> notes;

  bool clean() const;
  void merge(const SuiteTally& other);
  void note(const std::string& line);
};

/// minimize(g) against the oracle on every labeled graph with 1..max_n vertices.
SuiteTally check_labeled_graphs(int max_n);

/// minimize(g) against the oracle on `count` graphs gnp(n, p) with p cycling
/// through 0.15..0.6.
SuiteTally check_random_graphs(int n, int count, std::uint64_t seed);

/// `count` instances from make_disjoint_instance with |V2| <= max_v2, each
/// solved for every budget 0..|V2| and compared with the oracle minimum.
SuiteTally check_disjoint_instances(int count, std::uint64_t seed, int max_v2 = 14);

/// `count` rule_trigger fixtures for `rule_id`: the rule is selected, its
/// outcome passes oracle::check_rule_outcome, and the full disjoint search on
/// the fixture agrees with the oracle.
SuiteTally check_rule_fixtures(int rule_id, int count, std::uint64_t seed);

}  // namespace pvc4
