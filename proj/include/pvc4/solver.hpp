#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "pvc4/rules.hpp"

namespace pvc4 {

inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t max_depth = 0;
  /// Indexed by rule id; slot 0 is unused.
  std::array<std::uint64_t, kRuleCount + 1> rule_fires{};
  std::chrono::nanoseconds elapsed{0};

  void merge(const SolveStats& other);
};

struct CoverResult {
  std::optional<VertexSet> cover;
  SolveStats stats;
};

/// Passed to SolveOptions::on_node once per search node, after rule selection.
struct NodeEvent {
  const Instance& instance;
  const RuleApplication& application;
  std::uint64_t depth;
};

struct SolveOptions {
  /// Total search nodes allowed for one top-level call.
  std::uint64_t node_cap = kDefaultNodeCap;
  std::function<void(const NodeEvent&)> on_node;
  /// Called after every disjoint search with its initial budget.
  std::function<void(int initial_budget, const SolveStats&)> on_disjoint_solve;
};

/// Branch-and-reduce search for a V1-disjoint 4-path vertex cover of size at
/// most inst.budget(). Branches are tried in the order the rule lists them
/// and the first cover found is returned. Branches whose size exceeds the
/// remaining budget are not entered. Throws NodeBudgetExceeded past the cap.
CoverResult solve_disjoint(const Instance& inst, const SolveOptions& options = {});

/// Disjoint search on raw input; an instance whose G[V1] has a 4-path yields
/// an absent cover without searching.
CoverResult solve_disjoint(const Graph& g, const VertexSet& v1, int k, const SolveOptions& options = {});

/// Decides whether g has a 4-path vertex cover of size at most k by iterative
/// compression over vertices in ascending id order.
CoverResult iterative_compression(const Graph& g, int k, const SolveOptions& options = {});

struct MinimizeResult {
  int size = 0;
  VertexSet cover;
  SolveStats stats;
};

/// Smallest k for which iterative_compression succeeds, with its cover.
MinimizeResult minimize(const Graph& g, const SolveOptions& options = {});

/// True iff g - s contains no 4-path.
bool verify_cover(const Graph& g, const VertexSet& s);

}  // namespace pvc4
