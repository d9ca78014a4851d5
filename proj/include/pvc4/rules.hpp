#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pvc4/partition.hpp"

namespace pvc4 {

inline constexpr int kRuleCount = 24;

enum class Answer { yes, no };

struct Terminal {
  Answer answer;
};

enum class ReduceKind { drop_component, move_to_v1, delete_edge };

/// An in-place simplification: the next instance has the same optimum.
struct Reduce {
  Instance next;
  ReduceKind kind;
};

/// Recurse on each set in turn: add it to the cover, lower the budget by its
/// size, and stop at the first branch that succeeds. Every set is nonempty
/// and lies in V2.
struct Branch {
  std::vector<VertexSet> branches;
};

using RuleOutcome = std::variant<Terminal, Reduce, Branch>;

struct RuleMatch {
  int rule_id = 0;
  /// Vertices that matched the rule's pattern, in a rule-specific order
  /// (e.g. the 4-path for rule 6, the connection vertex first for rules
  /// 10 and up).
  std::vector<VertexId> witness;
};

struct RuleApplication {
  RuleMatch match;
  RuleOutcome outcome;
};

/// Short identifier such as "budget" or "cycle_of_stars".
const char* rule_name(int rule_id);

// One matcher per rule. Each returns nullopt when the rule's pattern does not
// occur. A matcher for rule r assumes rules 1..r-1 do not apply; calling it
// on an instance where an earlier rule applies may throw InvariantViolation.
std::optional<RuleApplication> rule01_budget(const Instance& inst);
std::optional<RuleApplication> rule02_solved(const Instance& inst);
std::optional<RuleApplication> rule03_drop_component(const Instance& inst);
std::optional<RuleApplication> rule04_small_component(const Instance& inst);
std::optional<RuleApplication> rule05_move_to_v1(const Instance& inst);
std::optional<RuleApplication> rule06_forced_vertex(const Instance& inst);
std::optional<RuleApplication> rule07_p3_branch(const Instance& inst);
std::optional<RuleApplication> rule08_v1_edge(const Instance& inst);
std::optional<RuleApplication> rule09_delete_edge(const Instance& inst);
std::optional<RuleApplication> rule10_boundary_branch(const Instance& inst);
std::optional<RuleApplication> rule11_contained_big(const Instance& inst);
std::optional<RuleApplication> rule12_triangle(const Instance& inst);
std::optional<RuleApplication> rule13_split1_leaves(const Instance& inst);
std::optional<RuleApplication> rule14_not_independent(const Instance& inst);
std::optional<RuleApplication> rule15_contains_special(const Instance& inst);
std::optional<RuleApplication> rule16_contains(const Instance& inst);
std::optional<RuleApplication> rule17_split_one(const Instance& inst);
std::optional<RuleApplication> rule18_degv_leaf(const Instance& inst);
std::optional<RuleApplication> rule19_degv(const Instance& inst);
std::optional<RuleApplication> rule20_large_intersection(const Instance& inst);
std::optional<RuleApplication> rule21_split_three(const Instance& inst);
std::optional<RuleApplication> rule22_large_far_component(const Instance& inst);
std::optional<RuleApplication> rule23_large_star(const Instance& inst);
std::optional<RuleApplication> rule24_cycle_of_stars(const Instance& inst);

/// Runs the matcher for a single rule id (1..24).
std::optional<RuleApplication> try_rule(int rule_id, const Instance& inst);

/// The lowest-numbered applicable rule. Throws InvariantViolation if no rule
/// matches, which the rule system's case analysis rules out.
RuleApplication select_rule(const Instance& inst);

/// The component structure that remains when rules 1-23 are exhausted:
/// size-3 stars {u_i, v_i, w_i} centered at v_i, connection vertices x_i with
/// N(x_i) = {w_i, u_(i+1)} cyclically, and leaves hanging off u/w vertices.
struct CycleOfStars {
  VertexSet component;
  std::vector<VertexId> u, v, w, x;
  VertexSet leaves;
};

/// Labels `component` as a cycle of stars or returns nullopt if it is not one.
/// u_1 is the lower-id endpoint of the star holding the component's smallest
/// V2 vertex.
std::optional<CycleOfStars> match_cycle_of_stars(const Instance& inst, const VertexSet& component);

/// Checks the structural facts that hold once rules 1..selected_rule-1 are
/// inapplicable. Returns a human-readable line per violated fact.
std::vector<std::string> check_observations(const Instance& inst, int selected_rule);

}  // namespace pvc4
