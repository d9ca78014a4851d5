#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <string>
#include <vector>

#include "pvc4/rules.hpp"

namespace pvc4 {

/// Exhaustive ground truth. Nothing here shares code with the solver's search
/// or with find_4path; correctness should be obvious from reading it.
namespace oracle {

inline constexpr std::size_t kMaxVertices = 20;
inline constexpr std::size_t kMaxLabeledN = 6;

struct OracleAnswer {
  std::size_t min_size = 0;
  VertexSet witness;
};

/// Depth-first enumeration of simple paths with four vertices.
bool has_4path(const Graph& g);

/// Minimum 4-path vertex cover by trying subsets in ascending size,
/// lexicographic within a size. Throws std::length_error above kMaxVertices.
OracleAnswer brute_min_pvc4(const Graph& g);

/// Same enumeration restricted to subsets of V2. Throws std::length_error
/// when |V2| exceeds kMaxVertices.
std::optional<OracleAnswer> brute_min_disjoint(const Instance& inst);

/// All 2^(n(n-1)/2) labeled graphs on n vertices. Graph number i has edge
/// (a,b) iff bit j of i is set, where j indexes pairs (0,1),(0,2),...,(n-2,n-1).
class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n);
  std::uint64_t count() const { return count_; }
  std::optional<Graph> next();

 private:
  std::size_t n_;
  std::uint64_t count_;
  std::uint64_t cursor_ = 0;
};

inline LabeledGraphs enumerate_labeled_graphs(std::size_t n) { return LabeledGraphs(n); }

/// Checks one rule step against exhaustive search on `inst`:
///   Terminal: the answer matches opt <= k.
///   Reduce:   the optimum is unchanged and an optimal cover of the reduced
///             instance also covers `inst`.
///   Branch:   opt = min_i (|S_i| + opt(inst - S_i)), and `inst` is a yes
///             instance iff some branch is.
/// Returns one line per failed check.
std::vector<std::string> check_rule_outcome(const Instance& inst, const RuleApplication& application);

}  // namespace oracle
}  // namespace pvc4
