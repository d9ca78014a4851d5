#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pvc4/graph.hpp"

namespace pvc4 {

/// Which side of the V1/V2 bipartition a query refers to.
enum class Side { v1 = 1, v2 = 2 };

/// State of the disjoint problem: a graph, a forbidden set V1 that is already
/// a 4-path vertex cover of the graph, and a remaining budget k.
///
/// V2 is implicit (live vertices not in V1). The budget is signed so that the
/// budget rule can observe k < 0. V1 may be larger than k.
class Instance {
 public:
  /// Validates the input contract. Throws std::invalid_argument when a V1 id is
  /// not live or when G[V2] contains a 4-path (V1 is then not a cover). Returns
  /// nullopt when G[V1] contains a 4-path: such an instance is trivially "no".
  static std::optional<Instance> create(Graph g, const VertexSet& v1, int k);

  const Graph& graph() const { return graph_; }
  int budget() const { return k_; }

  bool in_v1(VertexId v) const { return v1_[v] != 0; }
  bool in_v2(VertexId v) const { return graph_.is_live(v) && v1_[v] == 0; }
  bool on_side(VertexId v, Side side) const { return side == Side::v1 ? in_v1(v) : in_v2(v); }

  VertexSet v1() const;
  VertexSet v2() const;
  std::size_t v2_size() const;

  /// G - S with budget k - |S|. S must be a subset of V2.
  Instance without(const VertexSet& s) const;
  /// G - C, V1 \ C, same budget.
  Instance without_component(const VertexSet& c) const;
  Instance with_moved_to_v1(VertexId v) const;
  Instance without_edge(VertexId u, VertexId v) const;
  Instance with_budget(int k) const;
  /// Relabels live vertices to 0..n-1 preserving their order.
  Instance compacted() const;

 private:
  Instance(Graph g, std::vector<char> v1, int k) : graph_(std::move(g)), v1_(std::move(v1)), k_(k) {}

  Graph graph_;
  std::vector<char> v1_;
  int k_ = 0;
};

/// deg_i(v) = |N(v) ∩ V_i|.
std::size_t deg_i(const Instance& inst, VertexId v, Side side);
/// N_i(v) = N(v) ∩ V_i.
VertexSet n_i(const Instance& inst, VertexId v, Side side);
/// N_i(S) = N(S) ∩ V_i.
VertexSet n_i(const Instance& inst, const VertexSet& s, Side side);

enum class V1Kind { connection, leaf, other };

/// Throws std::invalid_argument when x is not in V1.
V1Kind classify_v1_vertex(const Instance& inst, VertexId x);
bool is_connection_vertex(const Instance& inst, VertexId v);
bool is_leaf(const Instance& inst, VertexId v);
/// True when some V1 neighbor of v is a leaf.
bool adjacent_to_leaf(const Instance& inst, VertexId v);

/// Connected components of G[V_i], listed by minimum id.
std::vector<VertexSet> components_i(const Instance& inst, Side side);

bool contains(const Instance& inst, VertexId x, const VertexSet& c);
bool splits(const Instance& inst, VertexId x, const VertexSet& c);

/// The unique v in C with v not in N(x) and N_2(v) ∩ N(x) nonempty. Throws
/// InvariantViolation when there is no such vertex or more than one.
VertexId boundary_vertex(const Instance& inst, VertexId x, const VertexSet& c);

/// Per-connection-vertex breakdown of the 2-components that meet N(x).
struct ConnectionProfile {
  std::size_t s1 = 0;  // contained, size 1
  std::size_t s2 = 0;  // contained, size 2
  std::size_t t1 = 0;  // split, |C ∩ N(x)| = 1
  std::size_t t2 = 0;  // split, |C ∩ N(x)| >= 2
  std::vector<VertexSet> split_list;
  std::vector<VertexSet> contained_list;
};

/// Caches the 1- and 2-components of one instance so the rule matchers do
/// not recompute them for every query.
class PartitionIndex {
 public:
  explicit PartitionIndex(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  const std::vector<VertexSet>& components(Side side) const {
    return side == Side::v1 ? comps1_ : comps2_;
  }
  /// Component (of the vertex's own side) containing v.
  const VertexSet& component_of(VertexId v) const;
  std::size_t component_index(VertexId v) const { return comp_of_[v]; }

  /// Connection vertices in ascending order.
  const VertexSet& connection_vertices() const { return connection_; }

  ConnectionProfile profile(VertexId x) const;

 private:
  const Instance* inst_;
  std::vector<VertexSet> comps1_;
  std::vector<VertexSet> comps2_;
  std::vector<std::size_t> comp_of_;
  VertexSet connection_;
};

ConnectionProfile connection_profile(const Instance& inst, VertexId x);
ConnectionProfile connection_profile(const PartitionIndex& index, VertexId x);

/// S^x_b: boundary vertices of every 2-component that x splits.
VertexSet sb(const Instance& inst, VertexId x);
VertexSet sb(const PartitionIndex& index, VertexId x);
/// S^x_c: lowest-id vertex of every size-2 component contained in x.
VertexSet sc(const Instance& inst, VertexId x);
VertexSet sc(const PartitionIndex& index, VertexId x);

}  // namespace pvc4
