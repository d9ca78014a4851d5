#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pvc4/vertex_set.hpp"

namespace pvc4 {

/// Undirected simple graph over dense ids 0..capacity()-1.
///
/// Adjacency lists are kept sorted, so every traversal in the library visits
/// vertices in ascending id order. Removing a vertex tombstones its id; ids of
/// the remaining vertices never change, which lets covers computed on a
/// reduced graph be reported against the original input directly.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t capacity() const { return adj_.size(); }
  std::size_t num_vertices() const { return live_count_; }
  std::size_t num_edges() const { return edge_count_; }

  bool is_live(VertexId v) const;
  VertexSet vertices() const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// N(v). Throws std::out_of_range for ids that are not live.
  const VertexSet& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// Returns false if the edge was already present.
  bool add_edge(VertexId u, VertexId v);
  bool remove_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_live(VertexId v) const;

  std::vector<VertexSet> adj_;
  std::vector<char> live_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// N(S) = (union of N(v) over v in S) \ S.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s);

/// G[S]. Vertices outside S are removed; ids are preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - S.
Graph delete_vertices(const Graph& g, const VertexSet& s);

/// Connected components of the live vertices, each sorted, listed by minimum id.
std::vector<VertexSet> connected_components(const Graph& g);

/// Components of G[S].
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);

using Path4 = std::array<VertexId, 4>;

/// Finds a path a-u-v-b on four distinct vertices. Edges (u,v) are scanned by
/// ascending (min id, max id) and, for each orientation, the smallest a and
/// then smallest b are taken.
std::optional<Path4> find_4path(const Graph& g);

/// Same search restricted to G[S].
std::optional<Path4> find_4path(const Graph& g, const VertexSet& s);

/// Center of g when g is a star: at least three vertices, one adjacent to all
/// the others, the others pairwise non-adjacent.
std::optional<VertexId> is_star(const Graph& g);
std::optional<VertexId> is_star(const Graph& g, const VertexSet& s);

bool is_triangle(const Graph& g);
bool is_triangle(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);

}  // namespace pvc4
