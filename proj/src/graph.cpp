#include "pvc4/graph.hpp"

#include <stdexcept>
#include <string>

namespace pvc4 {

Graph::Graph(std::size_t n) : adj_(n), live_(n, 1), live_count_(n) {}

bool Graph::is_live(VertexId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < live_.size() && live_[v];
}

void Graph::check_live(VertexId v) const {
  if (!is_live(v)) throw std::out_of_range("unknown vertex id " + std::to_string(v));
}

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(live_count_);
  for (std::size_t v = 0; v < live_.size(); ++v) {
    if (live_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if (!live_[u]) continue;
    for (VertexId v : adj_[u]) {
      if (static_cast<VertexId>(u) < v) out.emplace_back(static_cast<VertexId>(u), v);
    }
  }
  return out;
}

const VertexSet& Graph::neighbors(VertexId v) const {
  check_live(v);
  return adj_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_live(u);
  check_live(v);
  return set_contains(adj_[u], v);
}

bool Graph::add_edge(VertexId u, VertexId v) {
  check_live(u);
  check_live(v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(VertexId u, VertexId v) {
  check_live(u);
  check_live(v);
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return false;
  nu.erase(it);
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
  return true;
}

void Graph::remove_vertex(VertexId v) {
  check_live(v);
  for (VertexId u : adj_[v]) {
    auto& nu = adj_[u];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  }
  edge_count_ -= adj_[v].size();
  adj_[v].clear();
  live_[v] = 0;
  --live_count_;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (VertexId v : s) {
    const auto& nv = g.neighbors(v);
    out.insert(out.end(), nv.begin(), nv.end());
  }
  return set_difference(make_set(std::move(out)), s);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  Graph h = g;
  for (VertexId v : g.vertices()) {
    if (!set_contains(s, v)) h.remove_vertex(v);
  }
  return h;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
  Graph h = g;
  for (VertexId v : s) h.remove_vertex(v);
  return h;
}

namespace {

std::vector<VertexSet> components_masked(const Graph& g, const std::vector<char>& in) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.capacity(), 0);
  std::vector<VertexId> stack;
  for (std::size_t s = 0; s < g.capacity(); ++s) {
    if (!in[s] || seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(static_cast<VertexId>(s));
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (in[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<char> mask_of(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.capacity(), 0);
  for (VertexId v : s) {
    if (g.is_live(v)) in[v] = 1;
  }
  return in;
}

std::vector<char> live_mask(const Graph& g) {
  std::vector<char> in(g.capacity(), 0);
  for (VertexId v : g.vertices()) in[v] = 1;
  return in;
}

std::optional<Path4> find_4path_masked(const Graph& g, const std::vector<char>& in) {
  for (std::size_t ui = 0; ui < g.capacity(); ++ui) {
    if (!in[ui]) continue;
    const auto u = static_cast<VertexId>(ui);
    const auto& nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u || !in[v]) continue;
      const auto& nv = g.neighbors(v);
      for (VertexId a : nu) {
        if (a == v || !in[a]) continue;
        for (VertexId b : nv) {
          if (b == u || b == a || !in[b]) continue;
          return Path4{a, u, v, b};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexId> star_center_masked(const Graph& g, const VertexSet& s,
                                           const std::vector<char>& in) {
  if (s.size() < 3) return std::nullopt;
  auto inner_degree = [&](VertexId v) {
    std::size_t d = 0;
    for (VertexId u : g.neighbors(v)) d += in[u] ? 1 : 0;
    return d;
  };
  std::optional<VertexId> center;
  for (VertexId v : s) {
    std::size_t d = inner_degree(v);
    if (d == s.size() - 1 && !center) {
      center = v;
    } else if (d != 1) {
      return std::nullopt;
    }
  }
  return center;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_masked(g, live_mask(g));
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
  return components_masked(g, mask_of(g, s));
}

std::optional<Path4> find_4path(const Graph& g) { return find_4path_masked(g, live_mask(g)); }

std::optional<Path4> find_4path(const Graph& g, const VertexSet& s) {
  return find_4path_masked(g, mask_of(g, s));
}

std::optional<VertexId> is_star(const Graph& g) {
  const VertexSet all = g.vertices();
  return star_center_masked(g, all, live_mask(g));
}

std::optional<VertexId> is_star(const Graph& g, const VertexSet& s) {
  return star_center_masked(g, s, mask_of(g, s));
}

bool is_triangle(const Graph& g, const VertexSet& s) {
  return s.size() == 3 && g.has_edge(s[0], s[1]) && g.has_edge(s[1], s[2]) &&
         g.has_edge(s[0], s[2]);
}

bool is_triangle(const Graph& g) { return is_triangle(g, g.vertices()); }

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (VertexId v : s) {
    if (intersects(g.neighbors(v), s)) return false;
  }
  return true;
}

}  // namespace pvc4
