#include "pvc4/partition.hpp"

#include <stdexcept>
#include <string>

#include "pvc4/errors.hpp"

namespace pvc4 {

std::optional<Instance> Instance::create(Graph g, const VertexSet& v1, int k) {
  std::vector<char> flags(g.capacity(), 0);
  for (VertexId v : v1) {
    if (!g.is_live(v)) throw std::invalid_argument("V1 vertex " + std::to_string(v) + " is not in the graph");
    flags[v] = 1;
  }
  VertexSet v2;
  for (VertexId v : g.vertices()) {
    if (!flags[v]) v2.push_back(v);
  }
  if (find_4path(g, v2)) throw std::invalid_argument("V1 is not a 4-path vertex cover: G[V2] contains a 4-path");
  if (find_4path(g, make_set(std::vector<VertexId>(v1)))) return std::nullopt;
  return Instance(std::move(g), std::move(flags), k);
}

VertexSet Instance::v1() const {
  VertexSet out;
  for (VertexId v : graph_.vertices()) {
    if (v1_[v]) out.push_back(v);
  }
  return out;
}

VertexSet Instance::v2() const {
  VertexSet out;
  for (VertexId v : graph_.vertices()) {
    if (!v1_[v]) out.push_back(v);
  }
  return out;
}

std::size_t Instance::v2_size() const {
  std::size_t n = 0;
  for (VertexId v : graph_.vertices()) n += v1_[v] ? 0 : 1;
  return n;
}

Instance Instance::without(const VertexSet& s) const {
  Instance next = *this;
  for (VertexId v : s) {
    if (!in_v2(v)) throw InvariantViolation("branch vertex " + std::to_string(v) + " is not in V2");
    next.graph_.remove_vertex(v);
  }
  next.k_ -= static_cast<int>(s.size());
  return next;
}

Instance Instance::without_component(const VertexSet& c) const {
  Instance next = *this;
  for (VertexId v : c) {
    next.graph_.remove_vertex(v);
    next.v1_[v] = 0;
  }
  return next;
}

Instance Instance::with_moved_to_v1(VertexId v) const {
  if (!in_v2(v)) throw InvariantViolation("vertex " + std::to_string(v) + " is not in V2");
  Instance next = *this;
  next.v1_[v] = 1;
  return next;
}

Instance Instance::without_edge(VertexId u, VertexId v) const {
  Instance next = *this;
  if (!next.graph_.remove_edge(u, v)) {
    throw InvariantViolation("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not present");
  }
  return next;
}

Instance Instance::with_budget(int k) const {
  Instance next = *this;
  next.k_ = k;
  return next;
}

Instance Instance::compacted() const {
  const VertexSet live = graph_.vertices();
  std::vector<VertexId> new_id(graph_.capacity(), -1);
  for (std::size_t i = 0; i < live.size(); ++i) new_id[live[i]] = static_cast<VertexId>(i);
  Graph g(live.size());
  for (auto [a, b] : graph_.edges()) g.add_edge(new_id[a], new_id[b]);
  std::vector<char> flags(live.size(), 0);
  for (VertexId v : live) flags[new_id[v]] = v1_[v];
  return Instance(std::move(g), std::move(flags), k_);
}

std::size_t deg_i(const Instance& inst, VertexId v, Side side) {
  std::size_t d = 0;
  for (VertexId u : inst.graph().neighbors(v)) d += inst.on_side(u, side) ? 1 : 0;
  return d;
}

VertexSet n_i(const Instance& inst, VertexId v, Side side) {
  VertexSet out;
  for (VertexId u : inst.graph().neighbors(v)) {
    if (inst.on_side(u, side)) out.push_back(u);
  }
  return out;
}

VertexSet n_i(const Instance& inst, const VertexSet& s, Side side) {
  VertexSet out;
  for (VertexId u : neighborhood_of_set(inst.graph(), s)) {
    if (inst.on_side(u, side)) out.push_back(u);
  }
  return out;
}

V1Kind classify_v1_vertex(const Instance& inst, VertexId x) {
  if (!inst.graph().is_live(x) || !inst.in_v1(x)) {
    throw std::invalid_argument("vertex " + std::to_string(x) + " is not in V1");
  }
  if (deg_i(inst, x, Side::v1) != 0) return V1Kind::other;
  const std::size_t d2 = deg_i(inst, x, Side::v2);
  if (d2 >= 2) return V1Kind::connection;
  if (d2 == 1) return V1Kind::leaf;
  return V1Kind::other;
}

bool is_connection_vertex(const Instance& inst, VertexId v) {
  return inst.graph().is_live(v) && inst.in_v1(v) && classify_v1_vertex(inst, v) == V1Kind::connection;
}

bool is_leaf(const Instance& inst, VertexId v) {
  return inst.graph().is_live(v) && inst.in_v1(v) && classify_v1_vertex(inst, v) == V1Kind::leaf;
}

bool adjacent_to_leaf(const Instance& inst, VertexId v) {
  for (VertexId u : inst.graph().neighbors(v)) {
    if (inst.in_v1(u) && is_leaf(inst, u)) return true;
  }
  return false;
}

std::vector<VertexSet> components_i(const Instance& inst, Side side) {
  return connected_components(inst.graph(), side == Side::v1 ? inst.v1() : inst.v2());
}

bool contains(const Instance& inst, VertexId x, const VertexSet& c) {
  return is_subset(c, inst.graph().neighbors(x));
}

bool splits(const Instance& inst, VertexId x, const VertexSet& c) {
  const auto& nx = inst.graph().neighbors(x);
  return intersects(c, nx) && !is_subset(c, nx);
}

VertexId boundary_vertex(const Instance& inst, VertexId x, const VertexSet& c) {
  const auto& nx = inst.graph().neighbors(x);
  std::optional<VertexId> found;
  for (VertexId v : c) {
    if (set_contains(nx, v)) continue;
    if (!intersects(n_i(inst, v, Side::v2), nx)) continue;
    if (found) {
      throw InvariantViolation("boundary vertex of component at " + std::to_string(c.front()) +
                               " w.r.t. " + std::to_string(x) + " is not unique");
    }
    found = v;
  }
  if (!found) {
    throw InvariantViolation("no boundary vertex for component at " + std::to_string(c.front()) +
                             " w.r.t. " + std::to_string(x));
  }
  return *found;
}

PartitionIndex::PartitionIndex(const Instance& inst)
    : inst_(&inst),
      comps1_(components_i(inst, Side::v1)),
      comps2_(components_i(inst, Side::v2)),
      comp_of_(inst.graph().capacity(), 0) {
  for (std::size_t i = 0; i < comps1_.size(); ++i) {
    for (VertexId v : comps1_[i]) comp_of_[v] = i;
  }
  for (std::size_t i = 0; i < comps2_.size(); ++i) {
    for (VertexId v : comps2_[i]) comp_of_[v] = i;
  }
  for (const auto& c : comps1_) {
    if (c.size() != 1) continue;
    if (deg_i(inst, c[0], Side::v2) >= 2) connection_.push_back(c[0]);
  }
  std::sort(connection_.begin(), connection_.end());
}

const VertexSet& PartitionIndex::component_of(VertexId v) const {
  return inst_->in_v1(v) ? comps1_[comp_of_[v]] : comps2_[comp_of_[v]];
}

ConnectionProfile PartitionIndex::profile(VertexId x) const {
  // N(x) ⊆ V2 for a connection vertex, so every neighbor lands in a 2-component.
  ConnectionProfile p;
  const auto& nx = inst_->graph().neighbors(x);
  std::vector<std::pair<std::size_t, std::size_t>> hits;  // (component index, |C ∩ N(x)|)
  for (VertexId v : nx) {
    if (!inst_->in_v2(v)) continue;
    const std::size_t ci = comp_of_[v];
    auto it = std::find_if(hits.begin(), hits.end(), [&](const auto& h) { return h.first == ci; });
    if (it == hits.end()) {
      hits.emplace_back(ci, 1);
    } else {
      ++it->second;
    }
  }
  std::sort(hits.begin(), hits.end());
  for (const auto& [ci, count] : hits) {
    const VertexSet& c = comps2_[ci];
    if (count == c.size()) {
      p.contained_list.push_back(c);
      if (c.size() == 1) ++p.s1;
      if (c.size() == 2) ++p.s2;
    } else {
      p.split_list.push_back(c);
      if (count == 1) {
        ++p.t1;
      } else {
        ++p.t2;
      }
    }
  }
  return p;
}

ConnectionProfile connection_profile(const PartitionIndex& index, VertexId x) {
  if (!is_connection_vertex(index.instance(), x)) {
    throw std::invalid_argument("vertex " + std::to_string(x) + " is not a connection vertex");
  }
  return index.profile(x);
}

ConnectionProfile connection_profile(const Instance& inst, VertexId x) {
  return connection_profile(PartitionIndex(inst), x);
}

VertexSet sb(const PartitionIndex& index, VertexId x) {
  VertexSet out;
  for (const auto& c : index.profile(x).split_list) {
    out.push_back(boundary_vertex(index.instance(), x, c));
  }
  return make_set(std::move(out));
}

VertexSet sb(const Instance& inst, VertexId x) { return sb(PartitionIndex(inst), x); }

VertexSet sc(const PartitionIndex& index, VertexId x) {
  VertexSet out;
  for (const auto& c : index.profile(x).contained_list) {
    if (c.size() == 2) out.push_back(c.front());
  }
  return make_set(std::move(out));
}

VertexSet sc(const Instance& inst, VertexId x) { return sc(PartitionIndex(inst), x); }

}  // namespace pvc4
