#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pvc4/partition.hpp"

namespace pvc4::test {

// Small instances written the way they are drawn on paper:
//   Sketch s("x* a b c", "x-a x-b a-c", 2);
// names ending in '*' go to V1, ids follow the order of the name list.
class Sketch {
 public:
  Sketch(const std::string& names, const std::string& edges, int k = 0) {
    std::istringstream in(names);
    std::string name;
    while (in >> name) {
      const bool forbidden = name.back() == '*';
      if (forbidden) name.pop_back();
      const VertexId id = static_cast<VertexId>(ids_.size());
      ids_[name] = id;
      if (forbidden) v1_.push_back(id);
    }
    graph_ = Graph(ids_.size());
    std::istringstream ein(edges);
    std::string edge;
    while (ein >> edge) {
      const auto dash = edge.find('-');
      graph_.add_edge(id(edge.substr(0, dash)), id(edge.substr(dash + 1)));
    }
    k_ = k;
  }

  VertexId id(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw std::invalid_argument("unknown vertex " + name);
    return it->second;
  }

  VertexSet set(const std::string& names) const {
    std::istringstream in(names);
    std::string name;
    VertexSet out;
    while (in >> name) out = set_insert(out, id(name));
    return out;
  }

  const Graph& graph() const { return graph_; }
  const VertexSet& v1() const { return v1_; }

  Instance instance() const {
    auto inst = Instance::create(graph_, v1_, k_);
    if (!inst) throw std::logic_error("sketch has a 4-path inside V1");
    return *inst;
  }

 private:
  std::map<std::string, VertexId> ids_;
  Graph graph_;
  VertexSet v1_;
  int k_ = 0;
};

}  // namespace pvc4::test
