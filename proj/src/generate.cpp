#include "pvc4/generate.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "pvc4/rules.hpp"

namespace pvc4::gen {

namespace {

std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool coin(Rng& rng, double p) { return unit(rng) < p; }

// Collects vertices and edges before the fixed-capacity Graph is built.
struct Sketch {
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexSet v1;
  VertexId n = 0;

  VertexId add(bool in_v1) {
    if (in_v1) v1.push_back(n);
    return n++;
  }
  void link(VertexId a, VertexId b) {
    if (a == b) return;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  Graph build() const {
    Graph g(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }
};

// A V2 block: its vertices plus the ones a connection vertex may attach to.
struct Block {
  VertexSet vertices;
  VertexSet ends;
};

Block add_block(Sketch& sk, int kind) {
  Block b;
  switch (kind) {
    case 0: {  // single vertex
      VertexId a = sk.add(false);
      b.vertices = {a};
      b.ends = {a};
      break;
    }
    case 1: {  // edge
      VertexId a = sk.add(false), c = sk.add(false);
      sk.link(a, c);
      b.vertices = {a, c};
      b.ends = {a, c};
      break;
    }
    case 2: {  // triangle
      VertexId a = sk.add(false), c = sk.add(false), d = sk.add(false);
      sk.link(a, c);
      sk.link(c, d);
      sk.link(a, d);
      b.vertices = {a, c, d};
      b.ends = {a, c, d};
      break;
    }
    default: {  // star with kind-1 petals (kind >= 3 gives at least 2)
      VertexId center = sk.add(false);
      b.vertices = {center};
      for (int i = 0; i < kind - 1; ++i) {
        VertexId leaf = sk.add(false);
        sk.link(center, leaf);
        b.vertices.push_back(leaf);
        b.ends.push_back(leaf);
      }
      break;
    }
  }
  return b;
}

int block_size(int kind) { return kind <= 2 ? kind + 1 : kind; }

// Random V2 blocks with V1 vertices sprinkled on top.
Sketch scattered_sketch(Rng& rng) {
  Sketch sk;
  const int v2_target = 5 + static_cast<int>(below(rng, 8));
  std::vector<Block> blocks;
  int used = 0;
  while (used < v2_target) {
    int kind = static_cast<int>(below(rng, 6));
    if (used + block_size(kind) > 12) kind = 0;
    used += block_size(kind);
    blocks.push_back(add_block(sk, kind));
  }
  VertexSet v2;
  for (const auto& b : blocks) v2 = set_union(v2, b.vertices);

  const int connections = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(used / 2 + 1)));
  for (int i = 0; i < connections; ++i) {
    const VertexId x = sk.add(true);
    const int deg = 2 + (coin(rng, 0.35) ? 1 : 0) + (coin(rng, 0.1) ? 1 : 0);
    for (int j = 0; j < deg; ++j) sk.link(x, v2[below(rng, v2.size())]);
  }
  const int leaves = static_cast<int>(below(rng, 4));
  for (int i = 0; i < leaves; ++i) sk.link(sk.add(true), v2[below(rng, v2.size())]);

  // Occasional V1 edges (a matching) or a V1 path on three vertices.
  if (coin(rng, 0.2) && sk.v1.size() >= 2) {
    const VertexId a = sk.v1[below(rng, sk.v1.size())];
    const VertexId b = sk.v1[below(rng, sk.v1.size())];
    sk.link(a, b);
  } else if (coin(rng, 0.1)) {
    const VertexId a = sk.add(true), b = sk.add(true), c = sk.add(true);
    sk.link(a, b);
    sk.link(b, c);
    sk.link(b, v2[below(rng, v2.size())]);
    sk.link(a, v2[below(rng, v2.size())]);
  }
  return sk;
}

// Blocks joined in a ring (or chain) by degree-2 connection vertices, which is
// the shape the later rules work on.
Sketch ring_sketch(Rng& rng) {
  Sketch sk;
  std::vector<Block> blocks;
  int used = 0;
  const int count = 2 + static_cast<int>(below(rng, 3));
  for (int i = 0; i < count; ++i) {
    static constexpr int kKinds[] = {1, 2, 3, 3, 3, 4, 4, 5};
    int kind = kKinds[below(rng, std::size(kKinds))];
    if (used + block_size(kind) > 13) kind = 1;
    used += block_size(kind);
    blocks.push_back(add_block(sk, kind));
  }
  const bool closed = coin(rng, 0.7);
  const std::size_t links = closed ? blocks.size() : blocks.size() - 1;
  for (std::size_t i = 0; i < links; ++i) {
    const Block& a = blocks[i];
    const Block& b = blocks[(i + 1) % blocks.size()];
    const VertexId x = sk.add(true);
    sk.link(x, a.ends[below(rng, a.ends.size())]);
    sk.link(x, b.ends[below(rng, b.ends.size())]);
  }
  // Extra connection vertices onto unused star petals keep rule 5 quiet.
  for (const auto& b : blocks) {
    for (VertexId e : b.ends) {
      if (coin(rng, 0.25)) {
        const Block& other = blocks[below(rng, blocks.size())];
        const VertexId x = sk.add(true);
        sk.link(x, e);
        sk.link(x, other.ends[below(rng, other.ends.size())]);
      }
      if (coin(rng, 0.2)) sk.link(sk.add(true), e);
    }
  }
  return sk;
}

// V2 blocks whose attachable vertices are matched up by degree-2 connection
// vertices, plus one hub connection vertex with a random attachment pattern.
// Star centers stay free of V1 neighbors unless the hub takes them.
Sketch linked_sketch(Rng& rng) {
  Sketch sk;
  std::vector<Block> blocks;
  int used = 0;
  const int count = 2 + static_cast<int>(below(rng, 3));
  for (int i = 0; i < count; ++i) {
    static constexpr int kKinds[] = {0, 1, 1, 2, 3, 3, 3, 4, 4, 5};
    int kind = kKinds[below(rng, std::size(kKinds))];
    if (used + block_size(kind) > 14) kind = 0;
    used += block_size(kind);
    blocks.push_back(add_block(sk, kind));
  }
  auto pick_block = [&] { return below(rng, blocks.size()); };
  auto pick_end = [&](const Block& b) { return b.ends[below(rng, b.ends.size())]; };

  VertexSet taken;
  if (coin(rng, 0.85)) {
    VertexSet hub;
    const std::size_t first = pick_block();
    switch (below(rng, 4)) {
      case 0:  // one end from each of several blocks
        for (const auto& b : blocks) hub = set_insert(hub, pick_end(b));
        break;
      case 1: {  // two ends of one block plus an end elsewhere
        const Block& b = blocks[first];
        hub = set_insert(hub, b.ends.front());
        hub = set_insert(hub, b.ends.back());
        hub = set_insert(hub, pick_end(blocks[(first + 1) % blocks.size()]));
        break;
      }
      case 2: {  // a whole block plus an end elsewhere
        hub = blocks[first].vertices;
        hub = set_insert(hub, pick_end(blocks[(first + 1) % blocks.size()]));
        if (coin(rng, 0.5)) hub = set_insert(hub, pick_end(blocks[pick_block()]));
        break;
      }
      default: {  // a star center and one of its petals
        const Block& b = blocks[first];
        hub = set_insert(hub, b.vertices.front());
        hub = set_insert(hub, pick_end(b));
        hub = set_insert(hub, pick_end(blocks[(first + 1) % blocks.size()]));
        break;
      }
    }
    if (hub.size() >= 2) {
      const VertexId x = sk.add(true);
      for (VertexId v : hub) sk.link(x, v);
      taken = hub;
    }
  }

  VertexSet open;
  for (const auto& b : blocks) open = set_union(open, set_difference(b.ends, taken));
  for (std::size_t i = open.size(); i > 1; --i) std::swap(open[i - 1], open[below(rng, i)]);
  for (std::size_t i = 0; i + 1 < open.size(); i += 2) {
    const VertexId x = sk.add(true);
    sk.link(x, open[i]);
    sk.link(x, open[i + 1]);
  }
  if (open.size() % 2 == 1) {
    const VertexId x = sk.add(true);
    sk.link(x, open.back());
    VertexSet all_ends;
    for (const auto& b : blocks) all_ends = set_union(all_ends, b.ends);
    sk.link(x, all_ends[below(rng, all_ends.size())]);
  }
  const double leaf_rate = unit(rng) * 0.6;
  for (const auto& b : blocks) {
    for (VertexId e : b.ends) {
      if (coin(rng, leaf_rate)) sk.link(sk.add(true), e);
    }
  }
  return sk;
}

std::optional<Instance> instance_from(const Sketch& sk) {
  Graph g = sk.build();
  const int k = static_cast<int>(g.num_vertices() - sk.v1.size());
  try {
    return Instance::create(std::move(g), sk.v1, k);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Depth-first walk over every child of every node, returning the first state
// where `rule_id` is selected.
std::optional<Instance> descend_to_rule(const Instance& root, int rule_id, int node_limit) {
  std::vector<Instance> stack{root};
  int visited = 0;
  while (!stack.empty() && visited++ < node_limit) {
    Instance inst = std::move(stack.back());
    stack.pop_back();
    RuleApplication app = select_rule(inst);
    if (app.match.rule_id == rule_id) return inst;
    if (auto* r = std::get_if<Reduce>(&app.outcome)) {
      stack.push_back(std::move(r->next));
    } else if (auto* b = std::get_if<Branch>(&app.outcome)) {
      for (auto it = b->branches.rbegin(); it != b->branches.rend(); ++it) {
        if (static_cast<int>(it->size()) <= inst.budget()) stack.push_back(inst.without(*it));
      }
    }
  }
  return std::nullopt;
}

std::string kv(const std::string& k, const std::string& v) { return k + "=" + v; }

template <typename T>
std::string str(T v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("gnp needs n >= 0 and 0 <= p <= 1");
  Rng rng(seed);
  Graph g(static_cast<std::size_t>(n));
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (unit(rng) < p) g.add_edge(a, b);
    }
  }
  return g;
}

Graph path_graph(int n) {
  if (n < 0) throw std::invalid_argument("path needs n >= 0");
  Graph g(static_cast<std::size_t>(n));
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("complete graph needs n >= 0");
  Graph g(static_cast<std::size_t>(n));
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star needs n >= 0");
  Graph g(static_cast<std::size_t>(leaves) + 1);
  for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph caterpillar(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("caterpillar needs n >= 1");
  Rng rng(seed);
  std::vector<int> legs(static_cast<std::size_t>(n));
  int total = n;
  for (auto& l : legs) {
    l = static_cast<int>(below(rng, 3));
    total += l;
  }
  Graph g(static_cast<std::size_t>(total));
  VertexId next = n;
  for (VertexId v = 0; v < n; ++v) {
    if (v + 1 < n) g.add_edge(v, v + 1);
    for (int i = 0; i < legs[v]; ++i) g.add_edge(v, next++);
  }
  return g;
}

Instance cycle_of_stars(int s, std::uint64_t seed) {
  if (s < 1) throw std::invalid_argument("cycle_of_stars needs s >= 1");
  Rng rng(seed);
  Sketch sk;
  for (int i = 0; i < s; ++i) {
    const VertexId u = sk.add(false), v = sk.add(false), w = sk.add(false);
    sk.add(true);
    sk.link(u, v);
    sk.link(v, w);
  }
  for (int i = 0; i < s; ++i) {
    const VertexId x = 4 * i + 3;
    sk.link(x, 4 * i + 2);
    sk.link(x, 4 * ((i + 1) % s));
  }
  for (int i = 0; i < s; ++i) {
    for (VertexId end : {4 * i, 4 * i + 2}) {
      if (coin(rng, 1.0 / 3.0)) sk.link(sk.add(true), end);
    }
  }
  auto inst = Instance::create(sk.build(), sk.v1, s);
  return std::move(*inst);
}

std::optional<Instance> make_disjoint_instance(const Graph& g, std::uint64_t seed, int k) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    VertexSet v1;
    bool stuck = false;
    while (auto p = find_4path(g, set_difference(g.vertices(), v1))) {
      VertexSet safe;
      for (VertexId v : *p) {
        if (!find_4path(g, set_insert(v1, v))) safe.push_back(v);
      }
      if (safe.empty()) {
        stuck = true;
        break;
      }
      v1 = set_insert(v1, safe[below(rng, safe.size())]);
    }
    if (stuck) continue;
    return Instance::create(g, v1, k);
  }
  return std::nullopt;
}

Instance rule_trigger(int rule_id, std::uint64_t seed) {
  if (rule_id < 3 || rule_id > kRuleCount) throw std::invalid_argument("rule_trigger needs a rule id in 3..24");
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(rule_id));
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::optional<Instance> root;
    const double family = unit(rng);
    if (rule_id == 24 && family < 0.5) {
      root = cycle_of_stars(2 + static_cast<int>(below(rng, 2)), rng());
    } else {
      root = instance_from(family < 0.25 ? scattered_sketch(rng)
                           : family < 0.5 ? ring_sketch(rng)
                                          : linked_sketch(rng));
    }
    if (!root || root->v2_size() > 14) continue;
    if (auto hit = descend_to_rule(*root, rule_id, 400)) return hit->compacted();
  }
  throw std::runtime_error("rule_trigger could not reach rule " + std::to_string(rule_id));
}

std::optional<Model> parse_model(const std::string& name) {
  for (Model m : {Model::gnp, Model::path, Model::cycle, Model::star, Model::caterpillar, Model::cycle_of_stars,
                  Model::rule_trigger}) {
    if (name == model_name(m)) return m;
  }
  return std::nullopt;
}

const char* model_name(Model m) {
  switch (m) {
    case Model::gnp: return "gnp";
    case Model::path: return "path";
    case Model::cycle: return "cycle";
    case Model::star: return "star";
    case Model::caterpillar: return "caterpillar";
    case Model::cycle_of_stars: return "cycle_of_stars";
    case Model::rule_trigger: return "rule_trigger";
  }
  return "unknown";
}

Generated generate(const GenSpec& spec) {
  Generated out{Graph(), std::nullopt, {kv("generator", model_name(spec.model))}};
  switch (spec.model) {
    case Model::gnp:
      out.graph = gnp(spec.n, spec.p, spec.seed);
      out.metadata.push_back(kv("n", str(spec.n)));
      out.metadata.push_back(kv("p", str(spec.p)));
      break;
    case Model::path:
      out.graph = path_graph(spec.n);
      out.metadata.push_back(kv("n", str(spec.n)));
      break;
    case Model::cycle:
      out.graph = cycle_graph(spec.n);
      out.metadata.push_back(kv("n", str(spec.n)));
      break;
    case Model::star:
      out.graph = star_graph(spec.n);
      out.metadata.push_back(kv("n", str(spec.n)));
      break;
    case Model::caterpillar:
      out.graph = caterpillar(spec.n, spec.seed);
      out.metadata.push_back(kv("n", str(spec.n)));
      break;
    case Model::cycle_of_stars:
      out.instance = cycle_of_stars(spec.s, spec.seed);
      out.metadata.push_back(kv("s", str(spec.s)));
      break;
    case Model::rule_trigger:
      out.instance = rule_trigger(spec.rule_id, spec.seed);
      out.metadata.push_back(kv("rule", str(spec.rule_id)));
      break;
  }
  if (out.instance) {
    out.graph = out.instance->graph();
    out.metadata.push_back(kv("k", str(out.instance->budget())));
  }
  out.metadata.push_back(kv("seed", str(spec.seed)));
  out.metadata.push_back(kv("prng", kRngName));
  return out;
}

}  // namespace pvc4::gen
