#include "pvc4/solver.hpp"

#include <string>

#include "pvc4/errors.hpp"

namespace pvc4 {

void SolveStats::merge(const SolveStats& other) {
  nodes += other.nodes;
  leaves += other.leaves;
  max_depth = std::max(max_depth, other.max_depth);
  for (std::size_t i = 0; i < rule_fires.size(); ++i) rule_fires[i] += other.rule_fires[i];
  elapsed += other.elapsed;
}

namespace {

struct Search {
  const SolveOptions& options;
  SolveStats stats;
  std::uint64_t& total_nodes;

  bool run(Instance inst, std::uint64_t depth, VertexSet& cover) {
    stats.max_depth = std::max(stats.max_depth, depth);
    while (true) {
      if (++total_nodes > options.node_cap) {
        throw NodeBudgetExceeded("node budget of " + std::to_string(options.node_cap) + " exceeded");
      }
      ++stats.nodes;
      const RuleApplication app = select_rule(inst);
      ++stats.rule_fires[app.match.rule_id];
      if (options.on_node) options.on_node(NodeEvent{inst, app, depth});

      if (const auto* t = std::get_if<Terminal>(&app.outcome)) {
        ++stats.leaves;
        return t->answer == Answer::yes;
      }
      if (const auto* r = std::get_if<Reduce>(&app.outcome)) {
        inst = r->next;
        continue;
      }
      const auto& br = std::get<Branch>(app.outcome);
      bool explored = false;
      for (const auto& s : br.branches) {
        if (static_cast<int>(s.size()) > inst.budget()) continue;
        explored = true;
        VertexSet sub;
        if (run(inst.without(s), depth + 1, sub)) {
          cover = set_union(s, sub);
          return true;
        }
      }
      if (!explored) ++stats.leaves;
      return false;
    }
  }
};

CoverResult solve_disjoint_counted(const Instance& inst, const SolveOptions& options, std::uint64_t& total_nodes) {
  const auto start = std::chrono::steady_clock::now();
  Search search{options, {}, total_nodes};
  VertexSet cover;
  CoverResult result;
  if (search.run(inst, 0, cover)) result.cover = std::move(cover);
  search.stats.elapsed = std::chrono::steady_clock::now() - start;
  result.stats = search.stats;
  if (options.on_disjoint_solve) options.on_disjoint_solve(inst.budget(), result.stats);
  return result;
}

template <typename Fn>
bool for_each_subset_of_size(const VertexSet& pool, std::size_t r, Fn&& fn) {
  const std::size_t n = pool.size();
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  VertexSet pick(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pick[i] = pool[idx[i]];
    if (fn(pick)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

CoverResult solve_disjoint(const Instance& inst, const SolveOptions& options) {
  std::uint64_t total = 0;
  return solve_disjoint_counted(inst, options, total);
}

CoverResult solve_disjoint(const Graph& g, const VertexSet& v1, int k, const SolveOptions& options) {
  auto inst = Instance::create(g, v1, k);
  if (!inst) return {};
  return solve_disjoint(*inst, options);
}

CoverResult iterative_compression(const Graph& g, int k, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CoverResult result;
  std::uint64_t total_nodes = 0;
  auto finish = [&](std::optional<VertexSet> cover) {
    result.cover = std::move(cover);
    result.stats.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  };
  if (k < 0) return finish(std::nullopt);

  VertexSet seen;
  VertexSet cover;
  for (VertexId v : g.vertices()) {
    seen.push_back(v);
    const Graph h = induced_subgraph(g, seen);
    if (!find_4path(h, set_difference(seen, cover))) continue;
    cover = set_insert(cover, v);
    if (static_cast<int>(cover.size()) <= k) continue;

    // |cover| = k + 1: keep Y ⊆ cover in the solution, forbid the rest.
    std::optional<VertexSet> compressed;
    for (int kept = k; kept >= 0 && !compressed; --kept) {
      for_each_subset_of_size(cover, static_cast<std::size_t>(kept), [&](const VertexSet& y) {
        const VertexSet v1 = set_difference(cover, y);
        auto inst = Instance::create(delete_vertices(h, y), v1, k - kept);
        if (!inst) return false;
        CoverResult sub = solve_disjoint_counted(*inst, options, total_nodes);
        result.stats.merge(sub.stats);
        if (!sub.cover) return false;
        compressed = set_union(y, *sub.cover);
        return true;
      });
    }
    if (!compressed) return finish(std::nullopt);
    cover = std::move(*compressed);
  }
  if (!verify_cover(g, cover) || static_cast<int>(cover.size()) > k) {
    throw InvariantViolation("iterative compression produced an invalid cover");
  }
  return finish(std::move(cover));
}

MinimizeResult minimize(const Graph& g, const SolveOptions& options) {
  MinimizeResult out;
  for (int k = 0;; ++k) {
    CoverResult r = iterative_compression(g, k, options);
    out.stats.merge(r.stats);
    if (r.cover) {
      out.size = k;
      out.cover = std::move(*r.cover);
      return out;
    }
  }
}

bool verify_cover(const Graph& g, const VertexSet& s) { return !find_4path(delete_vertices(g, s)); }

}  // namespace pvc4
