#include "pvc4/bench.hpp"

#include <cmath>
#include <optional>

#include "pvc4/generate.hpp"

namespace pvc4 {

std::uint64_t leaf_bound(int k0) {
  if (k0 <= 0) return 1;
  return static_cast<std::uint64_t>(std::ceil(std::pow(1.62, k0)));
}

double fit_growth_base(const std::vector<std::pair<double, double>>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (auto [x, y] : points) {
    if (y <= 0) continue;
    const double ly = std::log(y);
    sx += x;
    sy += ly;
    sxx += x * x;
    sxy += x * ly;
    ++used;
  }
  if (used < 2) return 0;
  const double denom = used * sxx - sx * sx;
  if (denom == 0) return 0;
  return std::exp((used * sxy - sx * sy) / denom);
}

namespace {

struct Run {
  bool yes = false;
  std::uint64_t nodes = 0;
};

}  // namespace

BenchTable run_bench(const BenchConfig& config) {
  BenchTable table;
  std::vector<Instance> disjoint;
  std::vector<Graph> graphs;
  for (int i = 0; i < config.count; ++i) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
    if (config.suite == BenchSuite::gnp) {
      graphs.push_back(gen::gnp(config.n, config.p, seed));
    } else if (config.suite == BenchSuite::disjoint) {
      // Dense draws can lack a usable V1; step the seed until one works.
      for (std::uint64_t attempt = 0;; ++attempt) {
        const Graph g = gen::gnp(config.n, config.p, seed * 1000 + attempt);
        if (auto inst = gen::make_disjoint_instance(g, seed * 1000 + attempt)) {
          disjoint.push_back(*inst);
          break;
        }
      }
    }
  }

  for (int k = 0; k <= config.kmax; ++k) {
    BenchRow row;
    row.k = k;
    SolveOptions options;
    options.node_cap = config.node_cap;
    options.on_disjoint_solve = [&](int k0, const SolveStats& stats) {
      ++row.disjoint_solves;
      row.max_leaves = std::max(row.max_leaves, stats.leaves);
      if (stats.leaves > leaf_bound(k0)) ++row.leaf_violations;
    };
    auto record = [&](const CoverResult& r) {
      ++row.runs;
      if (r.cover) ++row.yes;
      row.mean_nodes += static_cast<double>(r.stats.nodes);
      row.max_nodes = std::max(row.max_nodes, r.stats.nodes);
    };
    switch (config.suite) {
      case BenchSuite::gnp:
        for (const auto& g : graphs) record(iterative_compression(g, k, options));
        break;
      case BenchSuite::disjoint:
        for (const auto& inst : disjoint) record(solve_disjoint(inst.with_budget(k), options));
        break;
      case BenchSuite::cycle_of_stars:
        if (k >= 1) {
          for (int i = 0; i < config.count; ++i) {
            record(solve_disjoint(gen::cycle_of_stars(k, config.seed + static_cast<std::uint64_t>(i)), options));
          }
        }
        break;
    }
    if (row.runs > 0) row.mean_nodes /= row.runs;
    table.rows.push_back(row);
  }

  bool any_no = false;
  for (const auto& row : table.rows) any_no |= row.runs > 0 && row.yes < row.runs;
  std::vector<std::pair<double, double>> points;
  for (const auto& row : table.rows) {
    if (row.runs == 0 || (any_no && row.yes == row.runs)) continue;
    points.emplace_back(row.k, row.mean_nodes);
  }
  table.growth_base = fit_growth_base(points);
  return table;
}

}  // namespace pvc4
