#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pvc4/solver.hpp"

namespace pvc4 {

/// ceil(1.62^k0): the most leaves a disjoint search with initial budget k0
/// may produce.
std::uint64_t leaf_bound(int k0);

enum class BenchSuite { gnp, disjoint, cycle_of_stars };

struct BenchConfig {
  BenchSuite suite = BenchSuite::gnp;
  int kmax = 8;
  int count = 5;  // instances per row
  int n = 30;
  double p = 0.08;
  std::uint64_t seed = 1;
  std::uint64_t node_cap = kDefaultNodeCap;
};

struct BenchRow {
  int k = 0;
  int runs = 0;
  int yes = 0;
  double mean_nodes = 0;
  std::uint64_t max_nodes = 0;
  /// Largest leaf count of any disjoint search in this row, and the number
  /// of those searches whose leaves exceeded leaf_bound of their own budget.
  std::uint64_t max_leaves = 0;
  std::uint64_t disjoint_solves = 0;
  std::uint64_t leaf_violations = 0;
};

struct BenchTable {
  std::vector<BenchRow> rows;
  /// exp of the least-squares slope of ln(mean_nodes) against k.
  double growth_base = 0;
};

/// gnp: iterative compression on gnp(n, p) graphs with budget k.
/// disjoint: the disjoint search on instances from make_disjoint_instance.
/// cycle_of_stars: the disjoint search on a ring of k stars.
/// Rows where every run answered yes are left out of the fit once any row
/// answered no, since yes-runs stop at their first cover.
BenchTable run_bench(const BenchConfig& config);

/// exp(slope) of a least-squares line through (x, ln y); points with y <= 0
/// are skipped. Returns 0 with fewer than two usable points.
double fit_growth_base(const std::vector<std::pair<double, double>>& points);

}  // namespace pvc4
