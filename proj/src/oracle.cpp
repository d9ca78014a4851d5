#include "pvc4/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>
#include <string>

#include "pvc4/errors.hpp"

namespace pvc4::oracle {

namespace {

bool extend(const Graph& g, std::vector<VertexId>& path) {
  if (path.size() == 4) return true;
  for (VertexId next : g.neighbors(path.back())) {
    if (std::find(path.begin(), path.end(), next) != path.end()) continue;
    path.push_back(next);
    if (extend(g, path)) return true;
    path.pop_back();
  }
  return false;
}

// First subset of `pool` (by size, then lexicographically) for which g minus
// the subset has no 4-path.
std::optional<OracleAnswer> smallest_cover_within(const Graph& g, const VertexSet& pool) {
  const std::size_t n = pool.size();
  for (std::size_t r = 0; r <= n; ++r) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      VertexSet pick;
      for (std::size_t i : idx) pick.push_back(pool[i]);
      Graph h = g;
      for (VertexId v : pick) h.remove_vertex(v);
      if (!has_4path(h)) return OracleAnswer{r, pick};
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

bool has_4path(const Graph& g) {
  std::vector<VertexId> path;
  for (VertexId s : g.vertices()) {
    path.assign(1, s);
    if (extend(g, path)) return true;
  }
  return false;
}

OracleAnswer brute_min_pvc4(const Graph& g) {
  if (g.num_vertices() > kMaxVertices) {
    throw std::length_error("oracle limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  auto ans = smallest_cover_within(g, g.vertices());
  if (!ans) throw InvariantViolation("deleting every vertex left a 4-path");
  return *ans;
}

std::optional<OracleAnswer> brute_min_disjoint(const Instance& inst) {
  const VertexSet v2 = inst.v2();
  if (v2.size() > kMaxVertices) {
    throw std::length_error("oracle limited to " + std::to_string(kMaxVertices) + " V2 vertices");
  }
  auto ans = smallest_cover_within(inst.graph(), v2);
  if (!ans) throw InvariantViolation("G[V1] contains a 4-path in an accepted instance");
  return ans;
}

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n) {
  if (n > kMaxLabeledN) throw std::length_error("labeled graph enumeration limited to n <= 6");
  count_ = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

std::optional<Graph> LabeledGraphs::next() {
  if (cursor_ >= count_) return std::nullopt;
  Graph g(n_);
  std::size_t bit = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b, ++bit) {
      if (cursor_ >> bit & 1U) g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
  }
  ++cursor_;
  return g;
}

std::vector<std::string> check_rule_outcome(const Instance& inst, const RuleApplication& application) {
  std::vector<std::string> problems;
  const int rule = application.match.rule_id;
  const std::size_t opt = brute_min_disjoint(inst)->min_size;
  const int k = inst.budget();
  const bool yes = k >= 0 && opt <= static_cast<std::size_t>(k);
  auto report = [&](const std::string& what) { problems.push_back("rule " + std::to_string(rule) + ": " + what); };

  if (const auto* t = std::get_if<Terminal>(&application.outcome)) {
    if ((t->answer == Answer::yes) != yes) {
      report("answered " + std::string(t->answer == Answer::yes ? "yes" : "no") + " but the optimum is " +
             std::to_string(opt) + " with budget " + std::to_string(k));
    }
  } else if (const auto* r = std::get_if<Reduce>(&application.outcome)) {
    const OracleAnswer reduced = *brute_min_disjoint(r->next);
    if (reduced.min_size != opt) {
      report("reduction changed the optimum from " + std::to_string(opt) + " to " + std::to_string(reduced.min_size));
    }
    if (r->next.budget() != k) report("reduction changed the budget");
    if (has_4path(delete_vertices(inst.graph(), reduced.witness))) {
      report("optimal cover of the reduced instance does not cover the original");
    }
  } else {
    const auto& branches = std::get<Branch>(application.outcome).branches;
    std::size_t best = static_cast<std::size_t>(-1);
    bool some_yes = false;
    for (const auto& s : branches) {
      const std::size_t sub = brute_min_disjoint(inst.without(s))->min_size;
      best = std::min(best, s.size() + sub);
      const int rest = k - static_cast<int>(s.size());
      some_yes |= rest >= 0 && sub <= static_cast<std::size_t>(rest);
    }
    if (branches.empty()) report("no branches");
    if (best != opt) report("branch minimum " + std::to_string(best) + " differs from optimum " + std::to_string(opt));
    if (some_yes != yes) report("branch feasibility disagrees with the budget test");
  }
  return problems;
}

}  // namespace pvc4::oracle
