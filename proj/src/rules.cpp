#include "pvc4/rules.hpp"

#include <array>
#include <map>
#include <sstream>

#include "pvc4/errors.hpp"

namespace pvc4 {

namespace {

// Per-instance caches shared by the matchers during one select_rule call.
class Context {
 public:
  explicit Context(const Instance& i) : inst(i), g(i.graph()) {}

  const Instance& inst;
  const Graph& g;

  const std::optional<Path4>& path4() {
    if (!path4_done_) {
      path4_ = find_4path(g);
      path4_done_ = true;
    }
    return path4_;
  }

  const std::vector<VertexSet>& components() {
    if (!components_) components_ = connected_components(g);
    return *components_;
  }

  const PartitionIndex& index() {
    if (!index_) index_.emplace(inst);
    return *index_;
  }

  const ConnectionProfile& profile(VertexId x) {
    auto it = profiles_.find(x);
    if (it == profiles_.end()) it = profiles_.emplace(x, index().profile(x)).first;
    return it->second;
  }

  const VertexSet& boundary_set(VertexId x) {
    auto it = sb_.find(x);
    if (it == sb_.end()) it = sb_.emplace(x, sb(index(), x)).first;
    return it->second;
  }

 private:
  bool path4_done_ = false;
  std::optional<Path4> path4_;
  std::optional<std::vector<VertexSet>> components_;
  std::optional<PartitionIndex> index_;
  std::map<VertexId, ConnectionProfile> profiles_;
  std::map<VertexId, VertexSet> sb_;
};

using Matcher = std::optional<RuleApplication> (*)(Context&);

RuleApplication terminal(int rule, std::vector<VertexId> witness, Answer a) {
  return {{rule, std::move(witness)}, Terminal{a}};
}

RuleApplication reduce(int rule, std::vector<VertexId> witness, Instance next, ReduceKind kind) {
  return {{rule, std::move(witness)}, Reduce{std::move(next), kind}};
}

RuleApplication branch(const Instance& inst, int rule, std::vector<VertexId> witness,
                       std::vector<VertexSet> sets) {
  for (const auto& s : sets) {
    if (s.empty()) throw InvariantViolation("rule " + std::to_string(rule) + " produced an empty branch");
    for (VertexId v : s) {
      if (!inst.in_v2(v)) {
        throw InvariantViolation("rule " + std::to_string(rule) + " branches on non-V2 vertex " +
                                 std::to_string(v));
      }
    }
  }
  return {{rule, std::move(witness)}, Branch{std::move(sets)}};
}

VertexSet v1_neighbors(const Instance& inst, VertexId v) { return n_i(inst, v, Side::v1); }
VertexSet v2_neighbors(const Instance& inst, VertexId v) { return n_i(inst, v, Side::v2); }

bool any_adjacent_to_leaf(const Instance& inst, const VertexSet& s) {
  for (VertexId w : s) {
    if (adjacent_to_leaf(inst, w)) return true;
  }
  return false;
}

std::optional<RuleApplication> match01(Context& ctx) {
  const int k = ctx.inst.budget();
  if (k < 0) return terminal(1, {}, Answer::no);
  if (k == 0 && ctx.path4()) {
    const auto& p = *ctx.path4();
    return terminal(1, {p.begin(), p.end()}, Answer::no);
  }
  return std::nullopt;
}

std::optional<RuleApplication> match02(Context& ctx) {
  if (!ctx.path4()) return terminal(2, {}, Answer::yes);
  return std::nullopt;
}

std::optional<RuleApplication> match03(Context& ctx) {
  for (const auto& c : ctx.components()) {
    if (!find_4path(ctx.g, c)) return reduce(3, c, ctx.inst.without_component(c), ReduceKind::drop_component);
  }
  return std::nullopt;
}

// Combinations of `pool` of size r in lexicographic order; stops when fn returns true.
template <typename Fn>
bool for_each_combination(const VertexSet& pool, std::size_t r, Fn&& fn) {
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

std::optional<RuleApplication> match04(Context& ctx) {
  for (const auto& c : ctx.components()) {
    VertexSet c2;
    for (VertexId v : c) {
      if (ctx.inst.in_v2(v)) c2.push_back(v);
    }
    if (c2.size() > 3) continue;
    VertexSet best;
    bool found = false;
    for (std::size_t r = 0; r <= c2.size() && !found; ++r) {
      found = for_each_combination(c2, r, [&](const VertexSet& s) {
        if (find_4path(ctx.g, set_difference(c, s))) return false;
        best = s;
        return true;
      });
    }
    if (!found) throw InvariantViolation("component without a V1-disjoint cover");
    return branch(ctx.inst, 4, c, {best});
  }
  return std::nullopt;
}

std::optional<RuleApplication> match05(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (VertexId v : inst.v2()) {
    const VertexSet n1 = v1_neighbors(inst, v);
    const std::size_t d2 = deg_i(inst, v, Side::v2);
    bool movable = false;
    if (d2 == 1) {
      movable = std::all_of(n1.begin(), n1.end(), [&](VertexId y) { return is_leaf(inst, y); });
    }
    if (!movable && n1.empty()) movable = is_triangle(ctx.g, ctx.index().component_of(v));
    if (movable) return reduce(5, {v}, inst.with_moved_to_v1(v), ReduceKind::move_to_v1);
  }
  return std::nullopt;
}

// A 4-path whose only V2 vertex is v, or nullopt.
std::optional<Path4> path_with_single_v2(const Instance& inst, VertexId v) {
  const VertexSet n1 = v1_neighbors(inst, v);
  // v at an end: v-a-b-c
  for (VertexId a : n1) {
    for (VertexId b : v1_neighbors(inst, a)) {
      for (VertexId c : v1_neighbors(inst, b)) {
        if (c != a) return Path4{v, a, b, c};
      }
    }
  }
  // v second: a-v-b-c
  for (VertexId a : n1) {
    for (VertexId b : n1) {
      if (b == a) continue;
      for (VertexId c : v1_neighbors(inst, b)) {
        if (c != a) return Path4{a, v, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match06(Context& ctx) {
  for (VertexId v : ctx.inst.v2()) {
    if (auto p = path_with_single_v2(ctx.inst, v)) {
      return branch(ctx.inst, 6, {p->begin(), p->end()}, {{v}});
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match07(Context& ctx) {
  const Instance& inst = ctx.inst;
  auto outside = [&](VertexId x1, VertexId x2, VertexId x3) {
    VertexSet out = set_union(v2_neighbors(inst, x1), v2_neighbors(inst, x3));
    return set_difference(out, make_set({x1, x2, x3}));
  };
  for (VertexId v : inst.v2()) {
    const VertexSet n1 = v1_neighbors(inst, v);
    for (std::size_t i = 0; i < n1.size(); ++i) {
      for (std::size_t j = i + 1; j < n1.size(); ++j) {
        VertexSet out = outside(n1[i], v, n1[j]);
        if (out.size() >= 2) return branch(inst, 7, {n1[i], v, n1[j]}, {{v}, std::move(out)});
      }
    }
    for (VertexId a : n1) {
      for (VertexId b : v1_neighbors(inst, a)) {
        VertexSet out = outside(v, a, b);
        if (out.size() >= 2) return branch(inst, 7, {v, a, b}, {{v}, std::move(out)});
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match08(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (const auto& c : ctx.index().components(Side::v1)) {
    if (c.size() < 2) continue;
    // A 1-component has no V1 neighbors outside itself, so N(C) = N_2(C).
    for (VertexId v : neighborhood_of_set(ctx.g, c)) {
      const VertexSet n2 = v2_neighbors(inst, v);
      if (n2.size() != 1) continue;
      std::vector<VertexId> witness = c;
      witness.push_back(v);
      witness.push_back(n2[0]);
      return branch(inst, 8, std::move(witness), {{n2[0]}});
    }
    throw InvariantViolation("1-component at " + std::to_string(c.front()) +
                             " has no neighbor with exactly one V2 neighbor");
  }
  return std::nullopt;
}

bool is_connection(Context& ctx, VertexId v) {
  return set_contains(ctx.index().connection_vertices(), v);
}

std::optional<RuleApplication> match09(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (VertexId v : inst.v2()) {
    VertexSet conn;
    for (VertexId x : v1_neighbors(inst, v)) {
      if (is_connection(ctx, x)) conn.push_back(x);
    }
    if (conn.size() >= 2) {
      return reduce(9, {v, conn[0], conn[1]}, inst.without_edge(v, conn[1]), ReduceKind::delete_edge);
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match10(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& nx = ctx.g.neighbors(x);
    for (const auto& c : ctx.profile(x).split_list) {
      for (VertexId u : set_intersection(c, nx)) {
        VertexSet out = set_difference(v2_neighbors(inst, u), nx);
        if (out.size() >= 2) return branch(inst, 10, {x, u}, {{u}, std::move(out)});
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match11(Context& ctx) {
  for (const auto& c : ctx.index().components(Side::v2)) {
    if (c.size() < 3) continue;
    for (VertexId x : ctx.index().connection_vertices()) {
      if (!contains(ctx.inst, x, c)) continue;
      VertexId mid;
      if (auto center = is_star(ctx.g, c)) {
        mid = *center;
      } else if (is_triangle(ctx.g, c)) {
        mid = c.front();
      } else {
        throw InvariantViolation("2-component at " + std::to_string(c.front()) + " is neither a star nor a triangle");
      }
      return branch(ctx.inst, 11, {x, mid}, {{mid}});
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match12(Context& ctx) {
  for (const auto& c : ctx.index().components(Side::v2)) {
    if (!is_triangle(ctx.g, c)) continue;
    for (VertexId x : ctx.index().connection_vertices()) {
      if (!splits(ctx.inst, x, c)) continue;
      const VertexId v = boundary_vertex(ctx.inst, x, c);
      return branch(ctx.inst, 12, {x, v}, {{v}, set_erase(c, v)});
    }
    throw InvariantViolation("triangle 2-component at " + std::to_string(c.front()) +
                             " is not split by any connection vertex");
  }
  return std::nullopt;
}

std::optional<RuleApplication> match13(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& p = ctx.profile(x);
    if (p.split_list.size() != 1) continue;
    const auto& nx = ctx.g.neighbors(x);
    if (!any_adjacent_to_leaf(inst, nx)) continue;
    const VertexId bv = boundary_vertex(inst, x, p.split_list[0]);
    const VertexSet cand = set_intersection(nx, ctx.g.neighbors(bv));
    return branch(inst, 13, {x, bv, cand.front()}, {{cand.front()}});
  }
  return std::nullopt;
}

std::optional<RuleApplication> match14(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& nx = ctx.g.neighbors(x);
    for (const auto& c : ctx.profile(x).split_list) {
      if (is_independent_set(ctx.g, set_intersection(c, nx))) continue;
      auto center = is_star(ctx.g, c);
      if (!center) throw InvariantViolation("rule 14 component at " + std::to_string(c.front()) + " is not a star");
      const VertexId v = boundary_vertex(inst, x, c);
      return branch(inst, 14, {x, *center, v}, {{*center}, set_insert(set_difference(nx, c), v)});
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match15(Context& ctx) {
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& p = ctx.profile(x);
    if (p.t2 != 0 || p.contained_list.size() != 1 || p.contained_list[0].size() != 2) continue;
    const VertexSet& cprime = p.contained_list[0];
    const VertexId u = cprime.front();
    return branch(ctx.inst, 15, {x, u},
                  {set_difference(ctx.g.neighbors(x), cprime), set_insert(ctx.boundary_set(x), u)});
  }
  return std::nullopt;
}

std::optional<RuleApplication> match16(Context& ctx) {
  for (VertexId x : ctx.index().connection_vertices()) {
    if (ctx.profile(x).contained_list.empty()) continue;
    VertexSet s = set_union(ctx.boundary_set(x), sc(ctx.index(), x));
    if (s.empty()) throw InvariantViolation("rule 16 at " + std::to_string(x) + " has an empty branch set");
    return branch(ctx.inst, 16, {x}, {std::move(s)});
  }
  return std::nullopt;
}

std::optional<RuleApplication> match17(Context& ctx) {
  for (VertexId x : ctx.index().connection_vertices()) {
    if (ctx.profile(x).split_list.size() != 1) continue;
    return branch(ctx.inst, 17, {x}, {ctx.boundary_set(x)});
  }
  return std::nullopt;
}

std::optional<RuleApplication> match18(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& nx = ctx.g.neighbors(x);
    if (!any_adjacent_to_leaf(inst, nx)) continue;
    for (const auto& c : ctx.profile(x).split_list) {
      const VertexId v = boundary_vertex(inst, x, c);
      if (deg_i(inst, v, Side::v1) == 0) continue;
      const VertexSet meet = set_intersection(c, nx);
      if (meet.size() != 1) {
        throw InvariantViolation("rule 18 expects a single vertex in C ∩ N(x) at " + std::to_string(x));
      }
      const VertexId u = meet[0];
      return branch(inst, 18, {x, u, v}, {{u}, set_insert(set_erase(nx, u), v)});
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match19(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& nx = ctx.g.neighbors(x);
    for (const auto& c : ctx.profile(x).split_list) {
      const VertexId v = boundary_vertex(inst, x, c);
      if (deg_i(inst, v, Side::v1) == 0) continue;
      const VertexId u = set_intersection(c, nx).front();
      return branch(inst, 19, {x, u, v}, {{u}, ctx.boundary_set(x)});
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match20(Context& ctx) {
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& nx = ctx.g.neighbors(x);
    for (const auto& c : ctx.profile(x).split_list) {
      if (set_intersection(c, nx).size() < 2) continue;
      return branch(ctx.inst, 20, {x, c.front()}, {ctx.boundary_set(x)});
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match21(Context& ctx) {
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& p = ctx.profile(x);
    if (p.split_list.size() < 3) continue;
    const auto& nx = ctx.g.neighbors(x);
    const VertexSet& bset = ctx.boundary_set(x);
    std::vector<VertexSet> sets{bset};
    const VertexSet nx_and_b = set_union(nx, bset);
    for (const auto& c : p.split_list) {
      sets.push_back(set_union(set_difference(c, nx_and_b), set_difference(nx, c)));
    }
    return branch(ctx.inst, 21, {x}, std::move(sets));
  }
  return std::nullopt;
}

std::optional<RuleApplication> match22(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (VertexId x : ctx.index().connection_vertices()) {
    const auto& nx = ctx.g.neighbors(x);
    if (any_adjacent_to_leaf(inst, nx)) continue;
    const auto& splits_x = ctx.profile(x).split_list;
    for (std::size_t i = 0; i < splits_x.size(); ++i) {
      for (std::size_t j = 0; j < splits_x.size(); ++j) {
        if (i == j || splits_x[j].size() < 4) continue;
        const VertexSet& c = splits_x[i];
        const VertexSet& cp = splits_x[j];
        const VertexSet meet = set_intersection(c, nx);
        const VertexSet meet_p = set_intersection(cp, nx);
        if (meet.size() != 1 || meet_p.size() != 1 || c.size() < 3) {
          throw InvariantViolation("rule 22 configuration at " + std::to_string(x) + " is malformed");
        }
        const VertexId u = meet[0];
        const VertexId up = meet_p[0];
        const VertexId v = boundary_vertex(inst, x, c);
        const VertexId vp = boundary_vertex(inst, x, cp);
        return branch(inst, 22, {x, u, v, up, vp},
                      {make_set({v, vp}), set_insert(set_difference(c, make_set({u, v})), up),
                       set_insert(set_difference(cp, make_set({up, vp})), u)});
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match23(Context& ctx) {
  const Instance& inst = ctx.inst;
  for (const auto& c : ctx.index().components(Side::v2)) {
    if (c.size() < 4) continue;
    const auto center = is_star(ctx.g, c);
    if (!center) throw InvariantViolation("2-component at " + std::to_string(c.front()) + " is not a star");
    const VertexSet petals = set_erase(c, *center);
    std::vector<VertexSet> sets;
    std::vector<VertexId> witness{*center};
    for (VertexId vi : petals) {
      VertexSet conn;
      for (VertexId y : v1_neighbors(inst, vi)) {
        if (is_connection(ctx, y)) conn.push_back(y);
      }
      if (conn.size() != 1) {
        throw InvariantViolation("star petal " + std::to_string(vi) + " is not adjacent to exactly one connection vertex");
      }
      const VertexSet others = set_erase(ctx.g.neighbors(conn[0]), vi);
      if (others.size() != 1) {
        throw InvariantViolation("connection vertex " + std::to_string(conn[0]) + " does not have degree 2");
      }
      witness.push_back(vi);
      sets.push_back(set_insert(set_erase(petals, vi), others[0]));
    }
    return branch(inst, 23, std::move(witness), std::move(sets));
  }
  return std::nullopt;
}

std::optional<RuleApplication> match24(Context& ctx) {
  const auto& comps = ctx.components();
  if (comps.empty()) return std::nullopt;
  auto cycle = match_cycle_of_stars(ctx.inst, comps.front());
  if (!cycle) {
    throw InvariantViolation("no rule applies and the component at " + std::to_string(comps.front().front()) +
                             " is not a cycle of stars");
  }
  std::vector<VertexId> witness = cycle->x;
  return branch(ctx.inst, 24, std::move(witness), {make_set(cycle->u)});
}

constexpr std::array<Matcher, kRuleCount> kMatchers = {
    match01, match02, match03, match04, match05, match06, match07, match08,
    match09, match10, match11, match12, match13, match14, match15, match16,
    match17, match18, match19, match20, match21, match22, match23, match24,
};

constexpr std::array<const char*, kRuleCount> kNames = {
    "budget",         "solved",          "drop_component",      "small_component",
    "move_to_v1",     "forced_vertex",   "p3_branch",           "v1_edge",
    "delete_edge",    "boundary_branch", "contained_big",       "triangle",
    "split1_leaves",  "not_independent", "contains_special",    "contains",
    "split_one",      "degv_leaf",       "degv",                "large_intersection",
    "split_three",    "large_far_component", "large_star",      "cycle_of_stars",
};

std::optional<RuleApplication> run_one(int id, const Instance& inst) {
  Context ctx(inst);
  return kMatchers[id - 1](ctx);
}

}  // namespace

const char* rule_name(int rule_id) {
  if (rule_id < 1 || rule_id > kRuleCount) throw std::out_of_range("rule id out of range");
  return kNames[rule_id - 1];
}

std::optional<RuleApplication> rule01_budget(const Instance& inst) { return run_one(1, inst); }
std::optional<RuleApplication> rule02_solved(const Instance& inst) { return run_one(2, inst); }
std::optional<RuleApplication> rule03_drop_component(const Instance& inst) { return run_one(3, inst); }
std::optional<RuleApplication> rule04_small_component(const Instance& inst) { return run_one(4, inst); }
std::optional<RuleApplication> rule05_move_to_v1(const Instance& inst) { return run_one(5, inst); }
std::optional<RuleApplication> rule06_forced_vertex(const Instance& inst) { return run_one(6, inst); }
std::optional<RuleApplication> rule07_p3_branch(const Instance& inst) { return run_one(7, inst); }
std::optional<RuleApplication> rule08_v1_edge(const Instance& inst) { return run_one(8, inst); }
std::optional<RuleApplication> rule09_delete_edge(const Instance& inst) { return run_one(9, inst); }
std::optional<RuleApplication> rule10_boundary_branch(const Instance& inst) { return run_one(10, inst); }
std::optional<RuleApplication> rule11_contained_big(const Instance& inst) { return run_one(11, inst); }
std::optional<RuleApplication> rule12_triangle(const Instance& inst) { return run_one(12, inst); }
std::optional<RuleApplication> rule13_split1_leaves(const Instance& inst) { return run_one(13, inst); }
std::optional<RuleApplication> rule14_not_independent(const Instance& inst) { return run_one(14, inst); }
std::optional<RuleApplication> rule15_contains_special(const Instance& inst) { return run_one(15, inst); }
std::optional<RuleApplication> rule16_contains(const Instance& inst) { return run_one(16, inst); }
std::optional<RuleApplication> rule17_split_one(const Instance& inst) { return run_one(17, inst); }
std::optional<RuleApplication> rule18_degv_leaf(const Instance& inst) { return run_one(18, inst); }
std::optional<RuleApplication> rule19_degv(const Instance& inst) { return run_one(19, inst); }
std::optional<RuleApplication> rule20_large_intersection(const Instance& inst) { return run_one(20, inst); }
std::optional<RuleApplication> rule21_split_three(const Instance& inst) { return run_one(21, inst); }
std::optional<RuleApplication> rule22_large_far_component(const Instance& inst) { return run_one(22, inst); }
std::optional<RuleApplication> rule23_large_star(const Instance& inst) { return run_one(23, inst); }
std::optional<RuleApplication> rule24_cycle_of_stars(const Instance& inst) { return run_one(24, inst); }

std::optional<RuleApplication> try_rule(int rule_id, const Instance& inst) {
  if (rule_id < 1 || rule_id > kRuleCount) throw std::out_of_range("rule id out of range");
  return run_one(rule_id, inst);
}

RuleApplication select_rule(const Instance& inst) {
  Context ctx(inst);
  for (const auto& m : kMatchers) {
    if (auto app = m(ctx)) return std::move(*app);
  }
  throw InvariantViolation("no rule applies");
}

std::optional<CycleOfStars> match_cycle_of_stars(const Instance& inst, const VertexSet& component) {
  const Graph& g = inst.graph();
  CycleOfStars out;
  out.component = component;

  VertexSet comp_v2;
  for (VertexId v : component) {
    if (inst.in_v2(v)) comp_v2.push_back(v);
  }
  if (comp_v2.empty()) return std::nullopt;

  // Walk the cycle: star -> far endpoint w -> its connection vertex -> next u.
  auto star_of = [&](VertexId v) -> std::optional<VertexSet> {
    VertexSet star{v};
    for (VertexId a : n_i(inst, v, Side::v2)) {
      star = set_insert(star, a);
      for (VertexId b : n_i(inst, a, Side::v2)) star = set_insert(star, b);
    }
    if (star.size() != 3 || !is_star(g, star)) return std::nullopt;
    return star;
  };
  auto connection_of = [&](VertexId v) -> std::optional<VertexId> {
    std::optional<VertexId> found;
    for (VertexId y : n_i(inst, v, Side::v1)) {
      if (deg_i(inst, y, Side::v2) < 2) continue;
      if (found) return std::nullopt;
      found = y;
    }
    return found;
  };

  auto first = star_of(comp_v2.front());
  if (!first) return std::nullopt;
  const VertexId first_center = *is_star(g, *first);
  VertexId u = set_erase(*first, first_center).front();
  VertexSet seen;
  while (true) {
    auto star = star_of(u);
    if (!star) return std::nullopt;
    const VertexId center = *is_star(g, *star);
    if (center == u) return std::nullopt;
    if (intersects(*star, seen)) return std::nullopt;
    seen = set_union(seen, *star);
    const VertexId w = set_difference(*star, make_set({u, center})).front();
    auto x = connection_of(w);
    if (!x || g.degree(*x) != 2) return std::nullopt;
    const VertexId next = set_erase(g.neighbors(*x), w).front();
    out.u.push_back(u);
    out.v.push_back(center);
    out.w.push_back(w);
    out.x.push_back(*x);
    if (out.u.size() > comp_v2.size()) return std::nullopt;
    if (next == out.u.front()) break;
    u = next;
  }

  // Every other vertex must be a leaf on a u or w vertex; then compare edge sets.
  const VertexSet uw = set_union(make_set(out.u), make_set(out.w));
  const VertexSet structural = set_union(seen, make_set(out.x));
  if (make_set(out.x).size() != out.x.size()) return std::nullopt;
  for (VertexId v : set_difference(component, structural)) {
    if (!inst.in_v1(v) || g.degree(v) != 1 || !set_contains(uw, g.neighbors(v)[0])) return std::nullopt;
    out.leaves.push_back(v);
  }
  std::vector<std::pair<VertexId, VertexId>> expected;
  auto add = [&](VertexId a, VertexId b) { expected.emplace_back(std::min(a, b), std::max(a, b)); };
  const std::size_t s = out.u.size();
  for (std::size_t i = 0; i < s; ++i) {
    add(out.u[i], out.v[i]);
    add(out.v[i], out.w[i]);
    add(out.w[i], out.x[i]);
    add(out.x[i], out.u[(i + 1) % s]);
  }
  for (VertexId l : out.leaves) add(l, g.neighbors(l)[0]);
  std::sort(expected.begin(), expected.end());
  std::vector<std::pair<VertexId, VertexId>> actual;
  for (VertexId a : component) {
    for (VertexId b : g.neighbors(a)) {
      if (a < b) actual.emplace_back(a, b);
    }
  }
  std::sort(actual.begin(), actual.end());
  if (expected != actual) return std::nullopt;
  return out;
}

std::vector<std::string> check_observations(const Instance& inst, int selected_rule) {
  std::vector<std::string> out;
  auto fail = [&](int after, const std::string& what) {
    std::ostringstream os;
    os << "observation after rule " << after << " violated (selected rule " << selected_rule << "): " << what;
    out.push_back(os.str());
  };
  const Graph& g = inst.graph();
  const PartitionIndex index(inst);
  const VertexSet& conn = index.connection_vertices();

  if (selected_rule >= 8) {
    for (VertexId x : conn) {
      bool shared = false;
      for (VertexId v : g.neighbors(x)) {
        if (n_i(inst, v, Side::v1) != VertexSet{x}) shared = true;
      }
      if (shared && deg_i(inst, x, Side::v2) != 2) fail(7, "connection vertex " + std::to_string(x) + " has deg_2 != 2");
    }
  }
  if (selected_rule >= 9 && !is_independent_set(g, inst.v1())) fail(8, "V1 is not independent");
  if (selected_rule >= 10) {
    for (VertexId v : inst.v2()) {
      if (intersection_size(g.neighbors(v), conn) > 1) {
        fail(9, "vertex " + std::to_string(v) + " touches several connection vertices");
      }
    }
  }
  if (selected_rule >= 18) {
    for (VertexId x : conn) {
      if (index.profile(x).split_list.size() < 2) fail(17, "connection vertex " + std::to_string(x) + " splits fewer than two components");
    }
  }
  if (selected_rule >= 20) {
    for (VertexId x : conn) {
      for (const auto& c : index.profile(x).split_list) {
        const auto center = is_star(g, c);
        if (!center) {
          fail(19, "split component at " + std::to_string(c.front()) + " is not a star");
          continue;
        }
        try {
          if (boundary_vertex(inst, x, c) != *center) fail(19, "boundary vertex is not the star center at " + std::to_string(*center));
        } catch (const InvariantViolation& e) {
          fail(19, e.what());
        }
        if (deg_i(inst, *center, Side::v1) != 0) fail(19, "star center " + std::to_string(*center) + " has a V1 neighbor");
      }
    }
  }
  return out;
}

}  // namespace pvc4
