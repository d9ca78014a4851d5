#include <doctest.h>

#include <algorithm>
#include <functional>

#include "pvc4/errors.hpp"
#include "pvc4/generate.hpp"
#include "pvc4/oracle.hpp"
#include "pvc4/solver.hpp"
#include "support.hpp"

using namespace pvc4;
using pvc4::test::Sketch;

namespace {

std::vector<VertexSet> branches_of(const RuleApplication& app) {
  const auto* b = std::get_if<Branch>(&app.outcome);
  REQUIRE(b != nullptr);
  return b->branches;
}

std::vector<VertexSet> named(const Sketch& s, std::initializer_list<const char*> sets) {
  std::vector<VertexSet> out;
  for (const char* names : sets) out.push_back(s.set(names));
  return out;
}

// The rule fires as the engine's choice and its step passes the oracle check.
RuleApplication expect_rule(const Sketch& s, int rule) {
  const Instance inst = s.instance();
  const RuleApplication app = select_rule(inst);
  REQUIRE(app.match.rule_id == rule);
  CHECK(oracle::check_rule_outcome(inst, app).empty());
  return app;
}

void expect_branches(const Sketch& s, int rule, std::initializer_list<const char*> sets) {
  const RuleApplication app = expect_rule(s, rule);
  CHECK(branches_of(app) == named(s, sets));
}

}  // namespace

TEST_CASE("budget and solved terminals") {
  SUBCASE("k = 0 with a 4-path is no") {
    const Sketch s("a* b c d*", "a-b b-c c-d", 0);
    const RuleApplication app = expect_rule(s, 1);
    CHECK(std::get<Terminal>(app.outcome).answer == Answer::no);
  }
  SUBCASE("negative budget is no") {
    const Sketch s("a b c", "a-b b-c", 0);
    CHECK(rule01_budget(s.instance().with_budget(-1)).has_value());
  }
  SUBCASE("k = 0 on a triangle is left to rule 2") {
    const Sketch s("a b c", "a-b b-c a-c", 0);
    CHECK_FALSE(rule01_budget(s.instance()).has_value());
    const RuleApplication app = expect_rule(s, 2);
    CHECK(std::get<Terminal>(app.outcome).answer == Answer::yes);
  }
  SUBCASE("star with hub in V1 and k = 0 is yes") {
    const Sketch s("h* a b c d e", "h-a h-b h-c h-d h-e", 0);
    expect_rule(s, 2);
  }
  SUBCASE("triangle plus P3 is yes") {
    const Sketch s("a b c d e f", "a-b b-c a-c d-e e-f", 3);
    expect_rule(s, 2);
  }
  SUBCASE("P4 is not solved") {
    const Sketch s("a* b c d", "a-b b-c c-d", 3);
    CHECK_FALSE(rule02_solved(s.instance()).has_value());
  }
}

TEST_CASE("rule 3 drops a component without 4-paths") {
  const Sketch s("t1 t2 t3 a* b c d*", "t1-t2 t2-t3 t1-t3 a-b b-c c-d", 2);
  const RuleApplication app = expect_rule(s, 3);
  const auto& r = std::get<Reduce>(app.outcome);
  CHECK(r.kind == ReduceKind::drop_component);
  CHECK(r.next.graph().num_vertices() == 4);
  CHECK(r.next.budget() == 2);
}

TEST_CASE("rule 4 solves a component with at most three V2 vertices") {
  const Sketch s("a* b c d*", "a-b b-c c-d", 2);
  expect_branches(s, 4, {"b"});
  // four V2 vertices in the component: not applicable
  const Sketch big("x* a b c d", "x-a a-b b-c b-d", 2);
  CHECK_FALSE(rule04_small_component(big.instance()).has_value());
}

TEST_CASE("rule 5 moves a vertex into V1") {
  SUBCASE("vertex whose V1 neighbors are all leaves") {
    const Sketch fig("v l* c p q x* e f y*", "v-l v-c c-p c-q p-x x-e e-f f-y y-q", 3);
    const RuleApplication app = expect_rule(fig, 5);
    const auto& r = std::get<Reduce>(app.outcome);
    CHECK(r.kind == ReduceKind::move_to_v1);
    CHECK(r.next.in_v1(fig.id("v")));
  }
  SUBCASE("pendant vertex without V1 neighbors") {
    const Sketch p("p c a x* b d y*", "p-c c-a a-x x-b b-d d-y y-c", 3);
    const RuleApplication app = expect_rule(p, 5);
    CHECK(std::get<Reduce>(app.outcome).next.in_v1(p.id("p")));
  }
  SUBCASE("triangle vertex without V1 neighbors") {
    const Sketch t("t a b x* c d y*", "t-a t-b a-b a-x x-c c-d d-y y-b", 3);
    const RuleApplication app = expect_rule(t, 5);
    CHECK(std::get<Reduce>(app.outcome).next.in_v1(t.id("t")));
  }
}

TEST_CASE("rule 6 takes the only V2 vertex of a 4-path") {
  const Sketch s("x1* v x2* x3* a b c d y* z*", "x1-v v-x2 x2-x3 v-a v-b a-y y-c c-d d-z z-b", 3);
  expect_branches(s, 6, {"v"});
  CHECK_FALSE(rule06_forced_vertex(Sketch("a* b c d*", "a-b b-c c-d").instance()).has_value());
}

TEST_CASE("rule 7 branches on a P3 through one V2 vertex") {
  const Sketch s("x1* v x3* a c b", "x1-v v-x3 x1-a x3-b a-c c-b", 3);
  expect_branches(s, 7, {"v", "a b"});
}

TEST_CASE("rule 8 handles an edge inside V1") {
  const Sketch s("x* y* v u w z* s r", "x-y x-v y-v v-u u-w w-z z-s z-r s-r", 3);
  expect_branches(s, 8, {"u"});
}

TEST_CASE("rule 9 deletes an edge to a second connection vertex") {
  const Sketch s("x1* x2* v u c p c2 p2 y*", "x1-v x1-u x2-v x2-u v-c c-p u-c2 c2-p2 p-y y-p2", 3);
  const RuleApplication app = expect_rule(s, 9);
  const auto& r = std::get<Reduce>(app.outcome);
  CHECK(r.kind == ReduceKind::delete_edge);
  CHECK_FALSE(r.next.graph().has_edge(s.id("v"), s.id("x2")));
  CHECK(r.next.graph().has_edge(s.id("v"), s.id("x1")));
  CHECK(app.match.witness == std::vector<VertexId>{s.id("v"), s.id("x1"), s.id("x2")});
}

TEST_CASE("rule 10 branches at a split star center") {
  const Sketch s("x* u a b d e f y* z*", "x-u x-d u-a u-b d-e d-f a-y y-e b-z z-f", 4);
  expect_branches(s, 10, {"u", "a b"});
}

TEST_CASE("rule 11 takes the center of a contained star") {
  const Sketch s("x* a c b r s y* t t2", "x-a x-c x-b a-c c-b x-r r-s s-y y-t y-t2 t-t2", 4);
  expect_branches(s, 11, {"c"});
}

TEST_CASE("rule 12 branches on a split triangle") {
  const Sketch s("x* u u2 v l* r s y* t t2", "x-u x-u2 u-u2 u-v u2-v v-l x-r r-s s-y y-t y-t2 t-t2", 4);
  expect_branches(s, 12, {"v", "u u2"});
}

TEST_CASE("rule 13 takes the vertex next to the boundary when a leaf is present") {
  const Sketch s("x* u c p w l* y* t t2", "x-u x-w w-l u-c c-p p-y y-t y-t2 t-t2", 4);
  expect_branches(s, 13, {"u"});
}

TEST_CASE("rule 14 branches when the split part is not independent") {
  const Sketch s("x* c a b r s z*", "x-c x-a c-a c-b x-r r-s b-z z-s", 4);
  expect_branches(s, 14, {"c", "b r"});
}

TEST_CASE("rule 15 handles exactly one contained edge") {
  const Sketch s("x* t t2 u c p y* q q2", "x-t x-t2 t-t2 x-u u-c c-p p-y y-q y-q2 q-q2", 4);
  expect_branches(s, 15, {"u", "t c"});
}

TEST_CASE("rule 16 takes boundary vertices and contained edges") {
  // contains the singleton w, splits C1 once and C2 twice
  const Sketch s("x* w u c p a d b e y*", "x-w x-u u-c c-p x-a x-b a-d d-b d-e p-y y-e", 4);
  const RuleApplication app = expect_rule(s, 16);
  const auto prof = connection_profile(s.instance(), s.id("x"));
  CHECK(prof.s1 == 1);
  CHECK(prof.s2 == 0);
  CHECK(prof.t1 == 1);
  CHECK(prof.t2 == 1);
  const auto branches = branches_of(app);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0] == s.set("c d"));
  CHECK(branches[0].size() == static_cast<std::size_t>(prof.s2 + prof.t1 + prof.t2));
}

TEST_CASE("rule 17 takes the boundary of the only split component") {
  const Sketch s("x* a b c e y* q d r s z*", "x-a x-b c-a c-b c-e e-y y-q d-q d-r d-s z-r z-s", 4);
  expect_branches(s, 17, {"c"});
}

TEST_CASE("rule 18 uses a boundary vertex with a V1 neighbor and a leaf on N(x)") {
  const Sketch s("x* u v p l1* l2* u2 v2 p2 y*", "x-u x-u2 u-v v-p v-l1 u-l2 u2-v2 v2-p2 p-y y-p2", 4);
  expect_branches(s, 18, {"u", "v u2"});
}

TEST_CASE("rule 19 uses a boundary vertex with a V1 neighbor") {
  const Sketch s("x* u v p l1* u2 v2 p2 y*", "x-u x-u2 u-v v-p v-l1 u2-v2 v2-p2 p-y y-p2", 4);
  expect_branches(s, 19, {"u", "v v2"});
}

TEST_CASE("rule 20 takes the boundaries when one split meets N(x) twice") {
  const Sketch s("x* a b c e q d r y*", "x-a x-b x-q c-a c-b c-e d-q d-r e-y y-r", 4);
  expect_branches(s, 20, {"c d"});
}

TEST_CASE("rule 21 branches when x splits three components") {
  const Sketch s("x* a1 c1 b1 a2 c2 b2 a3 c3 b3 y*",
                 "x-a1 x-a2 x-a3 a1-c1 c1-b1 a2-c2 c2-b2 a3-c3 c3-b3 y-b1 y-b2 y-b3", 6);
  expect_branches(s, 21, {"c1 c2 c3", "b1 a2 a3", "b2 a1 a3", "b3 a1 a2"});
}

TEST_CASE("rule 22 branches on a large far component") {
  const Sketch s("x* a c b q d r s y* z* f e g h w*",
                 "a-c c-b q-d d-r d-s f-e e-g e-h x-a x-q y-b y-f z-r z-g w-s w-h", 6);
  const RuleApplication app = expect_rule(s, 22);
  CHECK(app.match.witness.front() == s.id("x"));
  CHECK(branches_of(app) == named(s, {"c d", "b q", "a r s"}));
}

TEST_CASE("rule 23 branches on a large star") {
  const Sketch s("c v1 v2 v3 d u1 u2 u3 x1* x2* x3* l1* l2* l3*",
                 "c-v1 c-v2 c-v3 d-u1 d-u2 d-u3 x1-v1 x1-u1 x2-v2 x2-u2 x3-v3 x3-u3 l1-v1 l2-v2 l3-v3", 6);
  expect_branches(s, 23, {"u1 v2 v3", "u2 v1 v3", "u3 v1 v2"});
}

TEST_CASE("rule 24 takes the u vertices of a cycle of stars") {
  const Sketch s("u1 v1 w1 u2 v2 w2 x1* x2*", "u1-v1 v1-w1 u2-v2 v2-w2 x1-w1 x1-u2 x2-w2 x2-u1", 4);
  expect_branches(s, 24, {"u1 u2"});
  const auto cs = match_cycle_of_stars(s.instance(), s.graph().vertices());
  REQUIRE(cs.has_value());
  CHECK(cs->v == std::vector<VertexId>{s.id("v1"), s.id("v2")});
  CHECK(oracle::brute_min_disjoint(s.instance())->min_size == 2);
}

TEST_CASE("patterns that must not match") {
  // rule 7: only one V2 neighbor outside the path
  CHECK_FALSE(rule07_p3_branch(Sketch("x1* v x3* a c b", "x1-v v-x3 x1-a a-c c-b", 3).instance()).has_value());
  // rule 8: V1 is independent
  CHECK_FALSE(rule08_v1_edge(Sketch("x* a b c d", "x-a x-c a-b c-d", 3).instance()).has_value());
  // rule 9: v sees a single connection vertex
  CHECK_FALSE(rule09_delete_edge(Sketch("x* v u a b", "x-v x-u v-a u-b", 3).instance()).has_value());
}

namespace {

// Visits every search node of `inst` solved at budget k.
void for_each_node(const Instance& inst, const std::function<void(const NodeEvent&)>& visit) {
  SolveOptions options;
  options.on_node = visit;
  solve_disjoint(inst, options);
}

std::vector<Instance> reachable_roots(int count, std::uint64_t seed) {
  std::vector<Instance> out;
  for (std::uint64_t s = seed; static_cast<int>(out.size()) < count; ++s) {
    const int n = 8 + static_cast<int>(s % 10);
    auto inst = gen::make_disjoint_instance(gen::gnp(n, 0.15 + 0.05 * static_cast<double>(s % 6), s), s);
    if (!inst || inst->v2_size() > 12) continue;
    const auto opt = oracle::brute_min_disjoint(*inst)->min_size;
    out.push_back(inst->with_budget(static_cast<int>(opt)));
    if (opt > 0) out.push_back(inst->with_budget(static_cast<int>(opt) - 1));
  }
  return out;
}

}  // namespace

TEST_CASE("select_rule returns the lowest applicable rule on reachable states") {
  int nodes = 0;
  for (const Instance& root : reachable_roots(400, 11)) {
    for_each_node(root, [&](const NodeEvent& e) {
      ++nodes;
      const int chosen = e.application.match.rule_id;
      for (int r = 1; r < chosen; ++r) {
        if (try_rule(r, e.instance).has_value()) FAIL_CHECK("rule " << r << " also matches where " << chosen << " was chosen");
      }
      REQUIRE(try_rule(chosen, e.instance).has_value());
    });
  }
  CHECK(nodes > 1000);
}

TEST_CASE("observations hold at every visited node") {
  std::vector<Instance> roots = reachable_roots(300, 500);
  for (int r = 3; r <= kRuleCount; ++r) roots.push_back(gen::rule_trigger(r, 7));
  for (const Instance& root : roots) {
    for_each_node(root, [](const NodeEvent& e) {
      const auto problems = check_observations(e.instance, e.application.match.rule_id);
      if (!problems.empty()) FAIL_CHECK(problems.front());
    });
  }
}

TEST_CASE("every rule step on generated fixtures preserves the optimum") {
  for (int r = 3; r <= kRuleCount; ++r) {
    for (std::uint64_t seed = 100; seed < 105; ++seed) {
      const Instance inst = gen::rule_trigger(r, seed);
      const RuleApplication app = select_rule(inst);
      REQUIRE(app.match.rule_id == r);
      const auto problems = oracle::check_rule_outcome(inst, app);
      if (!problems.empty()) FAIL_CHECK(problems.front());
    }
  }
}

TEST_CASE("branch sets are nonempty and inside V2") {
  for (const Instance& root : reachable_roots(200, 900)) {
    for_each_node(root, [](const NodeEvent& e) {
      if (const auto* b = std::get_if<Branch>(&e.application.outcome)) {
        for (const auto& s : b->branches) {
          CHECK_FALSE(s.empty());
          for (VertexId v : s) CHECK(e.instance.in_v2(v));
        }
      }
    });
  }
}

namespace {

// Checks the end-state shape from scratch, without match_cycle_of_stars:
// 2-components are paths of three vertices, V1 vertices are leaves on path
// ends or degree-2 links between ends of different paths, and `take` holds
// exactly one end of each path and one neighbor of each link.
std::string cycle_of_stars_problem(const Instance& inst, const VertexSet& comp, const VertexSet& take) {
  const Graph& g = inst.graph();
  VertexSet v2;
  for (VertexId v : comp) {
    if (inst.in_v2(v)) v2 = set_insert(v2, v);
  }
  VertexSet ends;
  VertexSet centers;
  std::size_t stars = 0;
  for (const auto& c : connected_components(g, v2)) {
    if (c.size() != 3) return "2-component of size " + std::to_string(c.size());
    int middle = -1;
    for (int i = 0; i < 3; ++i) {
      int inside = 0;
      for (VertexId w : g.neighbors(c[i])) inside += set_contains(c, w) ? 1 : 0;
      if (inside == 2) {
        if (middle != -1) return "triangle";
        middle = i;
      }
    }
    if (middle == -1) return "2-component is not a path";
    ++stars;
    centers = set_insert(centers, c[middle]);
    for (int i = 0; i < 3; ++i) {
      if (i != middle) ends = set_insert(ends, c[i]);
    }
    if (intersection_size(take, c) != 1) return "branch set does not hit a star exactly once";
    if (set_contains(take, c[middle])) return "branch set takes a center";
  }
  std::size_t links = 0;
  for (VertexId x : comp) {
    if (!inst.in_v1(x)) continue;
    const auto& nb = g.neighbors(x);
    for (VertexId w : nb) {
      if (inst.in_v1(w)) return "V1 edge";
      if (!set_contains(ends, w)) return "V1 vertex next to a center";
    }
    if (nb.size() == 2) {
      ++links;
      if (intersection_size(take, nb) != 1) return "link without exactly one taken neighbor";
    } else if (nb.size() != 1) {
      return "V1 vertex of degree " + std::to_string(nb.size());
    }
  }
  for (VertexId e : ends) {
    int link_count = 0;
    for (VertexId w : g.neighbors(e)) link_count += (inst.in_v1(w) && g.degree(w) == 2) ? 1 : 0;
    if (link_count != 1) return "star end with " + std::to_string(link_count) + " links";
  }
  if (links != stars) return "link count differs from star count";
  for (VertexId x : comp) {
    if (inst.in_v1(x) && g.degree(x) == 2) {
      const VertexId a = g.neighbors(x)[0];
      const VertexId b = g.neighbors(x)[1];
      for (const auto& c : connected_components(g, v2)) {
        if (set_contains(c, a) && set_contains(c, b)) return "link inside one star";
      }
    }
  }
  if (oracle::has_4path(delete_vertices(induced_subgraph(g, comp), take))) return "branch set leaves a 4-path";
  return {};
}

}  // namespace

TEST_CASE("rule 24 end states pass an independent structural check") {
  int checked = 0;
  auto visit = [&](const NodeEvent& e) {
    if (e.application.match.rule_id != 24) return;
    ++checked;
    const VertexSet comp = connected_components(e.instance.graph()).front();
    const auto& take = std::get<Branch>(e.application.outcome).branches.front();
    const std::string problem = cycle_of_stars_problem(e.instance, comp, take);
    if (!problem.empty()) FAIL_CHECK(problem);
    if (comp.size() <= 14) {
      const auto part = Instance::create(induced_subgraph(e.instance.graph(), comp),
                                         set_intersection(e.instance.v1(), comp), 0);
      CHECK(oracle::brute_min_disjoint(*part)->min_size == take.size());
    }
  };
  for (int s = 2; s <= 6; ++s) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Instance inst = gen::cycle_of_stars(s, seed);
      for_each_node(inst, visit);
      for_each_node(inst.with_budget(s - 1), visit);
    }
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) for_each_node(gen::rule_trigger(24, seed), visit);
  for (const Instance& root : reachable_roots(300, 3000)) for_each_node(root, visit);
  CHECK(checked >= 500);
}
