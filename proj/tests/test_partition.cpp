#include <doctest.h>

#include "pvc4/errors.hpp"
#include "pvc4/generate.hpp"
#include "pvc4/partition.hpp"
#include "pvc4/rules.hpp"
#include "pvc4/solver.hpp"
#include "support.hpp"

using namespace pvc4;
using pvc4::test::Sketch;

namespace {

std::vector<Instance> random_instances(int count, std::uint64_t seed) {
  std::vector<Instance> out;
  for (std::uint64_t s = seed; static_cast<int>(out.size()) < count; ++s) {
    if (auto inst = gen::make_disjoint_instance(gen::gnp(12, 0.25, s), s, 4)) out.push_back(*inst);
  }
  return out;
}

// States the search actually visits once rules 1-10 are out of the way,
// where boundary vertices are well defined.
std::vector<Instance> late_states(int count) {
  std::vector<Instance> out;
  for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    const int rule = 11 + static_cast<int>(seed % 14);
    out.push_back(gen::rule_trigger(rule, seed));
  }
  return out;
}

}  // namespace

TEST_CASE("instance construction") {
  const Sketch ok("a* b c d*", "a-b b-c c-d", 1);
  const Instance inst = ok.instance();
  CHECK(inst.v1() == ok.set("a d"));
  CHECK(inst.v2() == ok.set("b c"));
  CHECK(inst.budget() == 1);

  // G[V2] has a 4-path: V1 is not a cover
  CHECK_THROWS_AS(Instance::create(gen::path_graph(4), {}, 1), std::invalid_argument);
  // G[V1] has a 4-path: trivially no
  CHECK_FALSE(Instance::create(gen::path_graph(4), {0, 1, 2, 3}, 1).has_value());
  // |V1| may exceed k
  CHECK(Instance::create(gen::path_graph(4), {0, 1, 3}, 0).has_value());
  CHECK_THROWS(Instance::create(gen::path_graph(4), {9}, 0));
}

TEST_CASE("deg_i and N_i") {
  const Sketch s("x* u w y* v", "x-u x-w y-v", 2);
  const Instance inst = s.instance();
  CHECK(deg_i(inst, s.id("x"), Side::v2) == 2);
  CHECK(deg_i(inst, s.id("x"), Side::v1) == 0);
  CHECK(deg_i(inst, s.id("y"), Side::v2) == 1);
  CHECK(n_i(inst, s.id("x"), Side::v2) == s.set("u w"));

  for (const Instance& r : random_instances(30, 1)) {
    for (VertexId v : r.graph().vertices()) {
      VertexSet one, two;
      for (VertexId w : r.graph().neighbors(v)) (r.in_v1(w) ? one : two).push_back(w);
      CHECK(n_i(r, v, Side::v1) == one);
      CHECK(n_i(r, v, Side::v2) == two);
      CHECK(deg_i(r, v, Side::v2) == two.size());
    }
  }
}

TEST_CASE("classifying V1 vertices") {
  const Sketch s("x* u w y* v z* t*", "x-u x-w y-v z-t z-v", 2);
  const Instance inst = s.instance();
  CHECK(classify_v1_vertex(inst, s.id("x")) == V1Kind::connection);
  CHECK(classify_v1_vertex(inst, s.id("y")) == V1Kind::leaf);
  CHECK(classify_v1_vertex(inst, s.id("z")) == V1Kind::other);
  CHECK_THROWS(classify_v1_vertex(inst, s.id("u")));
}

TEST_CASE("i-components") {
  const Sketch s("x* a b c", "a-b x-c", 0);
  const Instance inst = s.instance();
  CHECK(components_i(inst, Side::v2) == std::vector<VertexSet>{s.set("a b"), s.set("c")});
  const Sketch iso("x* a b c", "x-a x-b x-c", 0);
  CHECK(components_i(iso.instance(), Side::v2).size() == 3);

  for (const Instance& r : random_instances(30, 40)) {
    CHECK(components_i(r, Side::v2) == connected_components(induced_subgraph(r.graph(), r.v2())));
    CHECK(components_i(r, Side::v1) == connected_components(induced_subgraph(r.graph(), r.v1())));
  }
}

TEST_CASE("contains and splits") {
  const Sketch s("x* u w z c v", "x-u x-w x-z u-w c-v", 0);
  const Instance inst = s.instance();
  CHECK(contains(inst, s.id("x"), s.set("u w")));
  CHECK_FALSE(splits(inst, s.id("x"), s.set("u w")));
  CHECK_FALSE(contains(inst, s.id("x"), s.set("c v")));
  CHECK_FALSE(splits(inst, s.id("x"), s.set("c v")));

  const Sketch star("x* u v w", "x-u u-v v-w", 0);
  CHECK(splits(star.instance(), star.id("x"), star.set("u v w")));
}

TEST_CASE("boundary vertices") {
  SUBCASE("star split at a petal") {
    const Sketch s("x* u v w", "x-u u-v v-w", 0);
    CHECK(boundary_vertex(s.instance(), s.id("x"), s.set("u v w")) == s.id("v"));
  }
  SUBCASE("triangle split at two vertices") {
    const Sketch s("x* u v w", "x-u x-w u-v v-w u-w", 0);
    CHECK(boundary_vertex(s.instance(), s.id("x"), s.set("u v w")) == s.id("v"));
  }
  SUBCASE("non-unique candidates are an invariant violation") {
    // x meets the center; both petals qualify
    const Sketch s("x* u v w", "x-v u-v v-w", 0);
    CHECK_THROWS_AS(boundary_vertex(s.instance(), s.id("x"), s.set("u v w")), InvariantViolation);
  }
  SUBCASE("matches a scan of the definition on late search states") {
    int checked = 0;
    for (const Instance& inst : late_states(120)) {
      const PartitionIndex index(inst);
      for (VertexId x : index.connection_vertices()) {
        for (const auto& c : index.profile(x).split_list) {
          const VertexSet nx = inst.graph().neighbors(x);
          std::vector<VertexId> candidates;
          for (VertexId v : c) {
            if (set_contains(nx, v)) continue;
            if (intersects(n_i(inst, v, Side::v2), nx)) candidates.push_back(v);
          }
          REQUIRE(candidates.size() == 1);
          CHECK(boundary_vertex(inst, x, c) == candidates.front());
          ++checked;
        }
      }
    }
    CHECK(checked > 100);
  }
}

TEST_CASE("S_b, S_c and connection profiles") {
  SUBCASE("two split stars give their centers") {
    const Sketch s("x* a c b d e f", "x-a a-c c-b x-d d-e e-f", 0);
    CHECK(sb(s.instance(), s.id("x")) == s.set("c e"));
    CHECK(sc(s.instance(), s.id("x")).empty());
  }
  SUBCASE("contained edges contribute their lower vertex") {
    const Sketch s("x* t2 t q", "x-t x-t2 t-t2 x-q", 0);
    CHECK(sc(s.instance(), s.id("x")) == s.set("t2"));
  }
  SUBCASE("a singleton and an edge contained, a star split twice") {
    const Sketch s("x* w u c p a d b e y*", "x-w x-u u-c c-p x-a x-b a-d d-b d-e p-y y-e", 0);
    const auto prof = connection_profile(s.instance(), s.id("x"));
    CHECK(prof.s1 == 1);
    CHECK(prof.s2 == 0);
    CHECK(prof.t1 == 1);
    CHECK(prof.t2 == 1);
    CHECK(prof.contained_list == std::vector<VertexSet>{s.set("w")});
    CHECK(prof.split_list.size() == 2);
  }
  SUBCASE("isolated connection vertex with two pendant neighbors") {
    const Sketch s("x* a b", "x-a x-b", 0);
    const auto prof = connection_profile(s.instance(), s.id("x"));
    CHECK(prof.s1 == 2);
    CHECK(prof.s2 + prof.t1 + prof.t2 == 0);
  }
  SUBCASE("recount from contains/splits on late search states") {
    for (const Instance& inst : late_states(120)) {
      const PartitionIndex index(inst);
      for (VertexId x : index.connection_vertices()) {
        const auto prof = connection_profile(inst, x);
        std::size_t s1 = 0, s2 = 0, t1 = 0, t2 = 0;
        std::size_t used = 0;
        VertexSet want_sb, want_sc;
        for (const auto& c : components_i(inst, Side::v2)) {
          const std::size_t meet = intersection_size(c, inst.graph().neighbors(x));
          if (contains(inst, x, c)) {
            used += c.size();
            if (c.size() == 1) ++s1;
            if (c.size() == 2) {
              ++s2;
              want_sc = set_insert(want_sc, c.front());
            }
          } else if (splits(inst, x, c)) {
            used += meet;
            (meet == 1 ? t1 : t2)++;
            want_sb = set_insert(want_sb, boundary_vertex(inst, x, c));
          }
        }
        CHECK(prof.s1 == s1);
        CHECK(prof.s2 == s2);
        CHECK(prof.t1 == t1);
        CHECK(prof.t2 == t2);
        CHECK(used <= inst.graph().degree(x));
        CHECK(sb(inst, x) == want_sb);
        CHECK(sc(inst, x) == want_sc);
      }
    }
  }
}

TEST_CASE("rule actions keep both sides free of 4-paths") {
  // Walk search trees and check the instance contract at every node.
  for (const Instance& root : random_instances(150, 300)) {
    SolveOptions options;
    options.on_node = [](const NodeEvent& e) {
      const Instance& inst = e.instance;
      CHECK_FALSE(find_4path(inst.graph(), inst.v1()).has_value());
      CHECK_FALSE(find_4path(inst.graph(), inst.v2()).has_value());
      for (const auto& c : components_i(inst, Side::v2)) {
        if (c.size() >= 3) {
          const Graph g = induced_subgraph(inst.graph(), c);
          CHECK((is_star(g).has_value() || is_triangle(g)));
        }
      }
    };
    solve_disjoint(root, options);
  }
}
