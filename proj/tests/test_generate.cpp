#include <doctest.h>

#include <algorithm>

#include "pvc4/generate.hpp"
#include "pvc4/oracle.hpp"
#include "pvc4/rules.hpp"

using namespace pvc4;

TEST_CASE("seed determines the output") {
  CHECK(gen::gnp(12, 0.2, 7).edges() == gen::gnp(12, 0.2, 7).edges());
  CHECK(gen::gnp(30, 0.2, 7).edges() != gen::gnp(30, 0.2, 8).edges());
  CHECK(gen::caterpillar(9, 3).edges() == gen::caterpillar(9, 3).edges());
  const Instance a = gen::rule_trigger(17, 4);
  const Instance b = gen::rule_trigger(17, 4);
  CHECK(a.graph().edges() == b.graph().edges());
  CHECK(a.v1() == b.v1());
  CHECK(a.budget() == b.budget());
}

TEST_CASE("gnp edge density") {
  CHECK(gen::gnp(10, 0.0, 1).num_edges() == 0);
  CHECK(gen::gnp(10, 1.0, 1).num_edges() == 45);
  std::size_t total = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) total += gen::gnp(20, 0.3, seed).num_edges();
  const double mean = static_cast<double>(total) / 50.0;
  CHECK(mean > 0.27 * 190);
  CHECK(mean < 0.33 * 190);
}

TEST_CASE("fixed families") {
  const Graph p7 = gen::path_graph(7);
  CHECK(p7.num_vertices() == 7);
  CHECK(p7.num_edges() == 6);
  for (VertexId v = 0; v + 1 < 7; ++v) CHECK(p7.has_edge(v, v + 1));
  CHECK(gen::cycle_graph(5).num_edges() == 5);
  CHECK(gen::star_graph(4).degree(0) == 4);
  CHECK(gen::complete_graph(5).num_edges() == 10);
  const Graph cat = gen::caterpillar(6, 2);
  CHECK(connected_components(cat).size() == 1);
}

TEST_CASE("cycle of stars") {
  const Instance two = gen::cycle_of_stars(2, 0);
  CHECK(two.budget() == 2);
  CHECK(oracle::brute_min_disjoint(two)->min_size == 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (int s = 2; s <= 4; ++s) {
      const Instance inst = gen::cycle_of_stars(s, seed);
      CHECK(components_i(inst, Side::v2).size() == static_cast<std::size_t>(s));
      CHECK(oracle::brute_min_disjoint(inst)->min_size == static_cast<std::size_t>(s));
      const PartitionIndex index(inst);
      CHECK(index.connection_vertices().size() >= static_cast<std::size_t>(s));
    }
  }
}

TEST_CASE("make_disjoint_instance") {
  const auto p4 = gen::make_disjoint_instance(gen::path_graph(4), 3);
  REQUIRE(p4.has_value());
  CHECK(p4->v1().size() == 1);
  const auto star = gen::make_disjoint_instance(gen::star_graph(6), 3);
  REQUIRE(star.has_value());
  CHECK(star->v1().empty());
  int made = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen::gnp(14, 0.25, seed);
    const auto inst = gen::make_disjoint_instance(g, seed, 5);
    if (!inst) continue;
    ++made;
    CHECK(inst->budget() == 5);
    CHECK(inst->graph() == g);
    CHECK_FALSE(find_4path(g, inst->v1()).has_value());
    CHECK_FALSE(find_4path(g, inst->v2()).has_value());
  }
  CHECK(made > 150);
}

TEST_CASE("rule triggers select their rule") {
  for (int rule = 3; rule <= kRuleCount; ++rule) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Instance inst = gen::rule_trigger(rule, seed);
      CHECK(select_rule(inst).match.rule_id == rule);
      CHECK(inst.v2_size() <= 14);
    }
  }
  CHECK_THROWS(gen::rule_trigger(2, 0));
  CHECK_THROWS(gen::rule_trigger(25, 0));
}

TEST_CASE("generate and model names") {
  for (const char* name : {"gnp", "path", "cycle", "star", "caterpillar", "cycle_of_stars", "rule_trigger"}) {
    const auto m = gen::parse_model(name);
    REQUIRE(m.has_value());
    CHECK(std::string(gen::model_name(*m)) == name);
  }
  CHECK_FALSE(gen::parse_model("lattice").has_value());

  gen::GenSpec spec;
  spec.model = gen::Model::rule_trigger;
  spec.rule_id = 12;
  spec.seed = 5;
  const gen::Generated out = gen::generate(spec);
  REQUIRE(out.instance.has_value());
  CHECK(out.graph == out.instance->graph());
  const auto has = [&](const std::string& kv) {
    return std::find(out.metadata.begin(), out.metadata.end(), kv) != out.metadata.end();
  };
  CHECK(has("prng=mt19937_64"));
  CHECK(has("seed=5"));
  CHECK(has("rule=12"));

  spec = {};
  spec.model = gen::Model::gnp;
  spec.n = -1;
  CHECK_THROWS_AS(gen::generate(spec), std::invalid_argument);
}
