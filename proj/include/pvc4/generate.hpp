#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pvc4/partition.hpp"

namespace pvc4::gen {

/// Every generator draws from this engine and only through its raw 64-bit
/// output, so streams are reproducible across standard libraries.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

enum class Model { gnp, path, cycle, star, caterpillar, cycle_of_stars, rule_trigger };

struct GenSpec {
  Model model = Model::gnp;
  int n = 0;        // vertices (gnp, path, cycle), leaves (star), spine length (caterpillar)
  double p = 0.0;   // edge probability (gnp)
  int s = 0;        // number of stars (cycle_of_stars)
  int rule_id = 0;  // rule_trigger
  std::uint64_t seed = 0;
};

struct Generated {
  Graph graph;
  /// Present for models that produce a disjoint instance.
  std::optional<Instance> instance;
  /// key=value pairs describing the generator, emitted as comment lines.
  std::vector<std::string> metadata;
};

/// Throws std::invalid_argument for an invalid spec.
Generated generate(const GenSpec& spec);

std::optional<Model> parse_model(const std::string& name);
const char* model_name(Model m);

Graph gnp(int n, double p, std::uint64_t seed);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}; vertex 0 is the hub.
Graph star_graph(int leaves);
/// Spine 0..n-1 with 0-2 pendant legs per spine vertex.
Graph caterpillar(int n, std::uint64_t seed);

/// s size-3 stars joined in a ring by connection vertices; vertices 4i..4i+3
/// are u_i, v_i (center), w_i, x_i. The seed decides which u/w vertices get an
/// extra leaf. V1 holds the connection vertices and leaves; the budget is s.
Instance cycle_of_stars(int s, std::uint64_t seed);

/// Greedy V1: repeatedly take a 4-path of G - V1 and move one of its vertices
/// (seeded choice, preferring ones that keep G[V1] free of 4-paths) into V1.
/// Returns nullopt if no attempt yields a G[V1] without 4-paths.
std::optional<Instance> make_disjoint_instance(const Graph& g, std::uint64_t seed, int k = 0);

/// An instance on which select_rule picks exactly `rule_id` (3..24), found by
/// descending search trees of small seeded instances. |V2| stays at most 14.
/// Throws std::runtime_error if the search gives up.
Instance rule_trigger(int rule_id, std::uint64_t seed);

}  // namespace pvc4::gen
