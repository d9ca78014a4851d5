#include "pvc4/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pvc4/bench.hpp"
#include "pvc4/errors.hpp"
#include "pvc4/generate.hpp"
#include "pvc4/io.hpp"
#include "pvc4/oracle.hpp"
#include "pvc4/selftest.hpp"
#include "pvc4/solver.hpp"

namespace pvc4 {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

// Thrown for bad flags or inputs; becomes exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
  return value;
}

std::uint64_t node_cap_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("PVC4_NODE_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  return parse_u64(env, "PVC4_NODE_CAP");
}

std::vector<VertexId> to_one_based(const VertexSet& s) {
  std::vector<VertexId> out(s.begin(), s.end());
  for (auto& v : out) ++v;
  return out;
}

std::string join(const std::vector<VertexId>& ids, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

// "1,4,7" (1-based) to a 0-based set.
VertexSet parse_cover(const std::string& text, std::size_t n) {
  VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    const std::uint64_t id = parse_u64(item, "cover vertex");
    if (id < 1 || id > n) throw UsageError("cover vertex " + item + " out of range 1.." + std::to_string(n));
    out = set_insert(out, static_cast<VertexId>(id - 1));
  }
  return out;
}

json stats_json(const SolveStats& stats, bool timing) {
  json j;
  j["nodes"] = stats.nodes;
  j["leaves"] = stats.leaves;
  j["max_depth"] = stats.max_depth;
  json fires = json::object();
  for (int r = 1; r <= kRuleCount; ++r) {
    if (stats.rule_fires[r]) fires[std::to_string(r)] = stats.rule_fires[r];
  }
  j["rule_fires"] = fires;
  if (timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(stats.elapsed).count();
  return j;
}

void print_stats_text(std::ostream& out, const SolveStats& stats, bool timing) {
  out << "nodes " << stats.nodes << '\n';
  out << "leaves " << stats.leaves << '\n';
  out << "max_depth " << stats.max_depth << '\n';
  out << "rule_fires";
  for (int r = 1; r <= kRuleCount; ++r) {
    if (stats.rule_fires[r]) out << ' ' << r << ':' << stats.rule_fires[r];
  }
  out << '\n';
  if (timing) {
    out << "elapsed_ms " << std::fixed << std::setprecision(3)
        << std::chrono::duration<double, std::milli>(stats.elapsed).count() << '\n';
    out.unsetf(std::ios::fixed);
  }
}

std::vector<int> branch_sizes(const RuleOutcome& outcome) {
  std::vector<int> sizes;
  if (const auto* b = std::get_if<Branch>(&outcome)) {
    for (const auto& s : b->branches) sizes.push_back(static_cast<int>(s.size()));
  }
  return sizes;
}

struct Report {
  std::string format = "text";
  bool trace = false;
  bool timing = false;
  json trace_lines = json::array();

  bool as_json() const { return format == "json"; }

  void attach(SolveOptions& options, std::ostream& out) {
    if (!trace) return;
    options.on_node = [this, &out](const NodeEvent& e) {
      std::vector<VertexId> witness(e.application.match.witness.begin(), e.application.match.witness.end());
      for (auto& v : witness) ++v;
      const auto sizes = branch_sizes(e.application.outcome);
      if (as_json()) {
        trace_lines.push_back({{"depth", e.depth},
                               {"rule", e.application.match.rule_id},
                               {"witness", witness},
                               {"branch_sizes", sizes}});
      } else {
        out << "trace depth=" << e.depth << " rule=" << e.application.match.rule_id << " witness=" << join(witness, ",")
            << " branches=" << join(std::vector<VertexId>(sizes.begin(), sizes.end()), ",") << '\n';
      }
    };
  }
};

struct LoadedInput {
  io::GraphFile file;
  std::optional<int> k_hint;
};

LoadedInput load(const std::string& path) {
  LoadedInput in;
  try {
    in.file = io::read_file(path);
  } catch (const io::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (auto k = io::metadata_value(in.file, "k")) {
    in.k_hint = static_cast<int>(parse_u64(*k, "k metadata"));
  }
  return in;
}

// Instance from a file that has v1 lines; nullopt when G[V1] has a 4-path.
std::optional<Instance> make_instance(const io::GraphFile& file, int k) {
  try {
    return Instance::create(file.graph, file.v1, k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid instance: ") + e.what());
  }
}

int cmd_solve(const std::string& input, std::optional<int> k_flag, Report& report, std::uint64_t node_cap,
              std::ostream& out) {
  const LoadedInput in = load(input);
  const std::optional<int> k = k_flag ? k_flag : in.k_hint;
  if (!k) throw UsageError("solve needs -k (the input has no k= metadata)");
  if (*k < 0) throw UsageError("k must be non-negative");

  SolveOptions options;
  options.node_cap = node_cap;
  report.attach(options, out);
  CoverResult result;
  const bool disjoint = in.file.has_v1();
  if (disjoint) {
    if (auto inst = make_instance(in.file, *k)) result = solve_disjoint(*inst, options);
  } else {
    result = iterative_compression(in.file.graph, *k, options);
  }

  const bool yes = result.cover.has_value();
  if (report.as_json()) {
    json j;
    j["schema"] = 1;
    j["command"] = "solve";
    j["mode"] = disjoint ? "disjoint" : "compression";
    j["k"] = *k;
    j["answer"] = yes ? "yes" : "no";
    j["cover"] = yes ? json(to_one_based(*result.cover)) : json(nullptr);
    j["stats"] = stats_json(result.stats, report.timing);
    if (report.trace) j["trace"] = report.trace_lines;
    out << j.dump(2) << '\n';
  } else {
    out << "answer " << (yes ? "yes" : "no") << '\n';
    if (yes) out << "cover " << join(to_one_based(*result.cover)) << '\n';
    print_stats_text(out, result.stats, report.timing);
  }
  return yes ? kExitYes : kExitNo;
}

int cmd_minimize(const std::string& input, Report& report, std::uint64_t node_cap, std::ostream& out) {
  const LoadedInput in = load(input);
  SolveOptions options;
  options.node_cap = node_cap;
  report.attach(options, out);

  std::optional<MinimizeResult> best;
  if (in.file.has_v1()) {
    // Smallest budget accepted by the disjoint search; |V2| always suffices
    // unless G[V1] itself has a 4-path.
    MinimizeResult acc;
    if (auto inst = make_instance(in.file, 0)) {
      for (int k = 0; k <= static_cast<int>(inst->v2_size()); ++k) {
        const CoverResult r = solve_disjoint(inst->with_budget(k), options);
        acc.stats.merge(r.stats);
        if (r.cover) {
          acc.size = static_cast<int>(r.cover->size());
          acc.cover = *r.cover;
          best = acc;
          break;
        }
      }
    }
    if (!best) {
      if (report.as_json()) {
        out << json{{"schema", 1}, {"command", "minimize"}, {"answer", "no"}, {"size", nullptr}}.dump(2) << '\n';
      } else {
        out << "answer no\n";
      }
      return kExitNo;
    }
  } else {
    best = minimize(in.file.graph, options);
  }

  if (report.as_json()) {
    json j;
    j["schema"] = 1;
    j["command"] = "minimize";
    j["mode"] = in.file.has_v1() ? "disjoint" : "compression";
    j["answer"] = "yes";
    j["size"] = best->size;
    j["cover"] = to_one_based(best->cover);
    j["stats"] = stats_json(best->stats, report.timing);
    if (report.trace) j["trace"] = report.trace_lines;
    out << j.dump(2) << '\n';
  } else {
    out << "size " << best->size << '\n';
    out << "cover " << join(to_one_based(best->cover)) << '\n';
    print_stats_text(out, best->stats, report.timing);
  }
  return kExitYes;
}

int cmd_verify(const std::string& input, const std::string& cover_text, std::optional<int> k, const std::string& format,
               std::ostream& out) {
  const LoadedInput in = load(input);
  const VertexSet cover = parse_cover(cover_text, in.file.graph.capacity());
  std::string reason;
  if (!verify_cover(in.file.graph, cover)) {
    reason = "a 4-path survives";
  } else if (intersects(cover, in.file.v1)) {
    reason = "cover meets V1";
  } else if (k && static_cast<int>(cover.size()) > *k) {
    reason = "cover larger than k";
  }
  const bool ok = reason.empty();
  if (format == "json") {
    json j{{"schema", 1}, {"command", "verify"}, {"valid", ok}, {"size", cover.size()}};
    if (!ok) j["reason"] = reason;
    out << j.dump(2) << '\n';
  } else {
    out << (ok ? "valid" : "invalid: " + reason) << '\n';
  }
  return ok ? kExitYes : kExitNo;
}

struct GenFlags {
  std::string model = "gnp";
  int n = 10;
  double p = 0.2;
  int s = 2;
  int rule = 3;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenFlags& flags, std::ostream& out) {
  gen::GenSpec spec;
  const auto model = gen::parse_model(flags.model);
  if (!model) throw UsageError("unknown model '" + flags.model + "'");
  spec.model = *model;
  spec.n = flags.n;
  spec.p = flags.p;
  spec.s = flags.s;
  spec.rule_id = flags.rule;
  spec.seed = flags.seed;
  gen::Generated g;
  try {
    g = gen::generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  io::GraphFile file;
  file.graph = g.graph;
  if (g.instance) file.v1 = g.instance->v1();
  file.comments = g.metadata;
  if (flags.output.empty()) {
    out << io::render(file);
  } else {
    io::write_file(flags.output, file);
  }
  return kExitYes;
}

struct BenchFlags {
  std::string suite = "gnp";
  int kmax = 8;
  int count = 5;
  int n = 30;
  double p = 0.08;
  std::uint64_t seed = 1;
  std::string format = "text";
};

int cmd_bench(const BenchFlags& flags, std::uint64_t node_cap, std::ostream& out) {
  BenchConfig config;
  if (flags.suite == "gnp") {
    config.suite = BenchSuite::gnp;
  } else if (flags.suite == "disjoint") {
    config.suite = BenchSuite::disjoint;
  } else if (flags.suite == "cycle_of_stars") {
    config.suite = BenchSuite::cycle_of_stars;
  } else {
    throw UsageError("unknown suite '" + flags.suite + "'");
  }
  config.kmax = flags.kmax;
  config.count = flags.count;
  config.n = flags.n;
  config.p = flags.p;
  config.seed = flags.seed;
  config.node_cap = node_cap;
  const BenchTable table = run_bench(config);

  std::uint64_t violations = 0;
  for (const auto& row : table.rows) violations += row.leaf_violations;
  if (flags.format == "json") {
    json rows = json::array();
    for (const auto& row : table.rows) {
      rows.push_back({{"k", row.k},
                      {"runs", row.runs},
                      {"yes", row.yes},
                      {"mean_nodes", row.mean_nodes},
                      {"max_nodes", row.max_nodes},
                      {"max_leaves", row.max_leaves},
                      {"leaf_bound", leaf_bound(row.k)},
                      {"disjoint_solves", row.disjoint_solves},
                      {"leaf_violations", row.leaf_violations}});
    }
    out << json{{"schema", 1},
                {"command", "bench"},
                {"suite", flags.suite},
                {"rows", rows},
                {"growth_base", table.growth_base},
                {"leaf_violations", violations}}
               .dump(2)
        << '\n';
  } else {
    out << std::left << std::setw(4) << "k" << std::setw(6) << "runs" << std::setw(5) << "yes" << std::setw(14)
        << "mean_nodes" << std::setw(12) << "max_nodes" << std::setw(12) << "max_leaves" << std::setw(12)
        << "leaf_bound" << "violations\n";
    for (const auto& row : table.rows) {
      std::ostringstream mean;
      mean << std::fixed << std::setprecision(1) << row.mean_nodes;
      out << std::setw(4) << row.k << std::setw(6) << row.runs << std::setw(5) << row.yes << std::setw(14)
          << mean.str() << std::setw(12) << row.max_nodes << std::setw(12) << row.max_leaves << std::setw(12)
          << leaf_bound(row.k) << row.leaf_violations << '\n';
    }
    out << "growth_base " << std::fixed << std::setprecision(3) << table.growth_base << '\n';
    out.unsetf(std::ios::fixed);
    out << "leaf_violations " << violations << '\n';
  }
  return violations == 0 ? kExitYes : kExitNo;
}

int cmd_selftest(int max_n, int instances, int fixtures, std::uint64_t seed, std::ostream& out) {
  if (max_n < 1 || max_n > static_cast<int>(oracle::kMaxLabeledN)) {
    throw UsageError("--max-n must be in 1.." + std::to_string(oracle::kMaxLabeledN));
  }
  struct Part {
    std::string name;
    SuiteTally tally;
  };
  std::vector<Part> parts;
  parts.push_back({"labeled graphs n<=" + std::to_string(max_n), check_labeled_graphs(max_n)});
  parts.push_back({"disjoint instances", check_disjoint_instances(instances, seed)});
  SuiteTally rules;
  for (int r = 3; r <= kRuleCount; ++r) rules.merge(check_rule_fixtures(r, fixtures, seed));
  parts.push_back({"rule fixtures", rules});

  bool all_clean = true;
  for (const auto& part : parts) {
    const SuiteTally& t = part.tally;
    all_clean &= t.clean();
    out << (t.clean() ? "ok   " : "FAIL ") << part.name << ": cases=" << t.cases << " mismatches=" << t.mismatches
        << " leaf_violations=" << t.leaf_violations << " observation_violations=" << t.observation_violations
        << " totality_failures=" << t.totality_failures << '\n';
    for (const auto& n : t.notes) out << "  " << n << '\n';
  }
  return all_clean ? kExitYes : kExitNo;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 4-path vertex cover solver", "pvc4"};
  app.require_subcommand(1);

  Report report;
  std::string input;
  std::optional<int> k;
  std::optional<std::uint64_t> node_cap_flag;

  auto add_report_flags = [&](CLI::App* sub) {
    sub->add_option("--format", report.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--trace", report.trace, "Emit one line per search node");
    sub->add_flag("--timing", report.timing, "Include wall time (reports are otherwise deterministic)");
    sub->add_option("--node-cap", node_cap_flag, "Search node budget (default 1e8, or PVC4_NODE_CAP)");
  };

  auto* solve = app.add_subcommand("solve", "Decide whether a cover of size <= k exists");
  solve->add_option("-i,--input", input, "Graph file")->required();
  solve->add_option("-k", k, "Budget (default: k= comment in the file)");
  add_report_flags(solve);

  auto* min = app.add_subcommand("minimize", "Find a minimum cover");
  min->add_option("-i,--input", input, "Graph file")->required();
  add_report_flags(min);

  std::string cover_text;
  auto* verify = app.add_subcommand("verify", "Check a cover given as 1-based ids");
  verify->add_option("-i,--input", input, "Graph file")->required();
  verify->add_option("--cover", cover_text, "Comma-separated vertex ids, e.g. \"1,4,7\"")->required();
  verify->add_option("-k", k, "Also require size <= k");
  verify->add_option("--format", report.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  GenFlags gen_flags;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph or instance file");
  gen_cmd->add_option("--model", gen_flags.model,
                      "gnp, path, cycle, star, caterpillar, cycle_of_stars or rule_trigger");
  gen_cmd->add_option("-n", gen_flags.n, "Vertices (gnp/path/cycle), leaves (star), spine (caterpillar)");
  gen_cmd->add_option("-p", gen_flags.p, "Edge probability (gnp)");
  gen_cmd->add_option("-s", gen_flags.s, "Number of stars (cycle_of_stars)");
  gen_cmd->add_option("--rule", gen_flags.rule, "Rule id 3..24 (rule_trigger)");
  gen_cmd->add_option("--seed", gen_flags.seed, "Seed");
  gen_cmd->add_option("-o,--output", gen_flags.output, "Output path (default stdout)");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Per-k node and leaf table with fitted growth base");
  bench->add_option("--suite", bench_flags.suite, "gnp, disjoint or cycle_of_stars");
  bench->add_option("--kmax", bench_flags.kmax, "Largest budget")->check(CLI::Range(0, 60));
  bench->add_option("--count", bench_flags.count, "Instances per row")->check(CLI::Range(1, 100000));
  bench->add_option("-n", bench_flags.n, "Vertices per graph")->check(CLI::Range(1, 100000));
  bench->add_option("-p", bench_flags.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--seed", bench_flags.seed, "First seed");
  bench->add_option("--format", bench_flags.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  bench->add_option("--node-cap", node_cap_flag, "Search node budget per solve");

  int max_n = 5;
  int instances = 200;
  int fixtures = 3;
  std::uint64_t self_seed = 1;
  auto* self = app.add_subcommand("selftest", "Oracle equivalence and invariant checks");
  self->add_option("--max-n", max_n, "Largest labeled graph size (<= 6)");
  self->add_option("--instances", instances, "Random disjoint instances")->check(CLI::Range(0, 1000000));
  self->add_option("--fixtures", fixtures, "Fixtures per rule")->check(CLI::Range(0, 100000));
  self->add_option("--seed", self_seed, "First seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    const std::uint64_t node_cap = node_cap_flag ? *node_cap_flag : node_cap_from_env(kDefaultNodeCap);
    if (solve->parsed()) return cmd_solve(input, k, report, node_cap, out);
    if (min->parsed()) return cmd_minimize(input, report, node_cap, out);
    if (verify->parsed()) return cmd_verify(input, cover_text, k, report.format, out);
    if (gen_cmd->parsed()) return cmd_gen(gen_flags, out);
    if (bench->parsed()) return cmd_bench(bench_flags, node_cap, out);
    if (self->parsed()) return cmd_selftest(max_n, instances, fixtures, self_seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const NodeBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace pvc4
