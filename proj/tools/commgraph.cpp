// commgraph: subgroup lattices and p-local commensurability graphs of finite groups.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/io.hpp"
#include "commgraph/verify.hpp"

namespace fs = std::filesystem;
using namespace commgraph;

namespace {

enum ExitCode { kPass = 0, kVerdictFail = 1, kParse = 2, kOrderCap = 3, kLatticeCap = 4 };

// Spec given inline, or as @path.
GroupSpec load_spec(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return parse_group_spec(read_file(arg.substr(1)));
  return parse_group_spec(arg);
}

std::size_t order_cap_from(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("COMMGRAPH_ORDER_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InvalidSpec(std::string("COMMGRAPH_ORDER_CAP is not a positive integer: ") + env);
  }
  return kDefaultOrderCap;
}

// Loads the lattice from the cache when it matches, otherwise enumerates
// and (re)writes the cache.
std::shared_ptr<const Lattice> obtain_lattice(const GroupSpec& spec, const GroupPtr& group,
                                              const std::string& cache, std::size_t lattice_cap) {
  if (!cache.empty() && fs::exists(cache)) {
    try {
      const auto doc = nlohmann::json::parse(read_file(cache));
      return std::make_shared<const Lattice>(lattice_from_cache_json(doc, spec, group));
    } catch (const nlohmann::json::parse_error&) {
      std::cerr << "warning: ignoring unreadable cache " << cache << "\n";
    } catch (const InvalidSpec& e) {
      std::cerr << "warning: ignoring cache " << cache << ": " << e.what() << "\n";
    }
  }
  auto lattice = std::make_shared<const Lattice>(enumerate_subgroups(group, lattice_cap));
  if (!cache.empty()) write_file_atomic(cache, dump_json(lattice_cache_json(spec, *lattice)));
  return lattice;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file_atomic(path, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattices and p-local commensurability graphs of finite groups"};
  app.require_subcommand(1);

  std::optional<std::size_t> order_cap_flag;
  std::size_t lattice_cap = kDefaultLatticeCap;
  app.add_option("--order-cap", order_cap_flag, "Largest group order to build (env COMMGRAPH_ORDER_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", lattice_cap, "Largest number of subgroups to enumerate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string spec_arg, json_path, dot_path, cache_path, kind_arg = "comm";
  std::uint64_t prime = 0;

  auto* group_cmd = app.add_subcommand("group", "Order, factorization, structure flags, derived series");
  group_cmd->add_option("spec", spec_arg, "Group spec document, or @file")->required();
  group_cmd->add_option("--json", json_path, "Write the summary as JSON");

  auto* subgroups_cmd = app.add_subcommand("subgroups", "Enumerate the subgroup lattice");
  subgroups_cmd->add_option("spec", spec_arg, "Group spec document, or @file")->required();
  subgroups_cmd->add_option("--json", json_path, "Write the subgroup list as JSON ('-' for stdout)");
  subgroups_cmd->add_option("--cache", cache_path, "Lattice cache file to read or create");

  auto add_graph_options = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_arg, "Group spec document, or @file")->required();
    cmd->add_option("-p", prime, "Prime p")->required();
    cmd->add_option("--kind", kind_arg, "comm or cont")->capture_default_str();
    cmd->add_option("--json", json_path, "JSON output path ('-' for stdout)");
    cmd->add_option("--cache", cache_path, "Lattice cache file to read or create");
  };
  auto* graph_cmd = app.add_subcommand("graph", "Build a commensurability or containment graph");
  add_graph_options(graph_cmd);
  graph_cmd->add_option("--dot", dot_path, "DOT output path ('-' for stdout)");
  auto* analyze_cmd = app.add_subcommand("analyze", "Components, diameters and classes of a graph");
  add_graph_options(analyze_cmd);

  std::string suite;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::string corpus_path;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "totaldisc, bounds, lemmas, sym4, construction, cd, p2q or all")
      ->required();
  verify_cmd->add_option("--trials", trials, "Applicable trials per lemma")->capture_default_str()->check(
      CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--corpus", corpus_path, "JSON array of group specs replacing the standard corpus");
  verify_cmd->add_option("--json", json_path, "Report path (default stdout)");
  verify_cmd->add_flag("--timing", timing, "Record wall-clock runtimes in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kParse;
  }

  try {
    const std::size_t order_cap = order_cap_from(order_cap_flag);

    if (*group_cmd) {
      const GroupSpec spec = load_spec(spec_arg);
      const GroupPtr group = construct(spec, order_cap);
      std::cout << group_info_text(spec, group);
      if (!json_path.empty()) emit(json_path, dump_json(group_info_json(spec, group)));
      return kPass;
    }

    if (*subgroups_cmd) {
      const GroupSpec spec = load_spec(spec_arg);
      const GroupPtr group = construct(spec, order_cap);
      const auto lattice = obtain_lattice(spec, group, cache_path, lattice_cap);
      if (!json_path.empty()) {
        emit(json_path, dump_json(subgroups_json(*lattice)));
      } else {
        std::cout << spec_name(spec) << ": " << lattice->size() << " subgroups\n";
        for (const auto& [order, ids] : lattice->by_order()) {
          std::cout << "  order " << order << ": " << ids.size() << "\n";
        }
      }
      return kPass;
    }

    if (*graph_cmd || *analyze_cmd) {
      const GroupSpec spec = load_spec(spec_arg);
      const GraphKind kind = parse_kind(kind_arg);
      const GroupPtr group = construct(spec, order_cap);
      const auto lattice = obtain_lattice(spec, group, cache_path, lattice_cap);
      const CommGraph graph = build_graph(lattice, prime, kind);
      const GraphAnalysis analysis = components_and_diameters(graph);
      if (*analyze_cmd) {
        emit(json_path, dump_json(analysis_json(spec, graph, analysis)));
        return kPass;
      }
      if (!dot_path.empty()) emit(dot_path, export_dot(graph));
      if (!json_path.empty()) emit(json_path, dump_json(graph_json(spec, graph, analysis)));
      if (dot_path.empty() && json_path.empty()) {
        std::cout << spec_name(spec) << " p=" << prime << " kind=" << kind_name(kind) << ": "
                  << graph.vertex_count() << " vertices, " << graph.edge_count() << " edges, "
                  << analysis.components.size() << " components, connected diameter "
                  << analysis.connected_diameter << "\n";
      }
      return kPass;
    }

    if (*verify_cmd) {
      VerifyOptions options;
      options.trials = trials;
      options.seed = seed;
      options.order_cap = order_cap;
      options.lattice_cap = lattice_cap;
      if (!corpus_path.empty()) options.corpus = Corpus::from_json(read_file(corpus_path));
      const auto reports = run_suite(suite, options);
      emit(json_path, dump_json(reports_json(suite, reports, timing)));
      bool passed = true;
      for (const auto& r : reports) {
        std::cerr << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.records.size() << " checks, "
                  << r.failures() << " failed, " << r.warnings() << " warnings, " << r.skips << " skips)\n";
        passed = passed && r.passed();
      }
      return passed ? kPass : kVerdictFail;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "parse error at byte " << e.position() << ": " << e.what() << "\n";
    return kParse;
  } catch (const OrderCapExceeded& e) {
    std::cerr << "order cap exceeded: " << e.what() << "\n";
    return kOrderCap;
  } catch (const LatticeCapExceeded& e) {
    std::cerr << "lattice cap exceeded: " << e.what() << "\n";
    return kLatticeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
