#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "commgraph/constructions.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/lattice.hpp"
#include "commgraph/verify.hpp"
#include "json.hpp"

namespace commgraph {

/// order, factorization, structure flags, derived-series orders.
nlohmann::json group_info_json(const GroupSpec& spec, const GroupPtr& group);
std::string group_info_text(const GroupSpec& spec, const GroupPtr& group);

/// One entry per subgroup in canonical order: {id, order, witnesses}.
/// Witnesses are element labels.
nlohmann::json subgroups_json(const Lattice& lattice);

/// {spec, p, kind, vertices, edges, components, connected_diameter}.
nlohmann::json graph_json(const GroupSpec& spec, const CommGraph& graph, const GraphAnalysis& analysis);

/// {spec, p, kind, components, connected_diameter} with per-component
/// {vertices, diameter, class, center?}.
nlohmann::json analysis_json(const GroupSpec& spec, const CommGraph& graph, const GraphAnalysis& analysis);

std::string export_dot(const CommGraph& graph);

/// Result of the small DOT reader used for smoke checks.
struct DotGraph {
  std::vector<std::string> vertex_names;
  std::vector<std::string> vertex_labels;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Accepts the undirected subset written by export_dot: `graph ID {`,
/// node statements with one `label` attribute, `--` edge statements, `}`.
/// Throws SyntaxError with a byte offset.
DotGraph parse_dot(std::string_view text);

inline constexpr int kLatticeCacheFormat = 1;

nlohmann::json lattice_cache_json(const GroupSpec& spec, const Lattice& lattice);

/// Rebuilds the lattice over `group`. Throws InvalidSpec when the document
/// does not match the group (spec, order, labels) or is not a lattice file,
/// and NotASubgroup when a member list is not closed.
Lattice lattice_from_cache_json(const nlohmann::json& doc, const GroupSpec& spec, const GroupPtr& group);

nlohmann::json record_json(const CheckRecord& record);
nlohmann::json report_json(const VerdictReport& report, bool timing);
/// A single report as-is; several become {suite:"all", seed, passed, reports}.
nlohmann::json reports_json(std::string_view suite, const std::vector<VerdictReport>& reports, bool timing);

/// Two-space indented JSON followed by a newline.
std::string dump_json(const nlohmann::json& doc);

/// Writes via a temporary sibling and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace commgraph
