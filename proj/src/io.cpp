#include "commgraph/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <system_error>

#include "commgraph/errors.hpp"

namespace commgraph {

using nlohmann::json;

namespace {

json spec_doc(const GroupSpec& spec) { return json::parse(spec_to_json(spec)); }

json witnesses_of(const SubgroupSet& s) {
  json out = json::array();
  for (ElementId w : s.witnesses()) out.push_back(s.group().label(w));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

json components_json(const GraphAnalysis& analysis) {
  json out = json::array();
  for (const auto& c : analysis.components) {
    json item{{"vertices", c.vertices},
              {"diameter", c.diameter},
              {"class", class_name(c.classification.cls)}};
    if (c.classification.center) item["center"] = *c.classification.center;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace

json group_info_json(const GroupSpec& spec, const GroupPtr& group) {
  const auto flags = structure_flags(group);
  json factors = json::array();
  for (const auto& [p, e] : group->order_factorization()) factors.push_back({p, e});
  return json{{"spec", spec_doc(spec)},
              {"name", spec_name(spec)},
              {"order", group->order()},
              {"factorization", factors},
              {"abelian", flags.is_abelian},
              {"nilpotent", flags.is_nilpotent},
              {"metabelian", flags.is_metabelian},
              {"solvable", flags.is_solvable},
              {"derived_orders", derived_series(group).orders()}};
}

std::string group_info_text(const GroupSpec& spec, const GroupPtr& group) {
  const json info = group_info_json(spec, group);
  std::ostringstream out;
  out << "group: " << info["name"].get<std::string>() << "\n";
  out << "order: " << group->order() << "\n";
  std::vector<std::string> parts;
  for (const auto& [p, e] : group->order_factorization()) {
    parts.push_back(e == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(e));
  }
  out << "factorization: " << (parts.empty() ? "1" : join(parts, " * ")) << "\n";
  for (const char* flag : {"abelian", "nilpotent", "metabelian", "solvable"}) {
    out << flag << ": " << (info[flag].get<bool>() ? "yes" : "no") << "\n";
  }
  std::vector<std::string> orders;
  for (const auto& o : info["derived_orders"]) orders.push_back(std::to_string(o.get<std::size_t>()));
  out << "derived orders: [" << join(orders, ", ") << "]\n";
  return out.str();
}

json subgroups_json(const Lattice& lattice) {
  json out = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out.push_back({{"id", i}, {"order", lattice[i].order()}, {"witnesses", witnesses_of(lattice[i])}});
  }
  return out;
}

json graph_json(const GroupSpec& spec, const CommGraph& graph, const GraphAnalysis& analysis) {
  json edges = json::array();
  for (const auto& e : graph.edges()) edges.push_back({e.i, e.j, e.a, e.b});
  return json{{"spec", spec_doc(spec)},
              {"p", graph.prime()},
              {"kind", kind_name(graph.kind())},
              {"vertices", subgroups_json(graph.lattice())},
              {"edges", edges},
              {"components", components_json(analysis)},
              {"connected_diameter", analysis.connected_diameter}};
}

json analysis_json(const GroupSpec& spec, const CommGraph& graph, const GraphAnalysis& analysis) {
  return json{{"spec", spec_doc(spec)},
              {"p", graph.prime()},
              {"kind", kind_name(graph.kind())},
              {"vertex_count", graph.vertex_count()},
              {"edge_count", graph.edge_count()},
              {"components", components_json(analysis)},
              {"connected_diameter", analysis.connected_diameter}};
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

class DotReader {
 public:
  explicit DotReader(std::string_view text) : text_(text) {}

  DotGraph read() {
    DotGraph g;
    expect_word("graph");
    if (peek() != '{') identifier();
    expect('{');
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated graph body");
      if (text_[pos_] == '}') {
        ++pos_;
        break;
      }
      const std::string a = identifier();
      skip_space();
      if (text_.compare(pos_, 2, "--") == 0) {
        pos_ += 2;
        g.edges.emplace_back(a, identifier());
      } else {
        g.vertex_names.push_back(a);
        g.vertex_labels.push_back(peek() == '[' ? attributes() : std::string());
      }
      expect(';');
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing content after graph");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError("DOT: " + what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    skip_space();
    if (text_.compare(pos_, w.size(), w) != 0) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  std::string quoted() {
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  std::string identifier() {
    if (peek() == '"') return quoted();
    std::string out;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += text_[pos_++];
    }
    if (out.empty()) fail("expected identifier");
    return out;
  }

  std::string attributes() {
    expect('[');
    std::string label;
    while (peek() != ']') {
      const std::string key = identifier();
      expect('=');
      const std::string value = identifier();
      if (key == "label") label = value;
      if (peek() == ',') ++pos_;
    }
    expect(']');
    return label;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string export_dot(const CommGraph& graph) {
  const Lattice& lattice = graph.lattice();
  std::string out = "graph G {\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::vector<std::string> labels;
    for (ElementId w : lattice[i].witnesses()) labels.push_back(lattice[i].group().label(w));
    out += "\"S" + std::to_string(i) + "\" [label=\"" +
           dot_escape("|H|=" + std::to_string(lattice[i].order()) + ": " + join(labels, ", ")) + "\"];\n";
  }
  for (const auto& e : graph.edges()) {
    out += "\"S" + std::to_string(e.i) + "\" -- \"S" + std::to_string(e.j) + "\";\n";
  }
  out += "}\n";
  return out;
}

DotGraph parse_dot(std::string_view text) { return DotReader(text).read(); }

// ---------------------------------------------------------------------------
// Lattice cache

json lattice_cache_json(const GroupSpec& spec, const Lattice& lattice) {
  json subgroups = json::array();
  for (const auto& s : lattice.subgroups()) subgroups.push_back({{"order", s.order()}, {"members", s.elements()}});
  return json{{"format_version", kLatticeCacheFormat},
              {"spec", spec_doc(spec)},
              {"order", lattice.parent()->order()},
              {"element_labels", lattice.parent()->labels()},
              {"subgroups", subgroups}};
}

Lattice lattice_from_cache_json(const json& doc, const GroupSpec& spec, const GroupPtr& group) {
  try {
    if (doc.at("format_version").get<int>() != kLatticeCacheFormat) throw InvalidSpec("unsupported cache format");
    if (parse_group_spec(doc.at("spec").dump()) != spec) throw InvalidSpec("cache belongs to another group spec");
    if (doc.at("order").get<std::size_t>() != group->order()) throw InvalidSpec("cache order mismatch");
    if (doc.at("element_labels").get<std::vector<std::string>>() != group->labels()) {
      throw InvalidSpec("cache element labels do not match the group");
    }
    std::vector<SubgroupSet> subgroups;
    for (const auto& item : doc.at("subgroups")) {
      const auto members = item.at("members").get<std::vector<std::size_t>>();
      Bitset bits(group->order());
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (members[k] >= group->order()) throw InvalidSpec("cache member id out of range");
        if (k && members[k] <= members[k - 1]) throw InvalidSpec("cache member list not strictly ascending");
        bits.set(members[k]);
      }
      if (item.at("order").get<std::size_t>() != members.size()) throw InvalidSpec("cache subgroup order mismatch");
      auto witnesses = greedy_witnesses(*group, bits);
      subgroups.emplace_back(group, std::move(bits), std::move(witnesses));
    }
    for (std::size_t k = 1; k < subgroups.size(); ++k) {
      if (!canonical_less(subgroups[k - 1], subgroups[k])) throw InvalidSpec("cache subgroups not in canonical order");
    }
    return Lattice(group, std::move(subgroups));
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("malformed lattice cache: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

json record_json(const CheckRecord& record) {
  json out{{"group", record.group},
           {"p", record.p ? json(*record.p) : json()},
           {"params", record.params},
           {"expected", record.expected},
           {"observed", record.observed},
           {"pass", record.pass}};
  if (!record.warning.empty()) out["warning"] = record.warning;
  return out;
}

json report_json(const VerdictReport& report, bool timing) {
  json records = json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  return json{{"suite", report.suite},
              {"seed", report.seed},
              {"passed", report.passed()},
              {"failures", report.failures()},
              {"warnings", report.warnings()},
              {"records", records},
              {"skips", report.skips},
              {"runtime_ms", timing ? report.runtime_ms : 0.0}};
}

json reports_json(std::string_view suite, const std::vector<VerdictReport>& reports, bool timing) {
  if (reports.size() == 1 && suite != "all") return report_json(reports.front(), timing);
  json items = json::array();
  bool passed = true;
  double runtime = 0.0;
  std::size_t skips = 0;
  for (const auto& r : reports) {
    items.push_back(report_json(r, timing));
    passed = passed && r.passed();
    runtime += r.runtime_ms;
    skips += r.skips;
  }
  return json{{"suite", std::string(suite)},
              {"seed", reports.empty() ? 0 : reports.front().seed},
              {"passed", passed},
              {"reports", items},
              {"skips", skips},
              {"runtime_ms", timing ? runtime : 0.0}};
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace commgraph
