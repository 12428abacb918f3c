#include <filesystem>

#include "commgraph/errors.hpp"
#include "commgraph/io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace commgraph;
using nlohmann::json;

namespace {

struct Built {
  GroupSpec spec;
  GroupPtr group;
  std::shared_ptr<const Lattice> lattice;
};

Built build(const GroupSpec& spec) {
  auto g = construct(spec);
  return {spec, g, std::make_shared<const Lattice>(enumerate_subgroups(g))};
}

}  // namespace

TEST_CASE("group info") {
  const auto s4 = build(GroupSpec::sym(4));
  const auto info = group_info_json(s4.spec, s4.group);
  CHECK(info["order"] == 24);
  CHECK(info["solvable"] == true);
  CHECK(info["metabelian"] == false);
  CHECK(info["derived_orders"] == json::array({24, 12, 4, 1}));
  CHECK(info["factorization"] == json::array({json::array({2, 3}), json::array({3, 1})}));
  const auto text = group_info_text(s4.spec, s4.group);
  CHECK(text.find("factorization: 2^3 * 3") != std::string::npos);

  const auto c6 = build(GroupSpec::cyclic(6));
  CHECK(group_info_json(c6.spec, c6.group)["abelian"] == true);
  const auto p = build(GroupSpec::p2q(5));
  const auto pi = group_info_json(p.spec, p.group);
  CHECK(pi["order"] == 80);
  CHECK(pi["metabelian"] == true);
}

TEST_CASE("DOT export") {
  const auto one = build(GroupSpec::cyclic(1));
  const auto dot1 = export_dot(build_graph(one.lattice, 2, GraphKind::kCommensurability));
  CHECK(dot1 == "graph G {\n\"S0\" [label=\"|H|=1: \"];\n}\n");

  const auto c6 = build(GroupSpec::cyclic(6));
  const auto dot = export_dot(build_graph(c6.lattice, 2, GraphKind::kCommensurability));
  CHECK(dot ==
        "graph G {\n"
        "\"S0\" [label=\"|H|=1: \"];\n"
        "\"S1\" [label=\"|H|=2: 3\"];\n"
        "\"S2\" [label=\"|H|=3: 2\"];\n"
        "\"S3\" [label=\"|H|=6: 1\"];\n"
        "\"S0\" -- \"S1\";\n"
        "\"S2\" -- \"S3\";\n"
        "}\n");
  const auto parsed = parse_dot(dot);
  CHECK(parsed.vertex_names.size() == 4);
  CHECK(parsed.edges.size() == 2);
  CHECK(parsed.vertex_labels[3] == "|H|=6: 1");

  const auto s4 = build(GroupSpec::sym(4));
  const auto g = build_graph(s4.lattice, 3, GraphKind::kContainment);
  const auto sdot = export_dot(g);
  const auto sp = parse_dot(sdot);
  CHECK(sp.vertex_names.size() == 30);
  CHECK(sp.edges.size() == g.edge_count());
  CHECK(sp.vertex_labels[s4.lattice->whole_index()].rfind("|H|=24: ", 0) == 0);
  CHECK(export_dot(g) == sdot);
}

TEST_CASE("DOT reader rejects malformed input") {
  CHECK_THROWS_AS(parse_dot("digraph G {}"), SyntaxError);
  CHECK_THROWS_AS(parse_dot("graph G { \"a\" -- ; }"), SyntaxError);
  CHECK_THROWS_AS(parse_dot("graph G { \"a\" [label=\"x\"] "), SyntaxError);
  CHECK_THROWS_AS(parse_dot("graph G { \"a\"; } extra"), SyntaxError);
  const auto g = parse_dot("graph G { \"a\\\"b\" [label=\"q\\\\\"]; a -- b; }");
  CHECK(g.vertex_names[0] == "a\"b");
  CHECK(g.vertex_labels[0] == "q\\");
}

TEST_CASE("graph JSON schema") {
  const auto c6 = build(GroupSpec::cyclic(6));
  const auto g = build_graph(c6.lattice, 2, GraphKind::kCommensurability);
  const auto doc = graph_json(c6.spec, g, components_and_diameters(g));
  CHECK(doc["spec"] == json{{"cyclic", 6}});
  CHECK(doc["p"] == 2);
  CHECK(doc["kind"] == "comm");
  CHECK(doc["vertices"].size() == 4);
  CHECK(doc["vertices"][3] == json{{"id", 3}, {"order", 6}, {"witnesses", {"1"}}});
  CHECK(doc["edges"] == json::array({json::array({0, 1, 0, 1}), json::array({2, 3, 0, 1})}));
  CHECK(doc["components"].size() == 2);
  CHECK(doc["components"][0] == json{{"vertices", {0, 1}}, {"diameter", 1}, {"class", "complete"}});
  CHECK(doc["connected_diameter"] == 1);

  const auto p = build(GroupSpec::p2q(5));
  const auto g5 = build_graph(p.lattice, 5, GraphKind::kCommensurability);
  const auto a5 = analysis_json(p.spec, g5, components_and_diameters(g5));
  std::size_t stars = 0;
  for (const auto& c : a5["components"]) {
    if (c["class"] == "star") {
      ++stars;
      CHECK(c.contains("center"));
    }
  }
  CHECK(stars == 12);
}

TEST_CASE("lattice cache round trip") {
  for (const auto& spec : {GroupSpec::sym(4), GroupSpec::p2q(5), GroupSpec::abelian({2, 4})}) {
    const auto b = build(spec);
    const auto doc = lattice_cache_json(spec, *b.lattice);
    CHECK(doc["format_version"] == 1);
    const auto text = dump_json(doc);
    const auto back = lattice_from_cache_json(json::parse(text), spec, b.group);
    CHECK(back == *b.lattice);
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i].witnesses() == (*b.lattice)[i].witnesses());
    CHECK(dump_json(lattice_cache_json(spec, back)) == text);
  }
}

TEST_CASE("lattice cache validation") {
  const auto b = build(GroupSpec::sym(3));
  const auto good = lattice_cache_json(b.spec, *b.lattice);
  const auto other = build(GroupSpec::cyclic(6));
  CHECK_THROWS_AS(lattice_from_cache_json(good, other.spec, other.group), InvalidSpec);

  auto bad = good;
  bad["format_version"] = 2;
  CHECK_THROWS_AS(lattice_from_cache_json(bad, b.spec, b.group), InvalidSpec);
  bad = good;
  bad["subgroups"][1]["members"] = json::array({0, 1, 2});  // (1,2) and (1,2,3) do not close up
  bad["subgroups"][1]["order"] = 3;
  CHECK_THROWS_AS((void)lattice_from_cache_json(bad, b.spec, b.group), NotASubgroup);
  bad = good;
  std::swap(bad["subgroups"][0], bad["subgroups"][5]);
  CHECK_THROWS_AS(lattice_from_cache_json(bad, b.spec, b.group), InvalidSpec);
  bad = good;
  bad.erase("subgroups");
  CHECK_THROWS_AS(lattice_from_cache_json(bad, b.spec, b.group), InvalidSpec);
}

TEST_CASE("report JSON") {
  VerdictReport r;
  r.suite = "demo";
  r.seed = 7;
  r.runtime_ms = 12.5;
  CheckRecord rec;
  rec.group = "sym(4)";
  rec.p = 3;
  rec.expected = {{"cd", 4}};
  rec.observed = {{"cd", 4}};
  rec.pass = true;
  r.records.push_back(rec);
  const auto doc = report_json(r, false);
  CHECK(doc["suite"] == "demo");
  CHECK(doc["runtime_ms"] == 0.0);
  CHECK(doc["records"][0]["p"] == 3);
  CHECK(doc["records"][0]["params"] == json::object());
  CHECK_FALSE(doc["records"][0].contains("warning"));
  CHECK(report_json(r, true)["runtime_ms"] == 12.5);
  const auto all = reports_json("all", {r, r}, false);
  CHECK(all["suite"] == "all");
  CHECK(all["reports"].size() == 2);
  CHECK(all["passed"] == true);
  CHECK(reports_json("demo", {r}, false) == doc);
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / "commgraph_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  CHECK(read_file(path) == "second\n");
  CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  std::filesystem::remove_all(dir);
}
