// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-commgraph-cli>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include "commgraph/io.hpp"
#include "commgraph/verify.hpp"

using namespace commgraph;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    out.pass = false;
    out.detail += " [over time limit " + std::to_string(static_cast<int>(limit_s)) + "s]";
  }
  if (!out.pass) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << timing << ") "
            << out.detail << std::endl;
}

const CheckRecord* find(const VerdictReport& r, const std::string& group, std::uint64_t p, const std::string& check) {
  for (const auto& rec : r.records) {
    if (rec.group == group && rec.p == p && rec.params.value("check", "") == check) return &rec;
  }
  return nullptr;
}

bool all_pass(const VerdictReport& r, const std::function<bool(const CheckRecord&)>& filter = nullptr) {
  for (const auto& rec : r.records) {
    if (filter && !filter(rec)) continue;
    if (!rec.pass) return false;
  }
  return true;
}

std::string counts(const VerdictReport& r) {
  return std::to_string(r.records.size()) + " checks, " + std::to_string(r.failures()) + " failed, " +
         std::to_string(r.warnings()) + " warnings";
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

std::string quote(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "cd_3(Sym4) = 4", 5, [] {
    AnalysisCache cache;
    const auto& a = cache.analysis(GroupSpec::sym(4), 3, GraphKind::kContainment);
    return Outcome{a.connected_diameter == 4, "cd=" + std::to_string(a.connected_diameter)};
  });

  criterion(2, "Sym4 geodesics match the template; every simple path shares a transposition", 30, [] {
    AnalysisCache cache;
    const auto r = verify_sym4_geodesics(cache);
    const auto& geo = r.records.at(1).observed;
    const auto& paths = r.records.at(2).observed;
    return Outcome{r.passed(), "geodesics=" + geo["geodesics"].dump() + " simple_paths=" +
                                   paths["simple_paths"].dump() + " violations=" + paths["violations"].dump()};
  });

  criterion(3, "totally disconnected iff p does not divide |G| (p <= 13)", 0, [] {
    AnalysisCache cache;
    const auto r = verify_totaldisc(Corpus::standard(), cache);
    return Outcome{r.passed(), counts(r)};
  });

  criterion(4, "Gamma_2(P(2,5)) two complete components; Gamma_5(P(2,5)) twelve stars", 0, [] {
    AnalysisCache cache;
    const auto r = verify_p2q({5}, cache);
    const auto* cls2 = find(r, "p2q(5)", 2, "every component complete");
    const auto* cnt2 = find(r, "p2q(5)", 2, "complete component count");
    const auto* cls5 = find(r, "p2q(5)", 5, "complete or star");
    const auto* cnt5 = find(r, "p2q(5)", 5, "star component count");
    if (!cls2 || !cnt2 || !cls5 || !cnt5) return Outcome{false, "missing records"};
    const bool ok = cls2->pass && cls5->pass && cnt2->pass && cnt5->pass;
    std::string detail = "complete=" + cnt2->observed["count"].dump() + " stars=" + cnt5->observed["count"].dump();
    for (const auto* rec : {cnt2, cnt5}) {
      if (!rec->warning.empty()) detail += " " + rec->warning + " " + rec->observed.dump();
    }
    return Outcome{ok, detail};
  });

  criterion(5, "P(2,q) components are complete or star, connected diameter <= 2 and sharp", 120, [] {
    AnalysisCache cache;
    const auto r = verify_p2q({3, 5, 7}, cache);
    return Outcome{r.passed(), counts(r)};
  });

  criterion(6, "diameter bounds: metabelian <= 4, normal Sylow of derived <= 4, nilpotent <= 1", 0, [] {
    AnalysisCache cache;
    const auto r = verify_diameter_bounds(Corpus::standard(), cache);
    bool sym4_hyp = false;
    for (const auto& rec : r.records) {
      if (rec.group == "sym(4)" && rec.p == 2u && rec.params["hypothesis"] == "sylow_of_derived_normal") {
        sym4_hyp = rec.pass;
      }
    }
    return Outcome{r.passed() && sym4_hyp, counts(r)};
  });

  criterion(7, "lemma property suites: 1000 applicable trials, no violations, skip rate < 50%", 120, [] {
    AnalysisCache cache;
    const auto r = verify_lemma_suite(Corpus::standard(), cache, kDefaultTrials, kDefaultSeed);
    std::string detail;
    for (const auto& rec : r.records) {
      detail += rec.params["lemma"].get<std::string>() + ":" + rec.observed["violations"].dump() + "/" +
                rec.observed["applicable"].dump() + " ";
    }
    return Outcome{r.passed() && r.records.size() == 5, detail};
  });

  criterion(8, "BS(Z/3) explicit path certifies cd_3 >= 2", 60, [] {
    AnalysisCache cache;
    const auto r = verify_construction(GroupSpec::cyclic(3), cache);
    std::string order = "?";
    for (const auto& rec : r.records) {
      if (rec.params.value("check", "") == "order") order = rec.observed["order"].dump();
    }
    return Outcome{r.passed(), "order=" + order + ", " + counts(r)};
  });

  criterion(9, "diam(Gamma_p) >= floor((cd_p - 1)/2)", 0, [] {
    AnalysisCache cache;
    const auto r = verify_cd_inequality(Corpus::standard(), cache);
    const bool p3 = all_pass(r, [](const CheckRecord& rec) { return rec.p == 3u; });
    return Outcome{r.passed() && p3, counts(r)};
  });

  criterion(10, "enumeration equals the generator-tuple oracle on corpus groups of order <= 100", 0, [] {
    AnalysisCache cache;
    std::size_t compared = 0;
    std::size_t sym4 = 0;
    for (const auto& e : Corpus::standard().entries) {
      const auto& g = cache.group(e.spec);
      if (g->order() > kOracleOrderLimit) continue;
      const auto oracle = oracle_enumerate_subgroups(g, std::max<std::size_t>(2, ceil_log2(g->order())));
      if (!(*cache.lattice(e.spec) == oracle)) return Outcome{false, "mismatch on " + e.name};
      if (e.name == "sym(4)") sym4 = oracle.size();
      ++compared;
    }
    return Outcome{sym4 == 30, std::to_string(compared) + " groups, sym(4) has " + std::to_string(sym4)};
  });

  criterion(11, "byte-identical reports and exports across runs", 0, [&cli] {
    if (cli.empty()) return Outcome{false, "no CLI path given"};
    const auto dir = std::filesystem::temp_directory_path() / "commgraph_acceptance";
    std::filesystem::create_directories(dir);
    for (int k : {1, 2}) {
      const std::string n = std::to_string(k);
      if (run(quote(cli) + " verify all --seed 7 --json " + quote(dir / ("verify" + n + ".json")) + " 2>/dev/null") != 0)
        return Outcome{false, "verify all failed"};
      if (run(quote(cli) + " graph '{\"sym\":4}' -p 3 --kind cont --dot " + quote(dir / ("g" + n + ".dot")) +
              " --json " + quote(dir / ("g" + n + ".json"))) != 0)
        return Outcome{false, "graph export failed"};
    }
    for (const char* stem : {"verify", "g"}) {
      for (const char* ext : {".json", ".dot"}) {
        const auto a = dir / (std::string(stem) + "1" + ext);
        if (!std::filesystem::exists(a)) continue;
        if (read_file(a) != read_file(dir / (std::string(stem) + "2" + ext))) {
          return Outcome{false, a.filename().string() + " differs"};
        }
      }
    }
    const auto report = json::parse(read_file(dir / "verify1.json"));
    std::filesystem::remove_all(dir);
    return Outcome{report["passed"] == true, "verify all passed=" + report["passed"].dump()};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
