#include "commgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "commgraph/errors.hpp"

namespace commgraph {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Corpus and cache

Corpus Corpus::standard() {
  Corpus c;
  auto add = [&c](GroupSpec spec, bool lattice = true) { c.entries.push_back({spec_name(spec), std::move(spec), lattice}); };
  add(GroupSpec::sym(3));
  add(GroupSpec::sym(4));
  for (std::uint64_t n = 2; n <= 12; ++n) add(GroupSpec::cyclic(n));
  for (std::uint64_t n = 3; n <= 8; ++n) add(GroupSpec::dihedral(n));
  add(GroupSpec::abelian({2, 2}));
  add(GroupSpec::abelian({2, 4}));
  add(GroupSpec::abelian({3, 3}));
  add(GroupSpec::direct({GroupSpec::sym(3), GroupSpec::cyclic(2)}));
  add(GroupSpec::p2q(3));
  add(GroupSpec::p2q(5));
  add(GroupSpec::p2q(7));
  add(GroupSpec::bs(GroupSpec::cyclic(3)), false);
  return c;
}

Corpus Corpus::from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("malformed corpus: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw InvalidSpec("corpus must be an array");
  Corpus c;
  for (const auto& item : doc) {
    bool lattice = true;
    json spec_doc = item;
    if (item.is_object() && item.contains("spec")) {
      spec_doc = item.at("spec");
      if (item.contains("lattice")) lattice = item.at("lattice").get<bool>();
    }
    GroupSpec spec = parse_group_spec(spec_doc.dump());
    c.entries.push_back({spec_name(spec), std::move(spec), lattice});
  }
  return c;
}

const GroupPtr& AnalysisCache::group(const GroupSpec& spec) {
  const std::string key = spec_to_json(spec);
  auto it = groups_.find(key);
  if (it == groups_.end()) it = groups_.emplace(key, construct(spec, order_cap_)).first;
  return it->second;
}

const std::shared_ptr<const Lattice>& AnalysisCache::lattice(const GroupSpec& spec) {
  const std::string key = spec_to_json(spec);
  auto it = lattices_.find(key);
  if (it == lattices_.end()) {
    auto l = std::make_shared<const Lattice>(enumerate_subgroups(group(spec), lattice_cap_));
    it = lattices_.emplace(key, std::move(l)).first;
  }
  return it->second;
}

const CommGraph& AnalysisCache::graph(const GroupSpec& spec, std::uint64_t p, GraphKind kind) {
  GraphKey key{spec_to_json(spec), p, kind};
  auto it = graphs_.find(key);
  if (it == graphs_.end()) {
    it = graphs_.emplace(key, std::make_unique<CommGraph>(build_graph(lattice(spec), p, kind))).first;
  }
  return *it->second;
}

const GraphAnalysis& AnalysisCache::analysis(const GroupSpec& spec, std::uint64_t p, GraphKind kind) {
  GraphKey key{spec_to_json(spec), p, kind};
  auto it = analyses_.find(key);
  if (it == analyses_.end()) it = analyses_.emplace(key, components_and_diameters(graph(spec, p, kind))).first;
  return it->second;
}

bool VerdictReport::passed() const { return failures() == 0; }

std::size_t VerdictReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

std::size_t VerdictReport::warnings() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.warning.empty(); }));
}

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::uint64_t> prime_divisors(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

// Canonical record order: group name, then p; ties keep generation order.
void order_records(VerdictReport& report) {
  std::stable_sort(report.records.begin(), report.records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::pair{a.group, a.p.value_or(0)} < std::pair{b.group, b.p.value_or(0)};
  });
}

CheckRecord make_record(std::string group, std::optional<std::uint64_t> p, json params, json expected, json observed,
                        bool pass) {
  CheckRecord r;
  r.group = std::move(group);
  r.p = p;
  r.params = std::move(params);
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  r.pass = pass;
  return r;
}

// Sym(4) element from 1-based cycle text in any rotation, e.g. "(1,4,3)".
ElementId sym_element(const GroupTable& g, std::string_view cycles, std::size_t points) {
  const auto id = g.find_label(cycle_label(parse_cycles(cycles, points)));
  if (!id) throw NotFound("no element " + std::string(cycles));
  return *id;
}

json witness_labels(const SubgroupSet& s) {
  json out = json::array();
  for (ElementId w : s.witnesses()) out.push_back(s.group().label(w));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

VerdictReport verify_totaldisc(const Corpus& corpus, AnalysisCache& cache, std::uint64_t max_prime) {
  Stopwatch clock;
  VerdictReport report;
  report.suite = "totaldisc";
  for (const auto& entry : corpus.entries) {
    if (!entry.enumerate_lattice) continue;
    const std::size_t order = cache.group(entry.spec)->order();
    for (std::uint64_t p : primes_up_to(max_prime)) {
      const auto& g = cache.graph(entry.spec, p, GraphKind::kCommensurability);
      const bool divides = order % p == 0;
      const bool disconnected = g.edge_count() == 0;
      report.records.push_back(make_record(entry.name, p, {{"order", order}},
                                           {{"totally_disconnected", !divides}},
                                           {{"totally_disconnected", disconnected}, {"edges", g.edge_count()}},
                                           disconnected == !divides));
    }
  }
  order_records(report);
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerdictReport verify_diameter_bounds(const Corpus& corpus, AnalysisCache& cache) {
  Stopwatch clock;
  VerdictReport report;
  report.suite = "bounds";
  for (const auto& entry : corpus.entries) {
    if (!entry.enumerate_lattice) continue;
    const GroupPtr& group = cache.group(entry.spec);
    const auto flags = structure_flags(group);
    const auto series = derived_series(group);
    const SubgroupSet& derived = series.terms.size() > 1 ? series.terms[1] : series.terms[0];
    for (std::uint64_t p : prime_divisors(group->order())) {
      const std::size_t cd = cache.analysis(entry.spec, p, GraphKind::kCommensurability).connected_diameter;
      const SubgroupSet sylow = sylow_subgroup(derived, p);
      const bool sylow_normal = is_normal(sylow);
      if (flags.is_metabelian) {
        report.records.push_back(make_record(entry.name, p, {{"hypothesis", "metabelian"}},
                                             {{"connected_diameter_at_most", 4}}, {{"connected_diameter", cd}},
                                             cd <= 4));
      }
      if (sylow_normal) {
        report.records.push_back(make_record(entry.name, p,
                                             {{"hypothesis", "sylow_of_derived_normal"},
                                              {"derived_order", derived.order()},
                                              {"sylow_order", sylow.order()}},
                                             {{"connected_diameter_at_most", 4}}, {{"connected_diameter", cd}},
                                             cd <= 4));
      }
      if (flags.is_nilpotent) {
        report.records.push_back(make_record(entry.name, p, {{"hypothesis", "nilpotent"}},
                                             {{"connected_diameter_at_most", 1}}, {{"connected_diameter", cd}},
                                             cd <= 1));
      }
    }
  }
  order_records(report);
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

// ---------------------------------------------------------------------------
// Lemma suite

namespace {

// Everything a lemma trial needs about one (G, p).
struct LemmaContext {
  std::string name;
  std::uint64_t p = 0;
  GroupPtr group;
  std::shared_ptr<const Lattice> lattice;
  const CommGraph* graph = nullptr;
  std::vector<std::size_t> component_of;  // lattice index -> component id
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> non_isolated;
  std::vector<std::size_t> normal;            // normal in G
  std::vector<std::size_t> p_subgroups;       // includes the trivial group
  std::vector<std::size_t> normal_p_nontrivial;
  DerivedSeries series;
  std::vector<std::optional<bool>> nilpotent;  // lazily filled

  bool is_nilpotent_at(std::size_t i) {
    if (!nilpotent[i]) nilpotent[i] = commgraph::is_nilpotent((*lattice)[i]);
    return *nilpotent[i];
  }
};

LemmaContext make_context(const CorpusEntry& entry, std::uint64_t p, AnalysisCache& cache) {
  LemmaContext ctx;
  ctx.name = entry.name;
  ctx.p = p;
  ctx.group = cache.group(entry.spec);
  ctx.lattice = cache.lattice(entry.spec);
  ctx.graph = &cache.graph(entry.spec, p, GraphKind::kCommensurability);
  const auto& analysis = cache.analysis(entry.spec, p, GraphKind::kCommensurability);
  ctx.component_of.assign(ctx.lattice->size(), 0);
  for (std::size_t c = 0; c < analysis.components.size(); ++c) {
    ctx.components.push_back(analysis.components[c].vertices);
    for (std::size_t v : analysis.components[c].vertices) ctx.component_of[v] = c;
  }
  for (std::size_t i = 0; i < ctx.lattice->size(); ++i) {
    const auto& s = (*ctx.lattice)[i];
    if (!ctx.graph->neighbors(i).empty()) ctx.non_isolated.push_back(i);
    const bool normal = is_normal(s);
    if (normal) ctx.normal.push_back(i);
    if (is_p_group(s, p)) {
      ctx.p_subgroups.push_back(i);
      if (normal && s.order() > 1) ctx.normal_p_nontrivial.push_back(i);
    }
  }
  ctx.series = derived_series(ctx.group);
  ctx.nilpotent.assign(ctx.lattice->size(), std::nullopt);
  return ctx;
}

struct LemmaTally {
  std::string lemma;
  std::size_t attempts = 0;
  std::size_t applicable = 0;
  std::size_t skips = 0;
  std::size_t violations = 0;
  std::size_t trivial_q = 0;
  json first_violation;
};

class LemmaRunner {
 public:
  LemmaRunner(std::vector<LemmaContext>& contexts, std::uint64_t seed) : contexts_(contexts), rng_(seed) {}

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  template <typename T>
  const T& pick_from(const std::vector<T>& v) {
    return v[pick(v.size())];
  }

  LemmaContext& pick_context() { return contexts_[pick(contexts_.size())]; }

  // Normal p-subgroup: normal core of a random p-subgroup. Trivial results
  // are replaced by a random nontrivial normal p-subgroup once trivial Q
  // would exceed 30% of the tally's applicable trials.
  std::optional<SubgroupSet> sample_q(LemmaContext& ctx, LemmaTally& tally) {
    const SubgroupSet& p_sub = (*ctx.lattice)[pick_from(ctx.p_subgroups)];
    SubgroupSet q = normal_core(p_sub);
    if (q.order() == 1) {
      if (10 * (tally.trivial_q + 1) > 3 * (tally.applicable + 1)) {
        if (ctx.normal_p_nontrivial.empty()) return std::nullopt;
        return (*ctx.lattice)[pick_from(ctx.normal_p_nontrivial)];
      }
      ++tally.trivial_q;
    }
    return q;
  }

 private:
  std::vector<LemmaContext>& contexts_;
  std::mt19937_64 rng_;
};

bool is_p_power(std::size_t n, std::uint64_t p) { return p_power_exponent(n, p).has_value(); }

}  // namespace

VerdictReport verify_lemma_suite(const Corpus& corpus, AnalysisCache& cache, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidSpec("lemma suite needs at least one trial");
  Stopwatch clock;
  VerdictReport report;
  report.suite = "lemmas";
  report.seed = seed;

  std::vector<LemmaContext> contexts;
  for (const auto& entry : corpus.entries) {
    if (!entry.enumerate_lattice) continue;
    for (std::uint64_t p : prime_divisors(cache.group(entry.spec)->order())) {
      contexts.push_back(make_context(entry, p, cache));
    }
  }
  if (contexts.empty()) throw InvalidSpec("lemma suite needs a corpus group of order > 1");

  LemmaRunner run(contexts, seed);

  // Each trial returns nullopt (skip), or a violation description (null when
  // the checked statement held).
  using Trial = std::function<std::optional<json>(LemmaTally&)>;

  const Trial lemma1 = [&](LemmaTally& t) -> std::optional<json> {
    auto& ctx = run.pick_context();
    const auto q = run.sample_q(ctx, t);
    if (!q) return std::nullopt;
    const SubgroupSet& v = (*ctx.lattice)[run.pick(ctx.lattice->size())];
    const SubgroupSet vq = product_set(v, *q);
    const std::size_t idx = index_of(vq, v);
    if (is_p_power(idx, ctx.p)) return json();
    return json{{"group", ctx.name}, {"p", ctx.p}, {"V", witness_labels(v)}, {"Q", witness_labels(*q)}, {"index", idx}};
  };

  const Trial lemma2 = [&](LemmaTally& t) -> std::optional<json> {
    auto& ctx = run.pick_context();
    if (ctx.non_isolated.empty()) return std::nullopt;
    const auto q = run.sample_q(ctx, t);
    if (!q) return std::nullopt;
    const std::size_t ai = run.pick_from(ctx.non_isolated);
    const std::size_t bi = run.pick_from(ctx.graph->neighbors(ai));
    const SubgroupSet aq = product_set((*ctx.lattice)[ai], *q);
    const SubgroupSet bq = product_set((*ctx.lattice)[bi], *q);
    const std::size_t meet = aq.members().count_and(bq.members());
    if (is_p_power(aq.order() / meet, ctx.p) && is_p_power(bq.order() / meet, ctx.p)) return json();
    return json{{"group", ctx.name}, {"p", ctx.p}, {"A", ai}, {"B", bi}, {"Q", witness_labels(*q)}};
  };

  const Trial lemma3 = [&](LemmaTally&) -> std::optional<json> {
    auto& ctx = run.pick_context();
    if (ctx.non_isolated.empty()) return std::nullopt;
    const std::size_t vi = run.pick_from(ctx.non_isolated);
    const std::size_t wi = run.pick_from(ctx.graph->neighbors(vi));
    const SubgroupSet& n = (*ctx.lattice)[run.pick_from(ctx.normal)];
    const Bitset vn = (*ctx.lattice)[vi].members() & n.members();
    const Bitset wn = (*ctx.lattice)[wi].members() & n.members();
    const std::size_t meet = vn.count_and(wn);
    if (is_p_power(vn.count() / meet, ctx.p) && is_p_power(wn.count() / meet, ctx.p)) return json();
    return json{{"group", ctx.name}, {"p", ctx.p}, {"V", vi}, {"W", wi}, {"N", witness_labels(n)}};
  };

  const Trial lemma4 = [&](LemmaTally&) -> std::optional<json> {
    auto& ctx = run.pick_context();
    const std::size_t level = run.pick(ctx.series.terms.size());
    const SubgroupSet& gi = ctx.series.terms[level];
    const SubgroupSet s = sylow_subgroup(gi, ctx.p);
    if (!is_normal(s, gi)) return std::nullopt;
    std::vector<std::size_t> qs;
    for (std::size_t i : ctx.p_subgroups) {
      const auto& cand = (*ctx.lattice)[i];
      if (cand.contains(s) && is_normal(cand)) qs.push_back(i);
    }
    const SubgroupSet& q = (*ctx.lattice)[run.pick_from(qs)];
    const SubgroupSet& v = (*ctx.lattice)[run.pick(ctx.lattice->size())];
    const SubgroupSet vq = product_set(v, q);
    const std::size_t vq_index = ctx.lattice->index_of_members(vq.members());
    const std::size_t wi = run.pick_from(ctx.components[ctx.component_of[vq_index]]);
    const SubgroupSet wq = product_set((*ctx.lattice)[wi], q);
    const std::size_t wq_index = ctx.lattice->index_of_members(wq.members());
    if (ctx.component_of[wq_index] != ctx.component_of[vq_index]) return std::nullopt;
    const Bitset lhs = vq.members() & gi.members();
    const Bitset rhs = wq.members() & gi.members();
    if (lhs == rhs) return json();
    return json{{"group", ctx.name}, {"p", ctx.p}, {"level", level + 1}, {"VQ", vq_index}, {"WQ", wq_index}};
  };

  const Trial claim = [&](LemmaTally&) -> std::optional<json> {
    auto& ctx = run.pick_context();
    if (ctx.non_isolated.empty()) return std::nullopt;
    const std::size_t d1 = run.pick_from(ctx.non_isolated);
    if (!ctx.is_nilpotent_at(d1)) return std::nullopt;
    std::vector<std::size_t> partners;
    for (std::size_t w : ctx.graph->neighbors(d1)) {
      if (ctx.is_nilpotent_at(w)) partners.push_back(w);
    }
    if (partners.empty()) return std::nullopt;
    const std::size_t d2 = run.pick_from(partners);
    const SubgroupSet& a = (*ctx.lattice)[d1];
    const SubgroupSet& b = (*ctx.lattice)[d2];
    const Bitset meet = a.members() & b.members();
    const bool ok = p_prime_complement(a, ctx.p).members().is_subset_of(meet) &&
                    p_prime_complement(b, ctx.p).members().is_subset_of(meet);
    if (ok) return json();
    return json{{"group", ctx.name}, {"p", ctx.p}, {"Delta1", d1}, {"Delta2", d2}};
  };

  const std::vector<std::pair<std::string, const Trial*>> lemmas{{"lemma1_vq_adjacent", &lemma1},
                                                                {"lemma2_aq_bq_adjacent", &lemma2},
                                                                {"lemma3_intersect_normal", &lemma3},
                                                                {"lemma4_rigidity", &lemma4},
                                                                {"claim_p_complement", &claim}};

  for (const auto& [name, trial] : lemmas) {
    LemmaTally tally;
    tally.lemma = name;
    while (tally.applicable < trials && tally.attempts < 2 * trials) {
      ++tally.attempts;
      const auto outcome = (*trial)(tally);
      if (!outcome) {
        ++tally.skips;
        continue;
      }
      ++tally.applicable;
      if (!outcome->is_null()) {
        if (tally.violations == 0) tally.first_violation = *outcome;
        ++tally.violations;
      }
    }
    const double skip_rate = static_cast<double>(tally.skips) / static_cast<double>(tally.attempts);
    json observed{{"violations", tally.violations},
                  {"applicable", tally.applicable},
                  {"attempts", tally.attempts},
                  {"skip_rate", skip_rate}};
    if (name == "lemma1_vq_adjacent" || name == "lemma2_aq_bq_adjacent") observed["trivial_q"] = tally.trivial_q;
    if (tally.violations) observed["first_violation"] = tally.first_violation;
    const bool pass = tally.violations == 0 && tally.applicable == trials && skip_rate < 0.5;
    report.records.push_back(make_record("*", std::nullopt, {{"lemma", name}, {"trials", trials}},
                                         {{"violations", 0}, {"applicable", trials}, {"skip_rate_below", 0.5}},
                                         std::move(observed), pass));
    report.skips += tally.skips;
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

// ---------------------------------------------------------------------------

VerdictReport verify_sym4_geodesics(AnalysisCache& cache) {
  Stopwatch clock;
  VerdictReport report;
  report.suite = "sym4";
  const GroupSpec spec = GroupSpec::sym(4);
  const std::string name = spec_name(spec);
  const GroupPtr& g = cache.group(spec);
  const Lattice& lattice = *cache.lattice(spec);
  const CommGraph& graph = cache.graph(spec, 3, GraphKind::kContainment);
  const GraphAnalysis& analysis = cache.analysis(spec, 3, GraphKind::kContainment);

  auto el = [&](std::string_view c) { return sym_element(*g, c, 4); };
  auto locate = [&](std::initializer_list<std::string_view> gens) {
    std::vector<ElementId> ids;
    for (auto c : gens) ids.push_back(el(c));
    return locate_subgroup(lattice, ids);
  };

  report.records.push_back(make_record(name, 3, {{"graph", "containment"}}, {{"cd", 4}},
                                       {{"cd", analysis.connected_diameter}}, analysis.connected_diameter == 4));

  const std::size_t start = locate({"(1,2)"});
  const std::size_t finish = locate({"(3,4)"});

  std::set<std::vector<std::size_t>> templates;
  for (int i : {1, 2}) {
    for (int k : {3, 4}) {
      const int j = 7 - k;
      const auto s = [](auto... xs) {
        std::string out = "(";
        ((out += std::to_string(xs) + ","), ...);
        out.back() = ')';
        return out;
      };
      templates.insert({start, locate({"(1,2)", s(1, 2, k)}), locate({s(i, k)}), locate({s(i, k), s(i, j, k)}),
                        finish});
    }
  }

  const auto geodesics = all_geodesics(graph, start, finish);
  std::size_t matching = 0;
  bool five_vertices = true;
  for (const auto& path : geodesics) {
    five_vertices = five_vertices && path.size() == 5;
    matching += templates.count(path);
  }
  report.records.push_back(make_record(
      name, 3, {{"from", "<(1,2)>"}, {"to", "<(3,4)>"}},
      {{"vertices_per_geodesic", 5}, {"all_match_template", true}, {"template_paths", templates.size()}},
      {{"geodesics", geodesics.size()}, {"matching_template", matching}, {"all_five_vertices", five_vertices}},
      !geodesics.empty() && five_vertices && matching == geodesics.size()));

  // Every simple path has consecutive vertices sharing some (i,j), i∈{1,2}, j∈{3,4}.
  std::vector<ElementId> crossing;
  for (auto c : {"(1,3)", "(1,4)", "(2,3)", "(2,4)"}) crossing.push_back(el(c));
  std::size_t violations = 0;
  const std::size_t paths = for_each_simple_path(graph, start, finish, [&](const std::vector<std::size_t>& path) {
    bool found = false;
    for (std::size_t k = 0; k + 1 < path.size() && !found; ++k) {
      for (ElementId t : crossing) {
        if (lattice[path[k]].contains(t) && lattice[path[k + 1]].contains(t)) {
          found = true;
          break;
        }
      }
    }
    if (!found) ++violations;
    return true;
  });
  report.records.push_back(make_record(name, 3, {{"property", "consecutive_shared_transposition"}},
                                       {{"violations", 0}}, {{"simple_paths", paths}, {"violations", violations}},
                                       paths > 0 && violations == 0));

  const auto& comp = analysis.component_of(start);
  report.records.push_back(make_record(name, 3, {{"property", "endpoints_share_component"}}, {{"same_component", true}},
                                       {{"same_component", std::binary_search(comp.vertices.begin(), comp.vertices.end(), finish)},
                                        {"component_size", comp.vertices.size()},
                                        {"component_diameter", comp.diameter}},
                                       std::binary_search(comp.vertices.begin(), comp.vertices.end(), finish)));
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

// ---------------------------------------------------------------------------

VerdictReport verify_construction(const GroupSpec& base, AnalysisCache& cache) {
  Stopwatch clock;
  VerdictReport report;
  report.suite = "construction";
  constexpr std::uint64_t p = 3;
  const GroupSpec whole = GroupSpec::bs(base);
  const std::string name = spec_name(whole);

  // Diametral geodesic V_1 ... V_m in the 3-containment graph of H.
  const Lattice& base_lattice = *cache.lattice(base);
  const CommGraph& base_graph = cache.graph(base, p, GraphKind::kContainment);
  const GraphAnalysis& base_analysis = cache.analysis(base, p, GraphKind::kContainment);
  const std::size_t cd_base = base_analysis.connected_diameter;
  std::vector<std::size_t> geodesic{0};
  for (const auto& comp : base_analysis.components) {
    if (comp.diameter != cd_base || cd_base == 0) continue;
    for (std::size_t k = 0; k < comp.vertices.size() && geodesic.size() == 1; ++k) {
      if (comp.eccentricities[k] != cd_base) continue;
      const auto dist = bfs_distances(base_graph, comp.vertices[k]);
      for (std::size_t w : comp.vertices) {
        if (*dist[w] == cd_base) {
          geodesic = all_geodesics(base_graph, comp.vertices[k], w).front();
          break;
        }
      }
    }
    break;
  }
  report.records.push_back(make_record(spec_name(base), p, {{"graph", "containment"}}, json(),
                                       {{"cd", cd_base}, {"geodesic_vertices", geodesic.size()}},
                                       geodesic.size() == cd_base + 1));

  const BsGroup bs(base, cache.order_cap());
  const GroupPtr& g = bs.table();
  const std::size_t h_order = bs.base()->order();
  const std::size_t expected_order = 24 * h_order * h_order * h_order * h_order;
  report.records.push_back(make_record(name, std::nullopt, {{"check", "order"}}, {{"order", expected_order}},
                                       {{"order", g->order()}}, g->order() == expected_order));

  const std::size_t m = geodesic.size();
  auto vertex = [&](std::size_t k) -> const SubgroupSet& { return base_lattice[geodesic[k]]; };
  // ⟨X1 × X2 × X3 × X4, perms...⟩
  auto build = [&](std::array<std::size_t, 4> slots, std::initializer_list<std::string_view> perms) {
    std::vector<ElementId> gens;
    for (std::size_t s = 0; s < 4; ++s) {
      for (ElementId w : vertex(slots[s]).witnesses()) gens.push_back(bs.coordinate(s, w));
    }
    for (auto c : perms) gens.push_back(bs.permutation(c));
    return subgroup_closure(g, gens);
  };

  const std::size_t last = m - 1;
  std::vector<std::pair<std::string, SubgroupSet>> path;
  auto label = [](std::string_view body, std::size_t a, std::size_t b) {
    return std::string("<V") + std::to_string(a + 1) + "xV" + std::to_string(a + 1) + "xV" + std::to_string(b + 1) +
           "xV" + std::to_string(b + 1) + ", " + std::string(body) + ">";
  };
  for (std::size_t k = 0; k < m; ++k) path.emplace_back(label("(1,2)", k, last), build({k, k, last, last}, {"(1,2)"}));
  path.emplace_back(label("(1,2,3),(1,2)", last, last), build({last, last, last, last}, {"(1,2,3)", "(1,2)"}));
  path.emplace_back(label("(2,3)", last, last), build({last, last, last, last}, {"(2,3)"}));
  path.emplace_back(label("(2,3,4),(2,3)", last, last), build({last, last, last, last}, {"(2,3,4)", "(2,3)"}));
  path.emplace_back(label("(3,4)", last, last), build({last, last, last, last}, {"(3,4)"}));
  for (std::size_t k = last; k-- > 0;) {
    std::string l = "<V" + std::to_string(m) + "xV" + std::to_string(m) + "xV" + std::to_string(k + 1) + "xV" +
                    std::to_string(k + 1) + ", (3,4)>";
    path.emplace_back(std::move(l), build({last, last, k, k}, {"(3,4)"}));
  }

  const SubgroupSet& e1 = path.front().second;
  const SubgroupSet& e2 = path.back().second;
  const std::size_t expected_e1 = vertex(0).order() * vertex(0).order() * vertex(last).order() * vertex(last).order() * 2;
  report.records.push_back(make_record(name, p, {{"check", "E1 order"}, {"E1", path.front().first}},
                                       {{"order", expected_e1}}, {{"order", e1.order()}}, e1.order() == expected_e1));

  bool all_edges = true;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const SubgroupSet& x = path[k].second;
    const SubgroupSet& y = path[k + 1].second;
    std::optional<unsigned> exponent;
    if (x.contains(y) && !(x == y)) exponent = p_power_exponent(x.order() / y.order(), p);
    if (y.contains(x) && !(x == y)) exponent = p_power_exponent(y.order() / x.order(), p);
    const bool ok = exponent && *exponent >= 1;
    all_edges = all_edges && ok;
    report.records.push_back(make_record(
        name, p, {{"check", "path edge"}, {"step", k}, {"from", path[k].first}, {"to", path[k + 1].first}},
        {{"containment_edge", true}},
        {{"orders", {x.order(), y.order()}}, {"exponent", exponent ? json(*exponent) : json()}}, ok));
  }

  const bool distinct = !(e1 == e2);
  const bool non_containing = !e1.contains(e2) && !e2.contains(e1);
  const std::size_t certified = all_edges && distinct && non_containing ? 2 : 0;
  report.records.push_back(make_record(name, p, {{"check", "E1 and E2 non-adjacent"}},
                                       {{"distinct", true}, {"non_containing", true}, {"same_component", true}},
                                       {{"distinct", distinct}, {"non_containing", non_containing},
                                        {"same_component", all_edges}, {"path_vertices", path.size()}},
                                       distinct && non_containing && all_edges));

  CheckRecord bound = make_record(name, p, {{"check", "cd lower bound"}, {"cd_base", cd_base}},
                                  {{"cd_at_least", cd_base + 1}}, {{"certified_cd_at_least", certified}},
                                  certified >= std::min<std::size_t>(cd_base + 1, 2));
  if (cd_base + 1 > 2 && bound.pass) {
    bound.warning = "path certificate proves cd >= 2 only; full bound needs the lattice of " + name;
  }
  report.records.push_back(std::move(bound));
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

// ---------------------------------------------------------------------------

VerdictReport verify_cd_inequality(const Corpus& corpus, AnalysisCache& cache) {
  Stopwatch clock;
  VerdictReport report;
  report.suite = "cd";
  for (const auto& entry : corpus.entries) {
    if (!entry.enumerate_lattice) continue;
    for (std::uint64_t p : prime_divisors(cache.group(entry.spec)->order())) {
      const std::size_t cd = cache.analysis(entry.spec, p, GraphKind::kContainment).connected_diameter;
      const std::size_t diam = cache.analysis(entry.spec, p, GraphKind::kCommensurability).connected_diameter;
      // floor((cd - 1) / 2), with cd = 0 vacuous.
      const long long bound = cd == 0 ? -1 : static_cast<long long>((cd - 1) / 2);
      const bool holds = static_cast<long long>(diam) >= bound;
      CheckRecord r = make_record(entry.name, p, {{"cd", cd}}, {{"diameter_at_least", bound}},
                                  {{"diameter", diam}}, holds || p != 3);
      if (!holds && p != 3) r.warning = "extension violation";
      report.records.push_back(std::move(r));
    }
  }
  order_records(report);
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

// ---------------------------------------------------------------------------

VerdictReport verify_p2q(const std::vector<std::uint64_t>& qs, AnalysisCache& cache, std::uint64_t max_prime) {
  Stopwatch clock;
  VerdictReport report;
  report.suite = "p2q";
  std::size_t max_diameter = 0;
  for (std::uint64_t q : qs) {
    const GroupSpec spec = GroupSpec::p2q(q);
    const std::string name = spec_name(spec);
    const GroupPtr& g = cache.group(spec);
    const Lattice& lattice = *cache.lattice(spec);

    // Every subgroup contains the unipotent ⟨b⟩ or has order prime to q.
    const auto b = g->find_label("(1,1,1)");
    const SubgroupSet unipotent = subgroup_closure(g, {b.value()});
    std::size_t containing = 0, coprime = 0, neither = 0;
    for (const auto& s : lattice.subgroups()) {
      if (s.contains(unipotent)) {
        ++containing;
      } else if (s.order() % q != 0) {
        ++coprime;
      } else {
        ++neither;
      }
    }
    report.records.push_back(make_record(name, std::nullopt, {{"check", "subgroup forms"}},
                                         {{"neither", 0}},
                                         {{"subgroups", lattice.size()},
                                          {"contain_unipotent", containing},
                                          {"order_prime_to_q", coprime},
                                          {"neither", neither}},
                                         neither == 0));

    for (std::uint64_t p : primes_up_to(std::max(max_prime, q))) {
      const GraphAnalysis& analysis = cache.analysis(spec, p, GraphKind::kCommensurability);
      std::map<std::string, std::size_t> counts;
      std::size_t complete_multi = 0, complete_all = 0, stars = 0, two_vertex_complete = 0;
      for (const auto& c : analysis.components) {
        const auto cls = c.classification.cls;
        ++counts[class_name(cls)];
        if (cls == ComponentClass::kComplete || cls == ComponentClass::kSingleton) ++complete_all;
        if (cls == ComponentClass::kComplete) ++complete_multi;
        if (cls == ComponentClass::kStar) ++stars;
        if (cls == ComponentClass::kComplete && c.vertices.size() == 2) ++two_vertex_complete;
      }
      const bool classified = counts["other"] == 0;
      max_diameter = std::max(max_diameter, analysis.connected_diameter);

      report.records.push_back(make_record(name, p, {{"check", "complete or star"}}, {{"other", 0}},
                                           json(counts), classified));
      report.records.push_back(make_record(name, p, {{"check", "connected diameter"}},
                                           {{"connected_diameter_at_most", 2}},
                                           {{"connected_diameter", analysis.connected_diameter}},
                                           analysis.connected_diameter <= 2));
      if (((q - 1) * (q - 1)) % p == 0 && p != q) {
        report.records.push_back(make_record(name, p, {{"check", "every component complete"}},
                                             {{"non_complete", 0}},
                                             {{"non_complete", analysis.components.size() - complete_all}},
                                             complete_all == analysis.components.size()));
      }
      if (p == q) {
        const std::size_t bad = analysis.components.size() - counts["singleton"] - stars - two_vertex_complete;
        report.records.push_back(make_record(name, p, {{"check", "star or two-vertex complete"}},
                                             {{"other_components", 0}}, {{"other_components", bad}}, bad == 0));
      }
      auto count_check = [&](const char* what, std::size_t expected, std::size_t observed, std::size_t alternative) {
        CheckRecord r = make_record(name, p, {{"check", what}, {"convention", "components with >= 2 vertices"}},
                                    {{"count", expected}}, {{"count", observed}}, observed == expected);
        if (!r.pass && classified) {
          r.pass = true;
          r.warning = "CONVENTION_MISMATCH";
          r.observed["count_including_singletons"] = alternative;
        }
        report.records.push_back(std::move(r));
      };
      if (q == 5 && p == 2) count_check("complete component count", 2, complete_multi, complete_all);
      if (q == 5 && p == 5) count_check("star component count", 12, stars, stars);
    }
  }
  report.records.push_back(make_record("*", std::nullopt, {{"check", "diameter bound is sharp"}, {"qs", qs}},
                                       {{"max_connected_diameter", 2}}, {{"max_connected_diameter", max_diameter}},
                                       max_diameter == 2));
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

// ---------------------------------------------------------------------------

std::vector<VerdictReport> run_suite(std::string_view name, const VerifyOptions& options) {
  const Corpus corpus = options.corpus ? *options.corpus : Corpus::standard();
  AnalysisCache cache(options.order_cap, options.lattice_cap);
  std::vector<VerdictReport> out;
  const bool all = name == "all";
  bool matched = all;
  auto want = [&](std::string_view suite) {
    if (all || name == suite) {
      matched = true;
      return true;
    }
    return false;
  };
  if (want("totaldisc")) out.push_back(verify_totaldisc(corpus, cache));
  if (want("bounds")) out.push_back(verify_diameter_bounds(corpus, cache));
  if (want("lemmas")) out.push_back(verify_lemma_suite(corpus, cache, options.trials, options.seed));
  if (want("sym4")) out.push_back(verify_sym4_geodesics(cache));
  if (want("construction")) out.push_back(verify_construction(GroupSpec::cyclic(3), cache));
  if (want("cd")) out.push_back(verify_cd_inequality(corpus, cache));
  if (want("p2q")) out.push_back(verify_p2q({3, 5, 7}, cache));
  if (!matched) throw InvalidSpec("unknown suite '" + std::string(name) + "'");
  for (auto& r : out) r.seed = options.seed;
  return out;
}

}  // namespace commgraph
