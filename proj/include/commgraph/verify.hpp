#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "commgraph/constructions.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/lattice.hpp"
#include "json.hpp"

namespace commgraph {

struct CorpusEntry {
  std::string name;
  GroupSpec spec;
  /// False for groups only used through explicit subgroup paths (BS(Z/3)):
  /// lattice-based suites skip them.
  bool enumerate_lattice = true;
};

struct Corpus {
  std::vector<CorpusEntry> entries;

  /// sym(3), sym(4), cyclic(2..12), dihedral(3..8), abelian([2,2]),
  /// abelian([2,4]), abelian([3,3]), direct([sym(3), cyclic(2)]),
  /// p2q(3), p2q(5), p2q(7), bs(cyclic(3)) (path checks only).
  static Corpus standard();

  /// A JSON array whose items are either group-spec documents or
  /// {"spec": <doc>, "lattice": bool}.
  static Corpus from_json(std::string_view text);
};

/// Memoizes groups, lattices, graphs and their analyses by spec.
class AnalysisCache {
 public:
  explicit AnalysisCache(std::size_t order_cap = kDefaultOrderCap, std::size_t lattice_cap = kDefaultLatticeCap)
      : order_cap_(order_cap), lattice_cap_(lattice_cap) {}

  std::size_t order_cap() const noexcept { return order_cap_; }
  std::size_t lattice_cap() const noexcept { return lattice_cap_; }

  const GroupPtr& group(const GroupSpec& spec);
  const std::shared_ptr<const Lattice>& lattice(const GroupSpec& spec);
  const CommGraph& graph(const GroupSpec& spec, std::uint64_t p, GraphKind kind);
  const GraphAnalysis& analysis(const GroupSpec& spec, std::uint64_t p, GraphKind kind);

 private:
  using GraphKey = std::tuple<std::string, std::uint64_t, GraphKind>;

  std::size_t order_cap_;
  std::size_t lattice_cap_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, std::shared_ptr<const Lattice>> lattices_;
  std::map<GraphKey, std::unique_ptr<CommGraph>> graphs_;
  std::map<GraphKey, GraphAnalysis> analyses_;
};

struct CheckRecord {
  std::string group;
  std::optional<std::uint64_t> p;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
  /// Non-fatal note, e.g. "CONVENTION_MISMATCH" or "extension violation".
  std::string warning;
};

struct VerdictReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;
  std::size_t skips = 0;
  double runtime_ms = 0.0;

  bool passed() const;
  std::size_t failures() const;
  std::size_t warnings() const;
};

inline constexpr std::uint64_t kDefaultMaxPrime = 13;
inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr std::size_t kDefaultTrials = 1000;

/// Γ_p(G) has no edges iff p does not divide |G|, for every prime <= max_prime.
VerdictReport verify_totaldisc(const Corpus& corpus, AnalysisCache& cache, std::uint64_t max_prime = kDefaultMaxPrime);

/// For p | |G|: metabelian => cd(Γ_p) <= 4; Sylow_p([G,G]) normal in G =>
/// cd(Γ_p) <= 4; nilpotent => cd(Γ_p) <= 1.
VerdictReport verify_diameter_bounds(const Corpus& corpus, AnalysisCache& cache);

/// Seeded random instances of the four adjacency lemmas and of the nilpotent
/// complement lemma, each in index form. Every lemma collects `trials`
/// applicable instances, giving up after 2*trials attempts.
VerdictReport verify_lemma_suite(const Corpus& corpus, AnalysisCache& cache, std::size_t trials, std::uint64_t seed);

/// 3-containment graph of Sym(4): connected diameter 4, the geodesics from
/// ⟨(1,2)⟩ to ⟨(3,4)⟩, and the shared-transposition property of every
/// simple path between them.
VerdictReport verify_sym4_geodesics(AnalysisCache& cache);

/// Explicit path between E1 and E2 in the 3-containment graph of BS(H),
/// checked edge by edge without enumerating the lattice of BS(H).
VerdictReport verify_construction(const GroupSpec& base, AnalysisCache& cache);

/// diam(Γ_p(G)) >= floor((cd_p(G) - 1) / 2) for p | |G|; failures for p != 3
/// are warnings.
VerdictReport verify_cd_inequality(const Corpus& corpus, AnalysisCache& cache);

/// Component classification of Γ_p(P(2,q)) for all primes p <= max(max_prime, q).
VerdictReport verify_p2q(const std::vector<std::uint64_t>& qs, AnalysisCache& cache,
                         std::uint64_t max_prime = kDefaultMaxPrime);

struct VerifyOptions {
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::optional<Corpus> corpus;  ///< standard corpus when empty
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"totaldisc", "bounds", "lemmas", "sym4", "construction", "cd", "p2q"};
  return names;
}

/// Runs one named suite, or every suite for "all". Throws InvalidSpec for an
/// unknown name.
std::vector<VerdictReport> run_suite(std::string_view name, const VerifyOptions& options);

}  // namespace commgraph
