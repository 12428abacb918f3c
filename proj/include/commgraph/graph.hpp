#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/lattice.hpp"

namespace commgraph {

enum class GraphKind {
  kCommensurability,  ///< [A:A∩B][B:A∩B] is a power of p
  kContainment,       ///< one contains the other with index p^k, k >= 1
};

std::string kind_name(GraphKind kind);  ///< "comm" / "cont"
GraphKind parse_kind(std::string_view text);

/// An edge (i, j), i < j, with [L_i : L_i∩L_j] = p^a and [L_j : L_i∩L_j] = p^b.
struct Edge {
  std::size_t i;
  std::size_t j;
  unsigned a;
  unsigned b;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Exponents (a, b) with [A:A∩B] = p^a, [B:A∩B] = p^b, or nullopt when
/// either index is not a power of p. (0, 0) iff A = B.
std::optional<std::pair<unsigned, unsigned>> commensurability_exponents(const SubgroupSet& a, const SubgroupSet& b,
                                                                        std::uint64_t p);

/// Simple undirected graph over lattice indices. Immutable after build.
class CommGraph {
 public:
  CommGraph(std::shared_ptr<const Lattice> lattice, std::uint64_t p, GraphKind kind, std::vector<Edge> edges);

  GraphKind kind() const noexcept { return kind_; }
  std::uint64_t prime() const noexcept { return p_; }
  const Lattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const noexcept { return lattice_; }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted ascending by (i, j).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted neighbor list.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Exponents oriented as (u side, v side); nullopt if not adjacent.
  std::optional<std::pair<unsigned, unsigned>> edge_exponents(std::size_t u, std::size_t v) const;

 private:
  std::shared_ptr<const Lattice> lattice_;
  std::uint64_t p_;
  GraphKind kind_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// All-pairs evaluation over the lattice.
CommGraph build_graph(std::shared_ptr<const Lattice> lattice, std::uint64_t p, GraphKind kind);

enum class ComponentClass { kSingleton, kComplete, kStar, kOther };

std::string class_name(ComponentClass c);

struct Classification {
  ComponentClass cls = ComponentClass::kOther;
  std::optional<std::size_t> center;  ///< star only
};

struct ComponentReport {
  std::vector<std::size_t> vertices;       ///< ascending lattice indices
  std::size_t diameter = 0;                ///< edges
  std::vector<std::size_t> eccentricities; ///< parallel to vertices
  std::size_t edge_count = 0;
  Classification classification;
};

struct GraphAnalysis {
  std::vector<ComponentReport> components;  ///< ordered by least vertex
  std::size_t connected_diameter = 0;

  /// Component holding lattice vertex v.
  const ComponentReport& component_of(std::size_t v) const;
};

/// Breadth-first distances from `source`; unreachable vertices are nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const CommGraph& g, std::size_t source);

GraphAnalysis components_and_diameters(const CommGraph& g);

/// singleton (one vertex); complete (>= 2 vertices, all pairs adjacent);
/// star (>= 3 vertices, one center adjacent to all others and no other
/// edges); otherwise other.
Classification classify_component(const CommGraph& g, std::span<const std::size_t> component);

/// Every shortest u -> v path, lexicographically ordered. Throws
/// NotConnected when u and v lie in different components.
std::vector<std::vector<std::size_t>> all_geodesics(const CommGraph& g, std::size_t u, std::size_t v);

/// Calls visit(path) for every simple u -> v path; stops early when visit
/// returns false. Returns the number of paths visited.
std::size_t for_each_simple_path(const CommGraph& g, std::size_t u, std::size_t v,
                                 const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace commgraph
