#include "commgraph/graph.hpp"

#include <algorithm>
#include <deque>

#include "commgraph/errors.hpp"

namespace commgraph {

std::string kind_name(GraphKind kind) { return kind == GraphKind::kCommensurability ? "comm" : "cont"; }

GraphKind parse_kind(std::string_view text) {
  if (text == "comm" || text == "commensurability") return GraphKind::kCommensurability;
  if (text == "cont" || text == "containment") return GraphKind::kContainment;
  throw InvalidSpec("unknown graph kind '" + std::string(text) + "' (expected comm or cont)");
}

std::string class_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::kSingleton: return "singleton";
    case ComponentClass::kComplete: return "complete";
    case ComponentClass::kStar: return "star";
    case ComponentClass::kOther: return "other";
  }
  return "other";
}

namespace {

std::optional<std::pair<unsigned, unsigned>> exponents_from_orders(std::size_t oa, std::size_t ob, std::size_t meet,
                                                                   std::uint64_t p) {
  const auto a = p_power_exponent(oa / meet, p);
  if (!a) return std::nullopt;
  const auto b = p_power_exponent(ob / meet, p);
  if (!b) return std::nullopt;
  return std::pair{*a, *b};
}

}  // namespace

std::optional<std::pair<unsigned, unsigned>> commensurability_exponents(const SubgroupSet& a, const SubgroupSet& b,
                                                                        std::uint64_t p) {
  if (a.parent() != b.parent()) throw ParentMismatch("subgroups belong to different groups");
  return exponents_from_orders(a.order(), b.order(), a.members().count_and(b.members()), p);
}

CommGraph::CommGraph(std::shared_ptr<const Lattice> lattice, std::uint64_t p, GraphKind kind, std::vector<Edge> edges)
    : lattice_(std::move(lattice)), p_(p), kind_(kind), edges_(std::move(edges)), adjacency_(lattice_->size()) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::pair{x.i, x.j} < std::pair{y.i, y.j};
  });
  for (const auto& e : edges_) {
    if (e.i >= e.j || e.j >= adjacency_.size()) throw InvalidSpec("edge must satisfy i < j < vertex count");
    adjacency_[e.i].push_back(e.j);
    adjacency_[e.j].push_back(e.i);
  }
  for (auto& n : adjacency_) std::sort(n.begin(), n.end());
}

bool CommGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& n = adjacency_.at(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::optional<std::pair<unsigned, unsigned>> CommGraph::edge_exponents(std::size_t u, std::size_t v) const {
  const std::size_t i = std::min(u, v), j = std::max(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{i, j}, [](const Edge& e, const auto& key) {
    return std::pair{e.i, e.j} < key;
  });
  if (it == edges_.end() || it->i != i || it->j != j) return std::nullopt;
  return u <= v ? std::pair{it->a, it->b} : std::pair{it->b, it->a};
}

CommGraph build_graph(std::shared_ptr<const Lattice> lattice, std::uint64_t p, GraphKind kind) {
  if (!is_prime(p)) throw InvalidSpec(std::to_string(p) + " is not prime");
  const auto& subs = lattice->subgroups();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::size_t oi = subs[i].order();
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      const std::size_t oj = subs[j].order();
      const std::size_t meet = subs[i].members().count_and(subs[j].members());
      if (kind == GraphKind::kContainment && meet != oi && meet != oj) continue;
      const auto ex = exponents_from_orders(oi, oj, meet, p);
      if (!ex) continue;
      // Distinct subgroups always have a nontrivial index somewhere.
      edges.push_back({i, j, ex->first, ex->second});
    }
  }
  return CommGraph(std::move(lattice), p, kind, std::move(edges));
}

std::vector<std::optional<std::size_t>> bfs_distances(const CommGraph& g, std::size_t source) {
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Classification classify_component(const CommGraph& g, std::span<const std::size_t> component) {
  const std::size_t n = component.size();
  if (n == 1) return {ComponentClass::kSingleton, std::nullopt};
  std::size_t degree_sum = 0;
  std::optional<std::size_t> full;
  std::size_t full_count = 0;
  for (std::size_t v : component) {
    const std::size_t d = g.neighbors(v).size();
    degree_sum += d;
    if (d == n - 1) {
      ++full_count;
      if (!full) full = v;
    }
  }
  const std::size_t edges = degree_sum / 2;
  if (edges == n * (n - 1) / 2) return {ComponentClass::kComplete, std::nullopt};
  if (n >= 3 && edges == n - 1 && full_count == 1) return {ComponentClass::kStar, full};
  return {ComponentClass::kOther, std::nullopt};
}

GraphAnalysis components_and_diameters(const CommGraph& g) {
  GraphAnalysis out;
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ComponentReport rep;
    const auto dist = bfs_distances(g, s);
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v]) {
        rep.vertices.push_back(v);
        seen[v] = true;
      }
    }
    std::size_t degree_sum = 0;
    for (std::size_t v : rep.vertices) {
      const auto dv = bfs_distances(g, v);
      std::size_t ecc = 0;
      for (std::size_t w : rep.vertices) ecc = std::max(ecc, *dv[w]);
      rep.eccentricities.push_back(ecc);
      rep.diameter = std::max(rep.diameter, ecc);
      degree_sum += g.neighbors(v).size();
    }
    rep.edge_count = degree_sum / 2;
    rep.classification = classify_component(g, rep.vertices);
    out.connected_diameter = std::max(out.connected_diameter, rep.diameter);
    out.components.push_back(std::move(rep));
  }
  return out;
}

const ComponentReport& GraphAnalysis::component_of(std::size_t v) const {
  for (const auto& c : components) {
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), v)) return c;
  }
  throw NotFound("vertex " + std::to_string(v) + " not in any component");
}

std::vector<std::vector<std::size_t>> all_geodesics(const CommGraph& g, std::size_t u, std::size_t v) {
  const auto dist = bfs_distances(g, u);
  if (!dist.at(v)) throw NotConnected("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not connected");
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> rev{v};
  // Walk back from v through strictly decreasing distance layers.
  std::function<void(std::size_t)> back = [&](std::size_t x) {
    if (x == u) {
      paths.emplace_back(rev.rbegin(), rev.rend());
      return;
    }
    for (std::size_t w : g.neighbors(x)) {
      if (dist[w] && *dist[w] + 1 == *dist[x]) {
        rev.push_back(w);
        back(w);
        rev.pop_back();
      }
    }
  };
  back(v);
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::size_t for_each_simple_path(const CommGraph& g, std::size_t u, std::size_t v,
                                 const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<std::size_t> path{u};
  on_path.at(u) = true;
  std::size_t count = 0;
  bool stop = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t x) {
    if (x == v) {
      ++count;
      if (!visit(path)) stop = true;
      return;
    }
    for (std::size_t y : g.neighbors(x)) {
      if (stop) return;
      if (on_path[y]) continue;
      on_path[y] = true;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      on_path[y] = false;
    }
  };
  dfs(u);
  return count;
}

}  // namespace commgraph
