#include "commgraph/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "commgraph/errors.hpp"

namespace commgraph {

bool canonical_less(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return Bitset::bitstring_less(a.members(), b.members());
}

Lattice::Lattice(GroupPtr parent, std::vector<SubgroupSet> subgroups) : parent_(std::move(parent)) {
  std::sort(subgroups.begin(), subgroups.end(), canonical_less);
  subgroups_.reserve(subgroups.size());
  for (auto& s : subgroups) {
    if (s.parent() != parent_) throw ParentMismatch("lattice member from another group");
    if (!subgroups_.empty() && subgroups_.back().members() == s.members()) {
      throw InvalidSpec("lattice contains a duplicate subgroup");
    }
    subgroups_.push_back(from_subgroup_members(parent_, s.members()));
  }
  for (std::size_t i = 0; i < subgroups_.size(); ++i) by_order_[subgroups_[i].order()].push_back(i);
}

const std::vector<std::size_t>& Lattice::of_order(std::size_t order) const {
  static const std::vector<std::size_t> kNone;
  const auto it = by_order_.find(order);
  return it == by_order_.end() ? kNone : it->second;
}

std::size_t Lattice::index_of_members(const Bitset& members) const {
  const std::size_t order = members.count();
  for (std::size_t i : of_order(order)) {
    if (subgroups_[i].members() == members) return i;
  }
  throw NotFound("subgroup not present in lattice");
}

bool operator==(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].members() == b[i].members())) return false;
  }
  return true;
}

Lattice enumerate_subgroups(const GroupPtr& group, std::size_t lattice_cap) {
  const auto cyclic = cyclic_generators(*group);
  std::vector<SubgroupSet> found;
  std::unordered_set<Bitset, BitsetHash> seen;

  auto add = [&](SubgroupSet s) {
    if (!seen.insert(s.members()).second) return;
    if (found.size() >= lattice_cap) {
      throw LatticeCapExceeded("more than " + std::to_string(lattice_cap) + " subgroups");
    }
    found.push_back(std::move(s));
  };

  for (ElementId c : cyclic) add(subgroup_closure(group, {c}));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ElementId c : cyclic) {
      if (found[i].contains(c)) continue;
      const ElementId extra[] = {c};
      add(extend_closure(found[i], extra));
    }
  }
  return Lattice(group, std::move(found));
}

namespace {

// Deliberately separate from subgroup_closure: ordered-set based, restarts
// from the identity each time.
Bitset oracle_closure(const GroupTable& g, const std::vector<ElementId>& gens) {
  std::set<ElementId> elems{0};
  std::vector<ElementId> frontier{0};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId x : frontier) {
      for (ElementId s : gens) {
        const ElementId y = g.mul(x, s);
        if (elems.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  Bitset out(g.order());
  for (ElementId x : elems) out.set(x);
  return out;
}

}  // namespace

Lattice oracle_enumerate_subgroups(const GroupPtr& group, std::size_t max_gens) {
  if (group->order() > kOracleOrderLimit) {
    throw OracleScaleExceeded("oracle enumeration limited to order " + std::to_string(kOracleOrderLimit));
  }
  if (max_gens < 2) throw OracleScaleExceeded("oracle needs max_gens >= 2");
  const GroupTable& g = *group;

  // Level k holds the distinct closures of k-tuples, each with one witness
  // tuple; ⟨x1..xk⟩ = ⟨⟨x1..x(k-1)⟩, xk⟩.
  std::unordered_map<Bitset, std::vector<ElementId>, BitsetHash> all;
  std::vector<std::pair<Bitset, std::vector<ElementId>>> level;
  {
    Bitset trivial(g.order());
    trivial.set(0);
    all.emplace(trivial, std::vector<ElementId>{});
    level.emplace_back(trivial, std::vector<ElementId>{});
  }
  for (std::size_t k = 1; k <= max_gens && !level.empty(); ++k) {
    std::vector<std::pair<Bitset, std::vector<ElementId>>> next;
    for (const auto& [members, tuple] : level) {
      for (ElementId x = 0; x < g.order(); ++x) {
        std::vector<ElementId> t = tuple;
        t.push_back(x);
        Bitset closed = oracle_closure(g, t);
        if (all.emplace(closed, t).second) next.emplace_back(std::move(closed), std::move(t));
      }
    }
    level = std::move(next);
  }

  std::vector<SubgroupSet> subgroups;
  for (const auto& [members, tuple] : all) subgroups.emplace_back(group, members, tuple);
  return Lattice(group, std::move(subgroups));
}

std::size_t locate_subgroup(const Lattice& lattice, std::span<const ElementId> generators) {
  return lattice.index_of_members(subgroup_closure(lattice.parent(), generators).members());
}

std::size_t locate_subgroup(const Lattice& lattice, std::initializer_list<ElementId> generators) {
  return locate_subgroup(lattice, std::span<const ElementId>(generators.begin(), generators.size()));
}

}  // namespace commgraph
