#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "commgraph/subgroup.hpp"

namespace commgraph {

inline constexpr std::size_t kDefaultLatticeCap = 100000;
inline constexpr std::size_t kOracleOrderLimit = 100;

/// Every subgroup of a group, in canonical order: by order, then by the
/// membership bit-string (b0 b1 b2 ..., '0' < '1'). Witnesses are the greedy
/// ascending-id generating lists, so they do not depend on how the lattice
/// was found.
class Lattice {
 public:
  Lattice(GroupPtr parent, std::vector<SubgroupSet> subgroups);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<SubgroupSet>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const SubgroupSet& operator[](std::size_t i) const { return subgroups_.at(i); }

  /// Lattice indices of all members of the given order, ascending.
  const std::vector<std::size_t>& of_order(std::size_t order) const;
  const std::map<std::size_t, std::vector<std::size_t>>& by_order() const noexcept { return by_order_; }

  /// Index of the member with exactly these elements; throws NotFound.
  std::size_t index_of_members(const Bitset& members) const;

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return subgroups_.size() - 1; }

  /// Same member sets in the same order.
  friend bool operator==(const Lattice& a, const Lattice& b);

 private:
  GroupPtr parent_;
  std::vector<SubgroupSet> subgroups_;
  std::map<std::size_t, std::vector<std::size_t>> by_order_;
};

/// All subgroups: cyclic seeds, then extend each known subgroup by each
/// cyclic generator outside it until no new subgroup appears.
/// Throws LatticeCapExceeded past `lattice_cap` subgroups.
Lattice enumerate_subgroups(const GroupPtr& group, std::size_t lattice_cap = kDefaultLatticeCap);

/// Independent oracle: closures of every generator tuple of size <= max_gens.
/// Only for |G| <= 100 (OracleScaleExceeded otherwise).
Lattice oracle_enumerate_subgroups(const GroupPtr& group, std::size_t max_gens);

/// Lattice index of ⟨generators⟩. NotFound only if the lattice is corrupt.
std::size_t locate_subgroup(const Lattice& lattice, std::span<const ElementId> generators);
std::size_t locate_subgroup(const Lattice& lattice, std::initializer_list<ElementId> generators);

/// Canonical ordering predicate used by Lattice.
bool canonical_less(const SubgroupSet& a, const SubgroupSet& b);

}  // namespace commgraph
