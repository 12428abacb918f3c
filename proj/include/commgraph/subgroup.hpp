#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "commgraph/bitset.hpp"
#include "commgraph/group.hpp"

namespace commgraph {

/// A subgroup of a GroupTable as a membership bit vector. Two SubgroupSets
/// are the same subgroup iff their member sets are equal; witnesses only
/// record a generating list.
class SubgroupSet {
 public:
  /// Validates that `members` is a subgroup (identity, closure, inverses)
  /// and that `witnesses` generate it. Throws NotASubgroup otherwise.
  SubgroupSet(GroupPtr parent, Bitset members, std::vector<ElementId> witnesses);

  /// The whole group, witnessed by the table's generators.
  static SubgroupSet whole(GroupPtr parent);
  static SubgroupSet trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const GroupTable& group() const noexcept { return *parent_; }
  const Bitset& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  const std::vector<ElementId>& witnesses() const noexcept { return witnesses_; }

  bool contains(ElementId x) const noexcept { return members_.test(x); }
  bool contains(const SubgroupSet& other) const noexcept { return other.members_.is_subset_of(members_); }
  std::vector<ElementId> elements() const { return members_.to_vector(); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) noexcept {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  struct Unchecked {};
  SubgroupSet(Unchecked, GroupPtr parent, Bitset members, std::vector<ElementId> witnesses);

  friend SubgroupSet subgroup_closure(const GroupPtr&, std::span<const ElementId>);
  friend SubgroupSet extend_closure(const SubgroupSet&, std::span<const ElementId>);
  friend SubgroupSet from_subgroup_members(const GroupPtr&, Bitset);
  friend SubgroupSet product_set(const SubgroupSet&, const SubgroupSet&);
  friend SubgroupSet conjugate_subgroup(const SubgroupSet&, ElementId);

  GroupPtr parent_;
  Bitset members_;
  std::size_t order_ = 0;
  std::vector<ElementId> witnesses_;
};

/// Smallest subgroup containing `seed`; witnesses are the seed, sorted and
/// deduplicated.
SubgroupSet subgroup_closure(const GroupPtr& group, std::span<const ElementId> seed);
SubgroupSet subgroup_closure(const GroupPtr& group, std::initializer_list<ElementId> seed);

/// Closure of base ∪ extra, reusing base's members as the starting set.
/// Witnesses are base's witnesses followed by the new extra elements.
SubgroupSet extend_closure(const SubgroupSet& base, std::span<const ElementId> extra);

/// Wraps a member set already known to be a subgroup (e.g. an intersection),
/// computing greedy witnesses: scan members by ascending id and keep each one
/// not yet generated.
SubgroupSet from_subgroup_members(const GroupPtr& group, Bitset members);

/// Greedy ascending-id generating list for a member set known to be closed.
std::vector<ElementId> greedy_witnesses(const GroupTable& group, const Bitset& members);

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b);

/// |big| / |small|. Throws NotContained unless small ⊆ big.
std::size_t index_of(const SubgroupSet& big, const SubgroupSet& small);

/// {a q : a ∈ a_set, q ∈ q_set}; q_set must be normal in the whole group.
SubgroupSet product_set(const SubgroupSet& a_set, const SubgroupSet& q_set);

/// {g a g^-1 : a ∈ a_set}.
SubgroupSet conjugate_subgroup(const SubgroupSet& a_set, ElementId g);

/// Whether `inner` is normal in `outer`; conjugation is tested against the
/// witnesses of `outer` only. Throws NotContained unless inner ⊆ outer.
bool is_normal(const SubgroupSet& inner, const SubgroupSet& outer);

/// Normal in the whole parent group.
bool is_normal(const SubgroupSet& inner);

/// Largest normal subgroup of the parent group contained in `a_set`.
SubgroupSet normal_core(const SubgroupSet& a_set);

/// Subgroup generated by all commutators x y x^-1 y^-1 with x, y ∈ h.
SubgroupSet commutator_subgroup(const SubgroupSet& h);

/// G = G_1 ⊵ G_2 ⊵ ... with G_{i+1} = [G_i, G_i], stopping at the first
/// repeated term (which is not duplicated).
struct DerivedSeries {
  std::vector<SubgroupSet> terms;

  std::vector<std::size_t> orders() const;
  bool reaches_trivial() const { return terms.back().order() == 1; }
};

DerivedSeries derived_series(const SubgroupSet& h);
DerivedSeries derived_series(const GroupPtr& group);

/// A Sylow p-subgroup of h, found by ascent: starting from the trivial
/// group, repeatedly adjoin the lowest-id p-element of h that normalizes the
/// current subgroup and lies outside it, until the p-part of |h| is reached.
SubgroupSet sylow_subgroup(const SubgroupSet& h, std::uint64_t p);

struct StructureFlags {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_metabelian = false;
  bool is_solvable = false;
  friend bool operator==(const StructureFlags&, const StructureFlags&) = default;
};

StructureFlags structure_flags(const SubgroupSet& h);
StructureFlags structure_flags(const GroupPtr& group);

bool is_abelian(const SubgroupSet& h);
/// Every Sylow subgroup normal in h.
bool is_nilpotent(const SubgroupSet& h);
bool is_p_group(const SubgroupSet& h, std::uint64_t p);

/// Elements of h of order coprime to p. Requires h nilpotent
/// (throws NotNilpotent); the result then is the normal p-complement.
SubgroupSet p_prime_complement(const SubgroupSet& h, std::uint64_t p);

/// All cyclic subgroups' canonical generators: the lowest id generating each
/// distinct ⟨x⟩, in ascending id order.
std::vector<ElementId> cyclic_generators(const GroupTable& group);

}  // namespace commgraph
