#include "commgraph/subgroup.hpp"

#include <algorithm>
#include <numeric>

#include "commgraph/errors.hpp"

namespace commgraph {

namespace {

void require_same_parent(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.parent() != b.parent()) throw ParentMismatch("subgroups belong to different groups");
}

std::vector<ElementId> sorted_unique(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Grows `members` (already closed, listed in `list`) to the closure under
// right multiplication by `gens`.
void grow(const GroupTable& g, Bitset& members, std::vector<ElementId>& list, std::span<const ElementId> gens,
          std::size_t from = 0) {
  for (std::size_t i = from; i < list.size(); ++i) {
    const auto r = g.row(list[i]);
    for (ElementId s : gens) {
      const ElementId y = r[s];
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  }
}

}  // namespace

SubgroupSet::SubgroupSet(Unchecked, GroupPtr parent, Bitset members, std::vector<ElementId> witnesses)
    : parent_(std::move(parent)), members_(std::move(members)), witnesses_(std::move(witnesses)) {
  order_ = members_.count();
}

SubgroupSet::SubgroupSet(GroupPtr parent, Bitset members, std::vector<ElementId> witnesses)
    : SubgroupSet(Unchecked{}, std::move(parent), std::move(members), std::move(witnesses)) {
  const GroupTable& g = *parent_;
  if (members_.size() != g.order()) throw NotASubgroup("membership vector has wrong width");
  for (ElementId w : witnesses_) {
    g.require_valid(w);
    if (!members_.test(w)) throw NotASubgroup("witness outside the member set");
  }
  Bitset generated(g.order());
  generated.set(0);
  std::vector<ElementId> list{0};
  grow(g, generated, list, witnesses_);
  if (!(generated == members_)) throw NotASubgroup("witnesses do not generate the member set");
  if (g.order() % order_ != 0) throw NotASubgroup("subgroup order does not divide group order");
}

SubgroupSet SubgroupSet::whole(GroupPtr parent) {
  Bitset all(parent->order());
  for (std::size_t i = 0; i < parent->order(); ++i) all.set(i);
  auto gens = sorted_unique(parent->generators());
  if (parent->order() > 1 && gens.empty()) gens = greedy_witnesses(*parent, all);
  return SubgroupSet(Unchecked{}, std::move(parent), std::move(all), std::move(gens));
}

SubgroupSet SubgroupSet::trivial(GroupPtr parent) {
  Bitset one(parent->order());
  one.set(0);
  return SubgroupSet(Unchecked{}, std::move(parent), std::move(one), {});
}

SubgroupSet subgroup_closure(const GroupPtr& group, std::span<const ElementId> seed) {
  for (ElementId s : seed) group->require_valid(s);
  auto witnesses = sorted_unique({seed.begin(), seed.end()});
  Bitset members(group->order());
  members.set(0);
  std::vector<ElementId> list{0};
  grow(*group, members, list, witnesses);
  return SubgroupSet(SubgroupSet::Unchecked{}, group, std::move(members), std::move(witnesses));
}

SubgroupSet subgroup_closure(const GroupPtr& group, std::initializer_list<ElementId> seed) {
  return subgroup_closure(group, std::span<const ElementId>(seed.begin(), seed.size()));
}

SubgroupSet extend_closure(const SubgroupSet& base, std::span<const ElementId> extra) {
  const GroupTable& g = base.group();
  std::vector<ElementId> gens = base.witnesses();
  for (ElementId e : extra) {
    g.require_valid(e);
    if (std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  Bitset members = base.members();
  std::vector<ElementId> list = members.to_vector();
  // Existing members are closed under the old generators; only products
  // with the new ones can leave the set at first.
  std::vector<ElementId> fresh(gens.begin() + static_cast<std::ptrdiff_t>(base.witnesses().size()), gens.end());
  const std::size_t old_size = list.size();
  for (std::size_t i = 0; i < old_size; ++i) {
    const auto r = g.row(list[i]);
    for (ElementId s : fresh) {
      const ElementId y = r[s];
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  }
  grow(g, members, list, gens, old_size);
  return SubgroupSet(SubgroupSet::Unchecked{}, base.parent(), std::move(members), std::move(gens));
}

std::vector<ElementId> greedy_witnesses(const GroupTable& group, const Bitset& members) {
  std::vector<ElementId> gens;
  Bitset have(group.order());
  have.set(0);
  std::vector<ElementId> list{0};
  members.for_each([&](std::size_t x) {
    if (have.test(x)) return;
    const auto e = static_cast<ElementId>(x);
    gens.push_back(e);
    // New closure: everything so far times the new generator, then regrow.
    const std::size_t old_size = list.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      const ElementId y = group.mul(list[i], e);
      if (!have.test(y)) {
        have.set(y);
        list.push_back(y);
      }
    }
    grow(group, have, list, gens, old_size);
  });
  return gens;
}

SubgroupSet from_subgroup_members(const GroupPtr& group, Bitset members) {
  auto witnesses = greedy_witnesses(*group, members);
  return SubgroupSet(SubgroupSet::Unchecked{}, group, std::move(members), std::move(witnesses));
}

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) {
  require_same_parent(a, b);
  return from_subgroup_members(a.parent(), a.members() & b.members());
}

std::size_t index_of(const SubgroupSet& big, const SubgroupSet& small) {
  require_same_parent(big, small);
  if (!big.contains(small)) throw NotContained("index_of: subgroup is not contained in the larger one");
  return big.order() / small.order();
}

SubgroupSet product_set(const SubgroupSet& a_set, const SubgroupSet& q_set) {
  require_same_parent(a_set, q_set);
  if (!is_normal(q_set)) throw NotNormal("product_set: right factor is not normal");
  const GroupTable& g = a_set.group();
  Bitset members(g.order());
  const auto qs = q_set.elements();
  a_set.members().for_each([&](std::size_t a) {
    const auto r = g.row(static_cast<ElementId>(a));
    for (ElementId q : qs) members.set(r[q]);
  });
  const std::size_t meet = a_set.members().count_and(q_set.members());
  if (members.count() * meet != a_set.order() * q_set.order()) {
    throw NotASubgroup("product_set: |AQ| != |A||Q|/|A∩Q|");
  }
  auto witnesses = a_set.witnesses();
  witnesses.insert(witnesses.end(), q_set.witnesses().begin(), q_set.witnesses().end());
  return SubgroupSet(SubgroupSet::Unchecked{}, a_set.parent(), std::move(members), sorted_unique(witnesses));
}

SubgroupSet conjugate_subgroup(const SubgroupSet& a_set, ElementId g) {
  const GroupTable& grp = a_set.group();
  grp.require_valid(g);
  const ElementId gi = grp.inv(g);
  Bitset members(grp.order());
  a_set.members().for_each([&](std::size_t a) { members.set(grp.mul(grp.mul(g, static_cast<ElementId>(a)), gi)); });
  std::vector<ElementId> witnesses;
  for (ElementId w : a_set.witnesses()) witnesses.push_back(grp.mul(grp.mul(g, w), gi));
  return SubgroupSet(SubgroupSet::Unchecked{}, a_set.parent(), std::move(members), sorted_unique(witnesses));
}

namespace {

bool normalized_by(const SubgroupSet& inner, ElementId g) {
  const GroupTable& grp = inner.group();
  const ElementId gi = grp.inv(g);
  for (ElementId w : inner.witnesses()) {
    if (!inner.contains(grp.mul(grp.mul(g, w), gi))) return false;
  }
  return true;
}

}  // namespace

bool is_normal(const SubgroupSet& inner, const SubgroupSet& outer) {
  require_same_parent(inner, outer);
  if (!outer.contains(inner)) throw NotContained("is_normal: subgroup is not contained in the larger one");
  for (ElementId g : outer.witnesses()) {
    if (!normalized_by(inner, g)) return false;
  }
  return true;
}

bool is_normal(const SubgroupSet& inner) {
  for (ElementId g : inner.group().generators()) {
    if (!normalized_by(inner, g)) return false;
  }
  return true;
}

SubgroupSet normal_core(const SubgroupSet& a_set) {
  const GroupTable& grp = a_set.group();
  Bitset core = a_set.members();
  const auto elems = a_set.elements();
  for (ElementId g = 1; g < grp.order(); ++g) {
    const ElementId gi = grp.inv(g);
    Bitset conj(grp.order());
    for (ElementId a : elems) conj.set(grp.mul(grp.mul(g, a), gi));
    core &= conj;
    if (core.count() == 1) break;
  }
  return from_subgroup_members(a_set.parent(), std::move(core));
}

SubgroupSet commutator_subgroup(const SubgroupSet& h) {
  const GroupTable& g = h.group();
  const auto elems = h.elements();
  Bitset comms(g.order());
  for (ElementId x : elems) {
    const ElementId xi = g.inv(x);
    for (ElementId y : elems) {
      comms.set(g.mul(g.mul(x, y), g.mul(xi, g.inv(y))));
    }
  }
  comms.reset(0);
  return from_subgroup_members(h.parent(), [&] {
    Bitset members(g.order());
    members.set(0);
    std::vector<ElementId> list{0};
    grow(g, members, list, comms.to_vector());
    return members;
  }());
}

std::vector<std::size_t> DerivedSeries::orders() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.order());
  return out;
}

DerivedSeries derived_series(const SubgroupSet& h) {
  DerivedSeries series;
  series.terms.push_back(h);
  while (true) {
    SubgroupSet next = commutator_subgroup(series.terms.back());
    if (next == series.terms.back()) break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

DerivedSeries derived_series(const GroupPtr& group) { return derived_series(SubgroupSet::whole(group)); }

SubgroupSet sylow_subgroup(const SubgroupSet& h, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidElement("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const GroupTable& g = h.group();
  const std::uint64_t target = p_part(h.order(), p);
  SubgroupSet current = SubgroupSet::trivial(h.parent());
  if (target == 1) return current;

  std::vector<ElementId> p_elements;
  h.members().for_each([&](std::size_t x) {
    const auto e = static_cast<ElementId>(x);
    if (x != 0 && p_power_exponent(element_order(g, e), p)) p_elements.push_back(e);
  });

  while (current.order() < target) {
    bool grew = false;
    for (ElementId x : p_elements) {
      if (current.contains(x) || !normalized_by(current, x)) continue;
      const ElementId extra[] = {x};
      current = extend_closure(current, extra);
      grew = true;
      break;
    }
    if (!grew) throw NotASubgroup("sylow ascent stalled; table is not a group");
  }
  return current;
}

bool is_abelian(const SubgroupSet& h) {
  const GroupTable& g = h.group();
  const auto& w = h.witnesses();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (g.mul(w[i], w[j]) != g.mul(w[j], w[i])) return false;
    }
  }
  return true;
}

bool is_nilpotent(const SubgroupSet& h) {
  for (const auto& [p, e] : factorize(h.order())) {
    if (!is_normal(sylow_subgroup(h, p), h)) return false;
  }
  return true;
}

bool is_p_group(const SubgroupSet& h, std::uint64_t p) { return p_power_exponent(h.order(), p).has_value(); }

StructureFlags structure_flags(const SubgroupSet& h) {
  StructureFlags flags;
  flags.is_abelian = is_abelian(h);
  flags.is_nilpotent = flags.is_abelian || is_nilpotent(h);
  const auto series = derived_series(h);
  flags.is_solvable = series.reaches_trivial();
  flags.is_metabelian = series.terms.size() > 2 ? series.terms[2].order() == 1 : series.reaches_trivial();
  return flags;
}

StructureFlags structure_flags(const GroupPtr& group) { return structure_flags(SubgroupSet::whole(group)); }

SubgroupSet p_prime_complement(const SubgroupSet& h, std::uint64_t p) {
  if (!is_nilpotent(h)) throw NotNilpotent("p_prime_complement: subgroup is not nilpotent");
  const GroupTable& g = h.group();
  Bitset members(g.order());
  h.members().for_each([&](std::size_t x) {
    if (element_order(g, static_cast<ElementId>(x)) % p != 0) members.set(x);
  });
  return from_subgroup_members(h.parent(), std::move(members));
}

std::vector<ElementId> cyclic_generators(const GroupTable& group) {
  std::vector<ElementId> out;
  std::vector<bool> covered(group.order(), false);
  for (ElementId x = 0; x < group.order(); ++x) {
    if (covered[x]) continue;
    out.push_back(x);
    std::vector<ElementId> powers{0};
    for (ElementId y = x; y != 0; y = group.mul(y, x)) powers.push_back(y);
    const std::size_t n = powers.size();
    for (std::size_t k = 1; k <= n; ++k) {
      if (std::gcd(k, n) == 1) covered[powers[k % n]] = true;
    }
    if (n == 1) covered[0] = true;
  }
  return out;
}

}  // namespace commgraph
