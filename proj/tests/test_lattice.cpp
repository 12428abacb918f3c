#include <cmath>
#include <random>

#include "commgraph/constructions.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/lattice.hpp"
#include "commgraph/verify.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace commgraph;

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(enumerate_subgroups(construct(GroupSpec::cyclic(6))).size() == 4);
  CHECK(enumerate_subgroups(construct(GroupSpec::cyclic(1))).size() == 1);
  CHECK(enumerate_subgroups(testing::sym4()).size() == 30);
  CHECK(enumerate_subgroups(construct(GroupSpec::abelian({2, 2}))).size() == 5);
  CHECK(enumerate_subgroups(construct(GroupSpec::sym(3))).size() == 6);
  CHECK(enumerate_subgroups(construct(GroupSpec::dihedral(4))).size() == 10);
  CHECK(enumerate_subgroups(construct(GroupSpec::abelian({3, 3}))).size() == 6);
  CHECK(enumerate_subgroups(construct(GroupSpec::sym(5))).size() == 156);
}

TEST_CASE("lattice cap") {
  CHECK_THROWS_AS(enumerate_subgroups(testing::sym4(), 29), LatticeCapExceeded);
  CHECK_NOTHROW(enumerate_subgroups(testing::sym4(), 30));
}

TEST_CASE("canonical order and invariants") {
  const auto g = testing::sym4();
  const auto l = enumerate_subgroups(g);
  CHECK(l[l.trivial_index()].order() == 1);
  CHECK(l[l.whole_index()].order() == 24);
  for (std::size_t i = 1; i < l.size(); ++i) CHECK(canonical_less(l[i - 1], l[i]));
  CHECK(l.of_order(2).size() == 9);
  CHECK(l.of_order(8).size() == 3);
  CHECK(l.of_order(5).empty());
  for (const auto& s : l.subgroups()) CHECK(subgroup_closure(g, s.witnesses()) == s);

  // Closed under intersection.
  std::mt19937_64 rng(1);
  for (int k = 0; k < 300; ++k) {
    const auto& a = l[rng() % l.size()];
    const auto& b = l[rng() % l.size()];
    CHECK_NOTHROW(l.index_of_members(intersect(a, b).members()));
  }
  CHECK(enumerate_subgroups(g) == l);
}

TEST_CASE("oracle examples") {
  CHECK(oracle_enumerate_subgroups(construct(GroupSpec::cyclic(1)), 2).size() == 1);
  CHECK(oracle_enumerate_subgroups(construct(GroupSpec::sym(3)), 2).size() == 6);
  CHECK(oracle_enumerate_subgroups(construct(GroupSpec::cyclic(8)), 3).size() == 4);
  CHECK_THROWS_AS(oracle_enumerate_subgroups(construct(GroupSpec::p2q(7)), 3), OracleScaleExceeded);
  CHECK_THROWS_AS(oracle_enumerate_subgroups(construct(GroupSpec::sym(3)), 1), OracleScaleExceeded);
}

TEST_CASE("enumeration matches the oracle on every corpus group of order <= 100") {
  AnalysisCache cache;
  std::size_t compared = 0;
  for (const auto& entry : Corpus::standard().entries) {
    const auto& g = cache.group(entry.spec);
    if (g->order() > kOracleOrderLimit) continue;
    const auto fast = enumerate_subgroups(g);
    const auto oracle = oracle_enumerate_subgroups(g, std::max<std::size_t>(2, ceil_log2(g->order())));
    CAPTURE(entry.name);
    CHECK(fast == oracle);
    ++compared;
  }
  CHECK(compared == 25);
}

TEST_CASE("locate subgroups") {
  const auto g = testing::sym4();
  const auto l = enumerate_subgroups(g);
  CHECK(locate_subgroup(l, {}) == l.trivial_index());
  CHECK(l[locate_subgroup(l, {testing::perm(*g, "(1,2)")})].order() == 2);
  const auto d8 = locate_subgroup(
      l, {testing::perm(*g, "(1,2)"), testing::perm(*g, "(3,4)"), testing::perm(*g, "(1,3)(2,4)")});
  CHECK(l[d8].order() == 8);
}

TEST_CASE("P(2,q) subgroups contain the unipotent subgroup or have order prime to q") {
  for (std::uint64_t q : {3, 5, 7}) {
    const auto g = construct(GroupSpec::p2q(q));
    const auto l = enumerate_subgroups(g);
    const auto u = subgroup_closure(g, {*g->find_label("(1,1,1)")});
    for (const auto& s : l.subgroups()) CHECK((s.contains(u) || s.order() % q != 0));
  }
}

TEST_CASE("subgroup counts grow under a direct product") {
  for (const auto& spec : {GroupSpec::sym(3), GroupSpec::cyclic(4), GroupSpec::dihedral(5)}) {
    const auto base = enumerate_subgroups(construct(spec)).size();
    const auto prod = enumerate_subgroups(construct(GroupSpec::direct({spec, GroupSpec::cyclic(2)}))).size();
    CHECK(prod > base);
  }
}
