#include "commgraph/constructions.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/lattice.hpp"
#include "commgraph/subgroup.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace commgraph;
using testing::gen;
using testing::perm;

TEST_CASE("closure") {
  const auto g = testing::sym4();
  CHECK(subgroup_closure(g, {}).order() == 1);
  CHECK(gen(g, {"(1,2)"}).order() == 2);
  CHECK(gen(g, {"(1,2)", "(1,2,3)"}).order() == 6);
  CHECK(gen(g, {"(1,2)", "(1,2,3,4)"}).order() == 24);
  const auto s = gen(g, {"(1,2,3)", "(1,2)"});
  CHECK(subgroup_closure(g, s.witnesses()) == s);
  CHECK(std::is_sorted(s.witnesses().begin(), s.witnesses().end()));
}

TEST_CASE("checked constructor rejects non-subgroups") {
  const auto g = testing::sym4();
  Bitset bad(24);
  bad.set(0);
  bad.set(perm(*g, "(1,2,3)"));
  CHECK_THROWS_AS(SubgroupSet(g, bad, {perm(*g, "(1,2,3)")}), NotASubgroup);
  const auto c3 = gen(g, {"(1,2,3)"});
  CHECK_THROWS_AS(SubgroupSet(g, c3.members(), {}), NotASubgroup);
  CHECK_NOTHROW(SubgroupSet(g, c3.members(), {perm(*g, "(1,3,2)")}));
}

TEST_CASE("extend_closure agrees with closure") {
  const auto g = testing::sym4();
  const auto base = gen(g, {"(1,2)"});
  const ElementId extra[] = {perm(*g, "(3,4)")};
  CHECK(extend_closure(base, extra) == gen(g, {"(1,2)", "(3,4)"}));
}

TEST_CASE("intersection and index") {
  const auto g = testing::sym4();
  const auto a = gen(g, {"(1,2)"});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, gen(g, {"(3,4)"})).order() == 1);
  const auto c3 = gen(g, {"(1,2,3)"});
  CHECK(intersect(c3, testing::alt4(g)) == c3);
  CHECK(index_of(a, a) == 1);
  CHECK(index_of(SubgroupSet::whole(g), testing::alt4(g)) == 2);
  CHECK_THROWS_AS(index_of(a, c3), NotContained);
  const auto other = construct(GroupSpec::sym(4));
  CHECK_THROWS_AS(intersect(a, SubgroupSet::trivial(other)), ParentMismatch);
}

TEST_CASE("index in P(2,5)") {
  const auto g = construct(GroupSpec::p2q(5));
  const auto b = *g->find_label("(1,1,1)");
  const auto s = *g->find_label("(2,0,1)");
  const auto h = subgroup_closure(g, {b, s});
  CHECK(h.order() == 20);
  CHECK(index_of(SubgroupSet::whole(g), h) == 4);  // (q-1)^2 / |s|
}

TEST_CASE("product sets") {
  const auto g = testing::sym4();
  const auto v4 = testing::klein4(g);
  const auto a = gen(g, {"(1,2)"});
  const auto triv = SubgroupSet::trivial(g);
  CHECK(product_set(a, triv) == a);
  CHECK(product_set(triv, v4) == v4);
  const auto d8 = product_set(a, v4);
  CHECK(d8.order() == 8);
  CHECK(d8.contains(v4));
  CHECK_THROWS_AS(product_set(v4, a), NotNormal);
}

TEST_CASE("conjugation, normality, core") {
  const auto g = testing::sym4();
  const auto a = gen(g, {"(1,2)"});
  CHECK(conjugate_subgroup(a, 0) == a);
  CHECK(conjugate_subgroup(a, perm(*g, "(2,3)")) == gen(g, {"(1,3)"}));
  const auto v4 = testing::klein4(g);
  for (ElementId x = 0; x < g->order(); ++x) CHECK(conjugate_subgroup(v4, x) == v4);

  CHECK(is_normal(SubgroupSet::trivial(g)));
  CHECK(is_normal(testing::alt4(g)));
  CHECK_FALSE(is_normal(a));
  CHECK(is_normal(a, gen(g, {"(1,2)", "(3,4)"})));
  CHECK_THROWS_AS(is_normal(gen(g, {"(1,3)"}), gen(g, {"(1,2)", "(3,4)"})), NotContained);

  CHECK(normal_core(v4) == v4);
  CHECK(normal_core(a).order() == 1);
  const auto d8 = gen(g, {"(1,2)", "(3,4)", "(1,3)(2,4)"});
  REQUIRE(d8.order() == 8);
  CHECK(normal_core(d8) == v4);
}

TEST_CASE("derived series") {
  const auto s4 = testing::sym4();
  CHECK(derived_series(s4).orders() == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(derived_series(construct(GroupSpec::cyclic(6))).orders() == std::vector<std::size_t>{6, 1});
  CHECK(derived_series(construct(GroupSpec::p2q(5))).orders() == std::vector<std::size_t>{80, 5, 1});
  CHECK(commutator_subgroup(SubgroupSet::whole(s4)) == testing::alt4(s4));
  // Each term is normal in the whole group.
  for (const auto& t : derived_series(s4).terms) CHECK(is_normal(t));
  // A perfect group stops at the first repeated term.
  const auto a5 = construct(GroupSpec::sym(5));
  const auto series = derived_series(a5);
  CHECK(series.orders() == std::vector<std::size_t>{120, 60});
  CHECK_FALSE(series.reaches_trivial());
}

TEST_CASE("sylow subgroups") {
  const auto g = testing::sym4();
  const auto whole = SubgroupSet::whole(g);
  CHECK(sylow_subgroup(whole, 2).order() == 8);
  CHECK(sylow_subgroup(whole, 3).order() == 3);
  CHECK(sylow_subgroup(whole, 5).order() == 1);
  const auto v4 = sylow_subgroup(testing::alt4(g), 2);
  CHECK(v4 == testing::klein4(g));
  CHECK(is_normal(v4));

  for (const auto& spec : {GroupSpec::sym(4), GroupSpec::p2q(7), GroupSpec::dihedral(6), GroupSpec::cyclic(12)}) {
    const auto grp = construct(spec);
    for (std::uint64_t p : primes_up_to(grp->order())) {
      CHECK(sylow_subgroup(SubgroupSet::whole(grp), p).order() == p_part(grp->order(), p));
    }
  }
}

TEST_CASE("structure flags") {
  const auto c6 = structure_flags(construct(GroupSpec::cyclic(6)));
  CHECK(c6 == StructureFlags{true, true, true, true});
  const auto s4 = structure_flags(testing::sym4());
  CHECK(s4.is_solvable);
  CHECK_FALSE(s4.is_metabelian);
  CHECK_FALSE(s4.is_nilpotent);
  CHECK_FALSE(s4.is_abelian);
  const auto p25 = structure_flags(construct(GroupSpec::p2q(5)));
  CHECK(p25.is_metabelian);
  CHECK_FALSE(p25.is_nilpotent);
  const auto d8 = structure_flags(construct(GroupSpec::dihedral(4)));
  CHECK(d8.is_nilpotent);
  CHECK_FALSE(d8.is_abelian);
  CHECK_FALSE(structure_flags(construct(GroupSpec::sym(5))).is_solvable);
}

TEST_CASE("p-prime complements") {
  const auto c12 = construct(GroupSpec::cyclic(12));
  const auto whole = SubgroupSet::whole(c12);
  CHECK(p_prime_complement(whole, 2).order() == 3);
  CHECK(p_prime_complement(whole, 5) == whole);
  const auto c8 = construct(GroupSpec::cyclic(8));
  CHECK(p_prime_complement(SubgroupSet::whole(c8), 2).order() == 1);
  CHECK_THROWS_AS(p_prime_complement(SubgroupSet::whole(testing::sym4()), 2), NotNilpotent);

  // Nilpotent H is the product of its Sylow p and its p'-complement.
  const auto d8 = construct(GroupSpec::direct({GroupSpec::dihedral(4), GroupSpec::cyclic(3)}));
  const auto h = SubgroupSet::whole(d8);
  const auto comp = p_prime_complement(h, 2);
  const auto syl = sylow_subgroup(h, 2);
  CHECK(intersect(syl, comp).order() == 1);
  CHECK(product_set(syl, comp) == h);
}

TEST_CASE("properties over small lattices") {
  for (const auto& spec : {GroupSpec::sym(4), GroupSpec::dihedral(6), GroupSpec::p2q(3)}) {
    const auto g = construct(spec);
    const auto lattice = enumerate_subgroups(g);
    for (const auto& a : lattice.subgroups()) {
      CHECK(g->order() % a.order() == 0);
      for (const auto& b : lattice.subgroups()) {
        const std::size_t meet = a.members().count_and(b.members());
        // Commensurability index is symmetric and equals 1 iff A = B.
        CHECK(((a.order() / meet) * (b.order() / meet) == 1) == (a == b));
        if (is_normal(b)) {
          const auto ab = product_set(a, b);
          CHECK(ab.order() * meet == a.order() * b.order());
        }
        if (b.contains(a)) {
          const auto whole = SubgroupSet::whole(g);
          CHECK(index_of(whole, a) == index_of(whole, b) * index_of(b, a));
        }
      }
    }
  }
}

TEST_CASE("cyclic generators") {
  const auto g = testing::sym4();
  const auto gens = cyclic_generators(*g);
  // 1 trivial + 9 involutions + 4 of order 3 + 3 of order 4
  CHECK(gens.size() == 17);
  CHECK(gens.front() == 0);
}
