#include <numeric>

#include "commgraph/errors.hpp"
#include "commgraph/group.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace commgraph;

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  CHECK(primes_up_to(13) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
  CHECK(p_power_exponent(1, 3) == 0u);
  CHECK(p_power_exponent(8, 2) == 3u);
  CHECK_FALSE(p_power_exponent(12, 2).has_value());
  CHECK(p_part(24, 2) == 8);
  CHECK(p_part(24, 5) == 1);
}

TEST_CASE("permutation parsing and labels") {
  const auto p = parse_cycles("(1,2)(3,4)", 4);
  CHECK(p == Permutation{1, 0, 3, 2});
  CHECK(cycle_label(p) == "(1,2)(3,4)");
  CHECK(cycle_label(parse_cycles("(3,1,2)", 4)) == "(1,2,3)");
  CHECK(cycle_label(parse_cycles("()", 4)) == "()");
  CHECK_THROWS_AS(parse_cycles("(1,5)", 4), InvalidGenerator);
  CHECK_THROWS_AS(parse_cycles("(1,2", 4), InvalidGenerator);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 4), InvalidGenerator);
}

TEST_CASE("sym4 from permutations") {
  const auto g = group_from_permutations(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  REQUIRE(g->order() == 24);
  CHECK(g->label(0) == "()");
  CHECK_NOTHROW(g->check_invariants());
  std::uint64_t product = 1;
  for (const auto& [p, e] : g->order_factorization()) {
    for (unsigned k = 0; k < e; ++k) product *= p;
  }
  CHECK(product == 24);
  for (ElementId x = 0; x < g->order(); ++x) {
    CHECK(g->mul(x, g->inv(x)) == 0);
    CHECK(g->mul(0, x) == x);
    CHECK(g->mul(x, 0) == x);
  }
  // (xy)(i) = x(y(i)): (1,2)(2,3) = (1,2,3)
  CHECK(g->mul(testing::perm(*g, "(1,2)"), testing::perm(*g, "(2,3)")) == testing::perm(*g, "(1,2,3)"));
}

TEST_CASE("empty generator list gives the trivial group") {
  const auto g = group_from_permutations(3, {});
  CHECK(g->order() == 1);
}

TEST_CASE("order cap is enforced") {
  CHECK_THROWS_AS(group_from_permutations(5, {parse_cycles("(1,2)", 5), parse_cycles("(1,2,3,4,5)", 5)}, 100),
                  OrderCapExceeded);
}

TEST_CASE("upper triangular matrices over F_5") {
  const auto g = group_from_upper_triangular(5, {{1, 1, 1}, {2, 0, 1}, {1, 0, 2}});
  CHECK(g->order() == 80);
  const auto b = g->find_label("(1,1,1)");
  REQUIRE(b);
  CHECK(element_order(*g, *b) == 5);
  CHECK_THROWS_AS(group_from_upper_triangular(6, {{1, 1, 1}}), InvalidGenerator);
  CHECK_THROWS_AS(group_from_upper_triangular(5, {{0, 1, 1}}), InvalidGenerator);
}

TEST_CASE("element orders") {
  const auto g = testing::sym4();
  CHECK(element_order(*g, 0) == 1);
  CHECK(element_order(*g, testing::perm(*g, "(1,2,3,4)")) == 4);
  CHECK(element_order(*g, testing::perm(*g, "(1,2)(3,4)")) == 2);
  CHECK_THROWS_AS(element_order(*g, 24), InvalidElement);
}

TEST_CASE("group from an explicit table") {
  // Z/4 with identity at input id 2.
  std::vector<std::vector<std::uint32_t>> t(4, std::vector<std::uint32_t>(4));
  const std::uint32_t value_of[] = {1, 2, 0, 3};  // input id -> residue
  std::uint32_t id_of[4];
  for (std::uint32_t i = 0; i < 4; ++i) id_of[value_of[i]] = i;
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t j = 0; j < 4; ++j) t[i][j] = id_of[(value_of[i] + value_of[j]) % 4];
  }
  const auto g = group_from_table(t, {"a", "b", "e", "c"});
  CHECK(g->order() == 4);
  CHECK(g->label(0) == "e");
  CHECK(element_order(*g, *g->find_label("a")) == 4);
  CHECK(element_order(*g, *g->find_label("b")) == 2);

  auto broken = t;
  std::swap(broken[0][1], broken[0][3]);
  CHECK_THROWS_AS(group_from_table(broken), InvalidGenerator);
  CHECK_THROWS_AS(group_from_table({{0, 1}, {0, 1}}), InvalidGenerator);
}

TEST_CASE("non-associative table is rejected") {
  // A Latin square with identity 0 that is not associative (order-5 loop).
  const std::vector<std::vector<std::uint32_t>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(group_from_table(loop), InvalidGenerator);
}
