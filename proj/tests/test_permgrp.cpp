#include <doctest.h>

#include <numeric>
#include <random>

#include "m24/permgrp/permgrp.hpp"

using namespace m24;

namespace {

// Standard generators of the Mathieu group on 24 points (1-based cycles
// shifted to 0-based).
std::vector<Perm> mathieu_generators() {
  return {Perm::from_cycles(24, "(0 3)(1 6)(2 16)(4 12)(5 8)(7 14)(9 18)(10 17)(11 20)(13 15)(19 23)(21 22)"),
          Perm::from_cycles(24, "(0 3 5)(1 20 13)(2 8 14)(4 17 9)(12 16 15)(18 23 22)")};
}

const Integer kMathieuOrder(244823040);

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Perm random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(std::move(v));
}

Perm cycle24() {
  std::vector<int> v(24);
  for (int i = 0; i < 24; ++i) v[static_cast<std::size_t>(i)] = (i + 1) % 24;
  return Perm(v);
}

}  // namespace

TEST_CASE("perm basics and cycle notation") {
  const Perm a = Perm::from_cycles(5, "(0 1 2)(3 4)");
  CHECK(a.to_cycles() == "(0 1 2)(3 4)");
  CHECK(a.cycle_type() == std::vector<int>{3, 2});
  CHECK(a.order() == 6);
  CHECK_FALSE(a.is_even());
  CHECK((a * a.inverse()).is_identity());
  const Perm b = Perm::from_cycles(5, "(0 1)");
  // Left to right: first a then b, so 0 -> 1 -> 0.
  CHECK((a * b)(0) == 0);
  CHECK((b * a)(0) == 2);
  CHECK(Perm::identity(24).cycle_type() == std::vector<int>(24, 1));
  CHECK(Perm::from_cycles(3, "()").is_identity());
  CHECK(Perm::from_cycles(24, Perm::from_cycles(24, "(5 7 23)(1 2)").to_cycles()) ==
        Perm::from_cycles(24, "(1 2)(5 7 23)"));
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles(4, "(0 1)(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles(4, "(0 4)"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles(4, "(0 1"), std::invalid_argument);
  CHECK(power(a, 6).is_identity());
  CHECK(power(a, -1) == a.inverse());
}

TEST_CASE("group orders") {
  CHECK(group_order({Perm::from_cycles(3, "(0 1 2)"), Perm::from_cycles(3, "(0 1)")}) == 6);
  CHECK(group_order({cycle24()}) == 24);
  CHECK(group_order({Perm::identity(24)}) == 1);
  CHECK(group_order(mathieu_generators()) == kMathieuOrder);
  // A 3-cycle and a 23-cycle generate the alternating group.
  std::vector<int> v(24);
  for (int i = 0; i < 23; ++i) v[static_cast<std::size_t>(i)] = (i + 1) % 23;
  v[23] = 23;
  const Perm c23(v);
  CHECK(group_order({c23, Perm::from_cycles(24, "(0 1 23)")}) == factorial(24) / 2);
  CHECK(group_order({cycle24(), Perm::from_cycles(24, "(0 1)")}) == factorial(24));
}

TEST_CASE("k-transitivity") {
  CHECK(is_k_transitive({cycle24()}, 1));
  CHECK_FALSE(is_k_transitive({cycle24()}, 2));
  const auto m = mathieu_generators();
  for (int k = 1; k <= 5; ++k) CHECK(is_k_transitive(m, k));
  CHECK_THROWS_AS(is_k_transitive(m, 6), std::invalid_argument);
}

TEST_CASE("membership") {
  const BSGS G(mathieu_generators(), 3);
  for (const auto& s : G.strong_generators()) CHECK(G.contains(s));
  for (const auto& g : mathieu_generators()) CHECK(G.contains(g));
  CHECK(G.contains(mathieu_generators()[0] * mathieu_generators()[1].inverse()));
  CHECK_FALSE(G.contains(Perm::from_cycles(24, "(0 1)")));
  CHECK_FALSE(G.contains(cycle24()));  // no element of order 24
  std::size_t product = 1;
  for (auto len : G.orbit_lengths()) product *= len;
  CHECK(Integer(static_cast<unsigned long>(product)) == G.order());
}

TEST_CASE("property: cyclic group order equals element order") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Perm g = random_perm(rng, 24);
    REQUIRE(group_order({g}, static_cast<std::uint64_t>(i)) == g.order());
  }
}

TEST_CASE("property: seed independence and Lagrange") {
  const auto m = mathieu_generators();
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(group_order(m, seed) == kMathieuOrder);
  const BSGS G(m);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> len(1, 12);
  auto random_element = [&] {
    Perm p = Perm::identity(24);
    for (int k = len(rng); k > 0; --k) p = p * m[rng() % 2];
    return p;
  };
  for (int i = 0; i < 30; ++i) {
    const Perm x = random_element(), y = random_element();
    REQUIRE(G.contains(x));
    const Integer o = group_order({x, y}, static_cast<std::uint64_t>(i));
    REQUIRE(mpz_divisible_p(kMathieuOrder.get_mpz_t(), o.get_mpz_t()) != 0);
  }
  // Odd permutations are never in the group.
  for (int i = 0; i < 200; ++i) {
    Perm g = random_perm(rng, 24);
    if (g.is_even()) g = g * Perm::from_cycles(24, "(0 1)");
    REQUIRE_FALSE(G.contains(g));
  }
}
