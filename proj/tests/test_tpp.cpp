#include <doctest.h>

#include <set>

#include <random>

#include "gtmm/constructions.hpp"
#include "gtmm/tpp.hpp"
#include "support.hpp"

using namespace gtmm;
using gtmm::test::elems;

TEST_CASE("quotient sets") {
  const Group c5 = Group::cyclic(5);
  // A singleton only quotients to the identity.
  const auto single = quotient_set(c5, elems(c5, {3}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == c5.identity());

  // {g^1, g^2}: exponent differences {0, +-1} mod 5.
  const auto q = quotient_set(c5, elems(c5, {1, 2}));
  REQUIRE(q.size() == 3);
  CHECK(q[0].code == 0);
  CHECK(q[1].code == 1);
  CHECK(q[2].code == 4);

  CHECK_THROWS_AS((void)quotient_set(c5, std::vector<Elem>{}), DomainError);
}

TEST_CASE("quotient set of a punctured axis, against the brute force") {
  // First triple of the n = 4 axis family: S spans {1,2,3} on the first
  // coordinate of cyc(4)^3. The double loop is the oracle.
  const SimultaneousFamily fam = punctured_axis_family(4);
  const Group& g = fam.group();
  const auto& s = fam.triples()[0].s();
  std::set<std::uint64_t> oracle;
  for (const Elem& a : s) {
    for (const Elem& b : s) oracle.insert(g.mul(a, g.inv(b)).code);
  }
  const auto q = quotient_set(g, s);
  CHECK(q.size() == oracle.size());
  // Differences of {1,2,3} cover every residue mod 4 in one coordinate.
  CHECK(q.size() == 4);
  for (const Elem& e : q) CHECK(oracle.count(e.code) == 1);
}

TEST_CASE("right translation leaves quotient sets alone") {
  const Group g = Group::direct_power(Group::cyclic(3), 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> dist(0, g.order() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<std::uint64_t> codes;
    while (codes.size() < 3) codes.insert(dist(rng));
    std::vector<Elem> s;
    for (std::uint64_t c : codes) s.push_back(g.element(c));
    const Elem shift = g.element(dist(rng));
    std::vector<Elem> shifted;
    for (const Elem& e : s) shifted.push_back(g.mul(e, shift));
    CHECK(quotient_set(g, s) == quotient_set(g, shifted));
  }
}

TEST_CASE("triple validation") {
  const Group c4 = Group::cyclic(4);
  CHECK_THROWS_AS(SubsetTriple(c4, elems(c4, {1, 1}), elems(c4, {0}),
                               elems(c4, {0})),
                  DomainError);
  CHECK_THROWS_AS(
      SubsetTriple(c4, {}, elems(c4, {0}), elems(c4, {0})), DomainError);
  const Group other = Group::cyclic(4);
  CHECK_THROWS_AS(SubsetTriple(c4, elems(other, {1}), elems(c4, {0}),
                               elems(c4, {0})),
                  InstanceMismatchError);
}

TEST_CASE("naive check: identity triple and the full Cyc_2 triple") {
  const Group c2 = Group::cyclic(2);
  SubsetTriple ones(c2, elems(c2, {0}), elems(c2, {0}), elems(c2, {0}));
  CHECK(tpp_check_naive(ones));
  CHECK(tpp_check(ones));
  CHECK(ones.tpp_verified());

  // S = T = U = Cyc_2 fails: g*g = 1 with unequal pairs.
  SubsetTriple full(c2, elems(c2, {0, 1}), elems(c2, {0, 1}),
                    elems(c2, {0, 1}));
  const auto witness = find_tpp_violation_naive(full);
  REQUIRE(witness.has_value());
  CHECK(gtmm::test::tpp_witness_valid(c2, *witness));
  CHECK_FALSE(tpp_check(full));
  CHECK_FALSE(full.tpp_verified());

  const auto fast_witness = find_tpp_violation(full);
  REQUIRE(fast_witness.has_value());
  CHECK(gtmm::test::tpp_witness_valid(c2, *fast_witness));
}

TEST_CASE("axis triples satisfy the property, both checkers") {
  const SimultaneousFamily fam = punctured_axis_family(4);
  for (const SubsetTriple& t : fam.triples()) {
    CHECK(tpp_check_naive(t));
    CHECK_FALSE(find_tpp_violation(t).has_value());
  }
}

namespace {

std::vector<Elem> random_subset(const Group& g, std::size_t size,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, g.order() - 1);
  std::set<std::uint64_t> codes;
  while (codes.size() < size) codes.insert(dist(rng));
  std::vector<Elem> out;
  for (std::uint64_t c : codes) out.push_back(g.element(c));
  return out;
}

}  // namespace

TEST_CASE("oracle equivalence on random triples") {
  std::mt19937_64 rng(2024);
  const Group groups[] = {Group::cyclic(6), Group::cyclic(8),
                          Group::direct_power(Group::cyclic(3), 2),
                          Group::symmetric(3)};
  std::uniform_int_distribution<std::size_t> size_dist(1, 3);
  int positives = 0;
  for (const Group& g : groups) {
    for (int trial = 0; trial < 150; ++trial) {
      SubsetTriple t(g, random_subset(g, size_dist(rng), rng),
                     random_subset(g, size_dist(rng), rng),
                     random_subset(g, size_dist(rng), rng));
      const bool naive = !find_tpp_violation_naive(t).has_value();
      const bool fast = !find_tpp_violation(t).has_value();
      CHECK(naive == fast);
      if (naive) ++positives;
      if (const auto w = find_tpp_violation(t)) {
        CHECK(gtmm::test::tpp_witness_valid(g, *w));
      }
    }
  }
  CHECK(positives > 0);  // the sweep must exercise both outcomes
}

TEST_CASE("the property is invariant under cyclic rotation of (S,T,U)") {
  std::mt19937_64 rng(7);
  const Group g = Group::direct_power(Group::cyclic(4), 2);
  std::uniform_int_distribution<std::size_t> size_dist(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_subset(g, size_dist(rng), rng);
    const auto t = random_subset(g, size_dist(rng), rng);
    const auto u = random_subset(g, size_dist(rng), rng);
    SubsetTriple stu(g, s, t, u), tus(g, t, u, s), ust(g, u, s, t);
    const bool a = tpp_check(stu);
    CHECK(a == tpp_check(tus));
    CHECK(a == tpp_check(ust));
  }
}

TEST_CASE("the property is invariant under independent right translation") {
  std::mt19937_64 rng(8);
  const Group g = Group::direct_power(Group::cyclic(3), 2);
  std::uniform_int_distribution<std::uint64_t> dist(0, g.order() - 1);
  std::uniform_int_distribution<std::size_t> size_dist(1, 3);
  auto translate = [&g](const std::vector<Elem>& v, const Elem& x) {
    std::vector<Elem> out;
    for (const Elem& e : v) out.push_back(g.mul(e, x));
    return out;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_subset(g, size_dist(rng), rng);
    const auto t = random_subset(g, size_dist(rng), rng);
    const auto u = random_subset(g, size_dist(rng), rng);
    SubsetTriple plain(g, s, t, u);
    SubsetTriple moved(g, translate(s, g.element(dist(rng))),
                       translate(t, g.element(dist(rng))),
                       translate(u, g.element(dist(rng))));
    CHECK(tpp_check(plain) == tpp_check(moved));
  }
}

TEST_CASE("simultaneous check on singleton and axis families") {
  const Group c2 = Group::cyclic(2);
  SimultaneousFamily singleton(
      c2, {SubsetTriple(c2, elems(c2, {0}), elems(c2, {0}), elems(c2, {0}))});
  CHECK(stpp_check(singleton));
  CHECK(singleton.status() == FamilyStatus::stpp);

  for (std::uint64_t n = 3; n <= 6; ++n) {
    SimultaneousFamily fam = punctured_axis_family(n);
    CHECK(fam.status() == FamilyStatus::stpp);
    CHECK_FALSE(find_stpp_violation(fam).has_value());
    CHECK_FALSE(gtmm::test::stpp_violation_oracle(fam).has_value());
  }
}

TEST_CASE("a duplicated axis triple breaks the simultaneous property") {
  const SimultaneousFamily fam = punctured_axis_family(3);
  const SubsetTriple& t = fam.triples()[0];
  SimultaneousFamily dup(fam.group(), {t, t});
  const auto witness = find_stpp_violation(dup);
  REQUIRE(witness.has_value());
  CHECK(gtmm::test::stpp_witness_valid(dup, *witness));
  CHECK_FALSE(stpp_check(dup));
  // Cross terms i != j range over all of S1 S1^{-1}; the oracle agrees.
  const auto oracle = gtmm::test::stpp_violation_oracle(dup);
  REQUIRE(oracle.has_value());
  CHECK(gtmm::test::stpp_witness_valid(dup, *oracle));
}

TEST_CASE("a one-triple family reduces to the plain check") {
  std::mt19937_64 rng(9);
  const Group g = Group::direct_power(Group::cyclic(3), 2);
  std::uniform_int_distribution<std::size_t> size_dist(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    SubsetTriple t(g, random_subset(g, size_dist(rng), rng),
                   random_subset(g, size_dist(rng), rng),
                   random_subset(g, size_dist(rng), rng));
    SimultaneousFamily f(g, {t});
    CHECK(stpp_check(f) == tpp_check(t));
  }
}

TEST_CASE("the simultaneous property is closed under subfamilies") {
  SimultaneousFamily fam = punctured_axis_family(4);
  REQUIRE(fam.status() == FamilyStatus::stpp);
  for (const SubsetTriple& t : fam.triples()) {
    SimultaneousFamily sub(fam.group(), {t});
    CHECK(stpp_check(sub));
    CHECK(t.tpp_verified());  // diagonal case: each member has the property
  }
}

TEST_CASE("family construction demands one group instance") {
  const SimultaneousFamily a = punctured_axis_family(3);
  const SimultaneousFamily b = punctured_axis_family(3);  // fresh instance
  CHECK_THROWS_AS(
      SimultaneousFamily(a.group(), {a.triples()[0], b.triples()[0]}),
      InstanceMismatchError);
}

TEST_CASE("tpp_check_each stamps the weaker status") {
  SimultaneousFamily fam = punctured_axis_family(3);
  const SubsetTriple& t = fam.triples()[0];
  SimultaneousFamily dup(fam.group(), {t, t});
  CHECK(dup.status() == FamilyStatus::unchecked);
  CHECK(tpp_check_each(dup));  // members pass individually
  CHECK(dup.status() == FamilyStatus::tpp_each);
  CHECK_FALSE(stpp_check(dup));
  CHECK(dup.status() == FamilyStatus::tpp_each);  // not upgraded
}
