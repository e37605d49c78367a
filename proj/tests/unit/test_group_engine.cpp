#include "doctest.h"

#include <algorithm>
#include <set>

#include "altpow/error.hpp"
#include "altpow/group_engine.hpp"
#include "oracles.hpp"

using namespace altpow;

namespace {

std::multiset<std::uint64_t> centralizer_orders(const ConjugacyClasses& cc) {
  std::multiset<std::uint64_t> out;
  for (const auto& c : cc.classes) out.insert(c.centralizer_order);
  return out;
}

std::vector<PermGroup> small_groups() {
  return {trivial_group(3),       cyclic_group(4),         cyclic_group(6),
          symmetric_group(3),     symmetric_group(4),      symmetric_group(5),
          alternating_group(4),   alternating_group(5),    dihedral_group(4),
          dihedral_group(5),      dihedral_group(6),       cyclic_group(7),
          parse_group_spec("deg=4; (0 1)(2 3), (0 2)(1 3)"),
          parse_group_spec("deg=6; (0 1 2), (3 4 5), (0 3)(1 4)(2 5)")};
}

}  // namespace

TEST_CASE("closure") {
  const auto s3 = PermGroup::closure(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(s3.order() == 6);
  const auto klein = PermGroup::closure(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                            Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(klein.order() == 4);
  CHECK(PermGroup::closure(2, {}).order() == 1);
  CHECK(s3.element(0).is_identity());
  CHECK(std::is_sorted(s3.elements().begin(), s3.elements().end()));
}

TEST_CASE("closure respects the order bound") {
  std::vector<Perm> gens{Perm::from_cycles(9, {{0, 1}}), Perm::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})};
  try {
    PermGroup::closure(9, gens, 100000);
    FAIL("expected OrderBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderBoundExceeded);
  }
  CHECK(PermGroup::closure(9, gens, 400000).order() == 362880);
}

TEST_CASE("group specs") {
  CHECK(parse_group_spec("deg=4; (0 1 2 3), (0 1)").order() == 24);
  CHECK(parse_group_spec("deg=3").order() == 1);
  CHECK(parse_group_spec("deg=3; ()").order() == 1);
  CHECK(parse_group_spec("sym:4").order() == 24);
  CHECK(parse_group_spec("alt:4").order() == 12);
  CHECK(parse_group_spec("dih:4").order() == 8);
  CHECK(parse_group_spec("cyc:6").order() == 6);
  CHECK_THROWS_AS(parse_group_spec("deg=3; (0 3)"), Error);
  CHECK_THROWS_AS(parse_group_spec("(0 1)"), Error);
  CHECK_THROWS_AS(parse_group_spec("deg=3; (0 1"), Error);

  // Canonical specs depend only on the element set.
  const auto a = parse_group_spec("deg=4; (0 1 2 3), (0 1)");
  const auto b = parse_group_spec("deg=4; (1 2), (0 1), (2 3)");
  CHECK(a.canonical_spec() == b.canonical_spec());
  CHECK(parse_group_spec(a.canonical_spec()).same_elements(a));
}

TEST_CASE("conjugacy classes") {
  const auto s3 = conjugacy_classes(symmetric_group(3));
  CHECK(s3.classes.size() == 3);
  CHECK(centralizer_orders(s3) == std::multiset<std::uint64_t>{6, 2, 3});

  const auto triv = conjugacy_classes(trivial_group(2));
  REQUIRE(triv.classes.size() == 1);
  CHECK(triv.classes[0].centralizer_order == 1);

  const auto z4 = conjugacy_classes(cyclic_group(4));
  CHECK(z4.classes.size() == 4);
  for (const auto& c : z4.classes) CHECK(c.centralizer_order == 4);
}

TEST_CASE("class sizes and centralizers are consistent; L BG has mass 1") {
  for (const auto& g : small_groups()) {
    const auto cc = conjugacy_classes(g);
    std::uint64_t total = 0;
    Rational mass = 0;
    for (const auto& c : cc.classes) {
      total += c.size;
      CHECK(c.size * c.centralizer_order == g.order());
      CHECK(g.centralizer(g.element(c.representative)).order() == c.centralizer_order);
      mass += Rational(1, static_cast<unsigned long>(c.centralizer_order));
    }
    CHECK(total == g.order());
    CHECK(mass == 1);
  }
}

TEST_CASE("orbit counts") {
  CHECK(orbit_count({Perm::identity(5)}, 5) == 5);
  CHECK(orbit_count({Perm::from_cycles(4, {{0, 1, 2, 3}})}, 4) == 1);
  CHECK(orbit_count({Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})}, 4) == 1);
  CHECK(orbit_count({Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{2, 3}})}, 5) == 3);
}

TEST_CASE("commuting tuple classes: worked cases") {
  const auto s2 = commuting_tuple_classes(symmetric_group(2), 1, 2, {false, false});
  CHECK(s2.size() == 4);
  for (const auto& c : s2) CHECK(c.centralizer_order == 2);

  const auto s3 = commuting_tuple_classes(symmetric_group(3), 0, 2, {true});
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].representative[0].is_identity());
  CHECK(s3[1].representative[0].cycle_type() == CycleType({2, 1}));

  for (int t = 0; t <= 3; ++t) {
    const auto triv = commuting_tuple_classes(trivial_group(4), t, 3, std::vector<bool>(static_cast<std::size_t>(t) + 1, false));
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].orbit_count == 4);
  }
}

TEST_CASE("commuting tuples with t = 0 are the conjugacy classes") {
  for (const auto& g : small_groups()) {
    const auto cc = conjugacy_classes(g);
    const auto tuples = commuting_tuple_classes(g, 0, 2, {false});
    REQUIRE(tuples.size() == cc.classes.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      CHECK(tuples[i].representative[0] == g.element(cc.classes[i].representative));
      CHECK(tuples[i].centralizer_order == cc.classes[i].centralizer_order);
    }
  }
}

TEST_CASE("abelian groups have |G|^(t+1) commuting tuple classes") {
  for (const auto& g : {cyclic_group(4), cyclic_group(6), parse_group_spec("deg=4; (0 1)(2 3), (0 2)(1 3)")}) {
    REQUIRE(g.is_abelian());
    std::size_t expected = 1;
    for (int t = 0; t <= 2; ++t) {
      expected *= g.order();
      CHECK(commuting_tuple_classes(g, t, 2, std::vector<bool>(static_cast<std::size_t>(t) + 1, false)).size() == expected);
    }
  }
}

TEST_CASE("tuple classes agree with exhaustive enumeration for m <= 5, t <= 2") {
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto sym = symmetric_group(m);
    const auto perms = oracle::all_perms(m);
    for (int t = 0; t <= 2; ++t) {
      for (int p : {2, 3}) {
        for (unsigned mask = 0; mask < (1U << (t + 1)); ++mask) {
          if (m == 5 && t == 2 && mask != 0b110 && mask != 0) continue;
          std::vector<bool> flags;
          for (int i = 0; i <= t; ++i) flags.push_back(((mask >> i) & 1U) != 0);
          const auto fast = commuting_tuple_classes(sym, t, p, flags);
          const auto brute = oracle::brute_commuting_classes(perms, flags, p);
          REQUIRE(fast.size() == brute.size());
          for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].representative == brute[i].canonical);
            CHECK(fast[i].centralizer_order == brute[i].centralizer_order);
            CHECK(fast[i].orbit_count == brute[i].orbits);
          }
        }
      }
    }
  }
}

TEST_CASE("tuple enumeration does not depend on the thread count") {
  const auto sym = symmetric_group(5);
  const auto one = commuting_tuple_classes(sym, 2, 2, {false, true, true}, {kDefaultOrderBound, 1});
  const auto four = commuting_tuple_classes(sym, 2, 2, {false, true, true}, {kDefaultOrderBound, 4});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].representative == four[i].representative);
}

TEST_CASE("commuting tuple argument validation") {
  CHECK_THROWS_AS(commuting_tuple_classes(symmetric_group(3), 1, 2, {true}), Error);
  CHECK_THROWS_AS(commuting_tuple_classes(symmetric_group(3), 0, 4, {true}), Error);
}

TEST_CASE("Sylow subgroups") {
  const auto s3_2 = sylow_subgroups(symmetric_group(3), 2);
  CHECK(s3_2.size() == 3);
  for (const auto& p : s3_2) CHECK(p.order() == 2);
  const auto s3_3 = sylow_subgroups(symmetric_group(3), 3);
  REQUIRE(s3_3.size() == 1);
  CHECK(s3_3[0].order() == 3);
  const auto s4_2 = sylow_subgroups(symmetric_group(4), 2);
  CHECK(s4_2.size() == 3);
  for (const auto& p : s4_2) CHECK(p.order() == 8);
  const auto none = sylow_subgroups(cyclic_group(3), 2);
  REQUIRE(none.size() == 1);
  CHECK(none[0].order() == 1);
}

TEST_CASE("Sylow subgroups are conjugate, of full p-part, and number 1 mod p") {
  for (const auto& g : small_groups()) {
    for (int p : {2, 3, 5}) {
      const auto sylows = sylow_subgroups(g, p);
      std::uint64_t full = 1;
      for (unsigned i = 0; i < p_valuation(g.order(), static_cast<std::uint64_t>(p)); ++i) full *= static_cast<std::uint64_t>(p);
      CHECK(sylows.size() % static_cast<std::size_t>(p) == 1);
      for (const auto& s : sylows) {
        CHECK(s.order() == full);
        CHECK(s.is_subgroup_of(g));
        bool conjugate = false;
        for (const auto& x : g.elements()) {
          if (sylows.front().conjugated_by(x).same_elements(s)) {
            conjugate = true;
            break;
          }
        }
        CHECK(conjugate);
      }
    }
  }
}
