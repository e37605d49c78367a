#include "doctest.h"

#include "altpow/group_engine.hpp"
#include "altpow/perm_core.hpp"
#include "oracles.hpp"

using namespace altpow;

TEST_CASE("partitions") {
  const auto p0 = partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].parts().empty());

  const auto p3 = partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == CycleType({3}));
  CHECK(p3[1] == CycleType({2, 1}));
  CHECK(p3[2] == CycleType({1, 1, 1}));

  CHECK(partitions(6).size() == 11);
}

TEST_CASE("partition counts match the pentagonal recurrence up to 40") {
  const auto expected = oracle::partition_counts(40);
  for (int m = 0; m <= 40; ++m) {
    CHECK(BigInt(static_cast<unsigned long>(partitions(m).size())) == expected[static_cast<std::size_t>(m)]);
  }
}

TEST_CASE("partitions are distinct, valid and strictly decreasing") {
  for (int m = 1; m <= 12; ++m) {
    const auto ps = partitions(m);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK(ps[i].degree() == m);
      int weighted = 0;
      for (const auto& [k, n] : ps[i].multiplicities()) weighted += k * n;
      CHECK(weighted == m);
      if (i > 0) CHECK(ps[i - 1] > ps[i]);
    }
  }
}

TEST_CASE("num_cycles") {
  CHECK(num_cycles(CycleType({1, 1, 1, 1})) == 4);
  CHECK(num_cycles(CycleType({3, 1, 1})) == 3);
  CHECK(num_cycles(CycleType({4, 2})) == 2);
}

TEST_CASE("centralizer orders") {
  CHECK(centralizer_order(CycleType({2, 1})) == 2);
  CHECK(centralizer_order(CycleType({1, 1, 1})) == 6);
  CHECK(centralizer_order(CycleType({4, 2})) == 8);
  CHECK(centralizer_order(CycleType{}) == 1);
}

TEST_CASE("class equation holds for m <= 12") {
  for (int m = 0; m <= 12; ++m) {
    BigInt total = 0;
    const BigInt mfact = factorial(static_cast<unsigned>(m));
    for (const auto& type : partitions(m)) total += mfact / centralizer_order(type);
    CHECK(total == mfact);
  }
}

TEST_CASE("formula centralizers match brute force for m <= 8") {
  for (int m = 1; m <= 8; ++m) {
    const PermGroup sym = symmetric_group(static_cast<std::size_t>(m));
    for (const auto& type : partitions(m)) {
      std::vector<std::vector<int>> cycles;
      int next = 0;
      for (int len : type.parts()) {
        std::vector<int> cycle;
        for (int i = 0; i < len; ++i) cycle.push_back(next++);
        cycles.push_back(cycle);
      }
      const Perm rep = Perm::from_cycles(static_cast<std::size_t>(m), cycles);
      REQUIRE(rep.cycle_type() == type);
      CHECK(BigInt(static_cast<unsigned long>(sym.centralizer(rep).order())) == centralizer_order(type));
      if (m <= 6) {
        CHECK(BigInt(static_cast<unsigned long>(oracle::brute_centralizer_order(rep))) ==
              centralizer_order(type));
      }
    }
  }
}

TEST_CASE("p-power cycle types") {
  CHECK(is_p_power_type(CycleType({4, 2, 1, 1}), 2));
  CHECK_FALSE(is_p_power_type(CycleType({3, 1}), 2));
  CHECK(is_p_power_type(CycleType({9, 3, 1}), 3));
}

TEST_CASE("cycle types serialize as descending JSON arrays") {
  nlohmann::json j = CycleType({1, 3, 2});
  CHECK(j.dump() == "[3,2,1]");
  CHECK(j.get<CycleType>() == CycleType({2, 1, 3}));
}
