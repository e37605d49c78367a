#include "doctest.h"

#include "altpow/error.hpp"
#include "altpow/exact.hpp"

using namespace altpow;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  for (unsigned n = 1; n <= 40; ++n) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}

TEST_CASE("roots of unity collapse to rationals when they are real") {
  CHECK(CycValue::root_of_unity(1, 2) == CycValue(-1));
  CHECK(CycValue::root_of_unity(1, 2).conductor() == 1);
  CHECK(CycValue::root_of_unity(2, 4).is_rational());
  CHECK(CycValue::root_of_unity(3, 3) == CycValue(1));
  CHECK(CycValue::root_of_unity(-1, 2) == CycValue(-1));
  CHECK_FALSE(CycValue::root_of_unity(1, 4).is_rational());
}

TEST_CASE("cyclotomic arithmetic") {
  const auto z3 = CycValue::root_of_unity(1, 3);
  CHECK(z3 + z3 * z3 == CycValue(-1));
  CHECK(z3 * z3 * z3 == CycValue(1));
  const auto z6 = CycValue::root_of_unity(1, 6);
  CHECK(z6 * z6 == z3);
  CHECK(CycValue::root_of_unity(1, 4) * CycValue::root_of_unity(1, 4) == CycValue(-1));

  CycValue total;
  for (long k = 0; k < 12; ++k) total += CycValue::root_of_unity(k, 12);
  CHECK(total.is_zero());

  // Mixed conductors lift to the lcm.
  const auto mixed = CycValue::root_of_unity(1, 4) * z3;
  CHECK(mixed.conductor() == 12);
  CHECK(mixed == CycValue::root_of_unity(7, 12));

  const CycValue half(Rational(1, 2));
  CHECK((half + half).is_integer());
  CHECK_FALSE(half.is_integer());
  CHECK((half - half).is_zero());
}

TEST_CASE("integer helpers") {
  CHECK(binomial(BigInt(5), 2) == 10);
  CHECK(binomial(BigInt(-3), 2) == 6);
  CHECK(factorial(6) == 720);
  CHECK(is_p_power(1, 2));
  CHECK(is_p_power(8, 2));
  CHECK_FALSE(is_p_power(6, 2));
  CHECK(p_valuation(24, 2) == 3);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("x"), Error);
}
