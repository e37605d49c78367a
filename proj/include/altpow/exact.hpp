#pragma once

// Exact scalars: big integers, rationals and elements of cyclotomic fields.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace altpow {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& value);
// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned n);
// Generalized binomial coefficient n choose k; n may be negative.
BigInt binomial(const BigInt& n, unsigned k);
BigInt power(const BigInt& base, unsigned exponent);
Rational power(const Rational& base, unsigned exponent);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime(long n);
// True iff n = p^e for some e >= 0 (so 1 qualifies).
bool is_p_power(std::uint64_t n, std::uint64_t p);
// Largest e with p^e | n.
unsigned p_valuation(std::uint64_t n, std::uint64_t p);
unsigned euler_phi(unsigned n);

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(unsigned n);

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) obtained by reduction modulo Phi_N.
///
/// Binary operations lift both operands to the lcm of their conductors.
/// Values whose non-constant coordinates vanish collapse to conductor 1, so a
/// rational result always reports conductor 1.
class CycValue {
 public:
  CycValue() : coeffs_{Rational(0)} {}
  CycValue(const Rational& value) : coeffs_{value} {}  // NOLINT
  CycValue(long value) : coeffs_{Rational(value)} {}   // NOLINT

  // zeta_den^num, i.e. exp(2 pi i num/den).
  static CycValue root_of_unity(long num, long den);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const;
  bool is_zero() const;
  // Throws unless is_rational().
  const Rational& rational_value() const;

  // The same value written in conductor m (conductor() must divide m).
  CycValue lifted(unsigned m) const;

  CycValue& operator+=(const CycValue& rhs);
  CycValue& operator-=(const CycValue& rhs);
  CycValue& operator*=(const CycValue& rhs);
  CycValue operator-() const;

  friend CycValue operator+(CycValue lhs, const CycValue& rhs) { return lhs += rhs; }
  friend CycValue operator-(CycValue lhs, const CycValue& rhs) { return lhs -= rhs; }
  friend CycValue operator*(CycValue lhs, const CycValue& rhs) { return lhs *= rhs; }
  friend bool operator==(const CycValue& lhs, const CycValue& rhs);

  // "a/b" for rationals, otherwise "[c0, c1, ...]@N".
  std::string to_string() const;

 private:
  CycValue(unsigned conductor, std::vector<Rational> coeffs);
  void normalize();

  unsigned conductor_ = 1;
  std::vector<Rational> coeffs_;
};

}  // namespace altpow
