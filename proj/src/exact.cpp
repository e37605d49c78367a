#include "altpow/exact.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "altpow/error.hpp"

namespace altpow {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::TooManySylows: return "TooManySylows";
    case ErrorCode::NotCocycle: return "NotCocycle";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotClassFunction: return "NotClassFunction";
    case ErrorCode::ConstraintMismatch: return "ConstraintMismatch";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& raw) {
  Rational value = raw;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    fail(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(const BigInt& n, unsigned k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational r(power(BigInt(base.get_num()), exponent),
             power(BigInt(base.get_den()), exponent));
  r.canonicalize();
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

unsigned p_valuation(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  // den is monic.
  const std::size_t dd = den.size() - 1;
  std::vector<long long> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long long c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

// Reduces a polynomial modulo the monic polynomial `mod`, in place.
void reduce_mod(std::vector<Rational>& poly, const std::vector<long long>& mod) {
  const std::size_t dm = mod.size() - 1;
  for (std::size_t i = poly.size(); i-- > dm;) {
    if (poly[i] == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j <= dm; ++j) poly[i - dm + j] -= c * static_cast<long>(mod[j]);
  }
  poly.resize(dm);
}

}  // namespace

namespace {

const std::vector<long long>& cyclotomic_locked(
    unsigned n, std::map<unsigned, std::vector<long long>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_divide_exact(poly, cyclotomic_locked(d, cache));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<long long>> cache;
  require(n >= 1, "cyclotomic polynomial index must be positive");
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_locked(n, cache);
}

CycValue::CycValue(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  normalize();
}

CycValue CycValue::root_of_unity(long num, long den) {
  require(den >= 1, "root of unity needs a positive denominator");
  const long g = std::gcd(std::abs(num), den);
  num /= g;
  den /= g;
  long e = num % den;
  if (e < 0) e += den;
  const auto n = static_cast<unsigned>(den);
  const auto& phi = cyclotomic_polynomial(n);
  std::vector<Rational> poly(std::max<std::size_t>(static_cast<std::size_t>(e) + 1, phi.size() - 1), 0);
  poly[static_cast<std::size_t>(e)] = 1;
  reduce_mod(poly, phi);
  return CycValue(n, std::move(poly));
}

void CycValue::normalize() {
  if (conductor_ == 1) {
    coeffs_.resize(1);
    return;
  }
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  coeffs_.resize(1);
  conductor_ = 1;
}

bool CycValue::is_integer() const {
  return conductor_ == 1 && coeffs_[0].get_den() == 1;
}

bool CycValue::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

const Rational& CycValue::rational_value() const {
  if (conductor_ != 1) fail(ErrorCode::Internal, "cyclotomic value is not rational");
  return coeffs_[0];
}

CycValue CycValue::lifted(unsigned m) const {
  require(m % conductor_ == 0, "lift target must be a multiple of the conductor");
  if (m == conductor_) return *this;
  const unsigned step = m / conductor_;
  std::vector<Rational> poly(static_cast<std::size_t>(step) * coeffs_.size() + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  const auto& phi = cyclotomic_polynomial(m);
  if (poly.size() < phi.size() - 1) poly.resize(phi.size() - 1, 0);
  reduce_mod(poly, phi);
  CycValue out;
  out.conductor_ = m;
  out.coeffs_ = std::move(poly);
  return out;  // deliberately not normalized: callers operate in conductor m
}

CycValue& CycValue::operator+=(const CycValue& rhs) {
  const unsigned m = std::lcm(conductor_, rhs.conductor_);
  CycValue a = lifted(m);
  const CycValue b = rhs.lifted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.normalize();
  return *this = std::move(a);
}

CycValue& CycValue::operator-=(const CycValue& rhs) { return *this += -rhs; }

CycValue& CycValue::operator*=(const CycValue& rhs) {
  const unsigned m = std::lcm(conductor_, rhs.conductor_);
  const CycValue a = lifted(m);
  const CycValue b = rhs.lifted(m);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  const auto& phi = cyclotomic_polynomial(m);
  if (prod.size() < phi.size() - 1) prod.resize(phi.size() - 1, 0);
  reduce_mod(prod, phi);
  *this = CycValue(m, std::move(prod));
  return *this;
}

CycValue CycValue::operator-() const {
  CycValue out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycValue& lhs, const CycValue& rhs) {
  const unsigned m = std::lcm(lhs.conductor_, rhs.conductor_);
  return lhs.lifted(m).coeffs_ == rhs.lifted(m).coeffs_;
}

std::string CycValue::to_string() const {
  if (conductor_ == 1) return altpow::to_string(coeffs_[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ", ";
    out += altpow::to_string(coeffs_[i]);
  }
  out += "]@" + std::to_string(conductor_);
  return out;
}

}  // namespace altpow
