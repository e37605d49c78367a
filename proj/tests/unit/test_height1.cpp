#include "doctest.h"

#include <cmath>
#include <complex>
#include <set>
#include <unordered_set>

#include "altpow/error.hpp"
#include "altpow/height1.hpp"

using namespace altpow;

namespace {

// Double cover of S_m inside the Pin group: the transposition (i i+1) lifts
// to the Clifford element (g_i - g_{i+1}) / sqrt 2.
using Cx = std::complex<double>;
using Mat = std::vector<Cx>;

struct Spin {
  std::size_t dim;
  std::vector<Mat> lifts;  // lifts[i] covers (i i+1)

  Mat mul(const Mat& a, const Mat& b) const {
    Mat c(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Cx x = a[i * dim + k];
        if (x == Cx(0)) continue;
        for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += x * b[k * dim + j];
      }
    }
    return c;
  }
  Mat identity() const {
    Mat id(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
    return id;
  }
};

Mat kron(const Mat& a, std::size_t na, const Mat& b, std::size_t nb) {
  Mat c(na * nb * na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c[(i * nb + k) * (na * nb) + j * nb + l] = a[i * na + j] * b[k * nb + l];
  return c;
}

Spin make_spin(int m) {
  const std::size_t k = static_cast<std::size_t>(std::max(1, m / 2));
  const Mat I{1, 0, 0, 1}, X{0, 1, 1, 0}, Y{0, Cx(0, -1), Cx(0, 1), 0}, Z{1, 0, 0, -1};
  auto tensor = [&](const std::vector<Mat>& factors) {
    Mat out{1};
    std::size_t n = 1;
    for (const auto& f : factors) {
      out = kron(out, n, f, 2);
      n *= 2;
    }
    return out;
  };
  std::vector<Mat> gammas;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Mat> fx(k, I), fy(k, I);
    for (std::size_t i = 0; i < j; ++i) fx[i] = fy[i] = Z;
    fx[j] = X;
    fy[j] = Y;
    gammas.push_back(tensor(fx));
    gammas.push_back(tensor(fy));
  }
  gammas.push_back(tensor(std::vector<Mat>(k, Z)));
  Spin s{std::size_t{1} << k, {}};
  for (int i = 0; i + 1 < m; ++i) {
    Mat t(s.dim * s.dim);
    for (std::size_t e = 0; e < t.size(); ++e) t[e] = (gammas[static_cast<std::size_t>(i)][e] - gammas[static_cast<std::size_t>(i) + 1][e]) / std::sqrt(2.0);
    s.lifts.push_back(t);
  }
  return s;
}

std::vector<long long> key(const Mat& a) {
  std::vector<long long> k;
  for (const auto& x : a) {
    k.push_back(std::llround(x.real() * 1e6));
    k.push_back(std::llround(x.imag() * 1e6));
  }
  return k;
}

// Whether sigma-bar and -sigma-bar are non-conjugate, for a permutation of
// the given cycle type.
bool splits_in_cover(const Spin& s, const CycleType& type) {
  Mat lift = s.identity();
  int start = 0;
  for (int len : type.parts()) {
    // (start ... start+len-1) is the product of adjacent transpositions.
    for (int i = start; i < start + len - 1; ++i) lift = s.mul(lift, s.lifts[static_cast<std::size_t>(i)]);
    start += len;
  }
  Mat neg = lift;
  for (auto& x : neg) x = -x;
  const auto target = key(neg);
  std::set<std::vector<long long>> seen{key(lift)};
  std::vector<Mat> frontier{lift};
  while (!frontier.empty()) {
    Mat x = frontier.back();
    frontier.pop_back();
    for (const auto& t : s.lifts) {
      Mat y = s.mul(s.mul(t, x), t);  // t is an involution
      auto k = key(y);
      if (k == target) return false;
      if (seen.insert(k).second) frontier.push_back(std::move(y));
    }
  }
  return true;
}

BigInt ipow(long d, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= d;
  return out;
}

}  // namespace

TEST_CASE("Schur splitting examples") {
  const auto a = schur_splits(CycleType({3, 1}));
  CHECK(a.in_O);
  CHECK(a.splits);
  const auto b = schur_splits(CycleType({4}));
  CHECK(b.in_D);
  CHECK(!b.in_O);
  CHECK(!schur_splits(CycleType({2, 2})).splits);
  for (int m = 1; m <= 14; ++m) {
    for (const auto& t : partitions(m)) {
      const auto s = schur_splits(t);
      CHECK(!(s.in_O && s.in_D));
      CHECK(s.splits == (s.in_O || s.in_D));
    }
  }
}

TEST_CASE("splitting criterion matches the explicit double cover (4 <= m <= 7)") {
  for (int m = 4; m <= 7; ++m) {
    const Spin s = make_spin(m);
    // The cover is nontrivial: lifts of disjoint transpositions anticommute.
    Mat c = s.mul(s.lifts[0], s.lifts[2]);
    c = s.mul(c, c);
    Mat minus = s.identity();
    for (auto& x : minus) x = -x;
    REQUIRE(key(c) == key(minus));
    for (const auto& t : partitions(m)) {
      CHECK_MESSAGE(schur_splits(t).splits == splits_in_cover(s, t), t.to_string());
    }
  }
}

TEST_CASE("O2 and D2") {
  const auto s4 = OD2_sets(4);
  CHECK(s4.O2 == std::vector<CycleType>{CycleType({1, 1, 1, 1})});
  CHECK(s4.D2 == std::vector<CycleType>{CycleType({4})});
  const auto s6 = OD2_sets(6);
  CHECK(s6.O2.size() == 1);
  CHECK(s6.D2.empty());
  for (int m = 1; m <= 64; ++m) {
    const auto s = OD2_sets(m);
    CHECK(s.D2.size() <= 1);
    CHECK(s.O2.size() == 1);
    CHECK(s.D2.size() == static_cast<std::size_t>(high_bit_count(m) % 2));
  }
}

TEST_CASE("height-1 alternating dimensions") {
  CHECK(alt_dim_h1(4, 2) == 18);
  for (long d = -4; d <= 5; ++d) {
    CHECK(alt_dim_h1(6, d) == (d >= 0 ? ipow(d, 6) : BigInt(ipow(d, 6) + ipow(-d, 6) - 1)));
  }
  CHECK(alt_dim_h1(4, -1) == 0);
  const std::vector<BigInt> expected{0, 2, 18, 84, 260, 630};
  for (long d = 0; d <= 5; ++d) {
    CHECK(alt_dim_h1(4, d) == expected[static_cast<std::size_t>(d)]);
    CHECK(alt_dim_h1(5, d) == ipow(d, 5) + ipow(d, 2));
  }
  CHECK_THROWS_AS(alt_dim_h1(3, 1), Error);
}

TEST_CASE("alt_dim_h1 is a nonnegative polynomial in d with value |O2 u D2| at 1") {
  for (int m = 4; m <= 24; ++m) {
    const auto s = OD2_sets(m);
    CHECK(alt_dim_h1(m, 1) == static_cast<long>(s.O2.size() + s.D2.size()));
    for (long d = 0; d <= 4; ++d) CHECK(alt_dim_h1(m, d) >= 0);
    // Coefficients: one monomial d^l per class.
    CHECK(alt_dim_h1(m, 0) == 0);
  }
}

TEST_CASE("closed forms") {
  for (long d = -4; d <= 4; ++d) {
    const BigInt five = d >= 0 ? BigInt(ipow(d, 5) + ipow(d, 2)) : BigInt(ipow(d, 5) + ipow(-d, 5) - 1 + ipow(d, 2) + ipow(-d, 2) - 1);
    CHECK(alt_dim_h1_closed(5, d, ParityConvention::Resolved) == five);
    if (d >= 0) CHECK(alt_dim_h1_closed(8, d, ParityConvention::Resolved) == ipow(d, 8) + d);
  }
  for (int m = 4; m <= 20; ++m) {
    CHECK(alt_dim_h1_closed(m, 0, ParityConvention::Resolved) == 0);
    CHECK(alt_dim_h1_closed(m, 0, ParityConvention::AsPrinted) == 0);
  }
  for (int m = 4; m <= 32; ++m) {
    for (long d = -4; d <= 4; ++d) CHECK(alt_dim_h1(m, d) == alt_dim_h1_closed(m, d, ParityConvention::Resolved));
  }
  // The printed branch misses the D2 class at m = 4.
  CHECK(alt_dim_h1_closed(4, 2, ParityConvention::AsPrinted) == 16);
  CHECK(alt_dim_h1_closed(4, 2, ParityConvention::AsPrinted) != alt_dim_h1(4, 2));
}

TEST_CASE("parity discrepancy report") {
  const auto report = parity_discrepancy_report(4, 32, 4);
  CHECK(report.resolved_matches_all);
  CHECK(!report.printed_matches_all);
  CHECK(report.rows.size() == 29 * 9);
  const auto j = to_json(report);
  CHECK(j.at("resolved_matches_enumeration") == true);
}

TEST_CASE("superdim2_alt") {
  for (long d = 0; d <= 5; ++d) CHECK(superdim2_alt(4, d) == ipow(d, 4) + ipow(d, 2) + d);
  for (int m = 1; m <= 20; ++m) {
    CHECK(superdim2_alt(m, 1) == static_cast<long>(O_set(m).size() + D_set(m).size()));
    CHECK(superdim2_alt(m, 0) == 0);
  }
}
