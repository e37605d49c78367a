#pragma once

// Truncated power series of dimension sequences and the Sym/alt inversion
// identity (sum Sym_m t^m)(sum alt_m (-t)^m) = 1.

#include <functional>
#include <optional>
#include <vector>

#include "altpow/exact.hpp"
#include "json.hpp"

namespace altpow {

struct DimSeries {
  std::vector<Rational> coefficients;  // index m = 0..M
  std::size_t size() const { return coefficients.size(); }
  friend bool operator==(const DimSeries&, const DimSeries&) = default;
};

DimSeries identity_series(std::size_t length);

// Cauchy product; with alternate_signs the coefficient b_m becomes (-1)^m b_m.
DimSeries series_product(const DimSeries& a, const DimSeries& b, bool alternate_signs);
// Multiplicative inverse at the same truncation. Throws NotUnit unless a_0 = 1.
DimSeries series_inverse(const DimSeries& a);

using DimEvaluator = std::function<Rational(int m, long d)>;

struct IdentityReport {
  DimSeries sym;
  DimSeries alt;
  DimSeries product;
  bool holds = false;
  std::optional<int> first_failure;
};

IdentityReport verify_identity(const DimEvaluator& sym_eval, const DimEvaluator& alt_eval, int max_m, long d);
// The same check with explicit sequences.
IdentityReport verify_identity(const DimSeries& sym, const DimSeries& alt);

// Super dimension of Sym at height 2: sum over classes of commuting pairs in
// S_m of d^orbits / |C|.
Rational superdim2_sym(int m, long d);

nlohmann::json to_json(const DimSeries& s);
nlohmann::json to_json(const IdentityReport& r);

}  // namespace altpow
