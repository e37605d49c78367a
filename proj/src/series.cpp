#include "altpow/series.hpp"

#include "altpow/error.hpp"
#include "altpow/group_engine.hpp"

namespace altpow {

DimSeries identity_series(std::size_t length) {
  DimSeries s{std::vector<Rational>(length, Rational(0))};
  if (length > 0) s.coefficients[0] = 1;
  return s;
}

DimSeries series_product(const DimSeries& a, const DimSeries& b, bool alternate_signs) {
  require(a.size() == b.size(), "series must have equal truncation");
  DimSeries out{std::vector<Rational>(a.size(), Rational(0))};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      const Rational bj = (alternate_signs && j % 2 == 1) ? Rational(-b.coefficients[j]) : b.coefficients[j];
      out.coefficients[i + j] += a.coefficients[i] * bj;
    }
  }
  return out;
}

DimSeries series_inverse(const DimSeries& a) {
  if (a.size() == 0 || a.coefficients[0] != 1) fail(ErrorCode::NotUnit, "series inverse needs constant term 1");
  DimSeries out{std::vector<Rational>(a.size(), Rational(0))};
  out.coefficients[0] = 1;
  for (std::size_t m = 1; m < a.size(); ++m) {
    Rational s = 0;
    for (std::size_t k = 1; k <= m; ++k) s += a.coefficients[k] * out.coefficients[m - k];
    out.coefficients[m] = -s;
  }
  return out;
}

IdentityReport verify_identity(const DimSeries& sym, const DimSeries& alt) {
  IdentityReport r;
  r.sym = sym;
  r.alt = alt;
  r.product = series_product(sym, alt, true);
  const auto one = identity_series(sym.size());
  for (std::size_t m = 0; m < one.size(); ++m) {
    if (r.product.coefficients[m] != one.coefficients[m]) {
      r.first_failure = static_cast<int>(m);
      break;
    }
  }
  r.holds = !r.first_failure.has_value();
  return r;
}

IdentityReport verify_identity(const DimEvaluator& sym_eval, const DimEvaluator& alt_eval, int max_m, long d) {
  require(max_m >= 0, "max_m must be nonnegative");
  DimSeries sym, alt;
  for (int m = 0; m <= max_m; ++m) {
    sym.coefficients.push_back(sym_eval(m, d));
    alt.coefficients.push_back(alt_eval(m, d));
  }
  return verify_identity(sym, alt);
}

Rational superdim2_sym(int m, long d) {
  require(m >= 0, "m must be nonnegative");
  if (m == 0) return 1;
  Rational total = 0;
  const auto classes = commuting_tuple_classes(symmetric_group(static_cast<std::size_t>(m)), 1, 2, {false, false});
  for (const auto& c : classes) {
    total += power(Rational(d), static_cast<unsigned>(c.orbit_count)) / Rational(static_cast<unsigned long>(c.centralizer_order));
  }
  return total;
}

nlohmann::json to_json(const DimSeries& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : s.coefficients) j.push_back(to_string(c));
  return j;
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j{{"sym", to_json(r.sym)},
                   {"alt", to_json(r.alt)},
                   {"product", to_json(r.product)},
                   {"identity_holds", r.holds}};
  j["first_failure"] = r.first_failure ? nlohmann::json(std::to_string(*r.first_failure)) : nlohmann::json(nullptr);
  return j;
}

}  // namespace altpow
