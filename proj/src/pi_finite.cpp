#include "altpow/pi_finite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "altpow/error.hpp"
#include "altpow/parallel.hpp"
#include "altpow/perm_core.hpp"

namespace altpow {

// ---------------------------------------------------------------------------
// Smith normal form

SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a) require(row.size() == cols, "relation rows must have equal length");
  IntMatrix v(cols, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  // col_y -= q * col_x
  auto sub_col = [&](std::size_t y, std::size_t x, const BigInt& q) {
    for (auto& row : a) row[y] -= q * row[x];
    for (auto& row : v) row[y] -= q * row[x];
  };

  SmithForm out;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      std::swap(a[t], a[pi]);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        sub_col(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest; otherwise fold an offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
    }
    out.diagonal.push_back(a[t][t]);
  }
  out.column_transform = std::move(v);
  return out;
}

// ---------------------------------------------------------------------------
// Abelian groups

AbelianGroup::AbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    require(factors_[i] >= 2, "invariant factors must be at least 2");
    require(i == 0 || factors_[i] % factors_[i - 1] == 0,
            "invariant factors must form a divisibility chain");
  }
}

AbelianGroup::Presentation AbelianGroup::from_relations(std::size_t generators,
                                                        const IntMatrix& relations) {
  for (const auto& row : relations) require(row.size() == generators, "relation has wrong length");
  if (generators == 0) return {AbelianGroup(), {}};
  const SmithForm snf = smith_normal_form(relations);
  require(snf.diagonal.size() == generators &&
              std::none_of(snf.diagonal.begin(), snf.diagonal.end(),
                           [](const BigInt& d) { return d == 0; }),
          "presentation does not define a finite group");
  std::vector<std::int64_t> factors;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < generators; ++i) {
    if (snf.diagonal[i] != 1) {
      require(snf.diagonal[i].fits_slong_p(), "invariant factor too large");
      factors.push_back(snf.diagonal[i].get_si());
      kept.push_back(i);
    }
  }
  Presentation out{AbelianGroup(factors), {}};
  for (std::size_t g = 0; g < generators; ++g) {
    AbElement image;
    for (std::size_t c = 0; c < kept.size(); ++c) {
      BigInt r = snf.column_transform[g][kept[c]] % snf.diagonal[kept[c]];
      if (r < 0) r += snf.diagonal[kept[c]];
      image.coords.push_back(r.get_si());
    }
    out.generator_images.push_back(std::move(image));
  }
  return out;
}

std::uint64_t AbelianGroup::order() const {
  std::uint64_t n = 1;
  for (auto d : factors_) n *= static_cast<std::uint64_t>(d);
  return n;
}

AbElement AbelianGroup::zero() const { return {std::vector<std::int64_t>(factors_.size(), 0)}; }

AbElement AbelianGroup::reduce(AbElement a) const {
  require(a.coords.size() == factors_.size(), "element has wrong length");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    a.coords[i] %= factors_[i];
    if (a.coords[i] < 0) a.coords[i] += factors_[i];
  }
  return a;
}

AbElement AbelianGroup::add(const AbElement& a, const AbElement& b) const {
  AbElement out = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) out.coords[i] += b.coords[i];
  return reduce(std::move(out));
}

AbElement AbelianGroup::scale(const AbElement& a, std::int64_t k) const {
  AbElement out = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = static_cast<std::int64_t>((static_cast<__int128>(a.coords[i]) * k) % factors_[i]);
  }
  return reduce(std::move(out));
}

std::uint64_t AbelianGroup::element_order(const AbElement& a) const {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<std::uint64_t>(factors_[i]);
    order = lcm_u64(order, d / gcd_u64(d, static_cast<std::uint64_t>(a.coords[i])));
  }
  return order;
}

bool AbelianGroup::contains(const AbElement& a) const {
  if (a.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (a.coords[i] < 0 || a.coords[i] >= factors_[i]) return false;
  }
  return true;
}

std::vector<AbElement> AbelianGroup::elements() const {
  std::vector<AbElement> out;
  out.reserve(order());
  AbElement x = zero();
  for (;;) {
    out.push_back(x);
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++x.coords[i] < factors_[i]) break;
      x.coords[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "x";
    out += "Z/" + std::to_string(factors_[i]);
  }
  return out;
}

RootExtension root_extension(const AbelianGroup& a, const AbElement& x, std::int64_t k) {
  require(k >= 1, "root extension needs k >= 1");
  require(a.contains(x), "x is not an element of A");
  const std::size_t r = a.rank();
  // Generators e_1..e_r, y. Relations d_i e_i = 0 and k y - x = 0.
  IntMatrix rel(r + 1, std::vector<BigInt>(r + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    rel[i][i] = a.invariant_factors()[i];
    rel[r][i] = -x.coords[i];
  }
  rel[r][r] = k;
  auto pres = AbelianGroup::from_relations(r + 1, rel);
  RootExtension out;
  out.group = std::move(pres.group);
  out.root = pres.generator_images[r];
  pres.generator_images.pop_back();
  out.base_images = std::move(pres.generator_images);
  return out;
}

// ---------------------------------------------------------------------------
// Components

BigInt wreath_group_order(const std::vector<WreathFactor>& factors) {
  BigInt order = 1;
  for (const auto& f : factors) {
    order *= power(BigInt(static_cast<unsigned long>(f.base.order())), static_cast<unsigned>(f.mult)) *
             factorial(static_cast<unsigned>(f.mult));
  }
  return order;
}

Component make_component(std::vector<WreathFactor> factors, int sign, std::string provenance) {
  std::erase_if(factors, [](const WreathFactor& f) { return f.mult == 0; });
  Component c;
  c.factors = std::move(factors);
  c.sign = sign;
  c.orbit_degree = 0;
  for (const auto& f : c.factors) c.orbit_degree += f.mult;
  c.group_order = wreath_group_order(c.factors);
  c.provenance = std::move(provenance);
  return c;
}

PiFiniteType base_space(int m) {
  require(m >= 0, "m must be nonnegative");
  return {{make_component({{AbelianGroup(), m}}, 1, "S" + std::to_string(m))}};
}

PiFiniteType wreath_space(const AbelianGroup& a, int n) {
  require(n >= 0, "n must be nonnegative");
  return {{make_component({{a, n}}, 1, a.to_string() + "wrS" + std::to_string(n))}};
}

namespace {

std::string element_string(const AbElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x.coords[i]);
  }
  return out + ")";
}

// One way of choosing a loop in a single factor A wr S_n.
struct FactorLoop {
  std::string label;
  std::vector<WreathFactor> children;
};

void multisets(std::size_t size, std::size_t alphabet, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < alphabet; ++i) {
    cur.push_back(i);
    multisets(size, alphabet, i, cur, out);
    cur.pop_back();
  }
}

std::vector<FactorLoop> factor_loops(const WreathFactor& f, std::optional<int> p) {
  const auto elements = f.base.elements();
  std::vector<AbElement> allowed;
  for (const auto& x : elements) {
    if (!p || is_p_power(f.base.element_order(x), static_cast<std::uint64_t>(*p))) allowed.push_back(x);
  }
  std::map<std::pair<std::int64_t, std::size_t>, AbelianGroup> roots;
  auto root = [&](std::int64_t k, std::size_t xi) -> const AbelianGroup& {
    auto it = roots.find({k, xi});
    if (it == roots.end()) it = roots.emplace(std::make_pair(k, xi), root_extension(f.base, allowed[xi], k).group).first;
    return it->second;
  };

  std::vector<FactorLoop> out;
  for (const auto& tau : partitions(f.mult)) {
    if (p && !is_p_power_type(tau, *p)) continue;
    // Per cycle length, every multiset of cycle products.
    std::vector<std::pair<int, std::vector<std::vector<std::size_t>>>> per_length;
    for (const auto& [k, count] : tau.multiplicities()) {
      std::vector<std::vector<std::size_t>> choices;
      std::vector<std::size_t> cur;
      multisets(static_cast<std::size_t>(count), allowed.size(), 0, cur, choices);
      per_length.emplace_back(k, std::move(choices));
    }
    std::vector<std::size_t> pick(per_length.size(), 0);
    for (;;) {
      FactorLoop loop;
      loop.label = tau.to_string();
      for (std::size_t l = 0; l < per_length.size(); ++l) {
        const int k = per_length[l].first;
        const auto& chosen = per_length[l].second[pick[l]];
        loop.label += " " + std::to_string(k) + ":";
        for (std::size_t i = 0; i < chosen.size();) {
          std::size_t j = i;
          while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
          loop.label += element_string(allowed[chosen[i]]);
          if (j - i > 1) loop.label += "^" + std::to_string(j - i);
          loop.children.push_back({root(k, chosen[i]), static_cast<int>(j - i)});
          i = j;
        }
      }
      out.push_back(std::move(loop));
      std::size_t l = 0;
      while (l < pick.size() && ++pick[l] == per_length[l].second.size()) pick[l++] = 0;
      if (l == pick.size()) break;
    }
  }
  return out;
}

std::vector<Component> component_loops(const Component& c, std::optional<int> p) {
  std::vector<std::vector<FactorLoop>> per_factor;
  for (const auto& f : c.factors) per_factor.push_back(factor_loops(f, p));
  std::vector<Component> out;
  std::vector<std::size_t> pick(per_factor.size(), 0);
  for (const auto& choices : per_factor) {
    if (choices.empty()) return out;
  }
  for (;;) {
    std::vector<WreathFactor> children;
    std::string label = c.provenance + " / L";
    if (p) label += std::to_string(*p);
    for (std::size_t j = 0; j < per_factor.size(); ++j) {
      const auto& loop = per_factor[j][pick[j]];
      label += " {" + loop.label + "}";
      children.insert(children.end(), loop.children.begin(), loop.children.end());
    }
    out.push_back(make_component(std::move(children), c.sign, std::move(label)));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == per_factor[j].size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return out;
}

}  // namespace

PiFiniteType free_loops(const PiFiniteType& x, std::optional<int> p, unsigned threads) {
  if (p) require(is_prime(*p), "p must be prime");
  std::vector<std::vector<Component>> parts(x.components.size());
  parallel_for(x.components.size(), threads,
               [&](std::size_t i) { parts[i] = component_loops(x.components[i], p); });
  PiFiniteType out;
  for (auto& part : parts) {
    for (auto& c : part) out.components.push_back(std::move(c));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const Component& a, const Component& b) { return a.provenance < b.provenance; });
  return out;
}

PiFiniteType loop_tower(int m, int p, int t, unsigned threads) {
  require(t >= 0, "t must be nonnegative");
  require(is_prime(p), "p must be prime");
  PiFiniteType x = free_loops(base_space(m), std::nullopt, threads);
  for (int i = 0; i < t; ++i) x = free_loops(x, p, threads);
  return x;
}

CycValue groupoid_cardinality(const PiFiniteType& x,
                              const std::function<CycValue(const Component&)>& weight) {
  CycValue total;
  for (const auto& c : x.components) {
    total += weight(c) * CycValue(Rational(c.sign, 1) / Rational(c.group_order));
  }
  return total;
}

void to_json(nlohmann::json& j, const AbelianGroup& a) {
  j = nlohmann::json::array();
  for (auto d : a.invariant_factors()) j.push_back(std::to_string(d));
}

void to_json(nlohmann::json& j, const Component& c) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : c.factors) {
    factors.push_back({{"invariant_factors", f.base}, {"mult", std::to_string(f.mult)}});
  }
  j = {{"factors", factors},
       {"sign", std::to_string(c.sign)},
       {"orbit_degree", std::to_string(c.orbit_degree)},
       {"group_order", to_string(c.group_order)},
       {"provenance", c.provenance}};
}

void to_json(nlohmann::json& j, const PiFiniteType& x) {
  j = nlohmann::json::array();
  for (const auto& c : x.components) j.push_back(c);
}

}  // namespace altpow
