#include "altpow/cocycle.hpp"

#include <algorithm>
#include <numeric>

#include "altpow/error.hpp"

namespace altpow {

// ---------------------------------------------------------------------------
// Q/Z

QmodZ::QmodZ(std::int64_t num, std::int64_t den) {
  require(den != 0, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

QmodZ QmodZ::from_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  BigInt num = c.get_num() % c.get_den();
  require(c.get_den().fits_slong_p(), "denominator too large");
  return QmodZ(num.get_si(), c.get_den().get_si());
}

std::string QmodZ::to_string() const {
  if (den_ == 1) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QmodZ QmodZ::operator+(const QmodZ& o) const {
  const std::int64_t g = std::gcd(den_, o.den_);
  const __int128 den = static_cast<__int128>(den_ / g) * o.den_;
  require(den <= INT64_MAX, "Q/Z denominator overflow");
  const __int128 num = static_cast<__int128>(num_) * (o.den_ / g) + static_cast<__int128>(o.num_) * (den_ / g);
  return QmodZ(static_cast<std::int64_t>(num % den), static_cast<std::int64_t>(den));
}

QmodZ QmodZ::operator-() const { return QmodZ(-num_, den_); }

// ---------------------------------------------------------------------------
// Cochains

Cochain::Cochain(PermGroup group, int degree) : group_(std::move(group)), degree_(degree) {
  require(degree >= 0, "cochain degree must be nonnegative");
  long double tuples = 1;
  for (int i = 0; i < degree; ++i) tuples *= static_cast<long double>(group_.order());
  require(tuples < 9.0e18L, "cochain argument space too large");
}

std::uint64_t Cochain::key(const std::vector<std::size_t>& args) const {
  require(args.size() == static_cast<std::size_t>(degree_), "cochain called with wrong arity");
  std::uint64_t k = 0;
  for (auto a : args) {
    require(a < group_.order(), "cochain argument out of range");
    k = k * group_.order() + a;
  }
  return k;
}

QmodZ Cochain::value(const std::vector<std::size_t>& args) const {
  auto it = values_.find(key(args));
  return it == values_.end() ? QmodZ() : it->second;
}

QmodZ Cochain::value_of(const std::vector<Perm>& args) const {
  std::vector<std::size_t> idx;
  idx.reserve(args.size());
  for (const auto& g : args) idx.push_back(group_.index_of_member(g));
  return value(idx);
}

void Cochain::set(const std::vector<std::size_t>& args, const QmodZ& v) {
  const std::uint64_t k = key(args);
  if (v.is_zero()) {
    values_.erase(k);
    return;
  }
  // Index 0 is the identity.
  require(std::find(args.begin(), args.end(), std::size_t{0}) == args.end(),
          "cochain is not normalized: nonzero value at a tuple containing the identity");
  values_[k] = v;
}

std::vector<std::pair<std::vector<std::size_t>, QmodZ>> Cochain::entries() const {
  std::vector<std::pair<std::uint64_t, QmodZ>> sorted(values_.begin(), values_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::vector<std::size_t>, QmodZ>> out;
  for (const auto& [k, v] : sorted) {
    std::vector<std::size_t> args(static_cast<std::size_t>(degree_));
    std::uint64_t rest = k;
    for (std::size_t i = args.size(); i > 0; --i) {
      args[i - 1] = rest % group_.order();
      rest /= group_.order();
    }
    out.emplace_back(std::move(args), v);
  }
  return out;
}

Cochain Cochain::operator+(const Cochain& o) const {
  require(degree_ == o.degree_ && group_.same_elements(o.group_), "cochains live on different groups");
  Cochain out = *this;
  for (const auto& [k, v] : o.values_) {
    const QmodZ s = out.values_.count(k) ? out.values_[k] + v : v;
    if (s.is_zero()) {
      out.values_.erase(k);
    } else {
      out.values_[k] = s;
    }
  }
  return out;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& [k, v] : out.values_) v = -v;
  return out;
}

bool Cochain::operator==(const Cochain& o) const {
  return degree_ == o.degree_ && group_.same_elements(o.group_) && values_ == o.values_;
}

namespace {

void require_dense(const PermGroup& g, int degree) {
  long double tuples = 1;
  for (int i = 0; i < degree; ++i) tuples *= static_cast<long double>(g.order());
  if (tuples > static_cast<long double>(kMaxCochainTuples)) {
    fail(ErrorCode::OrderBoundExceeded,
         "cochain table over " + std::to_string(g.order()) + "^" + std::to_string(degree) +
             " tuples exceeds the dense limit");
  }
}

QmodZ coboundary_at(const Cochain& beta, const std::vector<std::size_t>& g) {
  const PermGroup& group = beta.group();
  const std::size_t n = g.size() - 1;  // degree of beta
  std::vector<std::size_t> args(n);
  QmodZ total;
  std::copy(g.begin() + 1, g.end(), args.begin());
  total += beta.value(args);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i - 1) {
        args[w++] = group.mul(g[j], g[j + 1]);
        ++j;
      } else {
        args[w++] = g[j];
      }
    }
    total = i % 2 == 1 ? total - beta.value(args) : total + beta.value(args);
  }
  std::copy(g.begin(), g.end() - 1, args.begin());
  total = (n + 1) % 2 == 1 ? total - beta.value(args) : total + beta.value(args);
  return total;
}

}  // namespace

Cochain coboundary(const Cochain& beta) {
  require_dense(beta.group(), beta.degree() + 1);
  Cochain out(beta.group(), beta.degree() + 1);
  out.for_each_tuple([&](const std::vector<std::size_t>& g) { out.set(g, coboundary_at(beta, g)); });
  return out;
}

bool is_cocycle(const Cochain& c) {
  require_dense(c.group(), c.degree() + 1);
  Cochain probe(c.group(), c.degree() + 1);
  bool ok = true;
  probe.for_each_tuple([&](const std::vector<std::size_t>& g) {
    if (ok && !coboundary_at(c, g).is_zero()) ok = false;
  });
  return ok;
}

Cochain transgress_step(const Cochain& c, const Perm& sigma) {
  require(c.degree() >= 1, "transgression needs a cochain of positive degree");
  const PermGroup& g = c.group();
  const std::size_t s = g.index_of_member(sigma);
  if (!is_cocycle(c)) fail(ErrorCode::NotCocycle, "transgression input is not a cocycle");
  const PermGroup cent = g.centralizer(sigma);
  const int n = c.degree() - 1;
  require_dense(cent, n);
  std::vector<std::size_t> to_ambient(cent.order());
  for (std::size_t i = 0; i < cent.order(); ++i) to_ambient[i] = g.index_of_member(cent.element(i));

  Cochain out(cent, n);
  std::vector<std::size_t> args(static_cast<std::size_t>(n) + 1);
  out.for_each_tuple([&](const std::vector<std::size_t>& h) {
    QmodZ total;
    for (std::size_t i = 0; i <= h.size(); ++i) {
      std::size_t w = 0;
      for (std::size_t j = 0; j < i; ++j) args[w++] = to_ambient[h[j]];
      args[w++] = s;
      for (std::size_t j = i; j < h.size(); ++j) args[w++] = to_ambient[h[j]];
      total = i % 2 == 0 ? total + c.value(args) : total - c.value(args);
    }
    out.set(h, total);
  });
  return out;
}

namespace {

void require_commuting(const std::vector<Perm>& tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (!tuple[i].commutes_with(tuple[j])) {
        fail(ErrorCode::NotCommuting, "tuple entries " + std::to_string(i) + " and " +
                                          std::to_string(j) + " do not commute");
      }
    }
  }
}

struct PointwiseTransgression {
  const Cochain& c;
  std::vector<std::size_t> sigma;

  // T_0 = c and T_j = tg_{sigma_j}(T_{j-1}); evaluates T_level(args).
  QmodZ eval(std::size_t level, const std::vector<std::size_t>& args) const {
    if (level == 0) return c.value(args);
    const std::size_t s = sigma[level - 1];
    QmodZ total;
    std::vector<std::size_t> inner(args.size() + 1);
    for (std::size_t i = 0; i <= args.size(); ++i) {
      std::copy(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i), inner.begin());
      inner[i] = s;
      std::copy(args.begin() + static_cast<std::ptrdiff_t>(i), args.end(), inner.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      const QmodZ v = eval(level - 1, inner);
      total = i % 2 == 0 ? total + v : total - v;
    }
    return total;
  }
};

}  // namespace

QmodZ iterated_transgression(const Cochain& c, const std::vector<Perm>& tuple) {
  if (tuple.size() != static_cast<std::size_t>(c.degree())) {
    fail(ErrorCode::ConstraintMismatch, "tuple length must equal the cocycle degree");
  }
  require_commuting(tuple);
  Cochain cur = c;
  for (const auto& sigma : tuple) cur = transgress_step(cur, sigma);
  return cur.value({});
}

QmodZ iterated_transgression_pointwise(const Cochain& c, const std::vector<Perm>& tuple) {
  if (tuple.size() != static_cast<std::size_t>(c.degree())) {
    fail(ErrorCode::ConstraintMismatch, "tuple length must equal the cocycle degree");
  }
  require_commuting(tuple);
  PointwiseTransgression pt{c, {}};
  for (const auto& s : tuple) pt.sigma.push_back(c.group().index_of_member(s));
  return pt.eval(tuple.size(), {});
}

// ---------------------------------------------------------------------------
// Built-in cocycles

Cochain carry_cocycle(std::size_t k, std::int64_t e) {
  require(k >= 1, "k must be positive");
  const PermGroup g = cyclic_group(k);
  // Exponent of each element with respect to the generator i -> i+1.
  std::vector<std::size_t> exponent(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) exponent[i] = g.element(i).images()[0];
  Cochain c(g, 2);
  c.for_each_tuple([&](const std::vector<std::size_t>& ab) {
    const std::size_t carry = (exponent[ab[0]] + exponent[ab[1]]) / k;
    c.set(ab, QmodZ(static_cast<std::int64_t>(carry) * e, static_cast<std::int64_t>(k)));
  });
  return c;
}

Cochain bilinear_cocycle(int p, const std::vector<std::vector<std::int64_t>>& form) {
  const int rank = static_cast<int>(form.size());
  for (const auto& row : form) require(static_cast<int>(row.size()) == rank, "form must be square");
  const PermGroup g = elementary_abelian_group(p, rank);
  auto coords = [&](std::size_t idx) {
    std::vector<std::int64_t> v;
    for (int i = 0; i < rank; ++i) {
      v.push_back(static_cast<std::int64_t>(g.element(idx).images()[static_cast<std::size_t>(i * p)]) - i * p);
    }
    return v;
  };
  Cochain c(g, 2);
  c.for_each_tuple([&](const std::vector<std::size_t>& ab) {
    const auto a = coords(ab[0]);
    const auto b = coords(ab[1]);
    std::int64_t s = 0;
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) s += a[static_cast<std::size_t>(i)] * form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
    }
    c.set(ab, QmodZ(s, p));
  });
  return c;
}

// ---------------------------------------------------------------------------
// JSON

Cochain cochain_from_json(const nlohmann::json& j, std::uint64_t order_bound) {
  require(j.is_object() && j.contains("group") && j.contains("degree"),
          "cocycle JSON needs \"group\" and \"degree\"");
  const PermGroup g = parse_group_spec(j.at("group").get<std::string>(), order_bound);
  int degree = 0;
  const auto& d = j.at("degree");
  if (d.is_string()) {
    degree = std::stoi(d.get<std::string>());
  } else {
    degree = d.get<int>();
  }
  Cochain c(g, degree);
  if (!j.contains("values")) return c;
  for (const auto& entry : j.at("values")) {
    std::vector<std::size_t> args;
    for (const auto& a : entry.at("args")) {
      const Perm x = parse_cycles(a.get<std::string>(), g.degree());
      const auto idx = g.index_of(x);
      require(idx.has_value(), "cocycle argument " + a.get<std::string>() + " is not in the group");
      args.push_back(*idx);
    }
    require(args.size() == static_cast<std::size_t>(degree), "cocycle entry has wrong arity");
    const auto& v = entry.at("value");
    const Rational r = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    c.set(args, QmodZ::from_rational(r));
  }
  return c;
}

nlohmann::json cochain_to_json(const Cochain& c) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [args, v] : c.entries()) {
    nlohmann::json a = nlohmann::json::array();
    for (auto i : args) a.push_back(c.group().element(i).to_cycle_string());
    values.push_back({{"args", a}, {"value", v.to_string()}});
  }
  return {{"group", c.group().canonical_spec()}, {"degree", std::to_string(c.degree())}, {"values", values}};
}

}  // namespace altpow
