#pragma once

// Normalized Q/Z-valued cochains on permutation groups (trivial action),
// coboundaries and the alternating-sum transgression.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "altpow/exact.hpp"
#include "altpow/group_engine.hpp"
#include "json.hpp"

namespace altpow {

/// A fraction a/b reduced into [0, 1).
class QmodZ {
 public:
  QmodZ() = default;
  QmodZ(std::int64_t num, std::int64_t den);
  static QmodZ from_rational(const Rational& r);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  Rational to_rational() const { return Rational(num_, den_); }
  std::string to_string() const;

  QmodZ operator+(const QmodZ& o) const;
  QmodZ operator-() const;
  QmodZ operator-(const QmodZ& o) const { return *this + (-o); }
  QmodZ& operator+=(const QmodZ& o) { return *this = *this + o; }
  QmodZ& operator-=(const QmodZ& o) { return *this = *this - o; }
  friend bool operator==(const QmodZ&, const QmodZ&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Dense operations (coboundary, is_cocycle, transgression tables) refuse to
// touch more than this many argument tuples.
inline constexpr std::uint64_t kMaxCochainTuples = std::uint64_t{1} << 22;

/// A normalized n-cochain G^n -> Q/Z. Only nonzero values are stored;
/// arguments are element indices of the group.
class Cochain {
 public:
  Cochain() = default;
  Cochain(PermGroup group, int degree);

  const PermGroup& group() const { return group_; }
  int degree() const { return degree_; }

  QmodZ value(const std::vector<std::size_t>& args) const;
  QmodZ value_of(const std::vector<Perm>& args) const;
  // Throws InvalidArgument on a nonzero value at a tuple containing the identity.
  void set(const std::vector<std::size_t>& args, const QmodZ& v);
  std::size_t nonzero_count() const { return values_.size(); }
  // Nonzero values sorted by argument tuple.
  std::vector<std::pair<std::vector<std::size_t>, QmodZ>> entries() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-() const;
  bool operator==(const Cochain& o) const;

  // Invokes f(args) for every tuple in G^n.
  template <typename F>
  void for_each_tuple(F&& f) const;

 private:
  std::uint64_t key(const std::vector<std::size_t>& args) const;

  PermGroup group_;
  int degree_ = 0;
  std::unordered_map<std::uint64_t, QmodZ> values_;
};

Cochain coboundary(const Cochain& beta);
bool is_cocycle(const Cochain& c);

// tg_sigma(c)(g_1..g_n) = sum_{i=0..n} (-1)^i c(g_1..g_i, sigma, g_{i+1}..g_n)
// as a cochain on C_G(sigma). Throws NotCocycle unless c is a cocycle.
Cochain transgress_step(const Cochain& c, const Perm& sigma);

// Degree-0 value after transgressing at tuple[0], tuple[1], ... in turn.
// The table route materializes every intermediate cochain; the pointwise
// route expands the nested alternating sums (t! terms) without tables.
QmodZ iterated_transgression(const Cochain& c, const std::vector<Perm>& tuple);
QmodZ iterated_transgression_pointwise(const Cochain& c, const std::vector<Perm>& tuple);

// c(a, b) = floor((a + b) / k) * (e / k) on Z/k = <(0 1 .. k-1)>.
Cochain carry_cocycle(std::size_t k, std::int64_t e);
// c(a, b) = sum_ij a_i form[i][j] b_j / p on elementary_abelian_group(p, r).
Cochain bilinear_cocycle(int p, const std::vector<std::vector<std::int64_t>>& form);

// {"group": spec, "degree": n, "values": [{"args": ["(0 1)", ...], "value": "a/b"}]}
Cochain cochain_from_json(const nlohmann::json& j, std::uint64_t order_bound = kDefaultOrderBound);
nlohmann::json cochain_to_json(const Cochain& c);

template <typename F>
void Cochain::for_each_tuple(F&& f) const {
  const std::size_t n = group_.order();
  std::vector<std::size_t> args(static_cast<std::size_t>(degree_), 0);
  for (;;) {
    f(static_cast<const std::vector<std::size_t>&>(args));
    std::size_t i = args.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++args[i] < n) break;
      args[i] = 0;
    }
  }
}

}  // namespace altpow
