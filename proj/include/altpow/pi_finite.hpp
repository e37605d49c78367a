#pragma once

// Formal pi-finite 1-types built from wreath products of abelian groups, and
// their free and p-typical loop spaces.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "altpow/exact.hpp"
#include "json.hpp"

namespace altpow {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
  // Diagonal of D = U R V, nonnegative, with diagonal[i] | diagonal[i+1]
  // among the nonzero entries.
  std::vector<BigInt> diagonal;
  // The column transform V (cols x cols, unimodular).
  IntMatrix column_transform;
};

SmithForm smith_normal_form(IntMatrix relations);

struct AbElement {
  std::vector<std::int64_t> coords;
  friend bool operator==(const AbElement&, const AbElement&) = default;
  friend auto operator<=>(const AbElement&, const AbElement&) = default;
};

/// A finite abelian group in invariant-factor form Z/d_1 x ... x Z/d_r with
/// d_1 | d_2 | ... | d_r and every d_i >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::int64_t> invariant_factors);

  // The quotient Z^n / (row span of relations), together with the image of
  // each standard generator e_i.
  struct Presentation;
  static Presentation from_relations(std::size_t generators, const IntMatrix& relations);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t order() const;

  AbElement zero() const;
  AbElement add(const AbElement& a, const AbElement& b) const;
  AbElement scale(const AbElement& a, std::int64_t k) const;
  AbElement reduce(AbElement a) const;
  std::uint64_t element_order(const AbElement& a) const;
  bool contains(const AbElement& a) const;
  // All elements in lexicographic order of coordinates.
  std::vector<AbElement> elements() const;

  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  friend auto operator<=>(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::int64_t> factors_;
};

struct AbelianGroup::Presentation {
  AbelianGroup group;
  std::vector<AbElement> generator_images;
};

struct RootExtension {
  AbelianGroup group;
  // The adjoined root y with k*y equal to the image of x.
  AbElement root;
  // Images of the generators of the original group; the inclusion A -> A<k;x>.
  std::vector<AbElement> base_images;
};

// (A + Z) / <(x, -k)>: the abelian group obtained by adjoining a k-th root of x.
RootExtension root_extension(const AbelianGroup& a, const AbElement& x, std::int64_t k);

struct WreathFactor {
  AbelianGroup base;
  int mult = 0;
  friend bool operator==(const WreathFactor&, const WreathFactor&) = default;
};

/// One connected component, B of prod_j (A_j wr S_{n_j}).
struct Component {
  std::vector<WreathFactor> factors;
  int sign = 1;
  int orbit_degree = 0;
  BigInt group_order = 1;
  std::string provenance;
};

struct PiFiniteType {
  std::vector<Component> components;
};

BigInt wreath_group_order(const std::vector<WreathFactor>& factors);
Component make_component(std::vector<WreathFactor> factors, int sign, std::string provenance);

// B Sigma_m.
PiFiniteType base_space(int m);
// B(A wr S_n) as a single component.
PiFiniteType wreath_space(const AbelianGroup& a, int n);

// L X, or the p-typical loops L_p X when p is given.
PiFiniteType free_loops(const PiFiniteType& x, std::optional<int> p = std::nullopt,
                        unsigned threads = 1);

// L_p^t L B Sigma_m.
PiFiniteType loop_tower(int m, int p, int t, unsigned threads = 1);

// sum over components of sign * weight / group_order.
CycValue groupoid_cardinality(const PiFiniteType& x,
                              const std::function<CycValue(const Component&)>& weight);

void to_json(nlohmann::json& j, const AbelianGroup& a);
void to_json(nlohmann::json& j, const Component& c);
void to_json(nlohmann::json& j, const PiFiniteType& x);

}  // namespace altpow
