#pragma once

// Explicit small permutation groups: closure, conjugacy, centralizers,
// commuting-tuple enumeration and Sylow subgroups.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "altpow/perm_core.hpp"

namespace altpow {

inline constexpr std::uint64_t kDefaultOrderBound = 100000;

struct EngineOptions {
  std::uint64_t order_bound = kDefaultOrderBound;
  unsigned threads = 1;
};

using Point = std::uint16_t;

/// A permutation of {0, ..., n-1} stored by images. Products compose right to
/// left: (a * b)(x) = a(b(x)). The ordering is lexicographic on images, which
/// makes the identity the smallest permutation of its degree.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  // Cycles are lists of points; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g * this * g^-1
  Perm pow(std::uint64_t e) const;
  bool is_identity() const;
  bool commutes_with(const Perm& other) const;
  std::uint64_t order() const;
  CycleType cycle_type() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, each from its minimal point
  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

std::string to_string(const Perm& p);
// Parses "(0 1 2)(3 4)" or "()" in the given degree.
Perm parse_cycles(std::string_view text, std::size_t degree);

/// A finite permutation group with all elements materialized and sorted in
/// the canonical (lexicographic) element order. Copies share storage.
class PermGroup {
 public:
  PermGroup() = default;

  // Breadth-first closure of the generators.
  // Throws OrderBoundExceeded once more than order_bound elements appear.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators,
                           std::uint64_t order_bound = kDefaultOrderBound);
  // The elements must already form a group.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  std::size_t degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }
  const std::vector<Perm>& elements() const { return data_->elements; }
  const Perm& element(std::size_t i) const { return data_->elements[i]; }
  const std::vector<Perm>& generators() const { return data_->generators; }

  std::optional<std::size_t> index_of(const Perm& p) const;
  std::size_t index_of_member(const Perm& p) const;  // throws if absent
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;

  bool is_abelian() const;
  bool same_elements(const PermGroup& other) const;
  bool is_subgroup_of(const PermGroup& other) const;

  PermGroup centralizer(const Perm& g) const;
  PermGroup intersection(const PermGroup& other) const;
  PermGroup conjugated_by(const Perm& g) const;

  // "deg=n; (..), (..)" built from a generating set determined only by the
  // element set, so equal groups produce equal specs.
  std::string canonical_spec() const;

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Perm> elements;
    std::vector<Perm> generators;
    std::unordered_map<Perm, std::uint32_t, PermHash> index;
  };
  static PermGroup make(std::size_t degree, std::vector<Perm> elements,
                        std::vector<Perm> generators);

  std::shared_ptr<const Data> data_;
};

// Group specs: "deg=4; (0 1 2 3), (0 1)" or a named group
// "sym:n", "alt:n", "cyc:n", "dih:n" (order 2n on n points), "trivial:n".
PermGroup parse_group_spec(std::string_view spec, std::uint64_t order_bound = kDefaultOrderBound);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group(std::size_t n);
PermGroup trivial_group(std::size_t degree);
// (Z/p)^r on r*p points, coordinate i the p-cycle on block i.
PermGroup elementary_abelian_group(int p, int rank);

struct ConjugacyClass {
  std::size_t representative;  // element index; the minimal member of the class
  std::uint64_t size;
  std::uint64_t centralizer_order;
};

struct ConjugacyClasses {
  std::vector<ConjugacyClass> classes;  // sorted by representative
  std::vector<std::uint32_t> class_of;  // element index -> class position
};

ConjugacyClasses conjugacy_classes(const PermGroup& g);

/// One class of pairwise-commuting tuples under simultaneous conjugation.
struct CommutingTupleClass {
  std::vector<Perm> representative;
  std::uint64_t centralizer_order = 0;
  int orbit_count = 0;
  std::vector<bool> torsion_profile;  // coordinates constrained to p-power order
};

// All classes of pairwise-commuting (t+1)-tuples in g, with coordinate i of
// p-power order wherever constrain[i] is set. Representatives are the
// lexicographically minimal members of their classes, and the result is
// sorted by representative.
std::vector<CommutingTupleClass> commuting_tuple_classes(const PermGroup& g, int t, int p,
                                                         const std::vector<bool>& constrain,
                                                         const EngineOptions& options = {});

// Orbits of the group generated by the tuple on {0, ..., degree-1}.
int orbit_count(const std::vector<Perm>& tuple, std::size_t degree);

// All Sylow p-subgroups, sorted by element set. If p does not divide |g| the
// result is the trivial subgroup once.
std::vector<PermGroup> sylow_subgroups(const PermGroup& g, int p,
                                       std::uint64_t order_bound = kDefaultOrderBound);

}  // namespace altpow
