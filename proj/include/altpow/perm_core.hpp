#pragma once

// Partitions, cycle types and conjugacy data of symmetric groups.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "altpow/exact.hpp"
#include "json.hpp"

namespace altpow {

/// A partition of m, i.e. the cycle type of a permutation in S_m.
/// Parts are kept sorted in descending order; equality and ordering are
/// those of the sorted part list.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int num_cycles() const { return static_cast<int>(parts_.size()); }
  // k -> number of k-cycles.
  std::map<int, int> multiplicities() const;
  // (-1)^(m - number of cycles).
  int sign() const { return (degree_ - num_cycles()) % 2 == 0 ? 1 : -1; }

  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

// All partitions of m in reverse-lexicographic order ([m] first, [1^m] last).
std::vector<CycleType> partitions(int m);

int num_cycles(const CycleType& type);

// Order of the centralizer of a permutation of this type: prod_k k^N_k N_k!.
BigInt centralizer_order(const CycleType& type);

// Every part is a power of p (1 = p^0 included).
bool is_p_power_type(const CycleType& type, int p);

void to_json(nlohmann::json& j, const CycleType& type);
void from_json(const nlohmann::json& j, CycleType& type);

}  // namespace altpow
