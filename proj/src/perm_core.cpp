#include "altpow/perm_core.hpp"

#include <algorithm>
#include <functional>

#include "altpow/error.hpp"

namespace altpow {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) require(part > 0, "cycle lengths must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int part : parts_) degree_ += part;
}

std::map<int, int> CycleType::multiplicities() const {
  std::map<int, int> counts;
  for (int part : parts_) ++counts[part];
  return counts;
}

std::string CycleType::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::vector<CycleType> partitions(int m) {
  require(m >= 0, "partitions: m must be nonnegative");
  std::vector<CycleType> out;
  std::vector<int> current;
  // Largest-part-first recursion yields reverse-lexicographic order.
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(m, m);
  return out;
}

int num_cycles(const CycleType& type) { return type.num_cycles(); }

BigInt centralizer_order(const CycleType& type) {
  BigInt order = 1;
  for (const auto& [k, count] : type.multiplicities()) {
    order *= power(BigInt(k), static_cast<unsigned>(count)) *
             factorial(static_cast<unsigned>(count));
  }
  return order;
}

bool is_p_power_type(const CycleType& type, int p) {
  return std::all_of(type.parts().begin(), type.parts().end(), [p](int part) {
    return is_p_power(static_cast<std::uint64_t>(part), static_cast<std::uint64_t>(p));
  });
}

void to_json(nlohmann::json& j, const CycleType& type) { j = type.parts(); }

void from_json(const nlohmann::json& j, CycleType& type) {
  type = CycleType(j.get<std::vector<int>>());
}

}  // namespace altpow
