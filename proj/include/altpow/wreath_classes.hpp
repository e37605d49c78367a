#pragma once

// Conjugacy classes of wreath products G wr S_m from the cycle-type formula,
// and an explicit imprimitive realization for cross-checks.

#include <map>
#include <string>
#include <vector>

#include "altpow/exact.hpp"
#include "altpow/group_engine.hpp"
#include "altpow/perm_core.hpp"
#include "json.hpp"

namespace altpow {

/// sigma together with, for each cycle length k, the sorted multiset of
/// G-classes of the cycle products over the k-cycles. Classes are positions
/// in conjugacy_classes(G).classes.
struct WreathClassLabel {
  CycleType sigma;
  std::map<int, std::vector<std::size_t>> assignments;
  friend bool operator==(const WreathClassLabel&, const WreathClassLabel&) = default;
  friend auto operator<=>(const WreathClassLabel& a, const WreathClassLabel& b) {
    if (auto c = a.sigma <=> b.sigma; c != 0) return c;
    return a.assignments <=> b.assignments;
  }
};

struct WreathClassRow {
  WreathClassLabel label;
  BigInt centralizer_order;
};

// Every class of G wr S_m with its centralizer order
// prod over (k, x) of (k |C_G(x)|)^c c!, c the multiplicity of x among k-cycles.
std::vector<WreathClassRow> wreath_class_table(const PermGroup& g, int m, unsigned threads = 1);

// |G|^m m!
BigInt wreath_order(const PermGroup& g, int m);

// G wr S_m on m*deg(G) points: (b, x) -> (sigma(b), h_b(x)).
PermGroup wreath_product_group(const PermGroup& g, int m, std::uint64_t order_bound = kDefaultOrderBound);
Perm wreath_element(const PermGroup& g, const std::vector<Perm>& h, const Perm& sigma);

// Label of (h_1..h_m; sigma); the cycle product over a k-cycle through b is
// the restriction of the k-th power to block b.
WreathClassLabel classify_element(const PermGroup& g, int m, const std::vector<Perm>& h, const Perm& sigma);
// The same for an element of wreath_product_group(g, m).
WreathClassLabel classify_wreath_perm(const PermGroup& g, int m, const Perm& x);

struct WreathVerification {
  bool ok = false;
  std::size_t formula_classes = 0;
  std::size_t brute_classes = 0;
  std::vector<std::string> mismatches;
};

// Compares the table against brute-force conjugacy in the explicit group.
WreathVerification verify_wreath_table(const PermGroup& g, int m,
                                       std::uint64_t order_bound = kDefaultOrderBound);

std::string to_string(const WreathClassLabel& label, const PermGroup& g);
nlohmann::json to_json(const WreathClassLabel& label, const PermGroup& g);

}  // namespace altpow
