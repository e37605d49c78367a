#pragma once

// Height-1 dimension formulas for the sign character sgn^(1), driven by the
// cycle-type criterion for splitting classes in the double cover of S_m.

#include <string>
#include <vector>

#include "altpow/exact.hpp"
#include "altpow/perm_core.hpp"
#include "json.hpp"

namespace altpow {

struct SchurClass {
  CycleType type;
  bool splits = false;
  bool in_O = false;  // no even parts
  bool in_D = false;  // distinct parts, odd number of even parts
};

SchurClass schur_splits(const CycleType& type);

struct OD2Sets {
  std::vector<CycleType> O2;
  std::vector<CycleType> D2;
};

// Classes of 2-power order in O(m) and D(m).
OD2Sets OD2_sets(int m);
// All of O(m) and D(m), in partition order.
std::vector<CycleType> O_set(int m);
std::vector<CycleType> D_set(int m);

// Enumeration over O2 and D2: sum of d^l for d >= 0 and of
// d^l + (-d)^l - 1 for d < 0. Requires m >= 4.
BigInt alt_dim_h1(int m, long d);

enum class ParityConvention {
  AsPrinted,  // extra term when the number of set bits of m above bit 0 is even
  Resolved,   // ... when it is odd, which is what the splitting criterion gives
};

ParityConvention parse_parity_convention(const std::string& text);
std::string to_string(ParityConvention c);

// The binary-expansion closed form under the chosen parity branch.
BigInt alt_dim_h1_closed(int m, long d, ParityConvention convention);

// Sum of d^l over O(m) and D(m). The formula is only claimed for m >= 4.
BigInt superdim2_alt(int m, long d);

// Number of set bits of m at positions i > 0.
int high_bit_count(int m);

struct ParityDiscrepancyRow {
  int m = 0;
  long d = 0;
  int high_bits = 0;
  BigInt enumeration;
  BigInt as_printed;
  BigInt resolved;
};

struct ParityDiscrepancyReport {
  std::vector<ParityDiscrepancyRow> rows;
  bool resolved_matches_all = true;
  bool printed_matches_all = true;
  // (m, d) pairs where the printed branch disagrees with enumeration.
  std::vector<std::pair<int, long>> printed_failures;
};

ParityDiscrepancyReport parity_discrepancy_report(int m_min, int m_max, long d_abs_max);
nlohmann::json to_json(const ParityDiscrepancyReport& report, std::size_t max_rows = 20);

}  // namespace altpow
