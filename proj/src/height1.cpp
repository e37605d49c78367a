#include "altpow/height1.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "altpow/error.hpp"

namespace altpow {

SchurClass schur_splits(const CycleType& type) {
  SchurClass out;
  out.type = type;
  const auto& parts = type.parts();
  const auto evens = std::count_if(parts.begin(), parts.end(), [](int k) { return k % 2 == 0; });
  const bool distinct = std::adjacent_find(parts.begin(), parts.end()) == parts.end();
  out.in_O = evens == 0;
  out.in_D = distinct && evens % 2 == 1;
  out.splits = out.in_O || out.in_D;
  return out;
}

namespace {

// Partitions of m into powers of 2, parts at most max_part.
void binary_partitions(int m, int max_part, std::vector<int>& cur, std::vector<CycleType>& out) {
  if (m == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = max_part; part >= 1; part /= 2) {
    if (part > m) continue;
    cur.push_back(part);
    binary_partitions(m - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

OD2Sets OD2_sets(int m) {
  require(m >= 0, "m must be nonnegative");
  OD2Sets out;
  int top = 1;
  while (top * 2 <= m) top *= 2;
  std::vector<CycleType> types;
  std::vector<int> cur;
  binary_partitions(m, top, cur, types);
  for (const auto& type : types) {
    const auto s = schur_splits(type);
    if (s.in_O) out.O2.push_back(type);
    if (s.in_D) out.D2.push_back(type);
  }
  return out;
}

std::vector<CycleType> O_set(int m) {
  std::vector<CycleType> out;
  for (const auto& type : partitions(m)) {
    if (schur_splits(type).in_O) out.push_back(type);
  }
  return out;
}

std::vector<CycleType> D_set(int m) {
  std::vector<CycleType> out;
  for (const auto& type : partitions(m)) {
    if (schur_splits(type).in_D) out.push_back(type);
  }
  return out;
}

namespace {

BigInt signed_power(long d, int e) {
  BigInt base = d;
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// d^l, or d^l + (-d)^l - 1 for negative d.
BigInt h1_term(long d, int l) {
  if (d >= 0) return signed_power(d, l);
  return signed_power(d, l) + signed_power(-d, l) - 1;
}

}  // namespace

BigInt alt_dim_h1(int m, long d) {
  require(m >= 4, "the height-1 formula needs m >= 4");
  const auto sets = OD2_sets(m);
  BigInt total = 0;
  for (const auto& t : sets.O2) total += h1_term(d, t.num_cycles());
  for (const auto& t : sets.D2) total += h1_term(d, t.num_cycles());
  return total;
}

int high_bit_count(int m) { return std::popcount(static_cast<unsigned>(m) >> 1); }

ParityConvention parse_parity_convention(const std::string& text) {
  if (text == "as-printed" || text == "printed") return ParityConvention::AsPrinted;
  if (text == "resolved" || text == "enumeration-resolved") return ParityConvention::Resolved;
  fail(ErrorCode::InvalidArgument, "parity convention must be as-printed or resolved, got " + text);
}

std::string to_string(ParityConvention c) {
  return c == ParityConvention::AsPrinted ? "as-printed" : "resolved";
}

BigInt alt_dim_h1_closed(int m, long d, ParityConvention convention) {
  require(m >= 4, "the height-1 formula needs m >= 4");
  BigInt total = h1_term(d, m);
  const bool odd = high_bit_count(m) % 2 == 1;
  const bool extra = convention == ParityConvention::Resolved ? odd : !odd;
  if (extra) total += h1_term(d, std::popcount(static_cast<unsigned>(m)));
  return total;
}

BigInt superdim2_alt(int m, long d) {
  require(m >= 0, "m must be nonnegative");
  require(d >= 0, "superdim2_alt needs d >= 0");
  BigInt total = 0;
  for (const auto& type : partitions(m)) {
    if (schur_splits(type).splits) total += signed_power(d, type.num_cycles());
  }
  return total;
}

ParityDiscrepancyReport parity_discrepancy_report(int m_min, int m_max, long d_abs_max) {
  require(m_min >= 4 && m_max >= m_min, "report range must satisfy 4 <= m_min <= m_max");
  ParityDiscrepancyReport report;
  for (int m = m_min; m <= m_max; ++m) {
    for (long d = -d_abs_max; d <= d_abs_max; ++d) {
      ParityDiscrepancyRow row{m, d, high_bit_count(m), alt_dim_h1(m, d),
                               alt_dim_h1_closed(m, d, ParityConvention::AsPrinted),
                               alt_dim_h1_closed(m, d, ParityConvention::Resolved)};
      if (row.resolved != row.enumeration) report.resolved_matches_all = false;
      if (row.as_printed != row.enumeration) {
        report.printed_matches_all = false;
        report.printed_failures.emplace_back(m, d);
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

nlohmann::json to_json(const ParityDiscrepancyReport& report, std::size_t max_rows) {
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t i = 0; i < report.printed_failures.size() && i < max_rows; ++i) {
    const auto& [m, d] = report.printed_failures[i];
    failures.push_back({std::to_string(m), std::to_string(d)});
  }
  return {{"resolved_matches_enumeration", report.resolved_matches_all},
          {"as_printed_matches_enumeration", report.printed_matches_all},
          {"as_printed_failure_count", std::to_string(report.printed_failures.size())},
          {"as_printed_failures_sample", failures},
          {"rows_checked", std::to_string(report.rows.size())}};
}

}  // namespace altpow
