#include "altpow/burnside.hpp"

#include <algorithm>
#include <bit>

#include "altpow/error.hpp"
#include "altpow/parallel.hpp"

namespace altpow {

std::vector<YoshidaTerm> yoshida_terms(const PermGroup& g, int p, const EngineOptions& options) {
  const auto sylows = sylow_subgroups(g, p, options.order_bound);
  const std::size_t r = sylows.size();
  if (r > kMaxSylowsForYoshida) {
    fail(ErrorCode::TooManySylows, std::to_string(r) + " Sylow " + std::to_string(p) +
                                       "-subgroups exceed the limit of " + std::to_string(kMaxSylowsForYoshida));
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (1U << r); ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    // Lexicographic on the sorted index lists: lower set bits first.
    for (std::size_t i = 0; i < r; ++i) {
      const bool ia = (a >> i) & 1U, ib = (b >> i) & 1U;
      if (ia != ib) return ia;
    }
    return false;
  });

  std::vector<YoshidaTerm> out(masks.size());
  parallel_for(masks.size(), options.threads, [&](std::size_t i) {
    YoshidaTerm term;
    PermGroup inter;
    bool first = true;
    for (std::size_t s = 0; s < r; ++s) {
      if (!((masks[i] >> s) & 1U)) continue;
      term.sylows.push_back(s);
      inter = first ? sylows[s] : inter.intersection(sylows[s]);
      first = false;
    }
    term.arity = static_cast<int>(term.sylows.size());
    term.coefficient = Rational(static_cast<long>(inter.order()), static_cast<unsigned long>(g.order()));
    term.coefficient.canonicalize();
    if (term.arity % 2 == 0) term.coefficient = -term.coefficient;
    term.subgroup = std::move(inter);
    out[i] = std::move(term);
  });
  return out;
}

Rational p_typical_integral(const PermGroup& k, int p, long d, int t, bool mixed, const EngineOptions& options) {
  std::vector<bool> flags(static_cast<std::size_t>(t) + 1, true);
  if (mixed) flags[0] = false;
  Rational total = 0;
  for (const auto& cls : commuting_tuple_classes(k, t, p, flags, options)) {
    total += power(Rational(d), static_cast<unsigned>(cls.orbit_count)) /
             Rational(static_cast<unsigned long>(cls.centralizer_order));
  }
  return total;
}

LoopDecompositionReport verify_loop_decomposition(const PermGroup& g, int p, long d, int t, bool mixed,
                                                  const EngineOptions& options) {
  require(t >= 0, "t must be nonnegative");
  LoopDecompositionReport report;
  report.mixed = mixed;
  report.lhs = p_typical_integral(g, p, d, t, mixed, options);
  const auto terms = yoshida_terms(g, p, options);
  report.terms = terms.size();
  std::vector<Rational> parts(terms.size());
  parallel_for(terms.size(), options.threads, [&](std::size_t i) {
    EngineOptions inner = options;
    inner.threads = 1;
    parts[i] = terms[i].coefficient * p_typical_integral(terms[i].subgroup, p, d, t, mixed, inner);
  });
  report.rhs = 0;
  for (const auto& x : parts) report.rhs += x;
  report.holds = report.lhs == report.rhs;
  return report;
}

nlohmann::json to_json(const YoshidaTerm& term) {
  nlohmann::json sylows = nlohmann::json::array();
  for (auto s : term.sylows) sylows.push_back(std::to_string(s));
  return {{"subgroup", term.subgroup.canonical_spec()},
          {"subgroup_order", std::to_string(term.subgroup.order())},
          {"sylows", sylows},
          {"arity", std::to_string(term.arity)},
          {"coefficient", to_string(term.coefficient)}};
}

nlohmann::json to_json(const LoopDecompositionReport& report) {
  return {{"lhs", to_string(report.lhs)},
          {"rhs", to_string(report.rhs)},
          {"holds", report.holds},
          {"terms", std::to_string(report.terms)},
          {"mixed_tower", report.mixed}};
}

}  // namespace altpow
