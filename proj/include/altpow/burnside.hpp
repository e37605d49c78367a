#pragma once

// The Sylow-intersection (Yoshida) decomposition and a harness checking its
// consequence for integrals over p-typical loop spaces.

#include <string>
#include <vector>

#include "altpow/exact.hpp"
#include "altpow/group_engine.hpp"
#include "json.hpp"

namespace altpow {

struct YoshidaTerm {
  PermGroup subgroup;                 // intersection of the chosen Sylows
  std::vector<std::size_t> sylows;    // positions in sylow_subgroups(G, p)
  int arity = 0;
  Rational coefficient;               // (-1)^(k-1) |subgroup| / |G|
};

inline constexpr std::size_t kMaxSylowsForYoshida = 12;

// One term per nonempty subset of the Sylow p-subgroups, ordered by arity
// and then lexicographically. Throws TooManySylows past the guard.
std::vector<YoshidaTerm> yoshida_terms(const PermGroup& g, int p, const EngineOptions& options = {});

// sum over classes of commuting (t+1)-tuples in k with every coordinate of
// p-power order (or the first unconstrained when mixed) of d^orbits / |C|.
Rational p_typical_integral(const PermGroup& k, int p, long d, int t, bool mixed = false,
                            const EngineOptions& options = {});

struct LoopDecompositionReport {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  std::size_t terms = 0;
  bool mixed = false;
};

LoopDecompositionReport verify_loop_decomposition(const PermGroup& g, int p, long d, int t, bool mixed = false,
                                                  const EngineOptions& options = {});

nlohmann::json to_json(const YoshidaTerm& term);
nlohmann::json to_json(const LoopDecompositionReport& report);

}  // namespace altpow
