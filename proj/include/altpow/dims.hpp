#pragma once

// Dimensions of twisted alternating powers and twisted power operations as
// groupoid-cardinality sums over commuting tuples.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "altpow/cocycle.hpp"
#include "altpow/exact.hpp"
#include "altpow/group_engine.hpp"

namespace altpow {

struct Height0Dims {
  BigInt sym;
  BigInt alt;
};

// Binomial formulas, each recomputed as a sum over the classes of S_m; the
// two computations are required to agree.
Height0Dims height0_dims(long d, int m);

// sum over classes of chi(g) / |C_G(g)|. Throws NotClassFunction if chi is
// not constant on some class.
CycValue induced_dim(const PermGroup& g, const std::function<CycValue(const Perm&)>& chi);

struct TrivialTwist {};
struct CocycleTwist {
  Cochain cocycle;
};
struct Sgn1Twist {};
using TwistSpec = std::variant<TrivialTwist, CocycleTwist, Sgn1Twist>;

std::string twist_name(const TwistSpec& twist);

struct DimOptions {
  EngineOptions engine;
  // Constrain the unconstrained first loop coordinate to p-power order too.
  bool fully_p_typical = false;
};

struct DimResult {
  CycValue value;
  // "brute-force", "both" or "closed-form".
  std::string engine;
  std::optional<bool> engines_agree;
  std::size_t tuple_classes = 0;
  std::vector<std::string> warnings;
};

// sum over classes of commuting (n+1)-tuples (sigma; h_1..h_n) in H, h_i of
// p-power order, of d^orbits * zeta(tg^{n+1}(-chi)(tuple)) / |C_H(tuple)|.
DimResult alt_dim(const PermGroup& h, const TwistSpec& twist, long d, int p, int n,
                  const DimOptions& options = {});

// The twisted power operation on the integer d; evaluated by the same sum.
DimResult power_op(const PermGroup& h, const TwistSpec& twist, long d, int p, int n,
                   const DimOptions& options = {});

}  // namespace altpow
