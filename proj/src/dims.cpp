#include "altpow/dims.hpp"

#include "altpow/error.hpp"
#include "altpow/height1.hpp"
#include "altpow/perm_core.hpp"
#include "altpow/pi_finite.hpp"

namespace altpow {

namespace {

Rational int_power(long d, int e) { return power(Rational(d), static_cast<unsigned>(e)); }

// A subgroup of S_m of order m! is S_m.
bool is_full_symmetric(const PermGroup& h) {
  return BigInt(static_cast<unsigned long>(h.order())) == factorial(static_cast<unsigned>(h.degree()));
}

}  // namespace

Height0Dims height0_dims(long d, int m) {
  require(d >= 0, "height-0 dimensions need d >= 0");
  require(m >= 0, "m must be nonnegative");
  Height0Dims out{binomial(BigInt(d + m - 1), static_cast<unsigned>(m)),
                  binomial(BigInt(d), static_cast<unsigned>(m))};
  Rational sym = 0, alt = 0;
  for (const auto& type : partitions(m)) {
    const Rational term = int_power(d, type.num_cycles()) / Rational(centralizer_order(type));
    sym += term;
    alt += type.sign() * term;
  }
  if (sym != Rational(out.sym) || alt != Rational(out.alt)) {
    fail(ErrorCode::Internal, "height-0 character integral disagrees with the binomial formula");
  }
  return out;
}

CycValue induced_dim(const PermGroup& g, const std::function<CycValue(const Perm&)>& chi) {
  const auto cc = conjugacy_classes(g);
  std::vector<std::optional<CycValue>> values(cc.classes.size());
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto& slot = values[cc.class_of[i]];
    CycValue v = chi(g.element(i));
    if (!slot) {
      slot = std::move(v);
    } else if (!(*slot == v)) {
      fail(ErrorCode::NotClassFunction,
           "character differs on conjugate elements at " + g.element(i).to_cycle_string());
    }
  }
  CycValue total;
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    total += *values[c] * CycValue(Rational(1, static_cast<unsigned long>(cc.classes[c].centralizer_order)));
  }
  return total;
}

std::string twist_name(const TwistSpec& twist) {
  if (std::holds_alternative<TrivialTwist>(twist)) return "trivial";
  if (std::holds_alternative<Sgn1Twist>(twist)) return "sgn1";
  return "cocycle";
}

DimResult alt_dim(const PermGroup& h, const TwistSpec& twist, long d, int p, int n,
                  const DimOptions& options) {
  require(n >= 0, "height must be nonnegative");
  require(is_prime(p), "p must be prime");
  DimResult out;

  if (std::holds_alternative<Sgn1Twist>(twist)) {
    const auto m = static_cast<int>(h.degree());
    if (n != 1) fail(ErrorCode::ConstraintMismatch, "sgn1 is a height-1 twist");
    require(p == 2, "sgn1 is a 2-primary twist");
    require(is_full_symmetric(h), "sgn1 is defined on the full symmetric group");
    require(m >= 4, "sgn1 dimensions need m >= 4");
    out.value = CycValue(Rational(alt_dim_h1(m, d)));
    out.engine = "closed-form";
    return out;
  }

  const Cochain* cocycle = nullptr;
  if (const auto* c = std::get_if<CocycleTwist>(&twist)) {
    cocycle = &c->cocycle;
    if (cocycle->degree() != n + 1) {
      fail(ErrorCode::ConstraintMismatch, "twist cocycle has degree " + std::to_string(cocycle->degree()) +
                                              " but height " + std::to_string(n) + " needs degree " +
                                              std::to_string(n + 1));
    }
    require(cocycle->group().same_elements(h), "twist cocycle lives on a different group");
    long double tuples = 1;
    for (int i = 0; i < n + 2; ++i) tuples *= static_cast<long double>(h.order());
    if (tuples <= static_cast<long double>(kMaxCochainTuples)) {
      if (!is_cocycle(*cocycle)) fail(ErrorCode::NotCocycle, "twist is not a cocycle");
    } else {
      out.warnings.push_back("cocycle condition not verified: the group is too large for a dense check");
    }
  }

  std::vector<bool> flags(static_cast<std::size_t>(n) + 1, true);
  flags[0] = options.fully_p_typical;
  const auto classes = commuting_tuple_classes(h, n, p, flags, options.engine);
  out.tuple_classes = classes.size();
  const Cochain inverse = cocycle ? -*cocycle : Cochain();
  for (const auto& cls : classes) {
    CycValue term(int_power(d, cls.orbit_count) / Rational(cls.centralizer_order));
    if (cocycle) {
      const QmodZ phase = iterated_transgression_pointwise(inverse, cls.representative);
      if (!phase.is_zero()) term *= CycValue::root_of_unity(phase.num(), phase.den());
    }
    out.value += term;
  }
  out.engine = "brute-force";

  if (cocycle == nullptr && !options.fully_p_typical && is_full_symmetric(h)) {
    const auto tower = loop_tower(static_cast<int>(h.degree()), p, n, options.engine.threads);
    const CycValue structural = groupoid_cardinality(
        tower, [&](const Component& c) { return CycValue(int_power(d, c.orbit_degree)); });
    out.engine = "both";
    out.engines_agree = structural == out.value;
    if (!*out.engines_agree) {
      fail(ErrorCode::Internal, "structural and brute-force engines disagree: " + structural.to_string() +
                                    " vs " + out.value.to_string());
    }
  }
  return out;
}

DimResult power_op(const PermGroup& h, const TwistSpec& twist, long d, int p, int n,
                   const DimOptions& options) {
  return alt_dim(h, twist, d, p, n, options);
}

}  // namespace altpow
