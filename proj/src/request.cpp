#include "altpow/request.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "altpow/burnside.hpp"
#include "altpow/cocycle.hpp"
#include "altpow/dims.hpp"
#include "altpow/error.hpp"
#include "altpow/height1.hpp"
#include "altpow/pi_finite.hpp"
#include "altpow/series.hpp"
#include "altpow/wreath_classes.hpp"

namespace altpow {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Parameter schema

long parse_long(const json& v, const std::string& name) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    std::size_t pos = 0;
    long out = 0;
    try {
      out = std::stol(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    require(pos == s.size() && !s.empty(), "parameter " + name + " must be an integer, got '" + s + "'");
    return out;
  }
  fail(ErrorCode::InvalidArgument, "parameter " + name + " must be an integer");
}

class Params {
 public:
  explicit Params(const json& params) : in_(params) {
    require(params.is_object(), "params must be a JSON object");
  }

  long integer(const std::string& name, std::optional<long> fallback, long lo, long hi) {
    known_.insert(name);
    long v = 0;
    if (in_.contains(name) && !in_.at(name).is_null()) {
      v = parse_long(in_.at(name), name);
    } else {
      require(fallback.has_value(), "missing required parameter " + name);
      v = *fallback;
    }
    require(v >= lo && v <= hi, "parameter " + name + " must lie in [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    out_[name] = std::to_string(v);
    return v;
  }

  long prime(const std::string& name, long fallback) {
    const long p = integer(name, fallback, 2, 1000003);
    require(is_prime(p), "parameter " + name + " must be prime");
    return p;
  }

  bool flag(const std::string& name, bool fallback = false) {
    known_.insert(name);
    bool v = fallback;
    if (in_.contains(name) && !in_.at(name).is_null()) {
      const auto& x = in_.at(name);
      if (x.is_boolean()) {
        v = x.get<bool>();
      } else if (x.is_string() && (x == "true" || x == "false")) {
        v = x == "true";
      } else {
        fail(ErrorCode::InvalidArgument, "parameter " + name + " must be a boolean");
      }
    }
    out_[name] = v;
    return v;
  }

  std::string choice(const std::string& name, const std::string& fallback, const std::set<std::string>& allowed) {
    known_.insert(name);
    std::string v = fallback;
    if (in_.contains(name) && !in_.at(name).is_null()) {
      require(in_.at(name).is_string(), "parameter " + name + " must be a string");
      v = in_.at(name).get<std::string>();
    }
    if (!allowed.count(v)) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      fail(ErrorCode::InvalidArgument, "parameter " + name + " must be one of: " + list);
    }
    out_[name] = v;
    return v;
  }

  const json* raw(const std::string& name) {
    known_.insert(name);
    if (!in_.contains(name) || in_.at(name).is_null()) return nullptr;
    return &in_.at(name);
  }

  void set(const std::string& name, json v) { out_[name] = std::move(v); }

  json finish() const {
    for (const auto& [k, v] : in_.items()) {
      require(known_.count(k) > 0, "unknown parameter " + k);
    }
    return out_;
  }

 private:
  const json& in_;
  json out_ = json::object();
  std::set<std::string> known_;
};

constexpr long kMaxD = 1000000;

// "sym" or a group spec of degree m, normalized.
std::string canonical_group(Params& params, const std::string& name, std::optional<long> degree,
                            const RequestOptions& options, bool allow_sym) {
  const json* raw = params.raw(name);
  std::string spec = allow_sym ? "sym" : "";
  if (raw) {
    require(raw->is_string(), "parameter " + name + " must be a group spec string");
    spec = raw->get<std::string>();
  }
  require(!spec.empty(), "missing required parameter " + name);
  if (allow_sym && spec == "sym") {
    params.set(name, "sym");
    return spec;
  }
  const PermGroup g = parse_group_spec(spec, options.order_bound);
  if (degree) {
    require(g.degree() == static_cast<std::size_t>(*degree),
            "group acts on " + std::to_string(g.degree()) + " points but m = " + std::to_string(*degree));
  }
  const std::string canonical = g.canonical_spec();
  params.set(name, canonical);
  return canonical;
}

json canonical_cocycle(const json& raw, const RequestOptions& options) {
  return cochain_to_json(cochain_from_json(raw, options.order_bound));
}

json canonicalize_params(const std::string& command, const json& raw, const RequestOptions& options) {
  Params p(raw);
  if (command == "dim" || command == "powerop") {
    const long m = p.integer("m", std::nullopt, 1, 12);
    p.integer("d", std::nullopt, -kMaxD, kMaxD);
    p.prime("p", 2);
    const long height = p.integer("height", 0, 0, 4);
    canonical_group(p, "group", m, options, true);
    const json* twist = p.raw("twist");
    if (twist == nullptr || (twist->is_string() && *twist == "trivial")) {
      p.set("twist", "trivial");
    } else if (twist->is_string() && *twist == "sgn1") {
      p.set("twist", "sgn1");
    } else {
      require(twist->is_object(), "twist must be trivial, sgn1 or a cocycle object");
      const json c = canonical_cocycle(*twist, options);
      if (std::stol(c.at("degree").get<std::string>()) != height + 1) {
        fail(ErrorCode::ConstraintMismatch, "twist cocycle degree must be height + 1");
      }
      p.set("twist", c);
    }
    if (command == "powerop") p.flag("fully_p_typical");
  } else if (command == "loops") {
    p.integer("m", std::nullopt, 0, 12);
    p.prime("p", 2);
    p.integer("t", 0, 0, 4);
    p.flag("count_only");
  } else if (command == "wreath-classes") {
    canonical_group(p, "g", std::nullopt, options, false);
    p.integer("m", std::nullopt, 0, 16);
    p.flag("verify");
  } else if (command == "h1") {
    const bool super = p.flag("super");
    p.integer("m", std::nullopt, super ? 0 : 4, super ? 60 : 1024);
    p.integer("d", std::nullopt, super ? 0 : -kMaxD, kMaxD);
    p.choice("closed_form", "none", {"none", "as-printed", "resolved"});
  } else if (command == "yoshida") {
    canonical_group(p, "group", std::nullopt, options, false);
    p.prime("p", 2);
    const bool verify = p.flag("verify");
    if (verify) {
      p.integer("d", 2, -kMaxD, kMaxD);
      p.integer("t", 0, 0, 3);
      p.flag("mixed");
    } else {
      require(p.raw("d") == nullptr && p.raw("t") == nullptr && p.raw("mixed") == nullptr,
              "d, t and mixed only apply with verify");
    }
  } else if (command == "genfunc") {
    const long height = p.integer("height", std::nullopt, 0, 1);
    p.integer("d", std::nullopt, height == 0 ? 0 : 0, kMaxD);
    const long max_m = p.integer("max_m", std::nullopt, 0, height == 0 ? 60 : 8);
    const std::string source = p.choice("alt_source", "closed", {"closed", "inverse", "file"});
    const json* values = p.raw("alt_values");
    if (source == "file") {
      require(values != nullptr && values->is_array(), "alt_source file needs alt_values");
      require(values->size() == static_cast<std::size_t>(max_m) + 1, "alt_values must have max_m + 1 entries");
      json normalized = json::array();
      for (const auto& v : *values) {
        normalized.push_back(to_string(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(parse_long(v, "alt_values"))));
      }
      p.set("alt_values", normalized);
    } else {
      require(values == nullptr, "alt_values only applies with alt_source file");
    }
  } else if (command == "transgress") {
    const json* c = p.raw("cocycle");
    require(c != nullptr && c->is_object(), "transgress needs a cocycle object");
    const json canonical = canonical_cocycle(*c, options);
    p.set("cocycle", canonical);
    const PermGroup g = parse_group_spec(canonical.at("group").get<std::string>(), options.order_bound);
    const json* tuple = p.raw("tuple");
    require(tuple != nullptr && tuple->is_array(), "transgress needs a tuple array");
    json normalized = json::array();
    for (const auto& x : *tuple) {
      require(x.is_string(), "tuple entries must be cycle strings");
      const Perm perm = parse_cycles(x.get<std::string>(), g.degree());
      require(g.contains(perm), "tuple entry " + x.get<std::string>() + " is not in the group");
      normalized.push_back(perm.to_cycle_string());
    }
    require(normalized.size() <= std::stoul(canonical.at("degree").get<std::string>()),
            "tuple is longer than the cocycle degree");
    p.set("tuple", normalized);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown command " + command);
  }
  return p.finish();
}

// ---------------------------------------------------------------------------
// Dispatch

long param_long(const json& params, const std::string& name) { return std::stol(params.at(name).get<std::string>()); }

json exactness_fields(const CycValue& v) {
  if (v.is_integer()) return {{"exactness", "integer"}};
  if (v.is_rational()) return {{"exactness", "rational"}};
  return {{"exactness", "cyclotomic"}, {"conductor", std::to_string(v.conductor())}};
}

PermGroup resolve_group(const std::string& spec, long m, const RequestOptions& options) {
  if (spec == "sym") return parse_group_spec("sym:" + std::to_string(m), options.order_bound);
  return parse_group_spec(spec, options.order_bound);
}

json run_dim(const json& params, bool power, const RequestOptions& options) {
  const long m = param_long(params, "m");
  const long d = param_long(params, "d");
  const int p = static_cast<int>(param_long(params, "p"));
  const int n = static_cast<int>(param_long(params, "height"));
  const PermGroup h = resolve_group(params.at("group").get<std::string>(), m, options);
  TwistSpec twist = TrivialTwist{};
  const json& t = params.at("twist");
  if (t == "sgn1") {
    twist = Sgn1Twist{};
  } else if (t.is_object()) {
    Cochain c = cochain_from_json(t, options.order_bound);
    require(c.group().same_elements(h), "twist cocycle must live on the chosen group");
    twist = CocycleTwist{std::move(c)};
  }
  DimOptions dim_options;
  dim_options.engine = {options.order_bound, options.threads};
  if (power) dim_options.fully_p_typical = params.at("fully_p_typical").get<bool>();
  const DimResult r = power ? power_op(h, twist, d, p, n, dim_options) : alt_dim(h, twist, d, p, n, dim_options);
  json out{{"value", r.value.to_string()},
           {"conductor", std::to_string(r.value.conductor())},
           {"is_integer", r.value.is_integer()},
           {"engine", r.engine},
           {"tuple_classes", std::to_string(r.tuple_classes)},
           {"warnings", r.warnings}};
  out.update(exactness_fields(r.value));
  out["engines_agree"] = r.engines_agree ? json(*r.engines_agree) : json(nullptr);
  return out;
}

json run_loops(const json& params, const RequestOptions& options) {
  const int m = static_cast<int>(param_long(params, "m"));
  const int p = static_cast<int>(param_long(params, "p"));
  const int t = static_cast<int>(param_long(params, "t"));
  if (m >= 1) {
    // Same admission check as every other command that builds S_m.
    parse_group_spec("sym:" + std::to_string(m), options.order_bound);
  }
  const auto tower = loop_tower(m, p, t, options.threads);

  // Cross-check against the commuting-tuple enumeration.
  std::multiset<std::pair<BigInt, int>> structural, enumerated;
  for (const auto& c : tower.components) structural.insert({c.group_order, c.orbit_degree});
  if (m == 0) {
    enumerated.insert({1, 0});
  } else {
    std::vector<bool> flags(static_cast<std::size_t>(t) + 1, true);
    flags[0] = false;
    for (const auto& c : commuting_tuple_classes(symmetric_group(static_cast<std::size_t>(m)), t, p, flags,
                                                 {options.order_bound, options.threads})) {
      enumerated.insert({BigInt(static_cast<unsigned long>(c.centralizer_order)), c.orbit_count});
    }
  }
  const bool agree = structural == enumerated;
  if (!agree) fail(ErrorCode::Internal, "structural and brute-force loop enumerations disagree");

  Rational mass = 0;
  for (const auto& c : tower.components) mass += Rational(c.sign) / Rational(c.group_order);
  json out{{"components", std::to_string(tower.components.size())},
           {"engine", "both"},
           {"engines_agree", agree},
           {"groupoid_cardinality", to_string(mass)},
           {"exactness", "integer"}};
  if (!params.at("count_only").get<bool>()) out["component_list"] = tower;
  return out;
}

json run_wreath(const json& params, const RequestOptions& options) {
  const PermGroup g = parse_group_spec(params.at("g").get<std::string>(), options.order_bound);
  const int m = static_cast<int>(param_long(params, "m"));
  const auto table = wreath_class_table(g, m, options.threads);
  json classes = json::array();
  Rational mass = 0;
  for (const auto& row : table) {
    json entry = to_json(row.label, g);
    entry["centralizer_order"] = to_string(row.centralizer_order);
    classes.push_back(entry);
    mass += Rational(1) / Rational(row.centralizer_order);
  }
  json out{{"class_count", std::to_string(table.size())},
           {"group_order", to_string(wreath_order(g, m))},
           {"mass", to_string(mass)},
           {"classes", classes},
           {"exactness", "integer"}};
  if (params.at("verify").get<bool>()) {
    const auto v = verify_wreath_table(g, m, options.order_bound);
    out["verification"] = {{"ok", v.ok},
                           {"formula_classes", std::to_string(v.formula_classes)},
                           {"brute_classes", std::to_string(v.brute_classes)},
                           {"mismatches", v.mismatches}};
    out["engine"] = "both";
    out["engines_agree"] = v.ok;
  } else {
    out["engine"] = "structural";
  }
  return out;
}

json run_h1(const json& params) {
  const int m = static_cast<int>(param_long(params, "m"));
  const long d = param_long(params, "d");
  json out{{"exactness", "integer"}, {"warnings", json::array()}};
  if (params.at("super").get<bool>()) {
    out["value"] = to_string(superdim2_alt(m, d));
    out["engine"] = "enumeration";
    if (m < 4) out["warnings"].push_back("m < 4 lies outside the range where the splitting criterion is proved");
  } else {
    const BigInt value = alt_dim_h1(m, d);
    out["value"] = to_string(value);
    out["engine"] = "enumeration";
    const auto sets = OD2_sets(m);
    out["O2"] = sets.O2;
    out["D2"] = sets.D2;
    const std::string convention = params.at("closed_form").get<std::string>();
    if (convention != "none") {
      const BigInt closed = alt_dim_h1_closed(m, d, parse_parity_convention(convention));
      out["closed_form"] = {{"convention", convention},
                            {"value", to_string(closed)},
                            {"matches_enumeration", closed == value}};
      out["parity_report"] = to_json(parity_discrepancy_report(4, 32, 4));
    }
  }
  return out;
}

json run_yoshida(const json& params, const RequestOptions& options) {
  const PermGroup g = parse_group_spec(params.at("group").get<std::string>(), options.order_bound);
  const int p = static_cast<int>(param_long(params, "p"));
  const EngineOptions engine{options.order_bound, options.threads};
  const auto terms = yoshida_terms(g, p, engine);
  json list = json::array();
  for (const auto& t : terms) list.push_back(to_json(t));
  json out{{"term_count", std::to_string(terms.size())}, {"terms", list}, {"exactness", "rational"}};
  if (params.at("verify").get<bool>()) {
    const auto r = verify_loop_decomposition(g, p, param_long(params, "d"), static_cast<int>(param_long(params, "t")),
                                             params.at("mixed").get<bool>(), engine);
    out["verification"] = to_json(r);
    if (r.mixed) out["verification"]["status"] = "experimental";
  }
  return out;
}

json run_genfunc(const json& params, const RequestOptions& options) {
  const int height = static_cast<int>(param_long(params, "height"));
  const long d = param_long(params, "d");
  const int max_m = static_cast<int>(param_long(params, "max_m"));
  const std::string source = params.at("alt_source").get<std::string>();
  if (height == 1 && max_m >= 1) parse_group_spec("sym:" + std::to_string(max_m), options.order_bound);

  DimSeries sym;
  for (int m = 0; m <= max_m; ++m) {
    sym.coefficients.push_back(height == 0 ? Rational(height0_dims(d, m).sym) : superdim2_sym(m, d));
  }
  DimSeries alt;
  if (source == "closed") {
    for (int m = 0; m <= max_m; ++m) {
      alt.coefficients.push_back(height == 0 ? Rational(height0_dims(d, m).alt) : Rational(superdim2_alt(m, d)));
    }
  } else if (source == "inverse") {
    alt = series_inverse(sym);
    for (std::size_t m = 1; m < alt.size(); m += 2) alt.coefficients[m] = -alt.coefficients[m];
  } else {
    for (const auto& v : params.at("alt_values")) alt.coefficients.push_back(parse_rational(v.get<std::string>()));
  }
  json out = to_json(verify_identity(sym, alt));
  out["exactness"] = "rational";
  out["status"] = height == 0 ? "proved" : "experimental";
  return out;
}

json run_transgress(const json& params, const RequestOptions& options) {
  const Cochain c = cochain_from_json(params.at("cocycle"), options.order_bound);
  std::vector<Perm> tuple;
  for (const auto& x : params.at("tuple")) tuple.push_back(parse_cycles(x.get<std::string>(), c.group().degree()));
  json out{{"steps", std::to_string(tuple.size())}, {"exactness", "rational"}};
  if (tuple.size() == static_cast<std::size_t>(c.degree())) {
    long double dense = 1;
    for (int i = 0; i <= c.degree(); ++i) dense *= static_cast<long double>(c.group().order());
    const QmodZ pointwise = iterated_transgression_pointwise(c, tuple);
    out["value"] = pointwise.to_string();
    if (dense <= static_cast<long double>(kMaxCochainTuples)) {
      const QmodZ table = iterated_transgression(c, tuple);
      out["engine"] = "both";
      out["engines_agree"] = table == pointwise;
      if (!(table == pointwise)) fail(ErrorCode::Internal, "transgression routes disagree");
    } else {
      out["engine"] = "pointwise";
    }
  } else {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (!tuple[i].commutes_with(tuple[j])) fail(ErrorCode::NotCommuting, "tuple entries do not commute");
      }
    }
    Cochain cur = c;
    for (const auto& s : tuple) cur = transgress_step(cur, s);
    out["cochain"] = cochain_to_json(cur);
    out["engine"] = "table";
  }
  return out;
}

// Numbers leave the engine as decimal strings, however deep they sit.
json stringify_numbers(const json& v) {
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) fail(ErrorCode::Internal, "floating-point value in result");
  if (v.is_array()) {
    json out = json::array();
    for (const auto& x : v) out.push_back(stringify_numbers(x));
    return out;
  }
  if (v.is_object()) {
    json out = json::object();
    for (const auto& [k, x] : v.items()) out[k] = stringify_numbers(x);
    return out;
  }
  return v;
}

}  // namespace

json canonicalize_request(const json& request, const RequestOptions& options) {
  require(request.is_object(), "request must be a JSON object");
  for (const auto& [k, v] : request.items()) {
    require(k == "command" || k == "params", "unknown request field " + k);
  }
  require(request.contains("command") && request.at("command").is_string(), "request needs a command string");
  const std::string command = request.at("command").get<std::string>();
  const json params = request.contains("params") ? request.at("params") : json::object();
  return {{"command", command}, {"params", canonicalize_params(command, params, options)}};
}

std::string cache_key_material(const json& canonical, const RequestOptions& options) {
  return std::string(kEngineVersion) + "\norder_bound=" + std::to_string(options.order_bound) + "\n" + canonical.dump();
}

json dispatch(const json& canonical, const RequestOptions& options) {
  const std::string command = canonical.at("command").get<std::string>();
  const json& params = canonical.at("params");
  json result;
  if (command == "dim") {
    result = run_dim(params, false, options);
  } else if (command == "powerop") {
    result = run_dim(params, true, options);
  } else if (command == "loops") {
    result = run_loops(params, options);
  } else if (command == "wreath-classes") {
    result = run_wreath(params, options);
  } else if (command == "h1") {
    result = run_h1(params);
  } else if (command == "yoshida") {
    result = run_yoshida(params, options);
  } else if (command == "genfunc") {
    result = run_genfunc(params, options);
  } else if (command == "transgress") {
    result = run_transgress(params, options);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown command " + command);
  }
  return {{"engine_version", kEngineVersion}, {"command", command}, {"params", params}, {"result", stringify_numbers(result)}};
}

int exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderBoundExceeded:
    case ErrorCode::TooManySylows:
      return 3;
    case ErrorCode::Internal:
      return 1;
    default:
      return 2;
  }
}

}  // namespace altpow
