#include "doctest.h"

#include <functional>

#include "altpow/cocycle.hpp"
#include "altpow/error.hpp"
#include "altpow/request.hpp"

using namespace altpow;
using nlohmann::json;

namespace {

json run(const json& request, const RequestOptions& options = {}) {
  return dispatch(canonicalize_request(request, options), options);
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an altpow::Error");
  return ErrorCode::Internal;
}

// No bare numbers anywhere in a payload.
bool numbers_are_strings(const json& v) {
  if (v.is_number()) return false;
  if (v.is_structured()) {
    for (const auto& x : v) {
      if (!numbers_are_strings(x)) return false;
    }
  }
  return true;
}

json symplectic_json() { return cochain_to_json(bilinear_cocycle(2, {{0, 0}, {1, 0}})); }

std::vector<json> sample_requests() {
  return {
      {{"command", "h1"}, {"params", {{"m", 4}, {"d", 2}}}},
      {{"command", "h1"}, {"params", {{"m", 6}, {"d", 2}, {"closed_form", "resolved"}}}},
      {{"command", "h1"}, {"params", {{"m", 3}, {"d", 2}, {"super", true}}}},
      {{"command", "loops"}, {"params", {{"m", 3}, {"p", 2}, {"t", 1}, {"count_only", true}}}},
      {{"command", "loops"}, {"params", {{"m", 4}, {"p", 3}, {"t", 1}}}},
      {{"command", "dim"}, {"params", {{"m", 4}, {"d", 3}}}},
      {{"command", "dim"}, {"params", {{"m", 4}, {"d", 3}, {"height", 1}, {"twist", "sgn1"}}}},
      {{"command", "powerop"}, {"params", {{"m", 3}, {"d", 2}, {"height", 1}, {"fully_p_typical", true}}}},
      {{"command", "wreath-classes"}, {"params", {{"g", "sym:2"}, {"m", 2}, {"verify", true}}}},
      {{"command", "yoshida"}, {"params", {{"group", "sym:3"}, {"p", 2}, {"verify", true}, {"t", 1}}}},
      {{"command", "genfunc"}, {"params", {{"height", 0}, {"d", 3}, {"max_m", 10}}}},
      {{"command", "genfunc"}, {"params", {{"height", 1}, {"d", 2}, {"max_m", 4}, {"alt_source", "inverse"}}}},
      {{"command", "transgress"}, {"params", {{"cocycle", symplectic_json()}, {"tuple", {"(0 1)", "(2 3)"}}}}},
      {{"command", "transgress"}, {"params", {{"cocycle", symplectic_json()}, {"tuple", {"(0 1)"}}}}},
  };
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(run({{"command", "h1"}, {"params", {{"m", 4}, {"d", 2}}}})["result"]["value"] == "18");
  // Five classes, not seven: see the loop enumeration oracle in test_pi_finite.
  const json loops = run({{"command", "loops"}, {"params", {{"m", 3}, {"p", 2}, {"t", 1}, {"count_only", true}}}});
  CHECK(loops["result"]["components"] == "5");
  CHECK(loops["result"]["engine"] == "both");
  CHECK(loops["result"]["engines_agree"] == true);
  CHECK(run({{"command", "genfunc"}, {"params", {{"height", 0}, {"d", 3}, {"max_m", 10}}}})["result"]["identity_holds"] ==
        true);
  const json tg =
      run({{"command", "transgress"}, {"params", {{"cocycle", symplectic_json()}, {"tuple", {"(0 1)", "(2 3)"}}}}});
  CHECK(tg["result"]["value"] == "1/2");
  CHECK(tg["result"]["engines_agree"] == true);
}

TEST_CASE("canonical form is unique per semantic request") {
  const json a = canonicalize_request({{"command", "dim"}, {"params", {{"m", 4}, {"d", 3}}}});
  const json b = canonicalize_request(
      json::parse(R"({"params": {"twist": "trivial", "height": "0", "d": "3", "group": "sym", "p": 2, "m": "4"},
                      "command": "dim"})"));
  CHECK(a.dump() == b.dump());
  CHECK(cache_key_material(a, {}) == cache_key_material(b, {}));

  RequestOptions other;
  other.order_bound = 1000;
  CHECK(cache_key_material(a, {}) != cache_key_material(a, other));

  // Different generator sets for the same group normalize identically.
  const json g1 = canonicalize_request({{"command", "yoshida"}, {"params", {{"group", "deg=3; (0 1), (0 1 2)"}}}});
  const json g2 = canonicalize_request({{"command", "yoshida"}, {"params", {{"group", "deg=3; (1 2), (0 2)"}}}});
  CHECK(g1.dump() == g2.dump());

  // Cocycle key order and number formats do not matter.
  json c = symplectic_json();
  c["degree"] = 2;
  const json t1 = canonicalize_request({{"command", "transgress"}, {"params", {{"cocycle", c}, {"tuple", {"(1 0)"}}}}});
  const json t2 = canonicalize_request(
      {{"command", "transgress"}, {"params", {{"cocycle", symplectic_json()}, {"tuple", {"(0 1)"}}}}});
  CHECK(t1.dump() == t2.dump());
}

TEST_CASE("validation errors") {
  CHECK(error_of([] { canonicalize_request({{"command", "nope"}}); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { canonicalize_request(json::array()); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { canonicalize_request({{"command", "h1"}, {"params", {{"m", 4}}}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { canonicalize_request({{"command", "h1"}, {"params", {{"m", 4}, {"d", 2}, {"bogus", 1}}}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { canonicalize_request({{"command", "h1"}, {"params", {{"m", "four"}, {"d", 2}}}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] { canonicalize_request({{"command", "dim"}, {"params", {{"m", 4}, {"d", 2}, {"p", 4}}}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([] {
          canonicalize_request({{"command", "dim"}, {"params", {{"m", 4}, {"d", 2}, {"group", "sym:3"}}}});
        }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] {
          canonicalize_request(
              {{"command", "dim"}, {"params", {{"m", 4}, {"d", 2}, {"height", 0}, {"twist", symplectic_json()}}}});
        }) == ErrorCode::ConstraintMismatch);
  CHECK(error_of([] {
          canonicalize_request({{"command", "genfunc"}, {"params", {{"height", 0}, {"d", 2}, {"max_m", 2},
                                                                      {"alt_source", "file"}}}});
        }) == ErrorCode::InvalidArgument);

  RequestOptions tight;
  tight.order_bound = 100;
  CHECK(error_of([&] { run({{"command", "loops"}, {"params", {{"m", 6}}}}, tight); }) ==
        ErrorCode::OrderBoundExceeded);
  CHECK(error_of([] {
          run({{"command", "transgress"}, {"params", {{"cocycle", symplectic_json()}, {"tuple", {"(0 1)", "(0 2)"}}}}});
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("exit status mapping") {
  CHECK(exit_status_for(ErrorCode::InvalidArgument) == 2);
  CHECK(exit_status_for(ErrorCode::ConstraintMismatch) == 2);
  CHECK(exit_status_for(ErrorCode::NotCocycle) == 2);
  CHECK(exit_status_for(ErrorCode::OrderBoundExceeded) == 3);
  CHECK(exit_status_for(ErrorCode::TooManySylows) == 3);
  CHECK(exit_status_for(ErrorCode::Internal) == 1);
}

TEST_CASE("payload shape, exactness and thread independence") {
  RequestOptions four;
  four.threads = 4;
  for (const auto& request : sample_requests()) {
    CAPTURE(request.dump());
    const json one = run(request);
    CHECK(numbers_are_strings(one));
    CHECK(one["engine_version"] == kEngineVersion);
    CHECK(one["result"].contains("exactness"));
    CHECK(one.dump() == run(request).dump());
    CHECK(one.dump() == run(request, four).dump());
  }
}

TEST_CASE("genfunc with supplied alt values") {
  // C(3, m) for d = 3 at height 0.
  const json ok = run({{"command", "genfunc"},
                       {"params", {{"height", 0}, {"d", 3}, {"max_m", 4}, {"alt_source", "file"},
                                   {"alt_values", {"1", "3", "3", "1", "0"}}}}});
  CHECK(ok["result"]["identity_holds"] == true);
  const json bad = run({{"command", "genfunc"},
                        {"params", {{"height", 0}, {"d", 3}, {"max_m", 4}, {"alt_source", "file"},
                                    {"alt_values", {"1", "3", "4", "1", "0"}}}}});
  CHECK(bad["result"]["identity_holds"] == false);
  CHECK(bad["result"]["first_failure"] == "2");
}
