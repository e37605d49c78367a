#pragma once

// Requests: canonical form, cache keys and dispatch to the engines.

#include <string>
#include <vector>

#include "altpow/error.hpp"
#include "altpow/group_engine.hpp"
#include "json.hpp"

namespace altpow {

inline constexpr const char* kEngineVersion = "altpow-engine/1.0.0";

struct RequestOptions {
  std::uint64_t order_bound = kDefaultOrderBound;
  unsigned threads = 1;
};

// {"command": ..., "params": {...}} with every parameter validated, defaults
// filled in, integers as decimal strings and group specs in canonical form.
// Throws InvalidArgument on anything malformed.
nlohmann::json canonicalize_request(const nlohmann::json& request, const RequestOptions& options = {});

// Text hashed for the cache key. The order bound is included because it
// decides whether a request fails; the thread count is not.
std::string cache_key_material(const nlohmann::json& canonical, const RequestOptions& options);

// Runs a canonical request. The payload is deterministic: it depends only on
// the canonical request and the engine version.
nlohmann::json dispatch(const nlohmann::json& canonical, const RequestOptions& options = {});

// Exit status for an error code: 2 for invalid input, 3 for computation
// bounds, 1 otherwise.
int exit_status_for(ErrorCode code);

}  // namespace altpow
