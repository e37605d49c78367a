#include "altpow/altpow.h"

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "altpow/cache.hpp"
#include "altpow/error.hpp"
#include "altpow/request.hpp"

using nlohmann::json;

struct altpow_context {
  altpow::RequestOptions options;
  std::optional<std::string> cache_dir;
  std::string last_error;
};

struct altpow_result {
  std::string json;
  bool cache_hit = false;
  std::vector<std::string> warnings;
};

namespace {

altpow_status status_for(altpow::ErrorCode code) {
  using altpow::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return ALTPOW_ERR_INVALID_ARGUMENT;
    case ErrorCode::OrderBoundExceeded: return ALTPOW_ERR_ORDER_BOUND_EXCEEDED;
    case ErrorCode::TooManySylows: return ALTPOW_ERR_TOO_MANY_SYLOWS;
    case ErrorCode::NotCocycle: return ALTPOW_ERR_NOT_COCYCLE;
    case ErrorCode::NotCommuting: return ALTPOW_ERR_NOT_COMMUTING;
    case ErrorCode::NotClassFunction: return ALTPOW_ERR_NOT_CLASS_FUNCTION;
    case ErrorCode::ConstraintMismatch: return ALTPOW_ERR_CONSTRAINT_MISMATCH;
    case ErrorCode::NotUnit: return ALTPOW_ERR_NOT_UNIT;
    case ErrorCode::Internal: return ALTPOW_ERR_INTERNAL;
  }
  return ALTPOW_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* altpow_version(void) { return altpow::kEngineVersion; }

const char* altpow_status_string(altpow_status status) {
  switch (status) {
    case ALTPOW_OK: return "ok";
    case ALTPOW_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case ALTPOW_ERR_ORDER_BOUND_EXCEEDED: return "OrderBoundExceeded";
    case ALTPOW_ERR_TOO_MANY_SYLOWS: return "TooManySylows";
    case ALTPOW_ERR_NOT_COCYCLE: return "NotCocycle";
    case ALTPOW_ERR_NOT_COMMUTING: return "NotCommuting";
    case ALTPOW_ERR_NOT_CLASS_FUNCTION: return "NotClassFunction";
    case ALTPOW_ERR_CONSTRAINT_MISMATCH: return "ConstraintMismatch";
    case ALTPOW_ERR_NOT_UNIT: return "NotUnit";
    case ALTPOW_ERR_INTERNAL: return "Internal";
    case ALTPOW_ERR_BAD_JSON: return "BadJson";
    case ALTPOW_ERR_NULL_ARGUMENT: return "NullArgument";
  }
  return "unknown";
}

int altpow_status_exit_code(altpow_status status) {
  switch (status) {
    case ALTPOW_OK: return 0;
    case ALTPOW_ERR_ORDER_BOUND_EXCEEDED:
    case ALTPOW_ERR_TOO_MANY_SYLOWS: return 3;
    case ALTPOW_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

altpow_context* altpow_context_create(void) {
  try {
    return new altpow_context{};
  } catch (...) {
    return nullptr;
  }
}

void altpow_context_destroy(altpow_context* ctx) { delete ctx; }

altpow_status altpow_context_set_order_bound(altpow_context* ctx, uint64_t bound) {
  if (!ctx) return ALTPOW_ERR_NULL_ARGUMENT;
  if (bound == 0) {
    ctx->last_error = "order bound must be positive";
    return ALTPOW_ERR_INVALID_ARGUMENT;
  }
  ctx->options.order_bound = bound;
  return ALTPOW_OK;
}

altpow_status altpow_context_set_threads(altpow_context* ctx, unsigned threads) {
  if (!ctx) return ALTPOW_ERR_NULL_ARGUMENT;
  if (threads == 0) {
    ctx->last_error = "thread count must be positive";
    return ALTPOW_ERR_INVALID_ARGUMENT;
  }
  ctx->options.threads = threads;
  return ALTPOW_OK;
}

altpow_status altpow_context_set_cache_dir(altpow_context* ctx, const char* dir) {
  if (!ctx) return ALTPOW_ERR_NULL_ARGUMENT;
  if (dir) {
    ctx->cache_dir = dir;
  } else {
    ctx->cache_dir.reset();
  }
  return ALTPOW_OK;
}

const char* altpow_default_cache_dir(void) {
  thread_local std::string dir;
  dir = altpow::default_cache_dir().string();
  return dir.c_str();
}

const char* altpow_context_last_error(const altpow_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

altpow_status altpow_run(altpow_context* ctx, const char* request_json, altpow_result** out) {
  if (!ctx || !request_json || !out) return ALTPOW_ERR_NULL_ARGUMENT;
  *out = nullptr;
  ctx->last_error.clear();
  try {
    json request;
    try {
      request = json::parse(request_json);
    } catch (const json::exception& e) {
      ctx->last_error = std::string("request is not valid JSON: ") + e.what();
      return ALTPOW_ERR_BAD_JSON;
    }
    const json canonical = altpow::canonicalize_request(request, ctx->options);
    const std::string material = altpow::cache_key_material(canonical, ctx->options);

    auto result = std::make_unique<altpow_result>();
    std::optional<altpow::ResultCache> cache;
    if (ctx->cache_dir) cache.emplace(*ctx->cache_dir, altpow::kEngineVersion);

    json payload;
    bool have = false;
    if (cache) {
      auto hit = cache->lookup(material);
      result->warnings = std::move(hit.warnings);
      if (hit.payload) {
        payload = std::move(*hit.payload);
        result->cache_hit = true;
        have = true;
      }
    }
    if (!have) {
      payload = altpow::dispatch(canonical, ctx->options);
      if (cache) {
        for (auto& w : cache->store(material, payload)) result->warnings.push_back(std::move(w));
      }
    }
    result->json = payload.dump(2) + "\n";
    *out = result.release();
    return ALTPOW_OK;
  } catch (const altpow::Error& e) {
    ctx->last_error = e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return ALTPOW_ERR_INTERNAL;
  }
}

const char* altpow_result_json(const altpow_result* result) { return result ? result->json.c_str() : nullptr; }

int altpow_result_cache_hit(const altpow_result* result) { return result && result->cache_hit ? 1 : 0; }

size_t altpow_result_warning_count(const altpow_result* result) { return result ? result->warnings.size() : 0; }

const char* altpow_result_warning(const altpow_result* result, size_t index) {
  if (!result || index >= result->warnings.size()) return nullptr;
  return result->warnings[index].c_str();
}

void altpow_result_destroy(altpow_result* result) { delete result; }

}  // extern "C"
