#include "altpow/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "altpow/error.hpp"

namespace altpow {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorCode::Internal, "SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

ResultCache::ResultCache(fs::path dir, std::string engine_version)
    : dir_(std::move(dir)), version_(std::move(engine_version)) {}

fs::path ResultCache::entry_path(const std::string& key) const { return dir_ / (key + ".json"); }

CacheLookup ResultCache::lookup(const std::string& material) const {
  CacheLookup out;
  const std::string key = key_for(material);
  const fs::path path = entry_path(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return out;

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    out.warnings.push_back("cache entry " + path.string() + " is unreadable; recomputing");
    return out;
  }
  json entry;
  try {
    entry = json::parse(in);
  } catch (const json::exception&) {
    out.warnings.push_back("cache entry " + path.string() + " is corrupted; recomputing");
    return out;
  }
  if (!entry.is_object() || !entry.contains("engine_version") || !entry.contains("key") ||
      !entry.contains("request") || !entry.contains("payload")) {
    out.warnings.push_back("cache entry " + path.string() + " is malformed; recomputing");
    return out;
  }
  if (entry["engine_version"] != version_) return out;
  if (entry["key"] != key || entry["request"] != material) {
    out.warnings.push_back("cache entry " + path.string() + " does not match its key; recomputing");
    return out;
  }
  out.payload = entry["payload"];
  return out;
}

std::vector<std::string> ResultCache::store(const std::string& material, const json& payload) const {
  std::vector<std::string> warnings;
  const std::string key = key_for(material);
  const fs::path path = entry_path(key);

  // Write-once: keep a valid existing entry untouched.
  const CacheLookup existing = lookup(material);
  if (existing.payload) return warnings;

  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    warnings.push_back("cannot create cache directory " + dir_.string() + ": " + ec.message());
    return warnings;
  }
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmp_name;
  tmp_name << key << ".tmp." << ::getpid() << "." << counter++ << "."
           << std::chrono::steady_clock::now().time_since_epoch().count();
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    const json entry{{"engine_version", version_}, {"key", key}, {"request", material}, {"payload", payload}};
    out << entry.dump(2) << "\n";
    out.flush();
    if (!out) {
      warnings.push_back("cannot write cache entry " + tmp.string());
      fs::remove(tmp, ec);
      return warnings;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    warnings.push_back("cannot publish cache entry " + path.string() + ": " + ec.message());
    fs::remove(tmp, ec);
  }
  return warnings;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("ALTPOW_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "altpow";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "altpow";
  return fs::temp_directory_path() / "altpow-cache";
}

}  // namespace altpow
