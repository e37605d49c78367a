#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace altpow {

std::string sha256_hex(const std::string& data);

struct CacheLookup {
  std::optional<nlohmann::json> payload;
  std::vector<std::string> warnings;
};

// One JSON file per key under dir. Entries are never rewritten once present
// and valid; publication goes through a temp file and rename.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::string engine_version);

  static std::string key_for(const std::string& material) { return sha256_hex(material); }

  CacheLookup lookup(const std::string& material) const;
  std::vector<std::string> store(const std::string& material, const nlohmann::json& payload) const;

  std::filesystem::path entry_path(const std::string& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string version_;
};

std::filesystem::path default_cache_dir();

}  // namespace altpow
