#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "syzlab/cache.hpp"

namespace syzlab::cli {

/// On-disk cache: <dir>/<kind>/<sha256 of key>. Each entry stores the full
/// key so a digest collision reads as a miss. Writes go through a temporary
/// file and a rename.
class FileCache : public ComputationCache {
 public:
  explicit FileCache(std::filesystem::path dir);

  std::optional<std::string> load(std::string_view kind, const std::string& key) override;
  void store(std::string_view kind, const std::string& key, const std::string& payload) override;

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  std::filesystem::path entry_path(std::string_view kind, const std::string& key) const;

  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

std::string sha256_hex(std::string_view data);

/// --cache-dir, else $SYZ_CACHE_DIR, else $XDG_CACHE_HOME/syzlab, else ~/.cache/syzlab.
std::filesystem::path default_cache_dir(const std::optional<std::string>& flag);

}  // namespace syzlab::cli
