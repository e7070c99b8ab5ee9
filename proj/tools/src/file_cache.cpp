#include "file_cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>
#include <unistd.h>

namespace syzlab::cli {

namespace {

constexpr std::string_view kHeader = "syzlab-cache 1\n";

std::atomic<unsigned> temp_counter{0};

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::filesystem::path default_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("SYZ_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "syzlab";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "syzlab";
  }
  return std::filesystem::temp_directory_path() / "syzlab-cache";
}

FileCache::FileCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path FileCache::entry_path(std::string_view kind, const std::string& key) const {
  return dir_ / std::string(kind) / sha256_hex(key);
}

std::optional<std::string> FileCache::load(std::string_view kind, const std::string& key) {
  std::ifstream in(entry_path(kind, key), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // header, key length, key, payload
  std::size_t pos = kHeader.size();
  if (text.compare(0, kHeader.size(), kHeader) != 0) {
    ++misses_;
    return std::nullopt;
  }
  std::size_t eol = text.find('\n', pos);
  std::size_t key_length = 0;
  try {
    key_length = std::stoull(text.substr(pos, eol - pos));
  } catch (const std::exception&) {
    ++misses_;
    return std::nullopt;
  }
  pos = eol + 1;
  if (eol == std::string::npos || text.size() < pos + key_length ||
      text.compare(pos, key_length, key) != 0) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return text.substr(pos + key_length);
}

void FileCache::store(std::string_view kind, const std::string& key, const std::string& payload) {
  const auto path = entry_path(kind, key);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return;
  auto temp = path;
  temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(temp_counter++);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << kHeader << key.size() << '\n' << key << payload;
    if (!out.flush()) {
      std::filesystem::remove(temp, ec);
      return;
    }
  }
  std::filesystem::rename(temp, path, ec);
  if (ec) std::filesystem::remove(temp, ec);
}

}  // namespace syzlab::cli
