#ifndef NPSPEC_TOOLS_CACHE_HPP
#define NPSPEC_TOOLS_CACHE_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unistd.h>

// Spectrum cache: one JSON file per (family, geometry, N, scheme) key.
// Writes are atomic (temp file + rename); a cache hit returns the stored
// bytes verbatim so repeated runs emit identical payloads.
namespace cache {

inline std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::filesystem::path file_for_key(const std::string& dir, const std::string& key) {
  return std::filesystem::path(dir) / ("spectrum-" + fnv1a_hex(key) + ".json");
}

inline std::optional<std::string> lookup(const std::string& dir, const std::string& key) {
  const auto p = file_for_key(dir, key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return body;
}

inline void store(const std::string& dir, const std::string& key, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto p = file_for_key(dir, key);
  const auto tmp = p.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;   // cache failures are non-fatal
    }
  }
  std::filesystem::rename(tmp, p, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace cache

#endif
