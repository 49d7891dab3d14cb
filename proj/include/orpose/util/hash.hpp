#pragma once

#include <cstdint>
#include <string>

namespace orpose {

// FNV-1a over bytes, rendered as 16 hex digits. Used for config and skeleton
// fingerprints in manifests and checkpoints.
inline uint64_t fnv1a64(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex_hash(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  uint64_t h = fnv1a64(s.data(), s.size());
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace orpose
