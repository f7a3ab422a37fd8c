#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace reef {

// FNV-1a; used for the short stable digests of plan/summary text that go
// into event records.
inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex_digest(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  return std::string(buf);
}

}  // namespace reef
