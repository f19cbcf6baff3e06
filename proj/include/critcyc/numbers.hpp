#pragma once

#include <cstdint>

namespace critcyc {

using u128 = unsigned __int128;

inline constexpr u128 kSaturated = ~u128{0};

inline u128 sat_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

inline u128 sat_pow(u128 base, std::uint64_t exp) {
  u128 r = 1;
  while (exp > 0) {
    r = sat_mul(r, base);
    if (r == kSaturated) return kSaturated;
    --exp;
  }
  return r;
}

inline bool pow_at_least(u128 base, std::uint64_t exp, u128 target) {
  return sat_pow(base, exp) >= target;
}

}  // namespace critcyc
