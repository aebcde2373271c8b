#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace adapt::rng {

// splitmix64: small, fast, platform-stable mixer. Used for seeded
// tie-breaking and for stochastic outcome rules so that results depend only
// on (seed, identifier), never on evaluation order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Stable pseudo-random key for ordering equal-utility entries.
inline std::uint64_t tie_key(std::uint64_t seed, std::string_view id) {
    return splitmix64(seed ^ fnv1a(id));
}

// Uniform double in [0,1) derived from (seed, id, salt).
inline double unit_draw(std::uint64_t seed, std::string_view id, std::uint64_t salt) {
    std::uint64_t bits = splitmix64(splitmix64(seed ^ fnv1a(id)) ^ salt);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace adapt::rng
