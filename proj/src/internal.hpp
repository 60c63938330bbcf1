#ifndef EXCONS_SRC_INTERNAL_HPP
#define EXCONS_SRC_INTERNAL_HPP

#include <cstdint>
#include <string_view>

// Shared between translation units but not part of the public surface.
namespace excons {

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Labels that keep derived seed streams for different pipeline stages
// disjoint. Changing a value changes every downstream draw, so they are
// frozen.
namespace stage {
inline constexpr std::uint64_t generate = 0xA1;
inline constexpr std::uint64_t split = 0xA2;
inline constexpr std::uint64_t candidate = 0xA3;
inline constexpr std::uint64_t tree = 0xA4;
inline constexpr std::uint64_t permutation = 0xA5;
inline constexpr std::uint64_t shapley_row = 0xA6;
inline constexpr std::uint64_t pick_rows = 0xA7;
inline constexpr std::uint64_t dataset_cell = 0xA8;
inline constexpr std::uint64_t model_cell = 0xA9;
} // namespace stage

} // namespace excons

#endif
