#ifndef EXCONS_RANDOM_HPP
#define EXCONS_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace excons {

// Every random draw in the library flows through the helpers below so that
// results are reproducible bit-for-bit across platforms. std::mt19937_64 has
// a standard-pinned algorithm; the distributions do not, so we avoid them.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic sub-seed for a unit of work (attempt, tree, explained row,
/// ...). Chaining over the labels keeps independent units decorrelated while
/// staying schedule-independent.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> labels) {
    std::uint64_t s = splitmix64(base);
    for (std::uint64_t label : labels)
        s = splitmix64(s ^ (label + 0x9e3779b97f4a7c15ull));
    return s;
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t label) {
    return derive_seed(base, {label});
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), n > 0. Multiply-shift; no modulo bias worth
    /// caring about at these ranges, and deterministic everywhere.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

    template <typename T>
    void shuffle(std::span<T> values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    /// k distinct indices drawn from [0, n), in draw order (k <= n).
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        // Partial Fisher-Yates over a scratch index vector: O(n) space, but n
        // here is a row count, never astronomically large.
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i)
            pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(bounded(n - i));
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace excons

#endif
