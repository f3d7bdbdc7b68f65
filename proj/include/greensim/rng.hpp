#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace greensim::rng {

// splitmix64 finalizer; the basis of every deterministic stream in the simulator.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (0x9E3779B97F4A7C15ull + b + (a << 6) + (a >> 2)));
}

constexpr std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a 64
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

// uniform in [0,1) from 53 random bits
constexpr double to_unit(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

// Keyed one-shot draws. Counter-based, so the value depends only on the key
// tuple, never on call order. This is what makes sensor noise reproducible
// per (seed, sensor id, tick) even when the suite composition changes.
inline double uniform_at(std::uint64_t key, std::uint64_t a, std::uint64_t b = 0) {
    return to_unit(splitmix64(mix(mix(key, a), b)));
}

inline double normal_at(std::uint64_t key, std::uint64_t a, std::uint64_t b = 0) {
    const double u1 = to_unit(splitmix64(mix(mix(key, a), mix(b, 0x6A09E667F3BCC909ull))));
    const double u2 = to_unit(splitmix64(mix(mix(key, a), mix(b, 0xBB67AE8584CAA73Bull))));
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));  // 1-u1 in (0,1], log finite
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

// Sequential stream over the same generator, for places where draw order is
// naturally serial (weight init, dataset shuffling).
class Stream {
public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    Stream substream(std::string_view label) const { return Stream(mix(key_, hash_str(label))); }
    Stream substream(std::uint64_t salt) const { return Stream(mix(key_, salt)); }

    std::uint64_t next_u64() { return splitmix64(mix(key_, ctr_++)); }
    double uniform01() { return to_unit(next_u64()); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal(double mean = 0.0, double sd = 1.0) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        return mean + sd * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    // unbiased integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t u;
        do {
            u = next_u64();
        } while (u >= limit);
        return u % n;
    }

    std::uint64_t key() const { return key_; }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

}  // namespace greensim::rng
