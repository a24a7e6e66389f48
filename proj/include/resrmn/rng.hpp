#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace resrmn {

/// Named deterministic random stream.
///
/// Every weight matrix of a model is drawn from its own (seed, label) stream
/// ("W_h", "W_x", "W_m", "b_h", "V_x", "O", ...), so ablating one matrix --
/// e.g. switching the residual connection or zeroing a scaling -- leaves all
/// other draws untouched. Identical (seed, label) pairs reproduce identical
/// draw sequences across runs and platforms: doubles are built directly from
/// the mt19937_64 bit stream instead of going through
/// std::uniform_real_distribution, whose output is implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view label)
        : seed_(seed), label_(label), engine_(mix(seed ^ fnv1a(label))) {}

    std::uint64_t seed() const { return seed_; }
    const std::string& label() const { return label_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw strictly inside (-1, 1).
    double next_uniform() {
        // 53-bit mantissa, offset by half an ulp so endpoints are excluded.
        const double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
        return 2.0 * u - 1.0;
    }

    /// Uniform draw strictly inside (-scale, scale); exactly scale * next_uniform().
    double next_uniform(double scale) { return scale * next_uniform(); }

    /// Unbiased integer in [0, n), n >= 1. Used for shuffles and sampling.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (const char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    /// splitmix64 finalizer; decorrelates nearby seed values.
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t seed_;
    std::string label_;
    std::mt19937_64 engine_;
};

} // namespace resrmn
