#pragma once

/// @file rng.hpp
/// @brief Deterministic, splittable pseudo-random stream.
///
/// The generator is xoshiro256** seeded through splitmix64. Every
/// distribution used by the library (uniform reals, bounded integers,
/// normals) is implemented here rather than through <random>
/// distributions, whose output is implementation-defined. A fixed seed
/// therefore yields the same sequence on every compiler and platform.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace ringga {

/// Name recorded in output metadata so runs can be reproduced.
inline constexpr std::string_view rng_name = "xoshiro256** (splitmix64 seeding)";

/// One step of splitmix64. Also used as a 64-bit mixing function.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t s = a ^ std::rotl(b, 23) ^ 0x2545f4914f6cdd1dULL;
    splitmix64(s);
    return splitmix64(s) ^ b;
}

/// FNV-1a over a short tag, for stable seed derivation from names.
constexpr std::uint64_t hash_tag(std::string_view tag) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

class RngStream {
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed) noexcept : seed_{seed} {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept { return next(); }

    result_type next() noexcept {
        const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

    /// Uniform real in [0, 1) with 53 bits of resolution.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lower, double upper) noexcept {
        return lower + (upper - lower) * uniform01();
    }

    /// Unbiased integer in [0, n). Lemire's multiply-and-reject.
    std::uint64_t below(std::uint64_t n) noexcept {
        if (n <= 1) return 0;
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Standard normal via the Marsaglia polar method. The second
    /// variate of each accepted pair is discarded so that the stream
    /// carries no hidden cache.
    double normal() noexcept {
        double u = 0.0;
        double v = 0.0;
        double s = 0.0;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        return u * std::sqrt(-2.0 * std::log(s) / s);
    }

    /// Independent child stream keyed by `key`; does not advance this one.
    [[nodiscard]] RngStream derive(std::uint64_t key) const noexcept {
        return RngStream{mix64(seed_, key)};
    }

    std::uint64_t seed() const noexcept { return seed_; }

    friend bool operator==(const RngStream&, const RngStream&) = default;

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
};

} // namespace ringga
