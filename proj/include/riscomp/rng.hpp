// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace riscomp {

// Finalizer step of the splitmix64 generator. Advances `state` and returns
// the next output word.
inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Folds `value` into hash `h`. Used to derive independent stream keys from
// structured identifiers.
inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t value) {
    std::uint64_t s = h ^ (value + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    return splitmix64(s);
}

// FNV-1a over a byte string, for hashing canonical text forms.
inline std::uint64_t fnv1a64(const char *data, std::size_t len) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 0x100000001b3ull;
    }
    return h;
}

// Counter-based random stream addressed by (seed, counter, tag).
// The same triple always reproduces the same draw sequence regardless of
// which thread consumes it or what other streams exist, so Monte Carlo
// trials stay bit-identical under any parallel schedule.
//
// Internally an xoshiro256++ generator whose state is expanded from the
// address triple with splitmix64, the seeding procedure recommended for
// the xoshiro family.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t counter, std::uint64_t tag) {
        std::uint64_t key = 0x243f6a8885a308d3ull;
        key = hash_combine(key, seed);
        key = hash_combine(key, counter);
        key = hash_combine(key, tag);
        for (auto &word : state_) word = splitmix64(key);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Standard normal deviate via Box-Muller. Pairs are cached per stream,
    // never shared across streams.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_double();
        const double u2 = next_double();
        // 1 - u1 lies in (0, 1], keeping the log argument positive.
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Circularly symmetric complex normal with unit total variance,
    // i.e. variance 1/2 per real component.
    std::complex<double> next_cn() {
        const double re = next_gaussian();
        const double im = next_gaussian();
        return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stable stream tags for every link class in the network. A tag plus the
// trial counter and master seed fully addresses one draw sequence.
namespace streamtag {

inline constexpr std::uint64_t direct(int bs, int user) {
    return (1ull << 56) | (static_cast<std::uint64_t>(bs) << 20) |
           static_cast<std::uint64_t>(user);
}
inline constexpr std::uint64_t bs_ris(int cell) {
    return (2ull << 56) | static_cast<std::uint64_t>(cell);
}
inline constexpr std::uint64_t ris_edge(int cell) {
    return (3ull << 56) | static_cast<std::uint64_t>(cell);
}
inline constexpr std::uint64_t random_phases() { return 4ull << 56; }
inline constexpr std::uint64_t aoa(int cell, int hop) {
    return (5ull << 56) | (static_cast<std::uint64_t>(cell) << 20) |
           static_cast<std::uint64_t>(hop);
}

}  // namespace streamtag

}  // namespace riscomp
