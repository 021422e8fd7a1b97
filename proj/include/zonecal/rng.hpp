// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace zonecal {

// Deterministic, self-contained RNG. Standard-library distributions are
// implementation-defined, which would break the bit-identical-output
// contract, so sampling is done explicitly here.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Labelled substream derivation: hash the label and counters into the seed
// so enabling one consumer does not shift the draws of another.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                 std::uint64_t index = 0) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    std::uint64_t s = master ^ h;
    (void)splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ull * (index + 1);
    std::uint64_t mix = s;
    return splitmix64(mix);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
        have_cached_normal_ = false;
    }

    // xoshiro256++
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

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). Multiply-shift bound; bias is O(n / 2^64).
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_int: empty range");
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller; one draw cached.
    double normal() {
        if (have_cached_normal_) {
            have_cached_normal_ = false;
            return cached_normal_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        cached_normal_ = r * std::sin(a);
        have_cached_normal_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// k distinct indices from [0, n), in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
        // partial Fisher-Yates over an index pool
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out(k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(uniform_int(n - i));
            std::swap(pool[i], pool[j]);
            out[i] = pool[i];
        }
        return out;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double cached_normal_ = 0.0;
    bool have_cached_normal_;
};

}  // namespace zonecal
