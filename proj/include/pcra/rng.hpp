// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random number generator (splitmix64 core). The standard
// library distributions are implementation-defined, so every stochastic
// component (weight init, dropout, shuffling, simulation) draws from this
// generator to keep seed -> output reproducible across toolchains.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace pcra {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Standard normal via Box-Muller (one value per call, no caching).
    double normal(double mean = 0.0, double stddev = 1.0) {
        double u1 = next_unit();
        double u2 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Derive an independent stream (for per-component sub-generators).
    Rng fork(std::uint64_t stream) {
        return Rng(next_u64() ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace pcra
