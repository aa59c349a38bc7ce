/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dent {

/// splitmix64 step; also the seed-mixing primitive for deriving independent
/// per-cell streams from (master seed, coordinates).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t state = 0x6a09e667f3bcc909ULL;
    std::uint64_t acc = 0;
    for (std::uint64_t p : parts) {
        state ^= p + 0x9e3779b97f4a7c15ULL + (acc << 6) + (acc >> 2);
        acc = splitmix64(state);
    }
    return acc;
}

/// xoshiro256** seeded through splitmix64. Not std::mt19937 so that streams
/// are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        for (auto& word : s_) {
            word = splitmix64(seed);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi] (inclusive), unbiased via rejection.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do {
            draw = next_u64();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    double next_normal() {
        // Box-Muller; the sine partner is discarded to keep the stream layout
        // position-independent.
        double u1;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    /// ln of a Gamma(shape, 1) variate; stays finite for tiny shapes where the
    /// variate itself underflows.
    double next_log_gamma(double shape) {
        if (shape < 1.0) {
            double u;
            do {
                u = next_double();
            } while (u <= 0.0);
            return next_log_gamma(shape + 1.0) + std::log(u) / shape;
        }
        // Marsaglia-Tsang squeeze
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u;
            do {
                u = next_double();
            } while (u <= 0.0);
            if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
                return std::log(d) + std::log(v);
            }
        }
    }

    /// Symmetric Dirichlet(concentration) over k cells, computed in log space
    /// so extreme concentrations degrade to point masses instead of NaNs.
    std::vector<double> next_dirichlet(std::size_t k, double concentration) {
        std::vector<double> logs(k);
        double max_log = -1e308;
        for (auto& v : logs) {
            v = next_log_gamma(concentration);
            if (v > max_log) {
                max_log = v;
            }
        }
        double sum = 0.0;
        for (auto& v : logs) {
            v = std::exp(v - max_log);
            sum += v;
        }
        for (auto& v : logs) {
            v /= sum;
        }
        return logs;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

} // namespace dent
