/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "special.hpp"

#include <cmath>

namespace dent {

namespace {
// Point beyond which the Bernoulli asymptotic series is accurate to ~1e-14.
constexpr double kAsymptoticCut = 10.0;
} // namespace

double digamma(double x) {
    double acc = 0.0;
    while (x < kAsymptoticCut) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // ln x - 1/(2x) - sum of even Bernoulli terms B_2k / (2k x^{2k})
    double series = inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
                    inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

double trigamma(double x) {
    double acc = 0.0;
    while (x < kAsymptoticCut) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 1.0 + inv * 0.5 + inv2 * (1.0 / 6.0 - inv2 * (1.0 / 30.0 - inv2 *
                    (1.0 / 42.0 - inv2 * (1.0 / 30.0 - inv2 * (5.0 / 66.0)))));
    return acc + inv * series;
}

double xlogx(double x) {
    return x > 0.0 ? x * std::log(x) : 0.0;
}

std::vector<double> harmonic_table(std::uint64_t n) {
    std::vector<double> h(n + 1);
    h[0] = 0.0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        h[j] = h[j - 1] + 1.0 / static_cast<double>(j);
    }
    return h;
}

} // namespace dent
