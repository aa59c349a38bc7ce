/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "triangle.hpp"

#include "rng.hpp"
#include "shannon.hpp"

namespace dent {

TriangleKind triangle_kind(std::int64_t high, std::int64_t low1, std::int64_t low2) {
    if (high == low1 && low1 == low2) {
        return TriangleKind::Equilateral;
    }
    if (high == low1 || high == low2 || low1 == low2) {
        return TriangleKind::Isosceles;
    }
    return TriangleKind::Scalene;
}

std::vector<double> triangle_leakage(std::uint64_t n, std::uint64_t seed, std::int64_t lo,
                                     std::int64_t hi, std::span<const EstimatorSpec> specs) {
    if (n == 0) {
        throw ParameterError("demo needs at least one sample");
    }
    if (hi < lo) {
        throw ParameterError("empty input range");
    }
    Rng rng(seed);
    const std::int64_t span = hi - lo + 1;
    std::vector<std::int64_t> flat;
    flat.reserve(n * 3);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::int64_t high = rng.next_int(lo, hi);
        const std::int64_t low1 = rng.next_int(lo, hi);
        const std::int64_t low2 = rng.next_int(lo, hi);
        // axis order (X=secret, Y=observable, Z=public condition)
        flat.push_back(high);
        flat.push_back(static_cast<std::int64_t>(triangle_kind(high, low1, low2)));
        flat.push_back((low1 - lo) * span + (low2 - lo));
    }
    const JointHistogram joint = JointHistogram::from_tuples(3, flat);
    std::vector<double> out;
    out.reserve(specs.size());
    for (const auto& spec : specs) {
        out.push_back(cmi_estimate(joint, spec));
    }
    return out;
}

} // namespace dent
