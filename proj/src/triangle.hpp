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

#include <cstdint>
#include <span>
#include <vector>

#include "estimators.hpp"

namespace dent {

enum class TriangleKind : std::int64_t { Equilateral = 0, Isosceles = 1, Scalene = 2 };

/// Classify a triangle from its three side lengths; the first side plays the
/// role of a secret input in the leakage demo.
TriangleKind triangle_kind(std::int64_t high, std::int64_t low1, std::int64_t low2);

/// Leakage demo: draw n uniform (high, low1, low2) triples from [lo, hi],
/// classify them, and estimate I(high ; kind | low1, low2) with each of the
/// given estimators. Deterministic per seed.
std::vector<double> triangle_leakage(std::uint64_t n, std::uint64_t seed, std::int64_t lo,
                                     std::int64_t hi, std::span<const EstimatorSpec> specs);

} // namespace dent
