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

#include <array>
#include <optional>
#include <string_view>

#include "estimators.hpp"

namespace dent {

enum class Measure { H, MI, CMI };

const char* measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);
int measure_arity(Measure m);

/// I(X;Y) = H(X) + H(Y) - H(X,Y), one estimator for all three terms.
/// `true_dims`, when known, supplies the per-axis alphabet sizes used as K by
/// the alphabet-aware estimators; otherwise observed support is used (and a
/// caller-provided spec.k, if any, applies to the joint term only).
/// Negative results are returned as-is.
double mi_estimate(const JointHistogram& j, const EstimatorSpec& spec,
                   const std::optional<std::array<std::uint64_t, 2>>& true_dims = std::nullopt);

/// I(X;Y|Z) = H(X,Z) + H(Y,Z) - H(X,Y,Z) - H(Z) with one estimator for all
/// four terms. Axis order of the joint is (X, Y, Z).
double cmi_estimate(const JointHistogram& j, const EstimatorSpec& spec,
                    const std::optional<std::array<std::uint64_t, 3>>& true_dims = std::nullopt);

/// Uniform entry point used by the benchmark and the CLI.
double measure_estimate(const CountHistogram& h, Measure m, const EstimatorSpec& spec);
double measure_estimate(const JointHistogram& j, Measure m, const EstimatorSpec& spec);

} // namespace dent
