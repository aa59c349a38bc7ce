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

#include <optional>
#include <string>
#include <string_view>

#include "counts.hpp"

namespace dent {

/// The estimator family. Abbreviations follow the common usage in the
/// entropy-estimation literature.
enum class EstimatorId {
    Ml,   // maximum likelihood / plug-in
    Mm,   // Miller-Madow
    Gsb88,
    Gsb03,
    Shu,  // Schurmann xi-family
    Cs,   // Chao-Shen
    Z,    // Zhang
    Shr,  // James-Stein shrinkage
    B,    // Bonachela-Hinrichsen-Munoz balanced
    Cw,   // Chao-Wang-Jost
    Pym,  // Pitman-Yor mixture
    Bay,  // Dirichlet with user concentration
    Lap,  // Laplace (alpha = 1)
    Jef,  // Jeffreys (alpha = 1/2)
    Sg,   // Schurmann-Grassberger (alpha = 1/K)
    Min,  // minimax (alpha = sqrt(N)/K)
    Nsb,
    Ansb,
};

inline constexpr int kEstimatorCount = 18;

const char* estimator_name(EstimatorId id);
std::optional<EstimatorId> parse_estimator(std::string_view name);

/// Selects one estimator plus its free parameters. Unset K defaults to the
/// observed support; the benchmark passes the true domain size instead.
struct EstimatorSpec {
    EstimatorId id = EstimatorId::Ml;
    std::optional<double> alpha;      // Dirichlet concentration (BAY)
    std::optional<double> xi;         // Schurmann parameter (SHU)
    std::optional<std::uint64_t> k;   // assumed alphabet size

    static EstimatorSpec make(EstimatorId id) { return EstimatorSpec{id, {}, {}, {}}; }
};

struct EntropyEstimate {
    double value = 0.0; // nats; NaN/Inf are legal for PYM and ANSB
    EstimatorSpec spec;
};

/// Default Schurmann parameter, exp(-1/2).
double schurmann_default_xi();

// All estimators take a non-empty histogram and return nats. They are pure
// and never mutate or retain their input.
double maximum_likelihood(const CountHistogram& h);
double miller_madow(const CountHistogram& h);
double grassberger88(const CountHistogram& h);
double grassberger03(const CountHistogram& h);
double schurmann(const CountHistogram& h, double xi);
double chao_shen(const CountHistogram& h);
double zhang(const CountHistogram& h);
double shrink(const CountHistogram& h, std::uint64_t assumed_k);
double bonachela(const CountHistogram& h);
double chao_wang_jost(const CountHistogram& h);
double dirichlet_plugin(const CountHistogram& h, double alpha, std::uint64_t assumed_k);
double nsb(const CountHistogram& h, std::uint64_t assumed_k);
double ansb(const CountHistogram& h);
double pym(const CountHistogram& h);

/// Dispatch on spec.id, applying parameter defaults and presets.
EntropyEstimate estimate_entropy(const CountHistogram& h, const EstimatorSpec& spec);

} // namespace dent
