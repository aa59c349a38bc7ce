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
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "counts.hpp"
#include "shannon.hpp"

namespace dent {

/// Ground-truth level of the generated distributions: small, medium or large
/// information content relative to the measure-specific maximum.
enum class GtLevel { S, M, L };

const char* gt_level_name(GtLevel level);
std::optional<GtLevel> parse_gt_level(std::string_view name);

/// Target band as fractions of the measure-specific maximum.
struct Band {
    double lo = 0.0;
    double hi = 1.0;
};

Band band_for(GtLevel level);

struct DiscretePmf {
    std::vector<double> probs; // nonnegative, sums to 1 within 1e-12
    std::uint64_t domain() const { return probs.size(); }
};

struct JointPmf {
    int arity = 2;
    std::array<std::uint64_t, 3> dims{0, 0, 1}; // dims[2] == 1 when arity == 2
    std::vector<double> probs;                  // dense, row-major (x, y[, z])
    std::uint64_t domain() const { return dims[0] * dims[1] * dims[2]; }
};

double exact_entropy(const DiscretePmf& p);
double exact_entropy(std::span<const double> probs);
double exact_mi(const JointPmf& j);
double exact_cmi(const JointPmf& j);

/// Ground truth of the measure the joint was generated for.
double exact_measure(const JointPmf& j, Measure m);

/// Random pmf over k symbols whose exact entropy lands in the level band.
/// Deterministic per seed; throws GenerationError after the retry cap.
DiscretePmf generate_pmf(std::uint64_t k, GtLevel level, std::uint64_t seed);

/// Random joint over the given dims. Levels S and L tune a coupled/product
/// mixture until the exact MI (arity 2) or CMI (arity 3) lands in the band
/// relative to the per-instance maximum; level M is the unstructured
/// scenario, a flat-Dirichlet random table with no enforced coupling.
JointPmf generate_joint(std::span<const std::uint64_t> dims, Measure measure, GtLevel level,
                        std::uint64_t seed);

/// N i.i.d. draws by inverse CDF; deterministic per seed.
CountHistogram sample_hist(const DiscretePmf& p, std::uint64_t n, std::uint64_t seed);
JointHistogram sample_joint(const JointPmf& p, std::uint64_t n, std::uint64_t seed);

/// Raw draws, for writing sample files: symbol indices (1-D) or row-major
/// tuple indices.
std::vector<std::uint64_t> draw_indices(const DiscretePmf& p, std::uint64_t n, std::uint64_t seed);
std::vector<std::uint64_t> draw_tuples(const JointPmf& p, std::uint64_t n, std::uint64_t seed);

} // namespace dent
