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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "synth.hpp"

namespace dent {

/// Full description of a benchmark run. Defaults are the desk-scale setup;
/// domain sizes above 4096 require the explicit full_scale opt-in.
struct ExperimentConfig {
    std::vector<Measure> measures{Measure::MI};
    std::vector<std::uint64_t> k_grid{256, 1024, 4096};
    std::vector<int> n_exponents{3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
    std::uint32_t repetitions = 200;
    std::vector<GtLevel> gt_levels{GtLevel::S, GtLevel::M, GtLevel::L};
    std::vector<std::string> estimators; // empty = all 18 in canonical order
    std::uint64_t master_seed = 0;
    bool seed_set = false;
    double flattening_bound = 0.1;
    int penalty_exponent = 15;
    double bay_alpha = 0.0;
    std::optional<double> shu_xi;
    // Alphabet sizes handed to the K-aware estimators: observed support
    // (the estimators' own default) or the true per-axis domain sizes.
    bool bayesian_k_true = false;
    unsigned threads = 0; // 0 = hardware concurrency
    bool full_scale = false;

    static ExperimentConfig parse(const std::string& text);
    static ExperimentConfig load(const std::string& path);
    void validate() const;

    std::vector<EstimatorSpec> estimator_specs() const;
    std::vector<std::string> estimator_names() const;
};

/// Per-axis alphabet sizes used for a joint measure at domain size k.
std::vector<std::uint64_t> dims_for(Measure m, std::uint64_t k);

struct MseCurve {
    std::string estimator;
    Measure measure = Measure::MI;
    std::uint64_t k = 0;
    std::vector<double> mse; // one entry per n_exponent; NaN/Inf preserved
};

struct BenchResult {
    ExperimentConfig config;
    std::vector<MseCurve> curves; // measure-major, then k, then estimator
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Run the (measure x gt x k x repetition) grid. Parallel over cells with
/// per-cell derived seeds; results are identical for any worker count.
BenchResult run_grid(const ExperimentConfig& cfg, const ProgressFn& progress = {});

/// Smallest grid exponent from which every consecutive MSE delta stays below
/// the bound; nullopt when the curve never settles (including trailing NaN).
std::optional<int> flattening_point(std::span<const double> mse, int first_exponent, double fb);

struct SlopeNorm {
    double slope = 0.0;
    double l2 = 0.0;
};

/// Least-squares slope over grid index 1..n and Euclidean norm of the
/// flattening-off exponents, not-converged entries padded with `penalty`.
SlopeNorm slope_and_norm(std::span<const std::optional<int>> fps, int penalty);

/// 2^fp / k; empty when not converged.
std::optional<double> fp_ratio(const std::optional<int>& fp, std::uint64_t k);

/// Trapezoidal area under the MSE curve against the exponent axis.
double auc(std::span<const double> mse);

struct AucSplit {
    double below = 0.0; // exponents < split
    double from = 0.0;  // exponents >= split
};

AucSplit auc_split(std::span<const double> mse, std::size_t from_index);

/// Write mse_<measure>_k<k>.csv, fp_<measure>.csv, ratios_<measure>.csv,
/// auc_<measure>.csv and auc_split_<measure>.csv under out_dir.
void export_reports(const BenchResult& result, const std::string& out_dir);

/// Analytics over an externally produced MSE matrix (same schema as the
/// mse_*.csv files): per-estimator flattening point and AUC splits.
void report_from_mse_csv(const std::string& mse_csv, double fb, const std::string& out_csv);

} // namespace dent
