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
#include <vector>

namespace dent {

inline constexpr double kEulerGamma = 0.5772156649015328606;

/// Digamma function psi(x) for x > 0. Bernoulli-series asymptotic with
/// upward recurrence to push small arguments into the asymptotic regime;
/// absolute error below 1e-12 over the domain used here.
double digamma(double x);

/// Trigamma function psi'(x) for x > 0, same scheme as digamma.
double trigamma(double x);

/// x * ln(x) with the 0 * ln(0) = 0 convention.
double xlogx(double x);

/// Harmonic numbers H_0..H_n (H_0 = 0). One pass, used for the cumulative
/// tail sums in the coverage estimators.
std::vector<double> harmonic_table(std::uint64_t n);

struct SimpsonResult {
    double value_a = 0.0; // integral of first component
    double value_b = 0.0; // integral of second component
};

/// Adaptive Simpson quadrature of a two-component integrand over [lo, hi],
/// refining until both components settle within rel_tol of running totals
/// estimated from an initial scan. `f` fills y[0], y[1] for a given x.
/// Deterministic for fixed inputs.
template <typename F>
SimpsonResult adaptive_simpson2(F&& f, double lo, double hi, int initial_cells, double rel_tol,
                                int max_depth);

struct NelderMeadResult {
    double x0 = 0.0;
    double x1 = 0.0;
    double value = 0.0; // maximized objective
    int iterations = 0;
};

/// 2-D Nelder-Mead maximization with a fixed construction of the initial
/// simplex (vertex + per-axis steps) and a hard iteration cap, so runs are
/// reproducible bit-for-bit.
template <typename F>
NelderMeadResult nelder_mead_max_2d(F&& f, double x0, double x1, double step0, double step1,
                                    int max_iter);

} // namespace dent

#include "special_impl.hpp"
