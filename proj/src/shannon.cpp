/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "shannon.hpp"

namespace dent {

namespace {

double entropy_term(const CountHistogram& h, EstimatorSpec spec,
                    std::optional<std::uint64_t> term_k) {
    spec.k = term_k;
    return estimate_entropy(h, spec).value;
}

} // namespace

const char* measure_name(Measure m) {
    switch (m) {
    case Measure::H:
        return "H";
    case Measure::MI:
        return "MI";
    case Measure::CMI:
        return "CMI";
    }
    return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
    if (name == "H") {
        return Measure::H;
    }
    if (name == "MI") {
        return Measure::MI;
    }
    if (name == "CMI") {
        return Measure::CMI;
    }
    return std::nullopt;
}

int measure_arity(Measure m) {
    switch (m) {
    case Measure::H:
        return 1;
    case Measure::MI:
        return 2;
    case Measure::CMI:
        return 3;
    }
    return 0;
}

double mi_estimate(const JointHistogram& j, const EstimatorSpec& spec,
                   const std::optional<std::array<std::uint64_t, 2>>& true_dims) {
    if (j.arity() != 2) {
        throw DimensionError("mutual information requires a 2-D joint histogram");
    }
    std::optional<std::uint64_t> kx, ky, kxy;
    if (true_dims) {
        kx = (*true_dims)[0];
        ky = (*true_dims)[1];
        kxy = (*true_dims)[0] * (*true_dims)[1];
    } else if (spec.k) {
        kxy = spec.k;
    }
    const double hx = entropy_term(j.marginal_hist(0), spec, kx);
    const double hy = entropy_term(j.marginal_hist(1), spec, ky);
    const double hxy = entropy_term(j.cells_hist(), spec, kxy);
    return hx + hy - hxy;
}

double cmi_estimate(const JointHistogram& j, const EstimatorSpec& spec,
                    const std::optional<std::array<std::uint64_t, 3>>& true_dims) {
    if (j.arity() != 3) {
        throw DimensionError("conditional MI requires a 3-D joint histogram");
    }
    std::optional<std::uint64_t> kxz, kyz, kxyz, kz;
    if (true_dims) {
        kxz = (*true_dims)[0] * (*true_dims)[2];
        kyz = (*true_dims)[1] * (*true_dims)[2];
        kxyz = (*true_dims)[0] * (*true_dims)[1] * (*true_dims)[2];
        kz = (*true_dims)[2];
    } else if (spec.k) {
        kxyz = spec.k;
    }
    const double hxz = entropy_term(j.marginal_joint(0, 2).cells_hist(), spec, kxz);
    const double hyz = entropy_term(j.marginal_joint(1, 2).cells_hist(), spec, kyz);
    const double hxyz = entropy_term(j.cells_hist(), spec, kxyz);
    const double hz = entropy_term(j.marginal_hist(2), spec, kz);
    // Grouped as H(X|Z) - H(X|YZ): when Y is a function of (X,Z) the pairs
    // cancel exactly instead of leaving summation-order residue.
    return (hxz - hz) - (hxyz - hyz);
}

double measure_estimate(const CountHistogram& h, Measure m, const EstimatorSpec& spec) {
    if (m != Measure::H) {
        throw DimensionError("1-D histogram only supports the entropy measure");
    }
    return estimate_entropy(h, spec).value;
}

double measure_estimate(const JointHistogram& j, Measure m, const EstimatorSpec& spec) {
    switch (m) {
    case Measure::H:
        throw DimensionError("entropy measure expects a 1-D histogram");
    case Measure::MI:
        return mi_estimate(j, spec);
    case Measure::CMI:
        return cmi_estimate(j, spec);
    }
    throw DimensionError("unknown measure");
}

} // namespace dent
