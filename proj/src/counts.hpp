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

#include "errors.hpp"

namespace dent {

/// Multiplicity-of-multiplicities view of a histogram: how many symbols were
/// seen exactly j times. f1/f2 drive the coverage-based estimators; the full
/// grouped list lets estimators run in O(distinct count values).
struct MultiplicityProfile {
    std::uint64_t f1 = 0; // singletons
    std::uint64_t f2 = 0; // doubletons
    // (count value, number of symbols with that count), ascending by value.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> grouped;

    std::uint64_t f(std::uint64_t j) const;
};

/// Observed count histogram: the multiset of per-symbol occurrence counts.
/// Symbol identity is deliberately dropped; counts are kept sorted descending
/// so estimates are permutation-invariant bit for bit.
class CountHistogram {
public:
    /// Build from raw per-symbol counts (each >= 1).
    static CountHistogram from_counts(std::vector<std::uint64_t> counts);

    /// Tally a sequence of symbols. Errors on empty input.
    static CountHistogram from_samples(std::span<const std::int64_t> symbols);

    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t total() const { return total_; } // N
    std::uint64_t support() const { return static_cast<std::uint64_t>(counts_.size()); } // m
    std::uint64_t coincidences() const { return total_ - support(); } // N - m

    MultiplicityProfile multiplicities() const;

private:
    CountHistogram() = default;
    std::vector<std::uint64_t> counts_; // sorted descending, all >= 1
    std::uint64_t total_ = 0;
};

/// Sparse 2-D or 3-D contingency table. Symbols on each axis are
/// canonicalized to dense ids in first-seen order; only occupied cells are
/// stored.
class JointHistogram {
public:
    /// Tally tuples given as a flat row-major array (n rows of `arity`).
    static JointHistogram from_tuples(int arity, std::span<const std::int64_t> flat);

    /// Build from distinct cells with explicit positive counts.
    static JointHistogram from_cells(int arity, std::span<const std::int64_t> flat,
                                     std::span<const std::uint64_t> counts);

    /// Build directly from dense per-axis ids (used by the sampler).
    static JointHistogram from_dense_tuples(int arity, std::span<const std::uint32_t> flat,
                                            const std::vector<std::uint64_t>& axis_sizes);

    int arity() const { return arity_; }
    std::uint64_t total() const { return total_; }
    std::uint64_t cell_count() const { return static_cast<std::uint64_t>(counts_.size()); }
    std::uint64_t observed_axis_size(int axis) const;

    /// Marginal histogram of a single axis.
    CountHistogram marginal_hist(int axis) const;

    /// Marginal 2-D joint of two distinct axes (3-D input only).
    JointHistogram marginal_joint(int axis0, int axis1) const;

    /// The occupied cells viewed as a 1-D histogram; this is the joint-entropy
    /// input H(X,Y[,Z]).
    CountHistogram cells_hist() const;

    /// 2-D transpose (axis swap), for symmetry checks.
    JointHistogram transposed() const;

    /// Cell walk: ids[0..arity), count. Order is the internal storage order.
    template <typename F>
    void for_each_cell(F&& f) const {
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            f(&ids_[i * static_cast<std::size_t>(arity_)], counts_[i]);
        }
    }

private:
    JointHistogram() = default;
    void check_axis(int axis) const;

    int arity_ = 2;
    std::vector<std::uint32_t> ids_;      // cell_count * arity dense ids
    std::vector<std::uint64_t> counts_;   // per-cell counts, all >= 1
    std::vector<std::uint64_t> axis_sizes_; // distinct symbols seen per axis
    std::uint64_t total_ = 0;
};

} // namespace dent
