/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "counts.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace dent {

namespace {

// Packs up to three 21-bit dense ids into one map key.
constexpr std::uint32_t kAxisIdLimit = 1u << 21;

std::uint64_t pack_ids(const std::uint32_t* ids, int arity) {
    std::uint64_t key = 0;
    for (int a = 0; a < arity; ++a) {
        key = (key << 21) | ids[a];
    }
    return key;
}

} // namespace

std::uint64_t MultiplicityProfile::f(std::uint64_t j) const {
    for (const auto& [value, mult] : grouped) {
        if (value == j) {
            return mult;
        }
    }
    return 0;
}

CountHistogram CountHistogram::from_counts(std::vector<std::uint64_t> counts) {
    if (counts.empty()) {
        throw EmptySampleError();
    }
    CountHistogram h;
    h.counts_ = std::move(counts);
    for (std::uint64_t c : h.counts_) {
        if (c == 0) {
            throw ParameterError("histogram counts must be positive");
        }
        h.total_ += c;
    }
    std::sort(h.counts_.begin(), h.counts_.end(), std::greater<>());
    return h;
}

CountHistogram CountHistogram::from_samples(std::span<const std::int64_t> symbols) {
    if (symbols.empty()) {
        throw EmptySampleError();
    }
    std::unordered_map<std::int64_t, std::uint64_t> tally;
    tally.reserve(symbols.size());
    for (std::int64_t s : symbols) {
        ++tally[s];
    }
    std::vector<std::uint64_t> counts;
    counts.reserve(tally.size());
    for (const auto& [sym, c] : tally) {
        counts.push_back(c);
    }
    return from_counts(std::move(counts));
}

MultiplicityProfile CountHistogram::multiplicities() const {
    MultiplicityProfile p;
    // counts_ is sorted descending; walk runs of equal values.
    std::size_t i = 0;
    while (i < counts_.size()) {
        std::size_t j = i;
        while (j < counts_.size() && counts_[j] == counts_[i]) {
            ++j;
        }
        p.grouped.emplace_back(counts_[i], j - i);
        i = j;
    }
    std::reverse(p.grouped.begin(), p.grouped.end()); // ascending by count value
    p.f1 = p.f(1);
    p.f2 = p.f(2);
    return p;
}

JointHistogram JointHistogram::from_tuples(int arity, std::span<const std::int64_t> flat) {
    if (arity != 2 && arity != 3) {
        throw DimensionError("joint arity must be 2 or 3");
    }
    if (flat.empty()) {
        throw EmptySampleError();
    }
    if (flat.size() % static_cast<std::size_t>(arity) != 0) {
        throw DimensionError("tuple array length not a multiple of arity");
    }
    const std::size_t n = flat.size() / static_cast<std::size_t>(arity);

    JointHistogram j;
    j.arity_ = arity;
    j.axis_sizes_.assign(static_cast<std::size_t>(arity), 0);
    std::vector<std::unordered_map<std::int64_t, std::uint32_t>> axis_ids(
        static_cast<std::size_t>(arity));
    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    cells.reserve(n);

    std::uint32_t ids[3] = {0, 0, 0};
    for (std::size_t row = 0; row < n; ++row) {
        for (int a = 0; a < arity; ++a) {
            auto& table = axis_ids[static_cast<std::size_t>(a)];
            const std::int64_t sym = flat[row * static_cast<std::size_t>(arity) +
                                          static_cast<std::size_t>(a)];
            auto [it, inserted] = table.emplace(sym, static_cast<std::uint32_t>(table.size()));
            if (inserted && table.size() > kAxisIdLimit) {
                throw DimensionError("too many distinct symbols on one axis");
            }
            ids[a] = it->second;
        }
        ++cells[pack_ids(ids, arity)];
    }
    for (int a = 0; a < arity; ++a) {
        j.axis_sizes_[static_cast<std::size_t>(a)] = axis_ids[static_cast<std::size_t>(a)].size();
    }

    // Canonical cell order: sorted packed key. Keeps downstream arithmetic
    // independent of input order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    j.ids_.reserve(sorted.size() * static_cast<std::size_t>(arity));
    j.counts_.reserve(sorted.size());
    for (const auto& [key, count] : sorted) {
        for (int a = 0; a < arity; ++a) {
            const int shift = 21 * (arity - 1 - a);
            j.ids_.push_back(static_cast<std::uint32_t>((key >> shift) & (kAxisIdLimit - 1)));
        }
        j.counts_.push_back(count);
        j.total_ += count;
    }
    return j;
}

JointHistogram JointHistogram::from_cells(int arity, std::span<const std::int64_t> flat,
                                          std::span<const std::uint64_t> counts) {
    if (flat.size() != counts.size() * static_cast<std::size_t>(arity)) {
        throw DimensionError("cell array length does not match count array");
    }
    // Same canonicalization as from_tuples; cells arrive pre-tallied.
    if (arity != 2 && arity != 3) {
        throw DimensionError("joint arity must be 2 or 3");
    }
    if (counts.empty()) {
        throw EmptySampleError();
    }

    JointHistogram j;
    j.arity_ = arity;
    j.axis_sizes_.assign(static_cast<std::size_t>(arity), 0);
    std::vector<std::unordered_map<std::int64_t, std::uint32_t>> axis_ids(
        static_cast<std::size_t>(arity));
    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    cells.reserve(counts.size());

    std::uint32_t ids[3] = {0, 0, 0};
    for (std::size_t row = 0; row < counts.size(); ++row) {
        if (counts[row] == 0) {
            throw ParameterError("cell counts must be positive");
        }
        for (int a = 0; a < arity; ++a) {
            auto& table = axis_ids[static_cast<std::size_t>(a)];
            const std::int64_t sym = flat[row * static_cast<std::size_t>(arity) +
                                          static_cast<std::size_t>(a)];
            auto [it, inserted] = table.emplace(sym, static_cast<std::uint32_t>(table.size()));
            if (inserted && table.size() > kAxisIdLimit) {
                throw DimensionError("too many distinct symbols on one axis");
            }
            ids[a] = it->second;
        }
        cells[pack_ids(ids, arity)] += counts[row];
    }
    for (int a = 0; a < arity; ++a) {
        j.axis_sizes_[static_cast<std::size_t>(a)] = axis_ids[static_cast<std::size_t>(a)].size();
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [key, count] : sorted) {
        for (int a = 0; a < arity; ++a) {
            const int shift = 21 * (arity - 1 - a);
            j.ids_.push_back(static_cast<std::uint32_t>((key >> shift) & (kAxisIdLimit - 1)));
        }
        j.counts_.push_back(count);
        j.total_ += count;
    }
    return j;
}

JointHistogram JointHistogram::from_dense_tuples(int arity, std::span<const std::uint32_t> flat,
                                                 const std::vector<std::uint64_t>& axis_sizes) {
    if (arity != 2 && arity != 3) {
        throw DimensionError("joint arity must be 2 or 3");
    }
    if (flat.empty()) {
        throw EmptySampleError();
    }
    const std::size_t n = flat.size() / static_cast<std::size_t>(arity);
    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    cells.reserve(n);
    for (std::size_t row = 0; row < n; ++row) {
        cells[pack_ids(&flat[row * static_cast<std::size_t>(arity)], arity)] += 1;
    }
    JointHistogram j;
    j.arity_ = arity;
    j.axis_sizes_ = axis_sizes;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [key, count] : sorted) {
        for (int a = 0; a < arity; ++a) {
            const int shift = 21 * (arity - 1 - a);
            j.ids_.push_back(static_cast<std::uint32_t>((key >> shift) & (kAxisIdLimit - 1)));
        }
        j.counts_.push_back(count);
        j.total_ += count;
    }
    return j;
}

void JointHistogram::check_axis(int axis) const {
    if (axis < 0 || axis >= arity_) {
        throw DimensionError("axis out of range");
    }
}

std::uint64_t JointHistogram::observed_axis_size(int axis) const {
    check_axis(axis);
    return axis_sizes_[static_cast<std::size_t>(axis)];
}

CountHistogram JointHistogram::marginal_hist(int axis) const {
    check_axis(axis);
    std::vector<std::uint64_t> tally(axis_sizes_[static_cast<std::size_t>(axis)], 0);
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        tally[ids_[i * static_cast<std::size_t>(arity_) + static_cast<std::size_t>(axis)]] +=
            counts_[i];
    }
    // Dense ids are contiguous, so every slot is occupied.
    return CountHistogram::from_counts(std::move(tally));
}

JointHistogram JointHistogram::marginal_joint(int axis0, int axis1) const {
    check_axis(axis0);
    check_axis(axis1);
    if (axis0 == axis1) {
        throw DimensionError("marginal axes must be distinct");
    }
    if (arity_ != 3) {
        throw DimensionError("two-axis marginal requires a 3-D joint");
    }
    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    cells.reserve(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        const std::uint32_t* row = &ids_[i * 3];
        const std::uint32_t pair[2] = {row[axis0], row[axis1]};
        cells[pack_ids(pair, 2)] += counts_[i];
    }
    JointHistogram j;
    j.arity_ = 2;
    j.axis_sizes_ = {axis_sizes_[static_cast<std::size_t>(axis0)],
                     axis_sizes_[static_cast<std::size_t>(axis1)]};
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [key, count] : sorted) {
        j.ids_.push_back(static_cast<std::uint32_t>((key >> 21) & (kAxisIdLimit - 1)));
        j.ids_.push_back(static_cast<std::uint32_t>(key & (kAxisIdLimit - 1)));
        j.counts_.push_back(count);
        j.total_ += count;
    }
    return j;
}

CountHistogram JointHistogram::cells_hist() const {
    return CountHistogram::from_counts(counts_);
}

JointHistogram JointHistogram::transposed() const {
    if (arity_ != 2) {
        throw DimensionError("transpose requires a 2-D joint");
    }
    JointHistogram j;
    j.arity_ = 2;
    j.axis_sizes_ = {axis_sizes_[1], axis_sizes_[0]};
    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        const std::uint32_t pair[2] = {ids_[i * 2 + 1], ids_[i * 2]};
        cells[pack_ids(pair, 2)] = counts_[i];
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [key, count] : sorted) {
        j.ids_.push_back(static_cast<std::uint32_t>((key >> 21) & (kAxisIdLimit - 1)));
        j.ids_.push_back(static_cast<std::uint32_t>(key & (kAxisIdLimit - 1)));
        j.counts_.push_back(count);
        j.total_ += count;
    }
    return j;
}

} // namespace dent
