/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <unordered_map>

namespace dent {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    // Trim surrounding blanks per field.
    for (auto& f : fields) {
        const auto b = f.find_first_not_of(" \t");
        const auto e = f.find_last_not_of(" \t");
        f = (b == std::string::npos) ? std::string() : f.substr(b, e - b + 1);
    }
    return fields;
}

bool is_unsigned_number(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

std::uint64_t parse_count(const std::string& s, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("count field is not a nonnegative integer: '" + s + "'", line);
    }
    return value;
}

} // namespace

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    CsvTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        table.rows.push_back(split_fields(line));
    }
    return table;
}

double parse_double_token(const std::string& token, std::size_t line) {
    if (token == "NaN" || token == "nan" || token == "NA") {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (token == "Inf" || token == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (token == "-Inf" || token == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size()) {
            throw std::invalid_argument(token);
        }
        return v;
    } catch (...) {
        throw ParseError("not a number: '" + token + "'", line);
    }
}

LoadedData load_observations(const std::string& path, int expected_arity) {
    if (expected_arity < 1 || expected_arity > 3) {
        throw DimensionError("expected arity must be 1, 2 or 3");
    }
    const CsvTable table = read_csv(path);
    if (table.rows.empty()) {
        throw EmptySampleError("no observations in " + path);
    }

    const std::size_t a = static_cast<std::size_t>(expected_arity);
    std::size_t first_row = 0;
    const std::size_t width = table.rows[0].size();
    bool counts_mode;
    if (width == a) {
        counts_mode = false;
    } else if (width == a + 1) {
        counts_mode = true;
        // Optional header: final field not numeric.
        if (!is_unsigned_number(table.rows[0].back())) {
            first_row = 1;
            if (table.rows.size() == 1) {
                throw EmptySampleError("only a header row in " + path);
            }
        }
    } else {
        throw ParseError("expected " + std::to_string(a) + " (samples) or " +
                             std::to_string(a + 1) + " (counts) fields, found " +
                             std::to_string(width),
                         1);
    }

    // Opaque string symbols become dense ids in first-seen order.
    std::vector<std::unordered_map<std::string, std::int64_t>> ids(a);
    std::vector<std::int64_t> flat;
    std::vector<std::uint64_t> counts;
    for (std::size_t r = first_row; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t expected = counts_mode ? a + 1 : a;
        if (row.size() != expected) {
            throw ParseError("inconsistent field count", r + 1);
        }
        for (std::size_t c = 0; c < a; ++c) {
            if (row[c].empty()) {
                throw ParseError("empty symbol field", r + 1);
            }
            auto [it, inserted] =
                ids[c].emplace(row[c], static_cast<std::int64_t>(ids[c].size()));
            flat.push_back(it->second);
        }
        if (counts_mode) {
            const std::uint64_t count = parse_count(row.back(), r + 1);
            if (count == 0) {
                throw ParseError("counts must be positive", r + 1);
            }
            counts.push_back(count);
        }
    }

    LoadedData out;
    if (expected_arity == 1) {
        if (counts_mode) {
            out.hist = CountHistogram::from_counts(counts);
        } else {
            out.hist = CountHistogram::from_samples(flat);
        }
    } else {
        if (counts_mode) {
            out.joint = JointHistogram::from_cells(expected_arity, flat, counts);
        } else {
            out.joint = JointHistogram::from_tuples(expected_arity, flat);
        }
    }
    return out;
}

void save_pmf(const DiscretePmf& pmf, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << "index,prob\n";
    char buf[64];
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", pmf.probs[i]);
        out << i << "," << buf << "\n";
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

namespace {

std::uint64_t parse_index(const std::string& s, std::size_t line) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("index field is not a nonnegative integer: '" + s + "'", line);
    }
    return v;
}

void check_normalized(const std::vector<double>& probs) {
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) {
            throw ParameterError("probabilities must be nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ParameterError("probabilities must sum to 1 within 1e-12");
    }
}

} // namespace

DiscretePmf load_pmf(const std::string& path) {
    const CsvTable table = read_csv(path);
    if (table.rows.size() < 2) {
        throw ParseError("pmf file needs a header and at least one row", 1);
    }
    std::vector<std::pair<std::uint64_t, double>> cells;
    std::uint64_t max_index = 0;
    for (std::size_t r = 1; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != 2) {
            throw ParseError("expected index,prob", r + 1);
        }
        const std::uint64_t idx = parse_index(row[0], r + 1);
        cells.emplace_back(idx, parse_double_token(row[1], r + 1));
        max_index = std::max(max_index, idx);
    }
    DiscretePmf pmf;
    pmf.probs.assign(max_index + 1, 0.0);
    for (const auto& [idx, p] : cells) {
        pmf.probs[idx] = p;
    }
    check_normalized(pmf.probs);
    return pmf;
}

JointPmf load_joint_pmf(const std::string& path) {
    const CsvTable table = read_csv(path);
    if (table.rows.size() < 2) {
        throw ParseError("pmf file needs a header and at least one row", 1);
    }
    const std::size_t width = table.rows[0].size();
    if (width != 3 && width != 4) {
        throw ParseError("expected x,y,prob or x,y,z,prob", 1);
    }
    const int arity = static_cast<int>(width) - 1;
    std::vector<std::pair<std::array<std::uint64_t, 3>, double>> cells;
    std::array<std::uint64_t, 3> dims{0, 0, static_cast<std::uint64_t>(arity == 3 ? 0 : 1)};
    for (std::size_t r = 1; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != width) {
            throw ParseError("inconsistent field count", r + 1);
        }
        std::array<std::uint64_t, 3> idx{0, 0, 0};
        for (int a = 0; a < arity; ++a) {
            idx[static_cast<std::size_t>(a)] =
                parse_index(row[static_cast<std::size_t>(a)], r + 1);
            dims[static_cast<std::size_t>(a)] =
                std::max(dims[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(a)] + 1);
        }
        cells.emplace_back(idx, parse_double_token(row.back(), r + 1));
    }
    JointPmf pmf;
    pmf.arity = arity;
    pmf.dims = dims;
    pmf.probs.assign(dims[0] * dims[1] * dims[2], 0.0);
    for (const auto& [idx, p] : cells) {
        pmf.probs[(idx[0] * dims[1] + idx[1]) * dims[2] + idx[2]] = p;
    }
    check_normalized(pmf.probs);
    return pmf;
}

void save_joint_pmf(const JointPmf& pmf, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << (pmf.arity == 2 ? "x,y,prob\n" : "x,y,z,prob\n");
    char buf[64];
    const std::uint64_t m = pmf.dims[1], l = pmf.dims[2];
    for (std::uint64_t idx = 0; idx < pmf.probs.size(); ++idx) {
        std::snprintf(buf, sizeof(buf), "%.17g", pmf.probs[idx]);
        if (pmf.arity == 2) {
            out << idx / m << "," << idx % m << "," << buf << "\n";
        } else {
            out << idx / (m * l) << "," << (idx / l) % m << "," << idx % l << "," << buf << "\n";
        }
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

} // namespace dent
