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
#include <vector>

#include "counts.hpp"
#include "synth.hpp"

namespace dent {

/// Minimal comma-separated reader: no quoting, UTF-8 bytes treated opaquely.
struct CsvTable {
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);

/// Parse a numeric token, accepting NaN / Inf / -Inf spellings.
double parse_double_token(const std::string& token, std::size_t line);

/// Result of loading observation data of a given arity: exactly one of the
/// two members is set.
struct LoadedData {
    std::optional<CountHistogram> hist;   // arity 1
    std::optional<JointHistogram> joint;  // arity 2 or 3
};

/// Load observations from a file. With expected arity a, rows of a fields are
/// raw samples and rows of a+1 fields are counts (`symbol...,count`); a
/// leading header row on count files is detected by a non-numeric final
/// field. Mixed widths are a parse error.
LoadedData load_observations(const std::string& path, int expected_arity);

/// Serialize pmfs for audit and replay: `index,prob` or `x,y[,z],prob`.
void save_pmf(const DiscretePmf& pmf, const std::string& path);
void save_joint_pmf(const JointPmf& pmf, const std::string& path);

/// Replay side: read the files save_pmf / save_joint_pmf write. Dimensions
/// are inferred from the largest index on each axis; missing cells are zero.
DiscretePmf load_pmf(const std::string& path);
JointPmf load_joint_pmf(const std::string& path);

} // namespace dent
