/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "bench.hpp"
#include "csv.hpp"

using namespace dent;

namespace {

// Reference MSE matrix used across the analytics tests.
std::map<std::string, std::vector<double>> load_reference_matrix() {
    const CsvTable t = read_csv(std::string(DENT_TEST_DATA_DIR) + "/data/mse_mi_k256.csv");
    std::map<std::string, std::vector<double>> rows;
    for (std::size_t r = 1; r < t.rows.size(); ++r) {
        std::vector<double> mse;
        for (std::size_t c = 1; c < t.rows[r].size(); ++c) {
            mse.push_back(parse_double_token(t.rows[r][c], r));
        }
        rows[t.rows[r][0]] = mse;
    }
    return rows;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("flattening points of the reference matrix") {
    const auto rows = load_reference_matrix();
    const std::map<std::string, int> expected = {
        {"ML", 8},  {"MM", 8},    {"GSB88", 7}, {"GSB03", 8}, {"SHU", 7}, {"CS", 6},
        {"Z", 8},   {"SHR", 8},   {"B", 11},    {"CW", 6},    {"BAY", 8}, {"LAP", 8},
        {"JEF", 8}, {"SG", 8},    {"MIN", 8},   {"NSB", 8},
    };
    for (const auto& [est, fp] : expected) {
        INFO("estimator ", est);
        const auto got = flattening_point(rows.at(est), 3, 0.1);
        REQUIRE(got.has_value());
        CHECK(*got == fp);
    }
    CHECK(!flattening_point(rows.at("PYM"), 3, 0.1).has_value());
    CHECK(!flattening_point(rows.at("ANSB"), 3, 0.1).has_value());
}

TEST_CASE("flattening point edge rules") {
    CHECK(!flattening_point(std::vector<double>{1.0}, 3, 0.1).has_value());
    const std::vector<double> all_nan(5, std::numeric_limits<double>::quiet_NaN());
    CHECK(!flattening_point(all_nan, 3, 0.1).has_value());
    // trailing NaN blocks convergence
    std::vector<double> trail{0.5, 0.01, 0.01, std::numeric_limits<double>::quiet_NaN()};
    CHECK(!flattening_point(trail, 3, 0.1).has_value());
    // fully flat curve converges at the first exponent
    const std::vector<double> flat(6, 0.02);
    CHECK(flattening_point(flat, 3, 0.1).value() == 3);
    // enlarging Fb never increases Fp
    const auto rows = load_reference_matrix();
    for (const auto& [est, mse] : rows) {
        const auto tight = flattening_point(mse, 3, 0.05);
        const auto loose = flattening_point(mse, 3, 0.5);
        if (tight) {
            REQUIRE(loose.has_value());
            CHECK(*loose <= *tight);
        }
    }
}

TEST_CASE("slope and l2 of reference flattening-point rows") {
    // entropy table, CS row: all six domains converge
    const std::vector<std::optional<int>> cs_h{9, 9, 10, 9, 10, 12};
    const auto cs = slope_and_norm(cs_h, 15);
    CHECK(cs.l2 == doctest::Approx(24.23).epsilon(0.0005));
    CHECK(cs.slope == doctest::Approx(0.486).epsilon(0.01));

    // entropy table, MM row: two missing entries padded with 15
    const std::vector<std::optional<int>> mm_h{9, 9, 11, 13, std::nullopt, std::nullopt};
    const auto mm = slope_and_norm(mm_h, 15);
    CHECK(mm.l2 == doctest::Approx(30.03).epsilon(0.002));

    // MI table, CW row
    const std::vector<std::optional<int>> cw_mi{6, 7, 9, 10, 12, 13};
    const auto cw = slope_and_norm(cw_mi, 15);
    CHECK(cw.slope == doctest::Approx(1.457).epsilon(0.005));
    CHECK(cw.l2 == doctest::Approx(24.06).epsilon(0.002));

    // MI table, CS row with padding
    const std::vector<std::optional<int>> cs_mi{6, 8, 9, 11, std::nullopt, std::nullopt};
    const auto cs2 = slope_and_norm(cs_mi, 15);
    CHECK(cs2.slope == doctest::Approx(1.943).epsilon(0.005));
    CHECK(cs2.l2 == doctest::Approx(27.42).epsilon(0.002));

    // MI table, GSB88 row
    const std::vector<std::optional<int>> g88{7, 9, 11, 13, std::nullopt, std::nullopt};
    CHECK(slope_and_norm(g88, 15).l2 == doctest::Approx(29.50).epsilon(0.002));
}

TEST_CASE("ratio table rules") {
    CHECK(fp_ratio(9, 16384).value() == doctest::Approx(512.0 / 16384.0));
    CHECK(fp_ratio(13, 262144).value() == doctest::Approx(8192.0 / 262144.0));
    CHECK(fp_ratio(7, 256).value() == doctest::Approx(0.5));
    CHECK(!fp_ratio(std::nullopt, 256).has_value());
}

TEST_CASE("AUC of the reference rows") {
    const auto rows = load_reference_matrix();
    CHECK(auc(rows.at("CS")) == doctest::Approx(1.7994).epsilon(0.0005));
    CHECK(auc(rows.at("CW")) == doctest::Approx(1.7875).epsilon(0.0005));
    CHECK(std::isnan(auc(rows.at("PYM"))));
    CHECK(std::isnan(auc(rows.at("ANSB"))));
    // constant curve: trapezoid = (n-1) * c
    const std::vector<double> constant(12, 0.5);
    CHECK(auc(constant) == doctest::Approx(11.0 * 0.5));
    // dominance: pointwise smaller curve has smaller AUC
    std::vector<double> bigger = rows.at("CW");
    for (auto& v : bigger) {
        v += 0.1;
    }
    CHECK(auc(rows.at("CW")) < auc(bigger));
}

TEST_CASE("AUC split endpoints") {
    const auto rows = load_reference_matrix();
    const auto& cs = rows.at("CS");
    const auto full = auc_split(cs, 0);
    CHECK(full.from == doctest::Approx(auc(cs)));
    CHECK(full.below == doctest::Approx(0.0));
    const auto last = auc_split(cs, cs.size() - 1);
    CHECK(last.from == doctest::Approx(0.0));
    CHECK(last.below == doctest::Approx(auc(cs)));
}

TEST_CASE("CS and CW AUC beat every other converging estimator on the reference data") {
    const auto rows = load_reference_matrix();
    const double cs = auc(rows.at("CS"));
    const double cw = auc(rows.at("CW"));
    for (const auto& [est, mse] : rows) {
        if (est == "CS" || est == "CW") {
            continue;
        }
        if (!flattening_point(mse, 3, 0.1).has_value()) {
            continue;
        }
        INFO("against ", est);
        CHECK(cs < auc(mse));
        CHECK(cw < auc(mse));
    }
}

TEST_CASE("config parsing round trip and validation") {
    const std::string text = R"(# benchmark configuration
measures = MI
k_grid = 256, 1024
n_grid = 8, 16, 32
repetitions = 3
gt_levels = S, L
estimators = ML, CS
master_seed = 99
flattening_bound = 0.1
penalty_exponent = 15
threads = 2
)";
    const auto cfg = ExperimentConfig::parse(text);
    CHECK(cfg.measures == std::vector<Measure>{Measure::MI});
    CHECK(cfg.k_grid == std::vector<std::uint64_t>{256, 1024});
    CHECK(cfg.n_exponents == std::vector<int>{3, 4, 5});
    CHECK(cfg.repetitions == 3);
    CHECK(cfg.master_seed == 99);
    CHECK(cfg.estimator_specs().size() == 2);

    CHECK_THROWS_AS(ExperimentConfig::parse("measures = MI\n"), ParameterError); // no seed
    CHECK_THROWS_AS(ExperimentConfig::parse("master_seed = 1\nk_grid = 100\n"), ParameterError);
    CHECK_THROWS_AS(ExperimentConfig::parse("master_seed = 1\nk_grid = 65536\n"),
                    ParameterError); // needs full_scale
    CHECK_THROWS_AS(ExperimentConfig::parse("master_seed = 1\nbogus = 1\n"), ParseError);
    CHECK_THROWS_AS(ExperimentConfig::parse("master_seed = 1\nestimators = XX\n"),
                    ParameterError);
    // full_scale unlocks large domains
    CHECK_NOTHROW(ExperimentConfig::parse("master_seed = 1\nk_grid = 65536\nfull_scale = true\n"));
}

TEST_CASE("dims split domain sizes per measure") {
    CHECK(dims_for(Measure::H, 256) == std::vector<std::uint64_t>{256});
    CHECK(dims_for(Measure::MI, 256) == std::vector<std::uint64_t>{16, 16});
    CHECK(dims_for(Measure::MI, 1024) == std::vector<std::uint64_t>{32, 32});
    CHECK(dims_for(Measure::MI, 2048) == std::vector<std::uint64_t>{64, 32});
    CHECK(dims_for(Measure::CMI, 256) == std::vector<std::uint64_t>{8, 8, 4});
    CHECK(dims_for(Measure::CMI, 4096) == std::vector<std::uint64_t>{16, 16, 16});
    CHECK_THROWS_AS(dims_for(Measure::MI, 100), ParameterError);
}

TEST_CASE("small grid runs, exports, and is thread-count invariant") {
    const std::string base = R"(measures = MI
k_grid = 16
n_grid = 8, 16, 32, 64
repetitions = 4
gt_levels = S, L
estimators = ML, MM, CS, CW, NSB, ANSB, PYM
master_seed = 2024
)";
    auto cfg1 = ExperimentConfig::parse(base + "threads = 1\n");
    auto cfg2 = ExperimentConfig::parse(base + "threads = 2\n");

    const BenchResult r1 = run_grid(cfg1);
    const BenchResult r2 = run_grid(cfg2);
    REQUIRE(r1.curves.size() == r2.curves.size());
    for (std::size_t i = 0; i < r1.curves.size(); ++i) {
        CHECK(r1.curves[i].estimator == r2.curves[i].estimator);
        for (std::size_t j = 0; j < r1.curves[i].mse.size(); ++j) {
            const double a = r1.curves[i].mse[j];
            const double b = r2.curves[i].mse[j];
            if (std::isnan(a)) {
                CHECK(std::isnan(b));
            } else {
                CHECK(a == b); // bitwise identical
            }
        }
    }

    export_reports(r1, "bench_out_a");
    export_reports(r2, "bench_out_b");
    for (const char* name : {"mse_MI_k16.csv", "fp_MI.csv", "ratios_MI.csv", "auc_MI.csv",
                             "auc_split_MI.csv"}) {
        INFO("file ", name);
        CHECK(slurp(std::string("bench_out_a/") + name) ==
              slurp(std::string("bench_out_b/") + name));
    }
    const std::string mse = slurp("bench_out_a/mse_MI_k16.csv");
    CHECK(mse.rfind("estimator,8,16,32,64\n", 0) == 0);
}

TEST_CASE("report over an external MSE matrix") {
    report_from_mse_csv(std::string(DENT_TEST_DATA_DIR) + "/data/mse_mi_k256.csv", 0.1,
                        "report_out.csv");
    const std::string report = slurp("report_out.csv");
    CHECK(report.find("CS,6,1.7994") != std::string::npos);
    CHECK(report.find("CW,6,1.7875") != std::string::npos);
    CHECK(report.find("ML,8,") != std::string::npos);
    CHECK(report.find("ANSB,,NaN") != std::string::npos);
}
