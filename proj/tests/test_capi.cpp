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
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "dent/dent.h"

namespace {

dent_estimator_spec spec_of(const char* id) {
    return {id, std::nan(""), std::nan(""), 0};
}

struct HistGuard {
    dent_hist* p = nullptr;
    ~HistGuard() { dent_hist_free(p); }
};
struct JointGuard {
    dent_joint* p = nullptr;
    ~JointGuard() { dent_joint_free(p); }
};

} // namespace

TEST_CASE("histogram construction and entropy through the C API") {
    const uint64_t counts[] = {2, 1, 1};
    HistGuard h;
    REQUIRE(dent_hist_from_counts(counts, 3, &h.p) == DENT_OK);
    CHECK(dent_hist_total(h.p) == 4);
    CHECK(dent_hist_support(h.p) == 3);

    double value = 0.0;
    const auto ml = spec_of("ML");
    REQUIRE(dent_entropy(h.p, &ml, &value) == DENT_OK);
    CHECK(value == doctest::Approx(1.0397207708399179).epsilon(1e-12));

    const auto bad = spec_of("NOPE");
    CHECK(dent_entropy(h.p, &bad, &value) == DENT_ERR_PARAMETER);
    CHECK(std::string(dent_last_error()).find("NOPE") != std::string::npos);
}

TEST_CASE("error codes for degenerate inputs") {
    dent_hist* h = nullptr;
    CHECK(dent_hist_from_samples(nullptr, 0, &h) == DENT_ERR_PARAMETER);
    const int64_t none[1] = {0};
    CHECK(dent_hist_from_samples(none, 0, &h) == DENT_ERR_EMPTY_SAMPLE);
    CHECK(std::string(dent_status_name(DENT_ERR_EMPTY_SAMPLE)) == "empty sample");
}

TEST_CASE("NaN estimates come back with DENT_OK") {
    const uint64_t counts[] = {1, 1, 1, 1};
    HistGuard h;
    REQUIRE(dent_hist_from_counts(counts, 4, &h.p) == DENT_OK);
    double value = 0.0;
    const auto ansb = spec_of("ANSB");
    REQUIRE(dent_entropy(h.p, &ansb, &value) == DENT_OK);
    CHECK(std::isnan(value));
    const auto pym = spec_of("PYM");
    REQUIRE(dent_entropy(h.p, &pym, &value) == DENT_OK);
    CHECK(std::isinf(value));
}

TEST_CASE("joint MI/CMI through the C API") {
    // diagonal 2x2
    const int64_t flat[] = {0, 0, 0, 0, 1, 1, 1, 1};
    JointGuard j;
    REQUIRE(dent_joint_from_tuples(2, flat, 4, &j.p) == DENT_OK);
    CHECK(dent_joint_arity(j.p) == 2);
    CHECK(dent_joint_total(j.p) == 4);

    double value = 0.0;
    const auto ml = spec_of("ML");
    REQUIRE(dent_mutual_information(j.p, &ml, nullptr, &value) == DENT_OK);
    CHECK(value == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    const uint64_t dims[2] = {4, 4};
    const auto lap = spec_of("LAP");
    REQUIRE(dent_mutual_information(j.p, &lap, dims, &value) == DENT_OK);
    CHECK(std::isfinite(value));

    CHECK(dent_conditional_mi(j.p, &ml, nullptr, &value) == DENT_ERR_DIMENSION);

    HistGuard mx;
    REQUIRE(dent_joint_marginal_hist(j.p, 0, &mx.p) == DENT_OK);
    CHECK(dent_hist_total(mx.p) == 4);
    CHECK(dent_joint_marginal_hist(j.p, 5, &mx.p) == DENT_ERR_DIMENSION);
}

TEST_CASE("synthetic pmf generation, sampling and saving") {
    dent_pmf* pmf = nullptr;
    REQUIRE(dent_pmf_generate(32, "L", 7, &pmf) == DENT_OK);
    CHECK(dent_pmf_domain(pmf) == 32);
    const double h = dent_pmf_entropy(pmf);
    CHECK(h >= 0.85 * std::log(32.0));

    std::vector<double> probs(32);
    REQUIRE(dent_pmf_probs(pmf, probs.data()) == DENT_OK);
    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);

    HistGuard sample;
    REQUIRE(dent_pmf_sample(pmf, 100, 3, &sample.p) == DENT_OK);
    CHECK(dent_hist_total(sample.p) == 100);

    REQUIRE(dent_pmf_save(pmf, "capi_pmf.csv") == DENT_OK);
    std::ifstream in("capi_pmf.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "index,prob");
    dent_pmf_free(pmf);

    CHECK(dent_pmf_generate(32, "Q", 7, &pmf) == DENT_ERR_PARAMETER);
}

TEST_CASE("pmf save/load round trip") {
    dent_pmf* pmf = nullptr;
    REQUIRE(dent_pmf_generate(8, "M", 13, &pmf) == DENT_OK);
    REQUIRE(dent_pmf_save(pmf, "capi_pmf_rt.csv") == DENT_OK);
    dent_pmf* replay = nullptr;
    REQUIRE(dent_pmf_load("capi_pmf_rt.csv", &replay) == DENT_OK);
    CHECK(dent_pmf_domain(replay) == 8);
    CHECK(dent_pmf_entropy(replay) == doctest::Approx(dent_pmf_entropy(pmf)).epsilon(1e-12));
    dent_pmf_free(pmf);
    dent_pmf_free(replay);

    const uint64_t dims[2] = {4, 4};
    dent_joint_pmf* jp = nullptr;
    REQUIRE(dent_joint_pmf_generate("MI", dims, 2, "L", 29, &jp) == DENT_OK);
    REQUIRE(dent_joint_pmf_save(jp, "capi_jpmf_rt.csv") == DENT_OK);
    dent_joint_pmf* jreplay = nullptr;
    REQUIRE(dent_joint_pmf_load("capi_jpmf_rt.csv", &jreplay) == DENT_OK);
    CHECK(dent_joint_pmf_arity(jreplay) == 2);
    CHECK(dent_joint_pmf_mi(jreplay) == doctest::Approx(dent_joint_pmf_mi(jp)).epsilon(1e-12));
    dent_joint_pmf_free(jp);
    dent_joint_pmf_free(jreplay);

    CHECK(dent_pmf_load("missing.csv", &replay) == DENT_ERR_IO);
    {
        std::ofstream bad("capi_pmf_bad.csv");
        bad << "index,prob\n0,0.5\n1,0.6\n";
    }
    CHECK(dent_pmf_load("capi_pmf_bad.csv", &replay) == DENT_ERR_PARAMETER);
}

TEST_CASE("joint pmf generation through the C API") {
    dent_joint_pmf* jp = nullptr;
    const uint64_t dims[2] = {4, 4};
    REQUIRE(dent_joint_pmf_generate("MI", dims, 2, "M", 11, &jp) == DENT_OK);
    CHECK(dent_joint_pmf_arity(jp) == 2);
    uint64_t got_dims[2] = {0, 0};
    REQUIRE(dent_joint_pmf_dims(jp, got_dims) == DENT_OK);
    CHECK(got_dims[0] == 4);
    const double mi = dent_joint_pmf_mi(jp);
    CHECK(mi > 0.0);
    JointGuard sample;
    REQUIRE(dent_joint_pmf_sample(jp, 64, 5, &sample.p) == DENT_OK);
    CHECK(dent_joint_total(sample.p) == 64);
    dent_joint_pmf_free(jp);
}

TEST_CASE("analytics C bindings") {
    const double mse[] = {1.0, 0.5, 0.08, 0.05, 0.04};
    int fp = -2;
    REQUIRE(dent_flattening_point(mse, 5, 3, 0.1, &fp) == DENT_OK);
    CHECK(fp == 5); // deltas below 0.1 from the third entry on
    double area = 0.0;
    REQUIRE(dent_auc(mse, 5, &area) == DENT_OK);
    CHECK(area == doctest::Approx(0.75 + 0.29 + 0.065 + 0.045));
    const int fps[] = {9, 9, 10, 9, 10, 12};
    double slope = 0.0, l2 = 0.0;
    REQUIRE(dent_slope_l2(fps, 6, 15, &slope, &l2) == DENT_OK);
    CHECK(l2 == doctest::Approx(24.23).epsilon(0.0005));
    double below = 0.0, from = 0.0;
    REQUIRE(dent_auc_split(mse, 5, 2, &below, &from) == DENT_OK);
    CHECK(below == doctest::Approx(0.75 + 0.29));
    CHECK(from == doctest::Approx(0.065 + 0.045));
}

TEST_CASE("observation file loading with header detection and parse errors") {
    {
        std::ofstream out("capi_counts.csv");
        out << "symbol,count\napple,2\nbanana,1\ncherry,1\n";
    }
    dent_hist* h = nullptr;
    REQUIRE(dent_load_observations("capi_counts.csv", 1, &h, nullptr) == DENT_OK);
    CHECK(dent_hist_total(h) == 4);
    CHECK(dent_hist_support(h) == 3);
    dent_hist_free(h);

    {
        std::ofstream out("capi_bad.csv");
        out << "a,2\nb,x\n";
    }
    CHECK(dent_load_observations("capi_bad.csv", 1, &h, nullptr) == DENT_ERR_PARSE);
    CHECK(dent_last_error_line() == 2);

    {
        std::ofstream out("capi_samples.csv");
        out << "a\nb\na\nc\n";
    }
    REQUIRE(dent_load_observations("capi_samples.csv", 1, &h, nullptr) == DENT_OK);
    CHECK(dent_hist_total(h) == 4);
    dent_hist_free(h);

    {
        std::ofstream out("capi_tuples.csv");
        out << "a,x\na,y\na,x\n";
    }
    dent_joint* j = nullptr;
    REQUIRE(dent_load_observations("capi_tuples.csv", 2, nullptr, &j) == DENT_OK);
    CHECK(dent_joint_total(j) == 3);
    dent_joint_free(j);

    {
        std::ofstream out("capi_joint_counts.csv");
        out << "x,y,count\nu,v,3\nu,w,1\nt,v,2\n";
    }
    REQUIRE(dent_load_observations("capi_joint_counts.csv", 2, nullptr, &j) == DENT_OK);
    CHECK(dent_joint_total(j) == 6);
    CHECK(dent_joint_arity(j) == 2);
    dent_joint_free(j);

    CHECK(dent_load_observations("missing_file.csv", 1, &h, nullptr) == DENT_ERR_IO);
}

TEST_CASE("bench config and report bindings") {
    dent_bench_config* cfg = nullptr;
    REQUIRE(dent_bench_config_parse(
                "measures = MI\nk_grid = 16\nn_grid = 8,16\nrepetitions = 2\n"
                "gt_levels = S\nestimators = ML\nmaster_seed = 5\n",
                &cfg) == DENT_OK);
    uint64_t cells = 0;
    REQUIRE(dent_bench_cell_count(cfg, &cells) == DENT_OK);
    CHECK(cells == 2);
    REQUIRE(dent_bench_run(cfg, "capi_bench_out", nullptr, nullptr) == DENT_OK);
    dent_bench_config_free(cfg);
    std::ifstream in("capi_bench_out/mse_MI_k16.csv");
    CHECK(in.good());

    CHECK(dent_bench_config_parse("k_grid = 16\n", &cfg) == DENT_ERR_PARAMETER);
}

TEST_CASE("triangle demo binding") {
    const dent_estimator_spec specs[2] = {spec_of("ML"), spec_of("CS")};
    double cmi[2] = {0.0, 0.0};
    REQUIRE(dent_triangle_demo(200, 42, 1, 20, specs, 2, cmi) == DENT_OK);
    CHECK(std::isfinite(cmi[0]));
    CHECK(std::isfinite(cmi[1]));
    CHECK(dent_triangle_demo(0, 42, 1, 20, specs, 2, cmi) == DENT_ERR_PARAMETER);
}
