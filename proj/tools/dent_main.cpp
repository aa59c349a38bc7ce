/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

// Command-line front end. Talks to the library exclusively through the
// public C API in dent/dent.h.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dent/dent.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

int exit_code_for(dent_status status) {
    switch (status) {
    case DENT_OK:
        return kExitOk;
    case DENT_ERR_EMPTY_SAMPLE:
    case DENT_ERR_PARAMETER:
    case DENT_ERR_DIMENSION:
    case DENT_ERR_IO:
    case DENT_ERR_PARSE:
        return kExitUsage;
    default:
        return kExitRuntime;
    }
}

int report_failure(dent_status status) {
    std::fprintf(stderr, "error (%s): %s\n", dent_status_name(status), dent_last_error());
    return exit_code_for(status);
}

// Fixed 6-decimal rendering keeps golden-file tests stable; NaN and infinity
// are printed literally.
std::string format_value(double v) {
    if (std::isnan(v)) {
        return "NaN";
    }
    if (std::isinf(v)) {
        return v > 0 ? "Inf" : "-Inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

const char* kAllEstimators[] = {"ML", "MM", "GSB88", "GSB03", "SHU", "CS",  "Z",   "SHR", "B",
                                "CW", "PYM", "BAY",  "LAP",   "JEF", "SG", "MIN", "NSB", "ANSB"};

struct EstimateOptions {
    std::string input;
    std::string measure = "H";
    std::string estimator = "ML";
    double alpha = std::nan("");
    double xi = std::nan("");
    std::uint64_t assumed_k = 0;
    bool all = false;
};

int run_estimate(const EstimateOptions& opt) {
    const int arity = opt.measure == "H" ? 1 : (opt.measure == "MI" ? 2 : 3);
    dent_hist* hist = nullptr;
    dent_joint* joint = nullptr;
    if (const auto st = dent_load_observations(opt.input.c_str(), arity, &hist, &joint);
        st != DENT_OK) {
        return report_failure(st);
    }

    auto estimate_one = [&](const char* id, double* out) {
        dent_estimator_spec spec{id, opt.alpha, opt.xi, opt.assumed_k};
        if (opt.all && std::strcmp(id, "BAY") == 0 && std::isnan(opt.alpha)) {
            spec.alpha = 0.0; // comparison-table default
        }
        return arity == 1 ? dent_measure_hist(hist, opt.measure.c_str(), &spec, out)
                          : dent_measure_joint(joint, opt.measure.c_str(), &spec, out);
    };

    int code = kExitOk;
    if (opt.all) {
        for (const char* id : kAllEstimators) {
            double value = 0.0;
            if (const auto st = estimate_one(id, &value); st != DENT_OK) {
                code = report_failure(st);
                break;
            }
            std::printf("%-6s %s\n", id, format_value(value).c_str());
        }
    } else {
        double value = 0.0;
        if (const auto st = estimate_one(opt.estimator.c_str(), &value); st != DENT_OK) {
            code = report_failure(st);
        } else {
            std::printf("%s\n", format_value(value).c_str());
        }
    }
    dent_hist_free(hist);
    dent_joint_free(joint);
    return code;
}

struct SimulateOptions {
    std::string measure = "H";
    std::string level = "M";
    std::uint64_t domain = 0;
    std::vector<std::uint64_t> dims;
    std::uint64_t seed = 1;
    std::uint64_t samples = 0;
    std::string out_dir = ".";
};

// Split k into per-axis sizes when --dims is not given (square / near-cube).
std::vector<std::uint64_t> default_dims(const std::string& measure, std::uint64_t k) {
    if (k == 0 || (k & (k - 1)) != 0) {
        return {};
    }
    int e = 0;
    for (std::uint64_t v = k; v > 1; v >>= 1) {
        ++e;
    }
    if (measure == "MI") {
        const int a = (e + 1) / 2;
        return {1ULL << a, 1ULL << (e - a)};
    }
    const int a = (e + 2) / 3;
    const int c = e / 3;
    return {1ULL << a, 1ULL << (e - a - c), 1ULL << c};
}

int run_simulate(const SimulateOptions& opt) {
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "error: cannot create %s: %s\n", opt.out_dir.c_str(),
                     ec.message().c_str());
        return kExitUsage;
    }
    const std::string pmf_path = opt.out_dir + "/pmf.csv";
    const std::string samples_path = opt.out_dir + "/samples.csv";

    if (opt.measure == "H") {
        dent_pmf* pmf = nullptr;
        if (const auto st = dent_pmf_generate(opt.domain, opt.level.c_str(), opt.seed, &pmf);
            st != DENT_OK) {
            return report_failure(st);
        }
        std::printf("H = %s\n", format_value(dent_pmf_entropy(pmf)).c_str());
        if (const auto st = dent_pmf_save(pmf, pmf_path.c_str()); st != DENT_OK) {
            dent_pmf_free(pmf);
            return report_failure(st);
        }
        std::printf("wrote %s\n", pmf_path.c_str());
        if (opt.samples > 0) {
            std::vector<std::uint64_t> draws(opt.samples);
            if (const auto st = dent_pmf_draw(pmf, opt.samples, opt.seed + 1, draws.data());
                st != DENT_OK) {
                dent_pmf_free(pmf);
                return report_failure(st);
            }
            std::ofstream out(samples_path);
            for (std::uint64_t v : draws) {
                out << v << "\n";
            }
            std::printf("wrote %s\n", samples_path.c_str());
        }
        dent_pmf_free(pmf);
        return kExitOk;
    }

    std::vector<std::uint64_t> dims = opt.dims;
    if (dims.empty()) {
        dims = default_dims(opt.measure, opt.domain);
        if (dims.empty()) {
            std::fprintf(stderr, "error: need --dims, or --k as a power of two\n");
            return kExitUsage;
        }
    }
    dent_joint_pmf* pmf = nullptr;
    if (const auto st = dent_joint_pmf_generate(opt.measure.c_str(), dims.data(), dims.size(),
                                                opt.level.c_str(), opt.seed, &pmf);
        st != DENT_OK) {
        return report_failure(st);
    }
    const double value = opt.measure == "MI" ? dent_joint_pmf_mi(pmf) : dent_joint_pmf_cmi(pmf);
    std::printf("%s = %s\n", opt.measure.c_str(), format_value(value).c_str());
    if (const auto st = dent_joint_pmf_save(pmf, pmf_path.c_str()); st != DENT_OK) {
        dent_joint_pmf_free(pmf);
        return report_failure(st);
    }
    std::printf("wrote %s\n", pmf_path.c_str());
    if (opt.samples > 0) {
        const std::size_t arity = dims.size();
        std::vector<std::uint64_t> draws(opt.samples * arity);
        if (const auto st = dent_joint_pmf_draw(pmf, opt.samples, opt.seed + 1, draws.data());
            st != DENT_OK) {
            dent_joint_pmf_free(pmf);
            return report_failure(st);
        }
        std::ofstream out(samples_path);
        for (std::uint64_t i = 0; i < opt.samples; ++i) {
            for (std::size_t a = 0; a < arity; ++a) {
                out << draws[i * arity + a] << (a + 1 < arity ? "," : "\n");
            }
        }
        std::printf("wrote %s\n", samples_path.c_str());
    }
    dent_joint_pmf_free(pmf);
    return kExitOk;
}

void print_progress(std::uint64_t done, std::uint64_t total, void* user) {
    auto* last = static_cast<std::uint64_t*>(user);
    const std::uint64_t step = total >= 20 ? total / 20 : 1;
    if (done == total || done >= *last + step) {
        *last = done;
        std::printf("  %" PRIu64 "/%" PRIu64 " cells\n", done, total);
        std::fflush(stdout);
    }
}

int run_bench(const std::string& config_path, const std::string& out_dir, unsigned threads) {
    std::string text;
    {
        std::ifstream in(config_path);
        if (!in) {
            std::fprintf(stderr, "error: cannot open config file: %s\n", config_path.c_str());
            return kExitUsage;
        }
        std::string line;
        while (std::getline(in, line)) {
            text += line;
            text += "\n";
        }
    }
    if (threads > 0) {
        text += "threads = " + std::to_string(threads) + "\n";
    }
    dent_bench_config* cfg = nullptr;
    if (const auto st = dent_bench_config_parse(text.c_str(), &cfg); st != DENT_OK) {
        return report_failure(st);
    }
    std::uint64_t cells = 0;
    dent_bench_cell_count(cfg, &cells);
    if (dent_bench_config_full_scale(cfg)) {
        std::fprintf(stderr,
                     "warning: full-scale grid enabled; large domains can take hours\n");
    }
    std::printf("running %" PRIu64 " grid cells\n", cells);
    std::fflush(stdout);
    std::uint64_t last = 0;
    const auto st = dent_bench_run(cfg, out_dir.c_str(), print_progress, &last);
    dent_bench_config_free(cfg);
    if (st != DENT_OK) {
        return report_failure(st);
    }
    std::printf("reports written to %s\n", out_dir.c_str());
    return kExitOk;
}

int run_demo(std::uint64_t n, std::uint64_t seed, const std::string& ranges) {
    std::int64_t lo = 1, hi = 100;
    if (!ranges.empty()) {
        const auto dots = ranges.find("..");
        bool ok = dots != std::string::npos;
        if (ok) {
            try {
                lo = std::stoll(ranges.substr(0, dots));
                hi = std::stoll(ranges.substr(dots + 2));
            } catch (...) {
                ok = false;
            }
        }
        if (!ok) {
            std::fprintf(stderr, "error: --ranges expects a..b\n");
            return kExitUsage;
        }
    }
    const dent_estimator_spec specs[] = {
        {"ML", std::nan(""), std::nan(""), 0},
        {"CS", std::nan(""), std::nan(""), 0},
        {"SHR", std::nan(""), std::nan(""), 0},
        {"B", std::nan(""), std::nan(""), 0},
    };
    double cmi[4] = {0, 0, 0, 0};
    std::printf("triangle leakage demo: N=%" PRIu64 ", sides uniform in [%lld, %lld]\n", n,
                static_cast<long long>(lo), static_cast<long long>(hi));
    if (const auto st = dent_triangle_demo(n, seed, lo, hi, specs, 4, cmi); st != DENT_OK) {
        return report_failure(st);
    }
    std::printf("estimated I(secret ; output | public inputs), nats:\n");
    for (int i = 0; i < 4; ++i) {
        std::printf("%-6s %s\n", specs[i].id, format_value(cmi[i]).c_str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dent - discrete entropy estimation toolkit"};
    app.require_subcommand(1);

    EstimateOptions est;
    auto* cmd_est = app.add_subcommand("estimate", "estimate H/MI/CMI from a data file");
    cmd_est->add_option("input", est.input, "counts or samples file")->required();
    cmd_est->add_option("--measure", est.measure, "H, MI or CMI")
        ->check(CLI::IsMember({"H", "MI", "CMI"}));
    cmd_est->add_option("--estimator", est.estimator, "estimator id (default ML)");
    cmd_est->add_option("--alpha", est.alpha, "Dirichlet concentration (BAY)");
    cmd_est->add_option("--xi", est.xi, "Schurmann parameter");
    cmd_est->add_option("--K", est.assumed_k, "assumed alphabet size");
    cmd_est->add_flag("--all", est.all, "print a comparison table over all 18 estimators");

    SimulateOptions sim;
    auto* cmd_sim = app.add_subcommand("simulate", "generate a ground-truth pmf and samples");
    cmd_sim->add_option("--measure", sim.measure, "H, MI or CMI")
        ->check(CLI::IsMember({"H", "MI", "CMI"}));
    cmd_sim->add_option("--k", sim.domain, "domain size");
    cmd_sim->add_option("--dims", sim.dims, "per-axis sizes (overrides --k)")->delimiter(',');
    cmd_sim->add_option("--gt", sim.level, "ground-truth level S, M or L")
        ->check(CLI::IsMember({"S", "M", "L"}));
    cmd_sim->add_option("--seed", sim.seed, "generation seed");
    cmd_sim->add_option("--N", sim.samples, "also draw N samples");
    cmd_sim->add_option("--out", sim.out_dir, "output directory (default .)");

    std::string bench_config, bench_out = "bench_out";
    unsigned bench_threads = 0;
    auto* cmd_bench = app.add_subcommand("bench", "run the convergence benchmark grid");
    cmd_bench->add_option("--config", bench_config, "flat key=value config file")->required();
    cmd_bench->add_option("--out", bench_out, "output directory");
    cmd_bench->add_option("--threads", bench_threads, "worker threads (0 = hardware)");

    std::string report_mse, report_out = "report.csv";
    double report_fb = 0.1;
    auto* cmd_report = app.add_subcommand("report", "analytics over an existing MSE matrix");
    cmd_report->add_option("--mse", report_mse, "MSE csv (rows estimators, columns N)")
        ->required();
    cmd_report->add_option("--fb", report_fb, "flattening bound (default 0.1)");
    cmd_report->add_option("--out", report_out, "output csv");

    std::uint64_t demo_n = 500, demo_seed = 1;
    std::string demo_ranges;
    auto* cmd_demo = app.add_subcommand("demo-triangle", "information-leakage demo");
    cmd_demo->add_option("--N", demo_n, "number of sampled executions");
    cmd_demo->add_option("--seed", demo_seed, "sampling seed");
    cmd_demo->add_option("--ranges", demo_ranges, "side range a..b (default 1..100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_est->parsed()) {
        return run_estimate(est);
    }
    if (cmd_sim->parsed()) {
        return run_simulate(sim);
    }
    if (cmd_bench->parsed()) {
        return run_bench(bench_config, bench_out, bench_threads);
    }
    if (cmd_report->parsed()) {
        const dent_status st =
            dent_report_mse_csv(report_mse.c_str(), report_fb, report_out.c_str());
        if (st != DENT_OK) {
            return report_failure(st);
        }
        std::printf("wrote %s\n", report_out.c_str());
        return kExitOk;
    }
    if (cmd_demo->parsed()) {
        return run_demo(demo_n, demo_seed, demo_ranges);
    }
    return kExitUsage;
}
