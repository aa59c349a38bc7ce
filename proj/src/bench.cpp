/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "csv.hpp"
#include "rng.hpp"

namespace dent {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(value);
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(item.substr(b, e - b + 1));
        }
    }
    return out;
}

bool is_power_of_two(std::uint64_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

int log2_exact(std::uint64_t v) {
    int e = 0;
    while (v > 1) {
        v >>= 1;
        ++e;
    }
    return e;
}

const std::array<const char*, kEstimatorCount> kCanonicalOrder = {
    "ML", "MM", "GSB88", "GSB03", "SHU", "CS", "Z",   "SHR", "B",
    "CW", "PYM", "BAY",  "LAP",   "JEF", "SG", "MIN", "NSB", "ANSB"};

} // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected key = value", line_no);
        }
        auto trim = [](std::string s) {
            const auto x = s.find_first_not_of(" \t\r");
            const auto y = s.find_last_not_of(" \t\r");
            return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "measures") {
                cfg.measures.clear();
                for (const auto& v : split_list(value)) {
                    const auto m = parse_measure(v);
                    if (!m) {
                        throw ParseError("unknown measure '" + v + "'", line_no);
                    }
                    cfg.measures.push_back(*m);
                }
            } else if (key == "k_grid") {
                cfg.k_grid.clear();
                for (const auto& v : split_list(value)) {
                    cfg.k_grid.push_back(std::stoull(v));
                }
            } else if (key == "n_grid") {
                cfg.n_exponents.clear();
                for (const auto& v : split_list(value)) {
                    const std::uint64_t n = std::stoull(v);
                    if (!is_power_of_two(n)) {
                        throw ParseError("sample sizes must be powers of two", line_no);
                    }
                    cfg.n_exponents.push_back(log2_exact(n));
                }
            } else if (key == "repetitions") {
                cfg.repetitions = static_cast<std::uint32_t>(std::stoul(value));
            } else if (key == "gt_levels") {
                cfg.gt_levels.clear();
                for (const auto& v : split_list(value)) {
                    const auto g = parse_gt_level(v);
                    if (!g) {
                        throw ParseError("unknown gt level '" + v + "'", line_no);
                    }
                    cfg.gt_levels.push_back(*g);
                }
            } else if (key == "estimators") {
                cfg.estimators = split_list(value);
            } else if (key == "master_seed") {
                cfg.master_seed = std::stoull(value);
                cfg.seed_set = true;
            } else if (key == "flattening_bound") {
                cfg.flattening_bound = std::stod(value);
            } else if (key == "penalty_exponent") {
                cfg.penalty_exponent = std::stoi(value);
            } else if (key == "bayesian_k") {
                if (value == "observed") {
                    cfg.bayesian_k_true = false;
                } else if (value == "true") {
                    cfg.bayesian_k_true = true;
                } else {
                    throw ParseError("bayesian_k must be 'observed' or 'true'", line_no);
                }
            } else if (key == "bay_alpha") {
                cfg.bay_alpha = std::stod(value);
            } else if (key == "shu_xi") {
                cfg.shu_xi = std::stod(value);
            } else if (key == "threads") {
                cfg.threads = static_cast<unsigned>(std::stoul(value));
            } else if (key == "full_scale") {
                cfg.full_scale = (value == "true" || value == "1" || value == "yes");
            } else {
                throw ParseError("unknown config key '" + key + "'", line_no);
            }
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed value for key '" + key + "'", line_no);
        } catch (const std::out_of_range&) {
            throw ParseError("value out of range for key '" + key + "'", line_no);
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void ExperimentConfig::validate() const {
    if (!seed_set) {
        throw ParameterError("master_seed is required for reproducible runs");
    }
    if (measures.empty() || k_grid.empty() || n_exponents.empty() || gt_levels.empty()) {
        throw ParameterError("measures, k_grid, n_grid and gt_levels must be nonempty");
    }
    if (repetitions < 1) {
        throw ParameterError("repetitions must be at least 1");
    }
    if (!(flattening_bound > 0.0)) {
        throw ParameterError("flattening_bound must be positive");
    }
    for (std::size_t i = 1; i < k_grid.size(); ++i) {
        if (k_grid[i] <= k_grid[i - 1]) {
            throw ParameterError("k_grid must be strictly ascending");
        }
    }
    for (std::size_t i = 1; i < n_exponents.size(); ++i) {
        if (n_exponents[i] <= n_exponents[i - 1]) {
            throw ParameterError("n_grid must be strictly ascending");
        }
    }
    for (std::uint64_t k : k_grid) {
        if (!is_power_of_two(k)) {
            throw ParameterError("k_grid entries must be powers of two");
        }
        if (k > 4096 && !full_scale) {
            throw ParameterError(
                "k > 4096 is beyond the desk-scale envelope; set full_scale = true to override");
        }
    }
    for (const auto& name : estimators) {
        if (!parse_estimator(name)) {
            throw ParameterError("unknown estimator '" + name + "'");
        }
    }
}

std::vector<std::string> ExperimentConfig::estimator_names() const {
    if (!estimators.empty()) {
        return estimators;
    }
    return {kCanonicalOrder.begin(), kCanonicalOrder.end()};
}

std::vector<EstimatorSpec> ExperimentConfig::estimator_specs() const {
    std::vector<EstimatorSpec> specs;
    for (const auto& name : estimator_names()) {
        EstimatorSpec spec = EstimatorSpec::make(*parse_estimator(name));
        if (spec.id == EstimatorId::Bay) {
            spec.alpha = bay_alpha;
        }
        if (spec.id == EstimatorId::Shu && shu_xi) {
            spec.xi = shu_xi;
        }
        specs.push_back(spec);
    }
    return specs;
}

std::vector<std::uint64_t> dims_for(Measure m, std::uint64_t k) {
    if (!is_power_of_two(k)) {
        throw ParameterError("joint domain size must be a power of two");
    }
    const int e = log2_exact(k);
    switch (m) {
    case Measure::H:
        return {k};
    case Measure::MI: {
        const int a = (e + 1) / 2;
        return {1ULL << a, 1ULL << (e - a)};
    }
    case Measure::CMI: {
        const int a = (e + 2) / 3;
        const int c = e / 3;
        return {1ULL << a, 1ULL << (e - a - c), 1ULL << c};
    }
    }
    throw ParameterError("unknown measure");
}

namespace {

// One generated distribution and all its per-N squared errors.
struct CellTask {
    std::size_t measure_idx;
    std::size_t k_idx;
    std::size_t gt_idx;
    std::uint32_t rep;
};

} // namespace

BenchResult run_grid(const ExperimentConfig& cfg, const ProgressFn& progress) {
    cfg.validate();
    const auto specs = cfg.estimator_specs();
    const auto names = cfg.estimator_names();
    const std::size_t n_meas = cfg.measures.size();
    const std::size_t n_k = cfg.k_grid.size();
    const std::size_t n_gt = cfg.gt_levels.size();
    const std::size_t n_n = cfg.n_exponents.size();
    const std::size_t n_est = specs.size();
    const std::uint32_t reps = cfg.repetitions;

    // slot layout: [measure][k][est][n][gt * reps + rep]
    const std::size_t rep_slots = n_gt * reps;
    const std::size_t per_curve = n_n * rep_slots;
    std::vector<double> sq(n_meas * n_k * n_est * per_curve, kNan);

    std::vector<CellTask> tasks;
    tasks.reserve(n_meas * n_k * n_gt * reps);
    for (std::size_t mi = 0; mi < n_meas; ++mi) {
        for (std::size_t ki = 0; ki < n_k; ++ki) {
            for (std::size_t gi = 0; gi < n_gt; ++gi) {
                for (std::uint32_t rep = 0; rep < reps; ++rep) {
                    tasks.push_back({mi, ki, gi, rep});
                }
            }
        }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> done{0};
    std::mutex fail_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) {
                return;
            }
            {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (failure) {
                    return;
                }
            }
            const CellTask& task = tasks[t];
            const Measure measure = cfg.measures[task.measure_idx];
            const std::uint64_t k = cfg.k_grid[task.k_idx];
            const GtLevel gt = cfg.gt_levels[task.gt_idx];
            const std::uint64_t cell_seed =
                mix_seed({cfg.master_seed, static_cast<std::uint64_t>(measure), k,
                          static_cast<std::uint64_t>(gt), task.rep});
            try {
                if (measure == Measure::H) {
                    const DiscretePmf pmf = generate_pmf(k, gt, cell_seed);
                    const double truth = exact_entropy(pmf);
                    for (std::size_t ni = 0; ni < n_n; ++ni) {
                        const std::uint64_t n = 1ULL << cfg.n_exponents[ni];
                        const CountHistogram h =
                            sample_hist(pmf, n, mix_seed({cell_seed, static_cast<std::uint64_t>(
                                                                         cfg.n_exponents[ni])}));
                        for (std::size_t ei = 0; ei < n_est; ++ei) {
                            EstimatorSpec spec = specs[ei];
                            if (cfg.bayesian_k_true) {
                                spec.k = k;
                            }
                            const double v = estimate_entropy(h, spec).value;
                            const double err = v - truth;
                            sq[(((task.measure_idx * n_k + task.k_idx) * n_est + ei) * n_n + ni) *
                                   rep_slots +
                               task.gt_idx * reps + task.rep] = err * err;
                        }
                    }
                } else {
                    const auto dims = dims_for(measure, k);
                    const JointPmf joint = generate_joint(dims, measure, gt, cell_seed);
                    const double truth = exact_measure(joint, measure);
                    for (std::size_t ni = 0; ni < n_n; ++ni) {
                        const std::uint64_t n = 1ULL << cfg.n_exponents[ni];
                        const JointHistogram h =
                            sample_joint(joint, n, mix_seed({cell_seed, static_cast<std::uint64_t>(
                                                                            cfg.n_exponents[ni])}));
                        for (std::size_t ei = 0; ei < n_est; ++ei) {
                            double v;
                            if (measure == Measure::MI) {
                                std::optional<std::array<std::uint64_t, 2>> td;
                                if (cfg.bayesian_k_true) {
                                    td = std::array<std::uint64_t, 2>{dims[0], dims[1]};
                                }
                                v = mi_estimate(h, specs[ei], td);
                            } else {
                                std::optional<std::array<std::uint64_t, 3>> td;
                                if (cfg.bayesian_k_true) {
                                    td = std::array<std::uint64_t, 3>{dims[0], dims[1], dims[2]};
                                }
                                v = cmi_estimate(h, specs[ei], td);
                            }
                            const double err = v - truth;
                            sq[(((task.measure_idx * n_k + task.k_idx) * n_est + ei) * n_n + ni) *
                                   rep_slots +
                               task.gt_idx * reps + task.rep] = err * err;
                        }
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure) {
                    try {
                        std::rethrow_exception(std::current_exception());
                    } catch (const Error& e) {
                        failure = std::make_exception_ptr(GenerationError(
                            std::string(e.what()) + " [cell measure=" + measure_name(measure) +
                            " k=" + std::to_string(k) + " gt=" + gt_level_name(gt) +
                            " rep=" + std::to_string(task.rep) + "]"));
                    } catch (...) {
                        failure = std::current_exception();
                    }
                }
                return;
            }
            const std::uint64_t d = done.fetch_add(1) + 1;
            if (progress) {
                progress(d, tasks.size());
            }
        }
    };

    unsigned n_threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    if (n_threads == 0) {
        n_threads = 1;
    }
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(tasks.size()));
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Fixed-order reduction so results do not depend on the worker count.
    BenchResult result;
    result.config = cfg;
    for (std::size_t mi = 0; mi < n_meas; ++mi) {
        for (std::size_t ki = 0; ki < n_k; ++ki) {
            for (std::size_t ei = 0; ei < n_est; ++ei) {
                MseCurve curve;
                curve.estimator = names[ei];
                curve.measure = cfg.measures[mi];
                curve.k = cfg.k_grid[ki];
                curve.mse.resize(n_n);
                for (std::size_t ni = 0; ni < n_n; ++ni) {
                    const double* slots =
                        &sq[(((mi * n_k + ki) * n_est + ei) * n_n + ni) * rep_slots];
                    double acc = 0.0;
                    for (std::size_t s = 0; s < rep_slots; ++s) {
                        acc += slots[s];
                    }
                    curve.mse[ni] = acc / static_cast<double>(rep_slots);
                }
                result.curves.push_back(std::move(curve));
            }
        }
    }
    return result;
}

std::optional<int> flattening_point(std::span<const double> mse, int first_exponent, double fb) {
    if (mse.size() < 2) {
        return std::nullopt;
    }
    std::optional<int> best;
    for (std::size_t i = mse.size() - 1; i-- > 0;) {
        const double a = mse[i];
        const double b = mse[i + 1];
        if (!std::isfinite(a) || !std::isfinite(b) || !(std::abs(b - a) < fb)) {
            break;
        }
        best = first_exponent + static_cast<int>(i);
    }
    return best;
}

SlopeNorm slope_and_norm(std::span<const std::optional<int>> fps, int penalty) {
    const std::size_t n = fps.size();
    SlopeNorm out;
    if (n == 0) {
        return out;
    }
    double sum_x = 0.0, sum_y = 0.0, sum_xy = 0.0, sum_xx = 0.0, sum_yy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1);
        const double y = static_cast<double>(fps[i].value_or(penalty));
        sum_x += x;
        sum_y += y;
        sum_xy += x * y;
        sum_xx += x * x;
        sum_yy += y * y;
    }
    const double denom = sum_xx - sum_x * sum_x / static_cast<double>(n);
    out.slope = denom > 0.0 ? (sum_xy - sum_x * sum_y / static_cast<double>(n)) / denom : 0.0;
    out.l2 = std::sqrt(sum_yy);
    return out;
}

std::optional<double> fp_ratio(const std::optional<int>& fp, std::uint64_t k) {
    if (!fp) {
        return std::nullopt;
    }
    return std::pow(2.0, static_cast<double>(*fp)) / static_cast<double>(k);
}

double auc(std::span<const double> mse) {
    if (mse.size() < 2) {
        return 0.0;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < mse.size(); ++i) {
        acc += 0.5 * (mse[i] + mse[i + 1]);
    }
    return acc;
}

AucSplit auc_split(std::span<const double> mse, std::size_t from_index) {
    AucSplit out;
    if (from_index >= mse.size()) {
        out.below = auc(mse);
        return out;
    }
    out.below = auc(mse.subspan(0, from_index + 1));
    out.from = auc(mse.subspan(from_index));
    return out;
}

namespace {

std::string format_double(double v, const char* fmt) {
    if (std::isnan(v)) {
        return "NaN";
    }
    if (std::isinf(v)) {
        return v > 0 ? "Inf" : "-Inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

const MseCurve& find_curve(const BenchResult& r, Measure m, std::uint64_t k,
                           const std::string& est) {
    for (const auto& c : r.curves) {
        if (c.measure == m && c.k == k && c.estimator == est) {
            return c;
        }
    }
    throw ParameterError("curve not found in results");
}

void write_or_throw(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << content;
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

} // namespace

void export_reports(const BenchResult& result, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    }
    const auto& cfg = result.config;
    const auto names = cfg.estimator_names();

    for (Measure m : cfg.measures) {
        // Per-k MSE matrices.
        for (std::uint64_t k : cfg.k_grid) {
            std::string body = "estimator";
            for (int e : cfg.n_exponents) {
                body += "," + std::to_string(1ULL << e);
            }
            body += "\n";
            for (const auto& est : names) {
                const auto& curve = find_curve(result, m, k, est);
                body += est;
                for (double v : curve.mse) {
                    body += "," + format_double(v, "%.12g");
                }
                body += "\n";
            }
            write_or_throw(out_dir + "/mse_" + measure_name(m) + "_k" + std::to_string(k) + ".csv",
                           body);
        }

        // Flattening points with slope / l2, ratios, AUC tables.
        std::string fp_body = "estimator";
        std::string ratio_body = "estimator";
        std::string auc_body = "estimator";
        std::string split_body = "estimator";
        for (std::uint64_t k : cfg.k_grid) {
            fp_body += "," + std::to_string(k);
            ratio_body += "," + std::to_string(k);
            auc_body += "," + std::to_string(k);
            split_body += ",lt_fp_" + std::to_string(k) + ",ge_fp_" + std::to_string(k);
        }
        fp_body += ",slope,l2_norm\n";
        ratio_body += "\n";
        auc_body += "\n";
        split_body += "\n";

        // Split exponent per k: the larger of the converged CS/CW safe sizes.
        std::vector<std::optional<int>> split_exp(cfg.k_grid.size());
        for (std::size_t ki = 0; ki < cfg.k_grid.size(); ++ki) {
            std::optional<int> s;
            for (const char* est : {"CS", "CW"}) {
                if (std::find(names.begin(), names.end(), est) == names.end()) {
                    continue;
                }
                const auto& curve = find_curve(result, m, cfg.k_grid[ki], est);
                const auto fp =
                    flattening_point(curve.mse, cfg.n_exponents.front(), cfg.flattening_bound);
                if (fp && (!s || *fp > *s)) {
                    s = fp;
                }
            }
            split_exp[ki] = s;
        }

        for (const auto& est : names) {
            std::vector<std::optional<int>> fps;
            fp_body += est;
            ratio_body += est;
            auc_body += est;
            split_body += est;
            for (std::size_t ki = 0; ki < cfg.k_grid.size(); ++ki) {
                const std::uint64_t k = cfg.k_grid[ki];
                const auto& curve = find_curve(result, m, k, est);
                const auto fp =
                    flattening_point(curve.mse, cfg.n_exponents.front(), cfg.flattening_bound);
                fps.push_back(fp);
                fp_body += fp ? "," + std::to_string(*fp) : ",";
                const auto ratio = fp_ratio(fp, k);
                ratio_body += ratio ? "," + format_double(*ratio, "%.2f") : ",";
                auc_body += "," + format_double(auc(curve.mse), "%.4f");
                if (split_exp[ki]) {
                    const std::size_t idx = static_cast<std::size_t>(
                        *split_exp[ki] - cfg.n_exponents.front());
                    const AucSplit s = auc_split(curve.mse, idx);
                    split_body += "," + format_double(s.below, "%.4f") + "," +
                                  format_double(s.from, "%.4f");
                } else {
                    split_body += ",,";
                }
            }
            const SlopeNorm sn = slope_and_norm(fps, cfg.penalty_exponent);
            fp_body += "," + format_double(sn.slope, "%.4f") + "," + format_double(sn.l2, "%.4f") +
                       "\n";
            ratio_body += "\n";
            auc_body += "\n";
            split_body += "\n";
        }
        const std::string mname = measure_name(m);
        write_or_throw(out_dir + "/fp_" + mname + ".csv", fp_body);
        write_or_throw(out_dir + "/ratios_" + mname + ".csv", ratio_body);
        write_or_throw(out_dir + "/auc_" + mname + ".csv", auc_body);
        write_or_throw(out_dir + "/auc_split_" + mname + ".csv", split_body);
    }
}

void report_from_mse_csv(const std::string& mse_csv, double fb, const std::string& out_csv) {
    const CsvTable table = read_csv(mse_csv);
    if (table.rows.empty()) {
        throw ParseError("empty MSE table", 1);
    }
    // Header row: estimator,<N...>. Sample sizes must be powers of two.
    const auto& header = table.rows.front();
    if (header.size() < 3) {
        throw ParseError("MSE table needs at least two sample-size columns", 1);
    }
    std::vector<int> exponents;
    for (std::size_t c = 1; c < header.size(); ++c) {
        std::uint64_t n = 0;
        try {
            n = std::stoull(header[c]);
        } catch (...) {
            throw ParseError("sample-size column is not numeric", 1);
        }
        if (!is_power_of_two(n)) {
            throw ParseError("sample sizes must be powers of two", 1);
        }
        exponents.push_back(log2_exact(n));
    }
    std::string body = "estimator,fp,auc,auc_lt_fp,auc_ge_fp\n";
    for (std::size_t r = 1; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != header.size()) {
            throw ParseError("row width does not match header", r + 1);
        }
        std::vector<double> mse;
        for (std::size_t c = 1; c < row.size(); ++c) {
            mse.push_back(parse_double_token(row[c], r + 1));
        }
        const auto fp = flattening_point(mse, exponents.front(), fb);
        body += row[0];
        body += fp ? "," + std::to_string(*fp) : ",";
        body += "," + format_double(auc(mse), "%.4f");
        if (fp) {
            const AucSplit s = auc_split(mse, static_cast<std::size_t>(*fp - exponents.front()));
            body += "," + format_double(s.below, "%.4f") + "," + format_double(s.from, "%.4f");
        } else {
            body += ",,";
        }
        body += "\n";
    }
    write_or_throw(out_csv, body);
}

} // namespace dent
