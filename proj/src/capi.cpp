/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "dent/dent.h"

#include <cmath>
#include <cstring>
#include <string>

#include "bench.hpp"
#include "csv.hpp"
#include "triangle.hpp"

namespace {

thread_local std::string g_last_error;
thread_local size_t g_last_error_line = 0;

void set_error(const std::string& message, size_t line = 0) {
    g_last_error = message;
    g_last_error_line = line;
}

// Every API body runs inside this guard; exceptions map onto status codes.
template <typename F>
dent_status guarded(F&& body) {
    try {
        g_last_error_line = 0;
        return body();
    } catch (const dent::EmptySampleError& e) {
        set_error(e.what());
        return DENT_ERR_EMPTY_SAMPLE;
    } catch (const dent::ParameterError& e) {
        set_error(e.what());
        return DENT_ERR_PARAMETER;
    } catch (const dent::DimensionError& e) {
        set_error(e.what());
        return DENT_ERR_DIMENSION;
    } catch (const dent::NumericalError& e) {
        set_error(e.what());
        return DENT_ERR_NUMERICAL;
    } catch (const dent::GenerationError& e) {
        set_error(e.what());
        return DENT_ERR_GENERATION;
    } catch (const dent::ParseError& e) {
        set_error(e.what(), e.line());
        return DENT_ERR_PARSE;
    } catch (const dent::IoError& e) {
        set_error(e.what());
        return DENT_ERR_IO;
    } catch (const std::exception& e) {
        set_error(e.what());
        return DENT_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown failure");
        return DENT_ERR_INTERNAL;
    }
}

dent_status require(bool ok, const char* message) {
    if (!ok) {
        set_error(message);
        return DENT_ERR_PARAMETER;
    }
    return DENT_OK;
}

dent::EstimatorSpec convert_spec(const dent_estimator_spec* spec) {
    if (spec == nullptr || spec->id == nullptr) {
        throw dent::ParameterError("estimator spec is null");
    }
    const auto id = dent::parse_estimator(spec->id);
    if (!id) {
        throw dent::ParameterError(std::string("unknown estimator id '") + spec->id + "'");
    }
    dent::EstimatorSpec out = dent::EstimatorSpec::make(*id);
    if (!std::isnan(spec->alpha)) {
        out.alpha = spec->alpha;
    }
    if (!std::isnan(spec->xi)) {
        out.xi = spec->xi;
    }
    if (spec->k != 0) {
        out.k = spec->k;
    }
    return out;
}

dent::Measure convert_measure(const char* measure) {
    if (measure == nullptr) {
        throw dent::ParameterError("measure is null");
    }
    const auto m = dent::parse_measure(measure);
    if (!m) {
        throw dent::ParameterError(std::string("unknown measure '") + measure + "'");
    }
    return *m;
}

dent::GtLevel convert_level(const char* level) {
    if (level == nullptr) {
        throw dent::ParameterError("gt level is null");
    }
    const auto g = dent::parse_gt_level(level);
    if (!g) {
        throw dent::ParameterError(std::string("unknown gt level '") + level + "'");
    }
    return *g;
}

} // namespace

struct dent_hist {
    dent::CountHistogram value;
};
struct dent_joint {
    dent::JointHistogram value;
};
struct dent_pmf {
    dent::DiscretePmf value;
};
struct dent_joint_pmf {
    dent::JointPmf value;
};
struct dent_bench_config {
    dent::ExperimentConfig value;
};

extern "C" {

const char* dent_status_name(dent_status status) {
    switch (status) {
    case DENT_OK:
        return "ok";
    case DENT_ERR_EMPTY_SAMPLE:
        return "empty sample";
    case DENT_ERR_PARAMETER:
        return "parameter error";
    case DENT_ERR_DIMENSION:
        return "dimension error";
    case DENT_ERR_NUMERICAL:
        return "numerical error";
    case DENT_ERR_GENERATION:
        return "generation error";
    case DENT_ERR_IO:
        return "io error";
    case DENT_ERR_PARSE:
        return "parse error";
    case DENT_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown";
}

const char* dent_last_error(void) {
    return g_last_error.c_str();
}

size_t dent_last_error_line(void) {
    return g_last_error_line;
}

const char* dent_version(void) {
    return "0.1.0";
}

dent_status dent_hist_from_counts(const uint64_t* counts, size_t m, dent_hist** out) {
    if (auto st = require(counts != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_hist{
            dent::CountHistogram::from_counts(std::vector<uint64_t>(counts, counts + m))};
        return DENT_OK;
    });
}

dent_status dent_hist_from_samples(const int64_t* symbols, size_t n, dent_hist** out) {
    if (auto st = require(symbols != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_hist{
            dent::CountHistogram::from_samples(std::span<const int64_t>(symbols, n))};
        return DENT_OK;
    });
}

void dent_hist_free(dent_hist* hist) {
    delete hist;
}

uint64_t dent_hist_total(const dent_hist* hist) {
    return hist != nullptr ? hist->value.total() : 0;
}

uint64_t dent_hist_support(const dent_hist* hist) {
    return hist != nullptr ? hist->value.support() : 0;
}

dent_status dent_joint_from_tuples(int arity, const int64_t* flat, size_t n, dent_joint** out) {
    if (auto st = require(flat != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_joint{dent::JointHistogram::from_tuples(
            arity, std::span<const int64_t>(flat, n * static_cast<size_t>(arity)))};
        return DENT_OK;
    });
}

dent_status dent_joint_from_cells(int arity, const int64_t* flat, const uint64_t* counts,
                                  size_t ncells, dent_joint** out) {
    if (auto st = require(flat != nullptr && counts != nullptr && out != nullptr, "null argument");
        st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_joint{dent::JointHistogram::from_cells(
            arity, std::span<const int64_t>(flat, ncells * static_cast<size_t>(arity)),
            std::span<const uint64_t>(counts, ncells))};
        return DENT_OK;
    });
}

void dent_joint_free(dent_joint* joint) {
    delete joint;
}

int dent_joint_arity(const dent_joint* joint) {
    return joint != nullptr ? joint->value.arity() : 0;
}

uint64_t dent_joint_total(const dent_joint* joint) {
    return joint != nullptr ? joint->value.total() : 0;
}

dent_status dent_joint_marginal_hist(const dent_joint* joint, int axis, dent_hist** out) {
    if (auto st = require(joint != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_hist{joint->value.marginal_hist(axis)};
        return DENT_OK;
    });
}

dent_status dent_joint_marginal_joint(const dent_joint* joint, int axis0, int axis1,
                                      dent_joint** out) {
    if (auto st = require(joint != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_joint{joint->value.marginal_joint(axis0, axis1)};
        return DENT_OK;
    });
}

dent_status dent_joint_cells_hist(const dent_joint* joint, dent_hist** out) {
    if (auto st = require(joint != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_hist{joint->value.cells_hist()};
        return DENT_OK;
    });
}

dent_status dent_load_observations(const char* path, int arity, dent_hist** out_hist,
                                   dent_joint** out_joint) {
    if (auto st = require(path != nullptr, "null path"); st != DENT_OK) {
        return st;
    }
    return guarded([&]() -> dent_status {
        if (arity == 1 && out_hist == nullptr) {
            throw dent::ParameterError("out_hist is null");
        }
        if (arity != 1 && out_joint == nullptr) {
            throw dent::ParameterError("out_joint is null");
        }
        dent::LoadedData data = dent::load_observations(path, arity);
        if (data.hist) {
            *out_hist = new dent_hist{std::move(*data.hist)};
        } else {
            *out_joint = new dent_joint{std::move(*data.joint)};
        }
        return DENT_OK;
    });
}

dent_status dent_entropy(const dent_hist* hist, const dent_estimator_spec* spec, double* out) {
    if (auto st = require(hist != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = dent::estimate_entropy(hist->value, convert_spec(spec)).value;
        return DENT_OK;
    });
}

dent_status dent_mutual_information(const dent_joint* joint, const dent_estimator_spec* spec,
                                    const uint64_t* true_dims, double* out) {
    if (auto st = require(joint != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        std::optional<std::array<uint64_t, 2>> dims;
        if (true_dims != nullptr) {
            dims = std::array<uint64_t, 2>{true_dims[0], true_dims[1]};
        }
        *out = dent::mi_estimate(joint->value, convert_spec(spec), dims);
        return DENT_OK;
    });
}

dent_status dent_conditional_mi(const dent_joint* joint, const dent_estimator_spec* spec,
                                const uint64_t* true_dims, double* out) {
    if (auto st = require(joint != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        std::optional<std::array<uint64_t, 3>> dims;
        if (true_dims != nullptr) {
            dims = std::array<uint64_t, 3>{true_dims[0], true_dims[1], true_dims[2]};
        }
        *out = dent::cmi_estimate(joint->value, convert_spec(spec), dims);
        return DENT_OK;
    });
}

dent_status dent_measure_hist(const dent_hist* hist, const char* measure,
                              const dent_estimator_spec* spec, double* out) {
    if (auto st = require(hist != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = dent::measure_estimate(hist->value, convert_measure(measure), convert_spec(spec));
        return DENT_OK;
    });
}

dent_status dent_measure_joint(const dent_joint* joint, const char* measure,
                               const dent_estimator_spec* spec, double* out) {
    if (auto st = require(joint != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = dent::measure_estimate(joint->value, convert_measure(measure), convert_spec(spec));
        return DENT_OK;
    });
}

dent_status dent_pmf_generate(uint64_t k, const char* level, uint64_t seed, dent_pmf** out) {
    if (auto st = require(out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_pmf{dent::generate_pmf(k, convert_level(level), seed)};
        return DENT_OK;
    });
}

dent_status dent_pmf_from_probs(const double* probs, uint64_t k, dent_pmf** out) {
    if (auto st = require(probs != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&]() -> dent_status {
        std::vector<double> p(probs, probs + k);
        double sum = 0.0;
        for (double v : p) {
            if (!(v >= 0.0)) {
                throw dent::ParameterError("probabilities must be nonnegative");
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw dent::ParameterError("probabilities must sum to 1 within 1e-12");
        }
        *out = new dent_pmf{dent::DiscretePmf{std::move(p)}};
        return DENT_OK;
    });
}

void dent_pmf_free(dent_pmf* pmf) {
    delete pmf;
}

uint64_t dent_pmf_domain(const dent_pmf* pmf) {
    return pmf != nullptr ? pmf->value.domain() : 0;
}

dent_status dent_pmf_probs(const dent_pmf* pmf, double* out) {
    if (auto st = require(pmf != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    std::memcpy(out, pmf->value.probs.data(), pmf->value.probs.size() * sizeof(double));
    return DENT_OK;
}

double dent_pmf_entropy(const dent_pmf* pmf) {
    return pmf != nullptr ? dent::exact_entropy(pmf->value) : 0.0;
}

dent_status dent_pmf_save(const dent_pmf* pmf, const char* path) {
    if (auto st = require(pmf != nullptr && path != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        dent::save_pmf(pmf->value, path);
        return DENT_OK;
    });
}

dent_status dent_pmf_load(const char* path, dent_pmf** out) {
    if (auto st = require(path != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_pmf{dent::load_pmf(path)};
        return DENT_OK;
    });
}

dent_status dent_joint_pmf_load(const char* path, dent_joint_pmf** out) {
    if (auto st = require(path != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_joint_pmf{dent::load_joint_pmf(path)};
        return DENT_OK;
    });
}

dent_status dent_joint_pmf_generate(const char* measure, const uint64_t* dims, size_t ndims,
                                    const char* level, uint64_t seed, dent_joint_pmf** out) {
    if (auto st = require(dims != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_joint_pmf{dent::generate_joint(std::span<const uint64_t>(dims, ndims),
                                                       convert_measure(measure),
                                                       convert_level(level), seed)};
        return DENT_OK;
    });
}

void dent_joint_pmf_free(dent_joint_pmf* pmf) {
    delete pmf;
}

int dent_joint_pmf_arity(const dent_joint_pmf* pmf) {
    return pmf != nullptr ? pmf->value.arity : 0;
}

dent_status dent_joint_pmf_dims(const dent_joint_pmf* pmf, uint64_t* dims_out) {
    if (auto st = require(pmf != nullptr && dims_out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    for (int a = 0; a < pmf->value.arity; ++a) {
        dims_out[a] = pmf->value.dims[static_cast<size_t>(a)];
    }
    return DENT_OK;
}

double dent_joint_pmf_mi(const dent_joint_pmf* pmf) {
    return pmf != nullptr && pmf->value.arity == 2 ? dent::exact_mi(pmf->value)
                                                   : std::numeric_limits<double>::quiet_NaN();
}

double dent_joint_pmf_cmi(const dent_joint_pmf* pmf) {
    return pmf != nullptr && pmf->value.arity == 3 ? dent::exact_cmi(pmf->value)
                                                   : std::numeric_limits<double>::quiet_NaN();
}

dent_status dent_joint_pmf_save(const dent_joint_pmf* pmf, const char* path) {
    if (auto st = require(pmf != nullptr && path != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        dent::save_joint_pmf(pmf->value, path);
        return DENT_OK;
    });
}

dent_status dent_pmf_sample(const dent_pmf* pmf, uint64_t n, uint64_t seed, dent_hist** out) {
    if (auto st = require(pmf != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_hist{dent::sample_hist(pmf->value, n, seed)};
        return DENT_OK;
    });
}

dent_status dent_joint_pmf_sample(const dent_joint_pmf* pmf, uint64_t n, uint64_t seed,
                                  dent_joint** out) {
    if (auto st = require(pmf != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_joint{dent::sample_joint(pmf->value, n, seed)};
        return DENT_OK;
    });
}

dent_status dent_pmf_draw(const dent_pmf* pmf, uint64_t n, uint64_t seed, uint64_t* out) {
    if (auto st = require(pmf != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        const auto draws = dent::draw_indices(pmf->value, n, seed);
        std::memcpy(out, draws.data(), draws.size() * sizeof(uint64_t));
        return DENT_OK;
    });
}

dent_status dent_joint_pmf_draw(const dent_joint_pmf* pmf, uint64_t n, uint64_t seed,
                                uint64_t* out) {
    if (auto st = require(pmf != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        const auto cells = dent::draw_tuples(pmf->value, n, seed);
        const uint64_t m = pmf->value.dims[1], l = pmf->value.dims[2];
        size_t w = 0;
        for (uint64_t cell : cells) {
            if (pmf->value.arity == 2) {
                out[w++] = cell / m;
                out[w++] = cell % m;
            } else {
                out[w++] = cell / (m * l);
                out[w++] = (cell / l) % m;
                out[w++] = cell % l;
            }
        }
        return DENT_OK;
    });
}

dent_status dent_bench_config_load(const char* path, dent_bench_config** out) {
    if (auto st = require(path != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_bench_config{dent::ExperimentConfig::load(path)};
        return DENT_OK;
    });
}

dent_status dent_bench_config_parse(const char* text, dent_bench_config** out) {
    if (auto st = require(text != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        *out = new dent_bench_config{dent::ExperimentConfig::parse(text)};
        return DENT_OK;
    });
}

void dent_bench_config_free(dent_bench_config* config) {
    delete config;
}

dent_status dent_bench_run(const dent_bench_config* config, const char* out_dir,
                           dent_progress_fn progress, void* user) {
    if (auto st = require(config != nullptr && out_dir != nullptr, "null argument");
        st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        dent::ProgressFn cb;
        if (progress != nullptr) {
            cb = [progress, user](uint64_t done, uint64_t total) { progress(done, total, user); };
        }
        const dent::BenchResult result = dent::run_grid(config->value, cb);
        dent::export_reports(result, out_dir);
        return DENT_OK;
    });
}

dent_status dent_bench_cell_count(const dent_bench_config* config, uint64_t* out) {
    if (auto st = require(config != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    const auto& cfg = config->value;
    *out = static_cast<uint64_t>(cfg.measures.size()) * cfg.k_grid.size() * cfg.gt_levels.size() *
           cfg.repetitions;
    return DENT_OK;
}

int dent_bench_config_full_scale(const dent_bench_config* config) {
    return config != nullptr && config->value.full_scale ? 1 : 0;
}

dent_status dent_flattening_point(const double* mse, size_t n, int first_exponent, double fb,
                                  int* fp) {
    if (auto st = require(mse != nullptr && fp != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    const auto r = dent::flattening_point(std::span<const double>(mse, n), first_exponent, fb);
    *fp = r.value_or(-1);
    return DENT_OK;
}

dent_status dent_slope_l2(const int* fps, size_t n, int penalty, double* slope, double* l2) {
    if (auto st = require(fps != nullptr && slope != nullptr && l2 != nullptr, "null argument");
        st != DENT_OK) {
        return st;
    }
    std::vector<std::optional<int>> v(n);
    for (size_t i = 0; i < n; ++i) {
        if (fps[i] >= 0) {
            v[i] = fps[i];
        }
    }
    const auto r = dent::slope_and_norm(v, penalty);
    *slope = r.slope;
    *l2 = r.l2;
    return DENT_OK;
}

dent_status dent_auc(const double* mse, size_t n, double* out) {
    if (auto st = require(mse != nullptr && out != nullptr, "null argument"); st != DENT_OK) {
        return st;
    }
    *out = dent::auc(std::span<const double>(mse, n));
    return DENT_OK;
}

dent_status dent_auc_split(const double* mse, size_t n, size_t from_index, double* below,
                           double* from) {
    if (auto st = require(mse != nullptr && below != nullptr && from != nullptr, "null argument");
        st != DENT_OK) {
        return st;
    }
    const auto r = dent::auc_split(std::span<const double>(mse, n), from_index);
    *below = r.below;
    *from = r.from;
    return DENT_OK;
}

dent_status dent_report_mse_csv(const char* mse_csv, double fb, const char* out_csv) {
    if (auto st = require(mse_csv != nullptr && out_csv != nullptr, "null argument");
        st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        dent::report_from_mse_csv(mse_csv, fb, out_csv);
        return DENT_OK;
    });
}

dent_status dent_triangle_demo(uint64_t n, uint64_t seed, int64_t lo, int64_t hi,
                               const dent_estimator_spec* specs, size_t nspecs, double* cmi_out) {
    if (auto st = require(specs != nullptr && cmi_out != nullptr, "null argument");
        st != DENT_OK) {
        return st;
    }
    return guarded([&] {
        std::vector<dent::EstimatorSpec> converted;
        converted.reserve(nspecs);
        for (size_t i = 0; i < nspecs; ++i) {
            converted.push_back(convert_spec(&specs[i]));
        }
        const auto values = dent::triangle_leakage(n, seed, lo, hi, converted);
        std::memcpy(cmi_out, values.data(), values.size() * sizeof(double));
        return DENT_OK;
    });
}

} // extern "C"
