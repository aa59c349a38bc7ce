/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

/*
 * dent - discrete entropy toolkit.
 *
 * C interface to the estimator library: count histograms, 18 entropy
 * estimators, mutual/conditional-mutual information by entropy composition,
 * synthetic ground-truth distributions, and the convergence benchmark.
 *
 * Conventions:
 *   - every fallible call returns a dent_status; DENT_OK is 0
 *   - on failure, dent_last_error() returns a thread-local message
 *   - objects are opaque handles released with their dent_*_free function
 *   - estimates are in nats; NaN and infinity are legal estimator outputs
 *     and are reported through `out` with DENT_OK
 */

#ifndef DENT_H
#define DENT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dent_status {
    DENT_OK = 0,
    DENT_ERR_EMPTY_SAMPLE = 1,
    DENT_ERR_PARAMETER = 2,
    DENT_ERR_DIMENSION = 3,
    DENT_ERR_NUMERICAL = 4,
    DENT_ERR_GENERATION = 5,
    DENT_ERR_IO = 6,
    DENT_ERR_PARSE = 7,
    DENT_ERR_INTERNAL = 8
} dent_status;

const char* dent_status_name(dent_status status);

/* Message for the most recent failure on this thread. */
const char* dent_last_error(void);

/* For parse failures: 1-based line number of the offending input line,
 * 0 otherwise. */
size_t dent_last_error_line(void);

const char* dent_version(void);

/* ------------------------------------------------------------------ */
/* Histograms                                                          */
/* ------------------------------------------------------------------ */

typedef struct dent_hist dent_hist;
typedef struct dent_joint dent_joint;

dent_status dent_hist_from_counts(const uint64_t* counts, size_t m, dent_hist** out);
dent_status dent_hist_from_samples(const int64_t* symbols, size_t n, dent_hist** out);
void dent_hist_free(dent_hist* hist);
uint64_t dent_hist_total(const dent_hist* hist);    /* N */
uint64_t dent_hist_support(const dent_hist* hist);  /* m */

/* Tuples are row-major: n rows of `arity` symbols. */
dent_status dent_joint_from_tuples(int arity, const int64_t* flat, size_t n, dent_joint** out);
dent_status dent_joint_from_cells(int arity, const int64_t* flat, const uint64_t* counts,
                                  size_t ncells, dent_joint** out);
void dent_joint_free(dent_joint* joint);
int dent_joint_arity(const dent_joint* joint);
uint64_t dent_joint_total(const dent_joint* joint);

dent_status dent_joint_marginal_hist(const dent_joint* joint, int axis, dent_hist** out);
dent_status dent_joint_marginal_joint(const dent_joint* joint, int axis0, int axis1,
                                      dent_joint** out);
/* Occupied cells as a 1-D histogram (the joint-entropy input). */
dent_status dent_joint_cells_hist(const dent_joint* joint, dent_hist** out);

/* Load observations of the given arity from a file. Rows of `arity` fields
 * are raw samples; rows of arity+1 fields are `symbol...,count` lines, with
 * an optional header detected by a non-numeric final field. Exactly one of
 * out_hist (arity 1) / out_joint (arity 2, 3) receives the result. */
dent_status dent_load_observations(const char* path, int arity, dent_hist** out_hist,
                                   dent_joint** out_joint);

/* ------------------------------------------------------------------ */
/* Estimators                                                          */
/* ------------------------------------------------------------------ */

/* Estimator ids: ML MM GSB88 GSB03 SHU CS Z SHR B CW PYM BAY LAP JEF SG MIN
 * NSB ANSB. Unset parameters use the documented defaults: xi = exp(-1/2),
 * K = observed support. BAY requires alpha. */
typedef struct dent_estimator_spec {
    const char* id;
    double alpha;  /* NaN = unset */
    double xi;     /* NaN = unset */
    uint64_t k;    /* 0 = unset */
} dent_estimator_spec;

dent_status dent_entropy(const dent_hist* hist, const dent_estimator_spec* spec, double* out);

/* true_dims: per-axis alphabet sizes (length 2 resp. 3), or NULL to use
 * observed support. */
dent_status dent_mutual_information(const dent_joint* joint, const dent_estimator_spec* spec,
                                    const uint64_t* true_dims, double* out);
dent_status dent_conditional_mi(const dent_joint* joint, const dent_estimator_spec* spec,
                                const uint64_t* true_dims, double* out);

/* measure: "H", "MI" or "CMI"; the histogram arity must match. */
dent_status dent_measure_hist(const dent_hist* hist, const char* measure,
                              const dent_estimator_spec* spec, double* out);
dent_status dent_measure_joint(const dent_joint* joint, const char* measure,
                               const dent_estimator_spec* spec, double* out);

/* ------------------------------------------------------------------ */
/* Synthetic ground truth                                              */
/* ------------------------------------------------------------------ */

typedef struct dent_pmf dent_pmf;
typedef struct dent_joint_pmf dent_joint_pmf;

/* level: "S", "M" or "L". */
dent_status dent_pmf_generate(uint64_t k, const char* level, uint64_t seed, dent_pmf** out);
dent_status dent_pmf_from_probs(const double* probs, uint64_t k, dent_pmf** out);
void dent_pmf_free(dent_pmf* pmf);
uint64_t dent_pmf_domain(const dent_pmf* pmf);
dent_status dent_pmf_probs(const dent_pmf* pmf, double* out);
double dent_pmf_entropy(const dent_pmf* pmf);
dent_status dent_pmf_save(const dent_pmf* pmf, const char* path);
dent_status dent_pmf_load(const char* path, dent_pmf** out);

/* measure: "MI" (2 dims) or "CMI" (3 dims). */
dent_status dent_joint_pmf_generate(const char* measure, const uint64_t* dims, size_t ndims,
                                    const char* level, uint64_t seed, dent_joint_pmf** out);
void dent_joint_pmf_free(dent_joint_pmf* pmf);
int dent_joint_pmf_arity(const dent_joint_pmf* pmf);
dent_status dent_joint_pmf_dims(const dent_joint_pmf* pmf, uint64_t* dims_out);
double dent_joint_pmf_mi(const dent_joint_pmf* pmf);
double dent_joint_pmf_cmi(const dent_joint_pmf* pmf);
dent_status dent_joint_pmf_save(const dent_joint_pmf* pmf, const char* path);
dent_status dent_joint_pmf_load(const char* path, dent_joint_pmf** out);

dent_status dent_pmf_sample(const dent_pmf* pmf, uint64_t n, uint64_t seed, dent_hist** out);
dent_status dent_joint_pmf_sample(const dent_joint_pmf* pmf, uint64_t n, uint64_t seed,
                                  dent_joint** out);

/* Raw draws for writing sample files: symbol indices, or row-major tuple
 * indices (n * arity entries). */
dent_status dent_pmf_draw(const dent_pmf* pmf, uint64_t n, uint64_t seed, uint64_t* out);
dent_status dent_joint_pmf_draw(const dent_joint_pmf* pmf, uint64_t n, uint64_t seed,
                                uint64_t* out);

/* ------------------------------------------------------------------ */
/* Benchmark and analytics                                             */
/* ------------------------------------------------------------------ */

typedef struct dent_bench_config dent_bench_config;

dent_status dent_bench_config_load(const char* path, dent_bench_config** out);
dent_status dent_bench_config_parse(const char* text, dent_bench_config** out);
void dent_bench_config_free(dent_bench_config* config);

typedef void (*dent_progress_fn)(uint64_t done, uint64_t total, void* user);

/* Run the configured grid and write the report CSVs into out_dir:
 * mse_<measure>_k<k>.csv, fp_<measure>.csv, ratios_<measure>.csv,
 * auc_<measure>.csv, auc_split_<measure>.csv. */
dent_status dent_bench_run(const dent_bench_config* config, const char* out_dir,
                           dent_progress_fn progress, void* user);

/* Number of (measure, gt, k, repetition) cells the run will execute. */
dent_status dent_bench_cell_count(const dent_bench_config* config, uint64_t* out);

/* Nonzero when the config opted into the full-scale grid (k > 4096). */
int dent_bench_config_full_scale(const dent_bench_config* config);

/* Analytics over raw MSE curves. `mse` is indexed by consecutive sample-size
 * exponents starting at first_exponent. A flattening point of -1 means the
 * curve never settles. */
dent_status dent_flattening_point(const double* mse, size_t n, int first_exponent, double fb,
                                  int* fp);
dent_status dent_slope_l2(const int* fps, size_t n, int penalty, double* slope, double* l2);
dent_status dent_auc(const double* mse, size_t n, double* out);
dent_status dent_auc_split(const double* mse, size_t n, size_t from_index, double* below,
                           double* from);

/* Feed an externally produced MSE matrix (same schema as mse_*.csv) through
 * the analytics; writes estimator,fp,auc,auc_lt_fp,auc_ge_fp rows. */
dent_status dent_report_mse_csv(const char* mse_csv, double fb, const char* out_csv);

/* ------------------------------------------------------------------ */
/* Leakage demo                                                        */
/* ------------------------------------------------------------------ */

/* Draw n uniform (high, low1, low2) triples from [lo, hi], classify the
 * triangle they describe, and estimate I(high ; kind | lows) with each spec.
 * cmi_out must hold nspecs doubles. */
dent_status dent_triangle_demo(uint64_t n, uint64_t seed, int64_t lo, int64_t hi,
                               const dent_estimator_spec* specs, size_t nspecs, double* cmi_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DENT_H */
