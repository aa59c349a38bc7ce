/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "estimators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "special.hpp"

namespace dent {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct IdName {
    EstimatorId id;
    const char* name;
};

constexpr std::array<IdName, kEstimatorCount> kIdNames{{
    {EstimatorId::Ml, "ML"},
    {EstimatorId::Mm, "MM"},
    {EstimatorId::Gsb88, "GSB88"},
    {EstimatorId::Gsb03, "GSB03"},
    {EstimatorId::Shu, "SHU"},
    {EstimatorId::Cs, "CS"},
    {EstimatorId::Z, "Z"},
    {EstimatorId::Shr, "SHR"},
    {EstimatorId::B, "B"},
    {EstimatorId::Cw, "CW"},
    {EstimatorId::Pym, "PYM"},
    {EstimatorId::Bay, "BAY"},
    {EstimatorId::Lap, "LAP"},
    {EstimatorId::Jef, "JEF"},
    {EstimatorId::Sg, "SG"},
    {EstimatorId::Min, "MIN"},
    {EstimatorId::Nsb, "NSB"},
    {EstimatorId::Ansb, "ANSB"},
}};

std::uint64_t resolve_k(const CountHistogram& h, const EstimatorSpec& spec) {
    const std::uint64_t k = spec.k.value_or(h.support());
    if (k < h.support()) {
        throw ParameterError("assumed alphabet size K is smaller than observed support");
    }
    return k;
}

// Integral int_0^u t^{n-1}/(1+t) dt of the Schurmann correction. Alternating
// series for |u| < 1, upward recurrence from ln(1+u) otherwise.
double schurmann_integral_table_entry(std::uint64_t n, double u, std::vector<double>& cache) {
    if (cache.size() > n && !std::isnan(cache[n])) {
        return cache[n];
    }
    if (cache.size() <= n) {
        cache.resize(n + 1, kNan);
    }
    double value;
    if (std::abs(u) < 0.9) {
        // alternating series sum_j (-1)^j u^{n+j} / (n+j), geometric decay
        double term = std::pow(u, static_cast<double>(n));
        double acc = 0.0;
        double denom = static_cast<double>(n);
        double sign = 1.0;
        while (std::abs(term / denom) > 1e-18 * (std::abs(acc) + 1e-30)) {
            acc += sign * term / denom;
            term *= u;
            denom += 1.0;
            sign = -sign;
        }
        value = acc;
    } else {
        // I(1) = ln(1+u); I(j+1) = u^j/j - I(j). The alternating recurrence
        // keeps rounding bounded, and avoids the series' slow decay near u=1.
        double acc = std::log1p(u);
        double upow = 1.0;
        for (std::uint64_t j = 1; j < n; ++j) {
            upow *= u;
            acc = upow / static_cast<double>(j) - acc;
        }
        value = acc;
    }
    cache[n] = value;
    return value;
}

} // namespace

const char* estimator_name(EstimatorId id) {
    for (const auto& e : kIdNames) {
        if (e.id == id) {
            return e.name;
        }
    }
    return "?";
}

std::optional<EstimatorId> parse_estimator(std::string_view name) {
    for (const auto& e : kIdNames) {
        if (name == e.name) {
            return e.id;
        }
    }
    // Accept a couple of unambiguous aliases seen in the literature.
    if (name == "J") {
        return EstimatorId::Jef;
    }
    if (name == "GSB" || name == "GR88") {
        return EstimatorId::Gsb88;
    }
    return std::nullopt;
}

double schurmann_default_xi() {
    return std::exp(-0.5);
}

double maximum_likelihood(const CountHistogram& h) {
    const double n = static_cast<double>(h.total());
    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        acc += static_cast<double>(mult) * xlogx(static_cast<double>(c));
    }
    return std::log(n) - acc / n;
}

double miller_madow(const CountHistogram& h) {
    const double m = static_cast<double>(h.support());
    return maximum_likelihood(h) + (m - 1.0) / (2.0 * static_cast<double>(h.total()));
}

double grassberger88(const CountHistogram& h) {
    // H = ln N - (1/N) sum n (psi(n) + (-1)^n / (n+1))
    const double n_tot = static_cast<double>(h.total());
    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        const double cd = static_cast<double>(c);
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        acc += static_cast<double>(mult) * cd * (digamma(cd) + sign / (cd + 1.0));
    }
    return std::log(n_tot) - acc / n_tot;
}

double grassberger03(const CountHistogram& h) {
    // H = psi(N) - (1/N) sum n psi(n); identical as a function to the Zhang
    // estimator, which we compute by its product series as a cross check.
    const double n_tot = static_cast<double>(h.total());
    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        const double cd = static_cast<double>(c);
        acc += static_cast<double>(mult) * cd * digamma(cd);
    }
    return digamma(n_tot) - acc / n_tot;
}

double schurmann(const CountHistogram& h, double xi) {
    if (!(xi > 0.0)) {
        throw ParameterError("Schurmann xi must be positive");
    }
    const double u = 1.0 / xi - 1.0;
    const double n_tot = static_cast<double>(h.total());
    std::vector<double> cache;
    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        const double cd = static_cast<double>(c);
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        const double integral = (u == 0.0) ? 0.0 : schurmann_integral_table_entry(c, u, cache);
        acc += static_cast<double>(mult) * cd * (digamma(cd) + sign * integral);
    }
    return digamma(n_tot) - acc / n_tot;
}

double chao_shen(const CountHistogram& h) {
    const double n_tot = static_cast<double>(h.total());
    double f1 = static_cast<double>(h.multiplicities().f1);
    if (f1 == n_tot) {
        f1 = n_tot - 1.0; // degenerate zero-coverage guard
    }
    const double coverage = 1.0 - f1 / n_tot;
    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        const double pa = coverage * static_cast<double>(c) / n_tot;
        // 1 - (1-pa)^N via expm1 to keep small-pa cells accurate
        const double denom = -std::expm1(n_tot * std::log1p(-pa));
        acc += static_cast<double>(mult) * (-xlogx(pa)) / denom;
    }
    return acc;
}

double zhang(const CountHistogram& h) {
    // sum_v (1/v) sum_x (n_x/N) prod_{j=1..v} (1 - (n_x-1)/(N-j)), regrouped
    // per distinct count; the product hits exactly zero at v = N-n_x+1.
    const std::uint64_t n_tot = h.total();
    const double n_tot_d = static_cast<double>(n_tot);
    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        const double cm1 = static_cast<double>(c - 1);
        double prod = 1.0;
        double inner = 0.0;
        for (std::uint64_t v = 1; v < n_tot; ++v) {
            prod *= (static_cast<double>(n_tot - v) - cm1) / static_cast<double>(n_tot - v);
            if (prod <= 0.0) {
                break;
            }
            const double term = prod / static_cast<double>(v);
            inner += term;
            if (term < 1e-17 * inner) {
                break;
            }
        }
        acc += static_cast<double>(mult) * (static_cast<double>(c) / n_tot_d) * inner;
    }
    return acc;
}

double shrink(const CountHistogram& h, std::uint64_t assumed_k) {
    if (assumed_k < h.support()) {
        throw ParameterError("shrink: K smaller than observed support");
    }
    const double n_tot = static_cast<double>(h.total());
    const double k = static_cast<double>(assumed_k);
    const double target = 1.0 / k;

    double sum_p2 = 0.0;
    double sum_dev2 = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        const double p = static_cast<double>(c) / n_tot;
        sum_p2 += static_cast<double>(mult) * p * p;
        const double d = target - p;
        sum_dev2 += static_cast<double>(mult) * d * d;
    }
    sum_dev2 += static_cast<double>(assumed_k - h.support()) * target * target;

    double lambda;
    if (h.total() <= 1 || sum_dev2 <= 0.0) {
        lambda = 1.0;
    } else {
        lambda = (1.0 - sum_p2) / ((n_tot - 1.0) * sum_dev2);
        lambda = std::clamp(lambda, 0.0, 1.0);
    }

    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        const double p = lambda * target + (1.0 - lambda) * static_cast<double>(c) / n_tot;
        acc -= static_cast<double>(mult) * xlogx(p);
    }
    acc -= static_cast<double>(assumed_k - h.support()) * xlogx(lambda * target);
    return acc;
}

double bonachela(const CountHistogram& h) {
    const std::uint64_t n_tot = h.total();
    const auto ht = harmonic_table(n_tot + 2);
    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        acc += static_cast<double>(mult) * static_cast<double>(c + 1) * (ht[n_tot + 2] - ht[c + 1]);
    }
    return acc / static_cast<double>(n_tot + 2);
}

double chao_wang_jost(const CountHistogram& h) {
    const std::uint64_t n_tot = h.total();
    const double n_tot_d = static_cast<double>(n_tot);
    const auto prof = h.multiplicities();
    const auto ht = harmonic_table(n_tot > 0 ? n_tot - 1 : 0);

    double acc = 0.0;
    for (const auto& [c, mult] : prof.grouped) {
        if (c >= 1 && c <= n_tot - 1) {
            acc += static_cast<double>(mult) * (static_cast<double>(c) / n_tot_d) *
                   (ht[n_tot - 1] - ht[c - 1]);
        }
    }

    const double f1 = static_cast<double>(prof.f1);
    const double f2 = static_cast<double>(prof.f2);
    double a;
    if (prof.f1 == 0 || (prof.f1 == 1 && prof.f2 == 0)) {
        return acc; // no unseen-mass correction
    } else if (prof.f2 > 0) {
        a = 2.0 * f2 / ((n_tot_d - 1.0) * f1 + 2.0 * f2);
    } else {
        a = 2.0 / ((n_tot_d - 1.0) * (f1 - 1.0) + 2.0);
    }
    if (a >= 1.0) {
        return acc;
    }

    // Unseen term (f1/N) (1-A)^{1-N} (-ln A - sum_{r<N} (1-A)^r / r), equal to
    // (f1/N) sum_{s>=1} (1-A)^s / (s+N-1). The direct form cancels
    // catastrophically when (1-A)^N underflows, so switch on (N-1)|ln(1-A)|.
    const double log_b = std::log1p(-a);
    double tail;
    if ((n_tot_d - 1.0) * (-log_b) <= 10.0) {
        double s = 0.0;
        double bpow = 1.0;
        for (std::uint64_t r = 1; r < n_tot; ++r) {
            bpow *= (1.0 - a);
            s += bpow / static_cast<double>(r);
        }
        tail = std::exp((1.0 - n_tot_d) * log_b) * (-std::log(a) - s);
    } else {
        tail = 0.0;
        double bpow = 1.0;
        for (std::uint64_t s = 1;; ++s) {
            bpow *= (1.0 - a);
            const double term = bpow / static_cast<double>(s + n_tot - 1);
            tail += term;
            if (term < 1e-18 * tail || bpow < 1e-300) {
                break;
            }
        }
    }
    return acc + (f1 / n_tot_d) * tail;
}

double dirichlet_plugin(const CountHistogram& h, double alpha, std::uint64_t assumed_k) {
    if (!(alpha >= 0.0)) {
        throw ParameterError("Dirichlet concentration must be nonnegative");
    }
    if (assumed_k < h.support()) {
        throw ParameterError("Dirichlet plug-in: K smaller than observed support");
    }
    const double denom = static_cast<double>(h.total()) + static_cast<double>(assumed_k) * alpha;
    double acc = 0.0;
    for (const auto& [c, mult] : h.multiplicities().grouped) {
        acc -= static_cast<double>(mult) * xlogx((static_cast<double>(c) + alpha) / denom);
    }
    acc -= static_cast<double>(assumed_k - h.support()) * xlogx(alpha / denom);
    return acc;
}

double nsb(const CountHistogram& h, std::uint64_t assumed_k) {
    if (h.total() < 2) {
        throw ParameterError("NSB requires at least two observations");
    }
    if (assumed_k < h.support()) {
        throw ParameterError("NSB: K smaller than observed support");
    }
    if (assumed_k == 1) {
        return 0.0; // single-cell alphabet: entropy is identically zero
    }
    const double n_tot = static_cast<double>(h.total());
    const double k = static_cast<double>(assumed_k);
    const double unseen = k - static_cast<double>(h.support());
    const auto prof = h.multiplicities();

    auto log_evidence = [&](double beta) {
        double acc = std::lgamma(k * beta) - std::lgamma(n_tot + k * beta);
        const double lg_beta = std::lgamma(beta);
        for (const auto& [c, mult] : prof.grouped) {
            acc += static_cast<double>(mult) * (std::lgamma(static_cast<double>(c) + beta) - lg_beta);
        }
        return acc;
    };
    auto log_prior_density = [&](double beta) {
        // prior uniform in the expected entropy xi(beta) = psi(K beta + 1) - psi(beta + 1)
        return std::log(k * trigamma(k * beta + 1.0) - trigamma(beta + 1.0));
    };
    auto posterior_mean_entropy = [&](double beta) {
        const double a = n_tot + k * beta;
        double s = 0.0;
        for (const auto& [c, mult] : prof.grouped) {
            const double lam = static_cast<double>(c) + beta;
            s += static_cast<double>(mult) * lam * digamma(lam + 1.0);
        }
        s += unseen * beta * digamma(beta + 1.0);
        return digamma(a + 1.0) - s / a;
    };

    constexpr double kLo = -15.0;
    constexpr double kHi = 15.0;
    constexpr int kCells = 200;

    double log_max = -kInf;
    for (int i = 0; i <= kCells; ++i) {
        const double t = kLo + (kHi - kLo) * i / kCells;
        const double beta = std::exp(t);
        const double v = log_evidence(beta) + log_prior_density(beta) + t;
        if (std::isfinite(v) && v > log_max) {
            log_max = v;
        }
    }
    if (!std::isfinite(log_max)) {
        throw NumericalError("NSB evidence is nowhere finite");
    }

    auto integrand = [&](double t, std::array<double, 2>& y) {
        const double beta = std::exp(t);
        const double lw = log_evidence(beta) + log_prior_density(beta) + t - log_max;
        if (lw < -745.0) { // exp underflow
            y[0] = 0.0;
            y[1] = 0.0;
            return;
        }
        const double w = std::exp(lw);
        y[0] = w;
        y[1] = w * posterior_mean_entropy(beta);
    };
    const SimpsonResult r = adaptive_simpson2(integrand, kLo, kHi, kCells, 1e-6, 10);
    if (!(r.value_a > 0.0) || !std::isfinite(r.value_a) || !std::isfinite(r.value_b)) {
        throw NumericalError("NSB quadrature failed");
    }
    return r.value_b / r.value_a;
}

double ansb(const CountHistogram& h) {
    const std::uint64_t coincidences = h.coincidences();
    if (coincidences == 0) {
        return kNan; // undefined without repeated symbols
    }
    return (kEulerGamma - std::log(2.0)) + 2.0 * std::log(static_cast<double>(h.total())) -
           digamma(static_cast<double>(coincidences));
}

namespace {

// Pitman-Yor machinery shared between the grid scan and refinement.
struct PymWorkspace {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> grouped;
    double n_tot = 0.0;
    double m = 0.0;
    double sum_i1 = 0.0; // sum_{i=1}^{m-1} i
    double sum_i2 = 0.0; // sum_{i=1}^{m-1} i^2

    // d-dependent pieces, cached per evaluation row
    double c_of_d(double d) const {
        double acc = 0.0;
        const double lg1d = std::lgamma(1.0 - d);
        for (const auto& [c, mult] : grouped) {
            if (c > 1) {
                acc += static_cast<double>(mult) * (std::lgamma(static_cast<double>(c) - d) - lg1d);
            }
        }
        return acc;
    }
    double s_of_d(double d) const {
        double acc = 0.0;
        for (const auto& [c, mult] : grouped) {
            const double nd = static_cast<double>(c) - d;
            acc += static_cast<double>(mult) * nd * digamma(nd + 1.0);
        }
        return acc;
    }

    // sum_{i=1}^{m-1} ln(alpha + i d), stable across the d range
    double a_term(double d, double alpha) const {
        if (m < 2.0) {
            return 0.0;
        }
        if (d < 1e-12 || d * (m - 1.0) / alpha < 1e-6) {
            const double r = d / alpha;
            return (m - 1.0) * std::log(alpha) + r * sum_i1 - 0.5 * r * r * sum_i2;
        }
        const double r = alpha / d;
        return (m - 1.0) * std::log(d) + std::lgamma(r + m) - std::lgamma(r + 1.0);
    }

    double log_eppf(double d, double alpha, double c_d) const {
        return a_term(d, alpha) + std::lgamma(1.0 + alpha) - std::lgamma(n_tot + alpha) + c_d;
    }

    double mean_entropy(double d, double alpha, double s_d) const {
        const double an = alpha + n_tot;
        return digamma(an + 1.0) - ((alpha + m * d) / an) * digamma(1.0 - d) - s_d / an;
    }
};

} // namespace

double pym(const CountHistogram& h) {
    // Without a single repeated symbol the posterior mean of the entropy
    // diverges along the d -> 1 boundary; report that as +inf rather than a
    // grid-truncated artifact.
    if (h.coincidences() == 0) {
        return kInf;
    }

    PymWorkspace ws;
    ws.grouped = h.multiplicities().grouped;
    ws.n_tot = static_cast<double>(h.total());
    ws.m = static_cast<double>(h.support());
    for (double i = 1.0; i <= ws.m - 1.0; i += 1.0) {
        ws.sum_i1 += i;
        ws.sum_i2 += i * i;
    }

    constexpr double kDLo = 0.0, kDHi = 0.9995;
    const double a_lo = std::log(1e-4), a_hi = std::log(1e5);
    constexpr int kCoarse = 50;
    const double dd = (kDHi - kDLo) / (kCoarse - 1);
    const double da = (a_hi - a_lo) / (kCoarse - 1);

    std::vector<double> logw(kCoarse * kCoarse);
    std::vector<double> c_row(kCoarse), s_row(kCoarse), d_vals(kCoarse), a_vals(kCoarse);
    for (int i = 0; i < kCoarse; ++i) {
        d_vals[i] = kDLo + dd * i;
        a_vals[i] = a_lo + da * i;
        c_row[i] = ws.c_of_d(d_vals[i]);
        s_row[i] = ws.s_of_d(d_vals[i]);
    }
    double best = -kInf;
    int best_i = 0, best_j = 0;
    for (int i = 0; i < kCoarse; ++i) {
        for (int j = 0; j < kCoarse; ++j) {
            const double v = ws.log_eppf(d_vals[i], std::exp(a_vals[j]), c_row[i]);
            logw[static_cast<std::size_t>(i) * kCoarse + j] = v;
            if (std::isfinite(v) && v > best) {
                best = v;
                best_i = i;
                best_j = j;
            }
        }
    }
    if (!std::isfinite(best)) {
        return kNan;
    }

    auto objective = [&](double d, double a) {
        if (d < kDLo || d > kDHi || a < a_lo || a > a_hi) {
            return -kInf;
        }
        return ws.log_eppf(d, std::exp(a), ws.c_of_d(d));
    };
    const NelderMeadResult map = nelder_mead_max_2d(objective, d_vals[best_i], a_vals[best_j],
                                                    dd / 4.0, da / 4.0, 500);

    // Refined cell around the MAP, two coarse steps on each side.
    constexpr int kFine = 41;
    const double rd_lo = std::clamp(map.x0 - 2.0 * dd, kDLo, kDHi);
    const double rd_hi = std::clamp(map.x0 + 2.0 * dd, kDLo, kDHi);
    const double ra_lo = std::clamp(map.x1 - 2.0 * da, a_lo, a_hi);
    const double ra_hi = std::clamp(map.x1 + 2.0 * da, a_lo, a_hi);
    const double fd = (rd_hi - rd_lo) / (kFine - 1);
    const double fa = (ra_hi - ra_lo) / (kFine - 1);

    std::vector<double> fine_logw(kFine * kFine), fc_row(kFine), fs_row(kFine);
    double wmax = best;
    for (int i = 0; i < kFine; ++i) {
        const double d = rd_lo + fd * i;
        fc_row[i] = ws.c_of_d(d);
        fs_row[i] = ws.s_of_d(d);
        for (int j = 0; j < kFine; ++j) {
            const double v = ws.log_eppf(d, std::exp(ra_lo + fa * j), fc_row[i]);
            fine_logw[static_cast<std::size_t>(i) * kFine + j] = v;
            if (std::isfinite(v) && v > wmax) {
                wmax = v;
            }
        }
    }

    // Composite weighted mean: fine cells inside the refined box, coarse cells
    // outside it. Each node carries its own grid cell area.
    double num = 0.0, den = 0.0;
    const double fine_area = (fd > 0.0 ? fd : 1.0) * (fa > 0.0 ? fa : 1.0);
    for (int i = 0; i < kFine; ++i) {
        const double d = rd_lo + fd * i;
        for (int j = 0; j < kFine; ++j) {
            const double lw = fine_logw[static_cast<std::size_t>(i) * kFine + j] - wmax;
            if (lw < -41.0) {
                continue;
            }
            const double w = std::exp(lw) * fine_area;
            den += w;
            num += w * ws.mean_entropy(d, std::exp(ra_lo + fa * j), fs_row[i]);
        }
    }
    const double coarse_area = dd * da;
    for (int i = 0; i < kCoarse; ++i) {
        for (int j = 0; j < kCoarse; ++j) {
            const bool inside = d_vals[i] >= rd_lo && d_vals[i] <= rd_hi && a_vals[j] >= ra_lo &&
                                a_vals[j] <= ra_hi;
            if (inside) {
                continue;
            }
            const double lw = logw[static_cast<std::size_t>(i) * kCoarse + j] - wmax;
            if (lw < -41.0) {
                continue;
            }
            const double w = std::exp(lw) * coarse_area;
            den += w;
            num += w * ws.mean_entropy(d_vals[i], std::exp(a_vals[j]), s_row[i]);
        }
    }
    if (!(den > 0.0) || !std::isfinite(den)) {
        return kNan;
    }
    return num / den;
}

EntropyEstimate estimate_entropy(const CountHistogram& h, const EstimatorSpec& spec) {
    double value = 0.0;
    switch (spec.id) {
    case EstimatorId::Ml:
        value = maximum_likelihood(h);
        break;
    case EstimatorId::Mm:
        value = miller_madow(h);
        break;
    case EstimatorId::Gsb88:
        value = grassberger88(h);
        break;
    case EstimatorId::Gsb03:
        value = grassberger03(h);
        break;
    case EstimatorId::Shu:
        value = schurmann(h, spec.xi.value_or(schurmann_default_xi()));
        break;
    case EstimatorId::Cs:
        value = chao_shen(h);
        break;
    case EstimatorId::Z:
        value = zhang(h);
        break;
    case EstimatorId::Shr:
        value = shrink(h, resolve_k(h, spec));
        break;
    case EstimatorId::B:
        value = bonachela(h);
        break;
    case EstimatorId::Cw:
        value = chao_wang_jost(h);
        break;
    case EstimatorId::Pym:
        value = pym(h);
        break;
    case EstimatorId::Bay:
        if (!spec.alpha.has_value()) {
            throw ParameterError("BAY requires an explicit concentration alpha");
        }
        value = dirichlet_plugin(h, *spec.alpha, resolve_k(h, spec));
        break;
    case EstimatorId::Lap:
        value = dirichlet_plugin(h, 1.0, resolve_k(h, spec));
        break;
    case EstimatorId::Jef:
        value = dirichlet_plugin(h, 0.5, resolve_k(h, spec));
        break;
    case EstimatorId::Sg: {
        const std::uint64_t k = resolve_k(h, spec);
        value = dirichlet_plugin(h, 1.0 / static_cast<double>(k), k);
        break;
    }
    case EstimatorId::Min: {
        const std::uint64_t k = resolve_k(h, spec);
        value = dirichlet_plugin(h, std::sqrt(static_cast<double>(h.total())) / static_cast<double>(k), k);
        break;
    }
    case EstimatorId::Nsb:
        value = nsb(h, resolve_k(h, spec));
        break;
    case EstimatorId::Ansb:
        value = ansb(h);
        break;
    }
    return EntropyEstimate{value, spec};
}

} // namespace dent
