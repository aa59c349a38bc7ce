/*
 * Copyright 2026 dent developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#include "synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rng.hpp"
#include "special.hpp"

namespace dent {

namespace {

constexpr int kMaxAttempts = 1000;

// Concentration of the coupling base pmf. Large enough that joint marginals
// sit near uniform (so the per-instance MI/CMI cap approaches its maximum)
// while still varying across repetitions.
constexpr double kBaseConcentration = 20.0;

// Mean entropy of a symmetric Dirichlet(c) draw over k cells.
double dirichlet_mean_entropy(std::uint64_t k, double c) {
    return digamma(static_cast<double>(k) * c + 1.0) - digamma(c + 1.0);
}

// Solve dirichlet_mean_entropy(k, c) = target for c; monotone in c.
double solve_concentration(std::uint64_t k, double target) {
    double lo = -34.5, hi = 34.5; // ln c
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (dirichlet_mean_entropy(k, std::exp(mid)) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::exp(0.5 * (lo + hi));
}

// First s slots of a Fisher-Yates shuffle of 0..n-1: a random injection.
std::vector<std::uint32_t> random_injection(Rng& rng, std::uint64_t s, std::uint64_t n,
                                            bool identity) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    if (!identity) {
        for (std::uint64_t i = 0; i < s; ++i) {
            const std::uint64_t j =
                i + static_cast<std::uint64_t>(rng.next_int(0, static_cast<std::int64_t>(n - 1 - i)));
            std::swap(perm[i], perm[j]);
        }
    }
    perm.resize(s);
    return perm;
}

// One conditional slice of the coupled/product mixture: base pmf q over s
// symbols placed on both axes; entropy of the slice as a function of the
// coupling weight, evaluated in O(s).
struct CoupledSlice {
    std::vector<double> q;
    std::vector<std::uint32_t> into_x; // injection image on axis 0
    std::vector<std::uint32_t> into_y; // injection image on axis 1
    double hq = 0.0;

    double joint_entropy(double lambda) const {
        const double keep = 1.0 - lambda;
        double h = 0.0;
        if (keep > 0.0) {
            h = keep * (-std::log(keep) + 2.0 * hq);
        }
        for (double qi : q) {
            const double prod = keep * qi * qi;
            h += xlogx(prod) - xlogx(prod + lambda * qi);
        }
        return h;
    }
    double mi(double lambda) const {
        return 2.0 * hq - joint_entropy(lambda);
    }
};

CoupledSlice make_slice(Rng& rng, std::uint64_t s, std::uint64_t n, std::uint64_t m) {
    CoupledSlice slice;
    slice.q = rng.next_dirichlet(s, kBaseConcentration);
    slice.into_x = random_injection(rng, s, n, s == n);
    slice.into_y = random_injection(rng, s, m, false);
    slice.hq = exact_entropy(slice.q);
    return slice;
}

} // namespace

const char* gt_level_name(GtLevel level) {
    switch (level) {
    case GtLevel::S:
        return "S";
    case GtLevel::M:
        return "M";
    case GtLevel::L:
        return "L";
    }
    return "?";
}

std::optional<GtLevel> parse_gt_level(std::string_view name) {
    if (name == "S") {
        return GtLevel::S;
    }
    if (name == "M") {
        return GtLevel::M;
    }
    if (name == "L") {
        return GtLevel::L;
    }
    return std::nullopt;
}

Band band_for(GtLevel level) {
    switch (level) {
    case GtLevel::S:
        return {0.0, 0.15};
    case GtLevel::M:
        return {0.35, 0.65};
    case GtLevel::L:
        return {0.85, 1.0};
    }
    return {0.0, 1.0};
}

double exact_entropy(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) {
        h -= xlogx(p);
    }
    return h;
}

double exact_entropy(const DiscretePmf& p) {
    return exact_entropy(std::span<const double>(p.probs));
}

double exact_mi(const JointPmf& j) {
    if (j.arity != 2) {
        throw DimensionError("exact_mi requires a 2-D joint pmf");
    }
    const std::uint64_t n = j.dims[0], m = j.dims[1];
    std::vector<double> px(n, 0.0), py(m, 0.0);
    double hxy = 0.0;
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t y = 0; y < m; ++y) {
            const double p = j.probs[x * m + y];
            px[x] += p;
            py[y] += p;
            hxy -= xlogx(p);
        }
    }
    return exact_entropy(std::span<const double>(px)) +
           exact_entropy(std::span<const double>(py)) - hxy;
}

double exact_cmi(const JointPmf& j) {
    if (j.arity != 3) {
        throw DimensionError("exact_cmi requires a 3-D joint pmf");
    }
    const std::uint64_t n = j.dims[0], m = j.dims[1], l = j.dims[2];
    std::vector<double> pz(l, 0.0), pxz(n * l, 0.0), pyz(m * l, 0.0);
    double hxyz = 0.0;
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t y = 0; y < m; ++y) {
            for (std::uint64_t z = 0; z < l; ++z) {
                const double p = j.probs[(x * m + y) * l + z];
                pz[z] += p;
                pxz[x * l + z] += p;
                pyz[y * l + z] += p;
                hxyz -= xlogx(p);
            }
        }
    }
    return exact_entropy(std::span<const double>(pxz)) +
           exact_entropy(std::span<const double>(pyz)) - hxyz -
           exact_entropy(std::span<const double>(pz));
}

double exact_measure(const JointPmf& j, Measure m) {
    switch (m) {
    case Measure::MI:
        return exact_mi(j);
    case Measure::CMI:
        return exact_cmi(j);
    case Measure::H: {
        return exact_entropy(std::span<const double>(j.probs));
    }
    }
    throw DimensionError("unknown measure");
}

DiscretePmf generate_pmf(std::uint64_t k, GtLevel level, std::uint64_t seed) {
    if (k < 2) {
        throw ParameterError("pmf generation requires k >= 2");
    }
    const Band band = band_for(level);
    const double hmax = std::log(static_cast<double>(k));
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const double target = (band.lo + rng.next_double() * (band.hi - band.lo)) * hmax;
        const double c = solve_concentration(k, target);
        DiscretePmf pmf{rng.next_dirichlet(k, c)};
        const double h = exact_entropy(pmf);
        if (h >= band.lo * hmax && h <= band.hi * hmax) {
            return pmf;
        }
    }
    throw GenerationError("entropy band unreachable after retry cap");
}

JointPmf generate_joint(std::span<const std::uint64_t> dims, Measure measure, GtLevel level,
                        std::uint64_t seed) {
    const int arity = measure_arity(measure);
    if (measure == Measure::H || static_cast<int>(dims.size()) != arity) {
        throw DimensionError("joint generation requires MI (2 dims) or CMI (3 dims)");
    }
    for (std::uint64_t d : dims) {
        if (d < 2) {
            throw ParameterError("every joint axis needs at least two symbols");
        }
    }
    const Band band = band_for(level);
    const std::uint64_t n = dims[0], m = dims[1];
    const std::uint64_t l = (arity == 3) ? dims[2] : 1;
    const std::uint64_t s = std::min(n, m);
    Rng rng(seed);

    // Medium level: an unstructured scenario. A flat-Dirichlet random table
    // carries a small residual dependence between the axes without any
    // enforced coupling.
    if (level == GtLevel::M) {
        JointPmf joint;
        joint.arity = arity;
        joint.dims = {n, m, l};
        joint.probs = rng.next_dirichlet(n * m * l, 1.0);
        if (arity == 2) {
            joint.dims[2] = 1;
        }
        return joint;
    }

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<double> pz =
            (arity == 3) ? rng.next_dirichlet(l, kBaseConcentration) : std::vector<double>{1.0};
        std::vector<CoupledSlice> slices;
        slices.reserve(l);
        double max_value = 0.0;
        for (std::uint64_t z = 0; z < l; ++z) {
            slices.push_back(make_slice(rng, s, n, m));
            max_value += pz[z] * slices.back().hq;
        }
        if (max_value <= 0.0) {
            continue;
        }
        const double target = (band.lo + rng.next_double() * (band.hi - band.lo)) * max_value;

        auto value_at = [&](double lambda) {
            double v = 0.0;
            for (std::uint64_t z = 0; z < l; ++z) {
                v += pz[z] * slices[z].mi(lambda);
            }
            return v;
        };
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 64; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (value_at(mid) < target) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        const double lambda = 0.5 * (lo + hi);
        const double achieved = value_at(lambda);
        if (achieved < band.lo * max_value || achieved > band.hi * max_value) {
            continue;
        }

        JointPmf joint;
        joint.arity = arity;
        joint.dims = {n, m, l};
        joint.probs.assign(n * m * l, 0.0);
        const double keep = 1.0 - lambda;
        for (std::uint64_t z = 0; z < l; ++z) {
            const CoupledSlice& sl = slices[z];
            std::vector<double> px(n, 0.0), py(m, 0.0);
            for (std::uint64_t i = 0; i < s; ++i) {
                px[sl.into_x[i]] = sl.q[i];
                py[sl.into_y[i]] = sl.q[i];
            }
            for (std::uint64_t x = 0; x < n; ++x) {
                if (px[x] == 0.0) {
                    continue;
                }
                for (std::uint64_t y = 0; y < m; ++y) {
                    joint.probs[(x * m + y) * l + z] = pz[z] * keep * px[x] * py[y];
                }
            }
            for (std::uint64_t i = 0; i < s; ++i) {
                joint.probs[(static_cast<std::uint64_t>(sl.into_x[i]) * m + sl.into_y[i]) * l + z] +=
                    pz[z] * lambda * sl.q[i];
            }
        }
        if (arity == 2) {
            joint.dims[2] = 1;
        }
        return joint;
    }
    throw GenerationError("dependence band unreachable after retry cap");
}

namespace {

std::vector<double> cumulative(std::span<const double> probs) {
    std::vector<double> cum(probs.size() + 1, 0.0);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cum[i + 1] = cum[i] + probs[i];
    }
    return cum;
}

std::uint64_t draw_index(const std::vector<double>& cum, std::span<const double> probs, Rng& rng) {
    const double u = rng.next_double() * cum.back();
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    idx = (idx == 0) ? 0 : idx - 1;
    if (idx >= probs.size()) {
        idx = probs.size() - 1;
    }
    while (idx > 0 && probs[idx] == 0.0) {
        --idx; // floating-point edge: never emit a zero-probability cell
    }
    return idx;
}

} // namespace

std::vector<std::uint64_t> draw_indices(const DiscretePmf& p, std::uint64_t n,
                                        std::uint64_t seed) {
    if (n == 0) {
        throw ParameterError("sample size must be at least 1");
    }
    Rng rng(seed);
    const auto cum = cumulative(p.probs);
    std::vector<std::uint64_t> out(n);
    for (auto& v : out) {
        v = draw_index(cum, p.probs, rng);
    }
    return out;
}

std::vector<std::uint64_t> draw_tuples(const JointPmf& p, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) {
        throw ParameterError("sample size must be at least 1");
    }
    Rng rng(seed);
    const auto cum = cumulative(p.probs);
    std::vector<std::uint64_t> out(n);
    for (auto& v : out) {
        v = draw_index(cum, p.probs, rng);
    }
    return out;
}

CountHistogram sample_hist(const DiscretePmf& p, std::uint64_t n, std::uint64_t seed) {
    const auto cells = draw_indices(p, n, seed);
    std::vector<std::uint64_t> tally(p.domain(), 0);
    for (std::uint64_t c : cells) {
        ++tally[c];
    }
    std::vector<std::uint64_t> counts;
    counts.reserve(std::min<std::uint64_t>(n, p.domain()));
    for (std::uint64_t c : tally) {
        if (c > 0) {
            counts.push_back(c);
        }
    }
    return CountHistogram::from_counts(std::move(counts));
}

JointHistogram sample_joint(const JointPmf& p, std::uint64_t n, std::uint64_t seed) {
    const auto cells = draw_tuples(p, n, seed);
    const std::uint64_t m = p.dims[1], l = p.dims[2];
    std::vector<std::int64_t> flat;
    flat.reserve(cells.size() * static_cast<std::size_t>(p.arity));
    for (std::uint64_t cell : cells) {
        if (p.arity == 2) {
            flat.push_back(static_cast<std::int64_t>(cell / m));
            flat.push_back(static_cast<std::int64_t>(cell % m));
        } else {
            flat.push_back(static_cast<std::int64_t>(cell / (m * l)));
            flat.push_back(static_cast<std::int64_t>((cell / l) % m));
            flat.push_back(static_cast<std::int64_t>(cell % l));
        }
    }
    return JointHistogram::from_tuples(p.arity, flat);
}

} // namespace dent
