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

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace dent {

namespace detail {

template <typename F>
void simpson_cell2(F& f, double a, double fa0, double fa1, double b, double fb0, double fb1,
                   double fm0, double fm1, double tol0, double tol1, int depth,
                   double& out0, double& out1) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    std::array<double, 2> yl{}, yr{};
    f(lm, yl);
    f(rm, yr);
    const double h = b - a;
    const double whole0 = h / 6.0 * (fa0 + 4.0 * fm0 + fb0);
    const double whole1 = h / 6.0 * (fa1 + 4.0 * fm1 + fb1);
    const double left0 = h / 12.0 * (fa0 + 4.0 * yl[0] + fm0);
    const double left1 = h / 12.0 * (fa1 + 4.0 * yl[1] + fm1);
    const double right0 = h / 12.0 * (fm0 + 4.0 * yr[0] + fb0);
    const double right1 = h / 12.0 * (fm1 + 4.0 * yr[1] + fb1);
    const double d0 = left0 + right0 - whole0;
    const double d1 = left1 + right1 - whole1;
    if (depth <= 0 || (std::abs(d0) <= 15.0 * tol0 && std::abs(d1) <= 15.0 * tol1)) {
        out0 += left0 + right0 + d0 / 15.0;
        out1 += left1 + right1 + d1 / 15.0;
        return;
    }
    simpson_cell2(f, a, fa0, fa1, m, fm0, fm1, yl[0], yl[1], 0.5 * tol0, 0.5 * tol1, depth - 1,
                  out0, out1);
    simpson_cell2(f, m, fm0, fm1, b, fb0, fb1, yr[0], yr[1], 0.5 * tol0, 0.5 * tol1, depth - 1,
                  out0, out1);
}

} // namespace detail

template <typename F>
SimpsonResult adaptive_simpson2(F&& f, double lo, double hi, int initial_cells, double rel_tol,
                                int max_depth) {
    const int cells = std::max(initial_cells, 2);
    const double h = (hi - lo) / cells;

    // Scan pass: node values plus a crude magnitude estimate that anchors the
    // per-cell absolute tolerances.
    std::vector<std::array<double, 2>> nodes(static_cast<std::size_t>(cells) + 1);
    double mag0 = 0.0, mag1 = 0.0;
    for (int i = 0; i <= cells; ++i) {
        f(lo + h * i, nodes[static_cast<std::size_t>(i)]);
        mag0 += std::abs(nodes[static_cast<std::size_t>(i)][0]) * h;
        mag1 += std::abs(nodes[static_cast<std::size_t>(i)][1]) * h;
    }
    const double floor0 = std::max(mag0, 1e-300);
    const double floor1 = std::max(mag1, 1e-300);

    SimpsonResult res;
    for (int i = 0; i < cells; ++i) {
        const double a = lo + h * i;
        const double b = lo + h * (i + 1);
        std::array<double, 2> ym{};
        f(0.5 * (a + b), ym);
        detail::simpson_cell2(f, a, nodes[static_cast<std::size_t>(i)][0],
                              nodes[static_cast<std::size_t>(i)][1], b,
                              nodes[static_cast<std::size_t>(i) + 1][0],
                              nodes[static_cast<std::size_t>(i) + 1][1], ym[0], ym[1],
                              rel_tol * floor0 / cells, rel_tol * floor1 / cells, max_depth,
                              res.value_a, res.value_b);
    }
    return res;
}

template <typename F>
NelderMeadResult nelder_mead_max_2d(F&& f, double x0, double x1, double step0, double step1,
                                    int max_iter) {
    struct Vertex {
        double x[2];
        double v;
    };
    std::array<Vertex, 3> s{};
    s[0] = {{x0, x1}, f(x0, x1)};
    s[1] = {{x0 + step0, x1}, f(x0 + step0, x1)};
    s[2] = {{x0, x1 + step1}, f(x0, x1 + step1)};

    auto order = [&s] {
        std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v > b.v; });
    };

    int iter = 0;
    for (; iter < max_iter; ++iter) {
        order();
        const double spread = std::max(
            std::max(std::abs(s[0].x[0] - s[2].x[0]), std::abs(s[0].x[1] - s[2].x[1])),
            std::max(std::abs(s[0].x[0] - s[1].x[0]), std::abs(s[0].x[1] - s[1].x[1])));
        if (spread < 1e-10) {
            break;
        }
        const double c0 = 0.5 * (s[0].x[0] + s[1].x[0]);
        const double c1 = 0.5 * (s[0].x[1] + s[1].x[1]);
        const double r0 = c0 + (c0 - s[2].x[0]);
        const double r1 = c1 + (c1 - s[2].x[1]);
        const double fr = f(r0, r1);
        if (fr > s[0].v) {
            const double e0 = c0 + 2.0 * (c0 - s[2].x[0]);
            const double e1 = c1 + 2.0 * (c1 - s[2].x[1]);
            const double fe = f(e0, e1);
            if (fe > fr) {
                s[2] = {{e0, e1}, fe};
            } else {
                s[2] = {{r0, r1}, fr};
            }
            continue;
        }
        if (fr > s[1].v) {
            s[2] = {{r0, r1}, fr};
            continue;
        }
        const double k0 = c0 + 0.5 * (s[2].x[0] - c0);
        const double k1 = c1 + 0.5 * (s[2].x[1] - c1);
        const double fk = f(k0, k1);
        if (fk > s[2].v) {
            s[2] = {{k0, k1}, fk};
            continue;
        }
        for (int i = 1; i < 3; ++i) {
            s[i].x[0] = s[0].x[0] + 0.5 * (s[i].x[0] - s[0].x[0]);
            s[i].x[1] = s[0].x[1] + 0.5 * (s[i].x[1] - s[0].x[1]);
            s[i].v = f(s[i].x[0], s[i].x[1]);
        }
    }
    order();
    return {s[0].x[0], s[0].x[1], s[0].v, iter};
}

} // namespace dent
