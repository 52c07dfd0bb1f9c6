// Copyright (c) 2026 The pstomo authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "pstomo/error.hpp"

namespace pstomo {

// Natural units throughout: hbar = 1 and m*omega = 1, so position and
// momentum share one scale and one grid.
//
// A grid is the symmetric lattice x_i = -x_max + i*dx, i = 0..n_points-1,
// with dx = 2*x_max/(n_points-1). Any n_points >= 16 works; the transforms
// are dense kernel sums, not radix-2 FFTs, so there is no power-of-two
// constraint. Defaults elsewhere use 256.
struct GridSpec {
    int n_points = 0;
    double x_max = 0.0;

    double dx() const { return 2.0 * x_max / (n_points - 1); }
    double coord(int i) const { return -x_max + i * dx(); }

    Eigen::VectorXd axis() const {
        Eigen::VectorXd x(n_points);
        for (int i = 0; i < n_points; ++i) x[i] = coord(i);
        return x;
    }

    bool operator==(const GridSpec& o) const {
        return n_points == o.n_points && x_max == o.x_max;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }

    void validate() const {
        if (n_points < 16)
            throw Error::validation("grid: n_points must be >= 16, got " +
                                    std::to_string(n_points));
        if (!(x_max > 0.0))
            throw Error::validation("grid: x_max must be positive");
    }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b,
                              const char* what) {
    if (a != b)
        throw Error::validation(std::string(what) + ": incompatible grids (" +
                                std::to_string(a.n_points) + "/" +
                                std::to_string(a.x_max) + " vs " +
                                std::to_string(b.n_points) + "/" +
                                std::to_string(b.x_max) + ")");
}

} // namespace pstomo
