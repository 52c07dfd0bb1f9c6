// Copyright (c) 2026 The pstomo authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "pstomo/grid.hpp"

namespace pstomo {

using Complex = std::complex<double>;

/// Pure state on a position grid, normalized so that sum |psi_i|^2 dx = 1.
struct Wavefunction {
    GridSpec grid;
    Eigen::VectorXcd amplitudes;
};

/// rho(x, x') on the same grid; Hermitian with unit trace (sum of diag * dx).
struct DensityMatrix {
    GridSpec grid;
    Eigen::MatrixXcd elements; // elements(i, j) = rho(x_i, x_j)
};

/// psi(x) ~ exp(-(x-center)^2 / 4 sigma^2) * exp(i momentum x), normalized.
/// sigma is the position standard deviation. Fails if the +-5 sigma support
/// around center leaves the grid.
Wavefunction make_gaussian(const GridSpec& grid, double center, double sigma,
                           double momentum);

/// Equal-weight superposition of two Gaussians at +-(separation_sigmas*sigma)/2.
Wavefunction make_double_slit(const GridSpec& grid, double separation_sigmas,
                              double sigma);

/// rho = psi psi^dagger. Rejects non-normalized input.
DensityMatrix density_from_wavefunction(const Wavefunction& psi);

/// Which-path dephasing between the half-spaces x < 0 and x > 0:
/// rho'(x,x') = rho(x,x') * exp(-lambda * (s(x)-s(x'))^2 / 4), s = sign.
/// Equivalent to the channel (1-eta) rho + eta (P+ rho P+ + P- rho P-) with
/// eta = 1 - exp(-lambda). Preserves the diagonal exactly; purity is
/// non-increasing in lambda.
DensityMatrix decohere(const DensityMatrix& rho, double lambda);

/// Tr(rho^2) dx^2 for the discretized kernel.
double purity(const DensityMatrix& rho);

double trace(const DensityMatrix& rho);

/// max |rho - rho^dagger|.
double hermiticity_residual(const DensityMatrix& rho);

void require_hermitian(const DensityMatrix& rho, const char* what,
                       double tol = 1e-9);

} // namespace pstomo
