#pragma once

#include <cstdint>
#include <random>

#include "deficitlab/density.hpp"

namespace deficitlab {

using Rng = std::mt19937_64;

/// Matrix of iid standard complex Gaussians.
ComplexMatrix ginibreMatrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary via Gram-Schmidt of a Ginibre matrix with
/// the phase convention fixed by positive diagonal R.
ComplexMatrix haarUnitary(std::size_t n, Rng& rng);

/// Random full-rank state rho = G G† / Tr(G G†).
DensityOperator randomDensity(std::size_t dA, std::size_t dB, Rng& rng);

/// Random Hermitian matrix with entries of order 1.
ComplexMatrix randomHermitian(std::size_t n, Rng& rng);

/// Normalized random ket.
std::vector<Complex> randomKet(std::size_t n, Rng& rng);

} // namespace deficitlab
