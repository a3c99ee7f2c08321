#pragma once

#include <vector>

#include "deficitlab/complex_matrix.hpp"

namespace deficitlab {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvector k in column k of `eigenvectors`.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi diagonalization with complex plane rotations.
/// The input must be Hermitian within `hermTol`; it is symmetrized to
/// (m + m†)/2 before iterating. Sweeps run until the off-diagonal
/// Frobenius norm drops below `convTol` (NumericError after `maxSweeps`).
Spectrum hermitianEigensystem(const ComplexMatrix& m, double hermTol = 1e-9,
                              double convTol = 1e-12, int maxSweeps = 100);

/// Singular values of an arbitrary matrix, descending (via m†m).
std::vector<double> singularValues(const ComplexMatrix& m);

} // namespace deficitlab
