#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "deficitlab/complex_matrix.hpp"
#include "deficitlab/eigen.hpp"

namespace deficitlab {

enum class MixednessKind { VonNeumann, Linear };

/// Validated bipartite density operator: Hermitian, unit trace,
/// positive semidefinite on dA*dB dimensions.
class DensityOperator {
public:
    /// Validates and constructs. Eigenvalues in [-1e-10, 0) are clipped
    /// to zero and the trace is renormalized; anything worse throws
    /// ValidationError naming the failed check.
    static DensityOperator make(const ComplexMatrix& matrix, std::size_t dA, std::size_t dB);

    /// Normalizes `amplitudes` and forms the projector |psi><psi|.
    static DensityOperator fromKet(const std::vector<Complex>& amplitudes, std::size_t dA,
                                   std::size_t dB);

    const ComplexMatrix& matrix() const { return mat_; }
    std::size_t dimA() const { return dA_; }
    std::size_t dimB() const { return dB_; }
    std::size_t dim() const { return dA_ * dB_; }

    /// log2 of total dimension, in qubits.
    double logDim() const;

    DensityOperator reduceTo(Subsystem keep) const;

private:
    DensityOperator(ComplexMatrix m, std::size_t dA, std::size_t dB)
        : mat_(std::move(m)), dA_(dA), dB_(dB) {}

    ComplexMatrix mat_;
    std::size_t dA_ = 0;
    std::size_t dB_ = 0;
};

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const ComplexMatrix& pauli(int k);

/// h(p) = -p log2 p - (1-p) log2 (1-p), with h(0) = h(1) = 0.
double binaryEntropy(double p);

/// S(rho) = -sum lambda log2 lambda, in bits.
double vonNeumannEntropy(const DensityOperator& rho);

/// Entropy of any Hermitian PSD unit-trace matrix (internal states that
/// have not been through full validation, e.g. dephasing outputs).
double entropyOfMatrix(const ComplexMatrix& m);

/// von Neumann: S(rho). linear: 1 - Tr(rho^2).
double mixedness(const DensityOperator& rho, MixednessKind kind);

/// (Tr rho sx, Tr rho sy, Tr rho sz) of a single-qubit state.
std::array<double, 3> blochVector(const DensityOperator& rho);

/// Two-qubit Bloch decomposition: local vectors and correlation matrix
/// T[i][j] = Tr(rho sigma_i ⊗ sigma_j).
struct LocalBlochForm {
    std::array<double, 3> rA{};
    std::array<double, 3> rB{};
    std::array<std::array<double, 3>, 3> T{};

    /// 1/4 (I⊗I + rA·σ⊗I + I⊗rB·σ + Σ T_ij σ_i⊗σ_j)
    ComplexMatrix reconstruct() const;
    /// Singular values of T, descending.
    std::array<double, 3> tSingularValues() const;
};

LocalBlochForm localBlochForm(const DensityOperator& rho);

/// Two-qubit entanglement summary: Wootters concurrence, entanglement
/// of formation, and the partial-transpose witness.
struct EntanglementReport {
    double concurrence = 0.0;
    double eof = 0.0;
    double pptMinEigenvalue = 0.0;
    bool separable2x2 = false;
};

EntanglementReport entanglementReport(const DensityOperator& rho);

/// (1/2) || rho - sigma ||_1
double traceDistance(const DensityOperator& rho, const DensityOperator& sigma);

} // namespace deficitlab
