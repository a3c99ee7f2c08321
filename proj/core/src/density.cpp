#include "deficitlab/density.hpp"

#include <cmath>

namespace deficitlab {

namespace {
constexpr double kHermTol = 1e-9;
constexpr double kTraceTol = 1e-9;
constexpr double kNegTol = 1e-10;
} // namespace

DensityOperator DensityOperator::make(const ComplexMatrix& matrix, std::size_t dA, std::size_t dB) {
    matrix.checkFinite();
    if (dA == 0 || dB == 0) throw ShapeError("DensityOperator: zero subsystem dimension");
    if (!matrix.isSquare() || matrix.rows() != dA * dB)
        throw ShapeError("DensityOperator: matrix side " + std::to_string(matrix.rows()) +
                         " does not equal dA*dB = " + std::to_string(dA * dB));
    if (!matrix.isHermitian(kHermTol)) {
        const double dev = matrix.maxAbsDiff(matrix.dagger());
        throw ValidationError("DensityOperator: Hermiticity violated by " + std::to_string(dev));
    }
    const double tr = matrix.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw ValidationError("DensityOperator: trace = " + std::to_string(tr) + ", expected 1");

    ComplexMatrix m = matrix.hermitianPart();
    Spectrum spec = hermitianEigensystem(m);
    const double minEig = spec.eigenvalues.front();
    if (minEig < -kNegTol)
        throw ValidationError("DensityOperator: negative eigenvalue " + std::to_string(minEig));
    if (minEig < 0.0) {
        // rounding-level negatives: clip and renormalize
        double sum = 0.0;
        for (auto& l : spec.eigenvalues) {
            if (l < 0.0) l = 0.0;
            sum += l;
        }
        for (auto& l : spec.eigenvalues) l /= sum;
        m = spec.reconstruct().hermitianPart();
    }
    return DensityOperator(std::move(m), dA, dB);
}

DensityOperator DensityOperator::fromKet(const std::vector<Complex>& amplitudes, std::size_t dA,
                                         std::size_t dB) {
    if (amplitudes.size() != dA * dB)
        throw ShapeError("fromKet: amplitude count does not match dA*dB");
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    if (norm2 < 1e-300) throw ValidationError("fromKet: zero vector");
    std::vector<Complex> psi = amplitudes;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : psi) a *= inv;
    return DensityOperator(ComplexMatrix::outer(psi, psi), dA, dB);
}

double DensityOperator::logDim() const { return std::log2(static_cast<double>(dim())); }

DensityOperator DensityOperator::reduceTo(Subsystem keep) const {
    const ComplexMatrix red = partialTrace(mat_, dA_, dB_, keep);
    const std::size_t d = red.rows();
    return keep == Subsystem::A ? make(red, d, 1) : make(red, 1, d);
}

const ComplexMatrix& pauli(int k) {
    static const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
    static const ComplexMatrix sy{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
    static const ComplexMatrix sz{{1.0, 0.0}, {0.0, -1.0}};
    switch (k) {
        case 0: return sx;
        case 1: return sy;
        default: return sz;
    }
}

double binaryEntropy(double p) {
    if (p < -1e-12 || p > 1.0 + 1e-12)
        throw ValidationError("binaryEntropy: p = " + std::to_string(p) + " outside [0,1]");
    p = std::min(1.0, std::max(0.0, p));
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double entropyOfMatrix(const ComplexMatrix& m) {
    const Spectrum spec = hermitianEigensystem(m);
    double s = 0.0;
    for (double l : spec.eigenvalues) {
        if (l < -kNegTol)
            throw ValidationError("entropy: negative eigenvalue " + std::to_string(l));
        if (l > 0.0) s -= l * std::log2(l);
    }
    return s;
}

double vonNeumannEntropy(const DensityOperator& rho) { return entropyOfMatrix(rho.matrix()); }

double mixedness(const DensityOperator& rho, MixednessKind kind) {
    if (kind == MixednessKind::VonNeumann) return vonNeumannEntropy(rho);
    return 1.0 - (rho.matrix() * rho.matrix()).trace().real();
}

std::array<double, 3> blochVector(const DensityOperator& rho) {
    if (rho.dim() != 2) throw ShapeError("blochVector: not a single-qubit state");
    std::array<double, 3> r{};
    for (int k = 0; k < 3; ++k) r[k] = (rho.matrix() * pauli(k)).trace().real();
    return r;
}

ComplexMatrix LocalBlochForm::reconstruct() const {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    ComplexMatrix m = tensorProduct(i2, i2);
    for (int k = 0; k < 3; ++k) {
        m += rA[k] * tensorProduct(pauli(k), i2);
        m += rB[k] * tensorProduct(i2, pauli(k));
        for (int l = 0; l < 3; ++l) m += T[k][l] * tensorProduct(pauli(k), pauli(l));
    }
    return m * Complex{0.25, 0.0};
}

std::array<double, 3> LocalBlochForm::tSingularValues() const {
    ComplexMatrix t(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = T[i][j];
    const auto sv = singularValues(t);
    return {sv[0], sv[1], sv[2]};
}

LocalBlochForm localBlochForm(const DensityOperator& rho) {
    if (rho.dimA() != 2 || rho.dimB() != 2) throw ShapeError("localBlochForm: dims must be (2,2)");
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    LocalBlochForm f;
    for (int k = 0; k < 3; ++k) {
        f.rA[k] = (rho.matrix() * tensorProduct(pauli(k), i2)).trace().real();
        f.rB[k] = (rho.matrix() * tensorProduct(i2, pauli(k))).trace().real();
        for (int l = 0; l < 3; ++l)
            f.T[k][l] = (rho.matrix() * tensorProduct(pauli(k), pauli(l))).trace().real();
    }
    return f;
}

EntanglementReport entanglementReport(const DensityOperator& rho) {
    if (rho.dimA() != 2 || rho.dimB() != 2)
        throw ShapeError("entanglementReport: dims must be (2,2)");

    const ComplexMatrix yy = tensorProduct(pauli(1), pauli(1));
    const ComplexMatrix rhoTilde = yy * rho.matrix().conjugate() * yy;

    // sqrt(rho) via spectral decomposition, then the Hermitian similarity
    // partner of rho*rhoTilde
    Spectrum spec = hermitianEigensystem(rho.matrix());
    for (auto& l : spec.eigenvalues) l = std::sqrt(std::max(0.0, l));
    const ComplexMatrix sqrtRho = spec.reconstruct();
    const Spectrum prod = hermitianEigensystem((sqrtRho * rhoTilde * sqrtRho).hermitianPart());

    std::vector<double> lambda;
    for (auto it = prod.eigenvalues.rbegin(); it != prod.eigenvalues.rend(); ++it)
        lambda.push_back(std::sqrt(std::max(0.0, *it)));

    EntanglementReport rep;
    rep.concurrence = std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
    const double c2 = rep.concurrence * rep.concurrence;
    rep.eof = binaryEntropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c2))));

    const ComplexMatrix pt = partialTranspose(rho.matrix(), 2, 2, Subsystem::B);
    rep.pptMinEigenvalue = hermitianEigensystem(pt).eigenvalues.front();
    rep.separable2x2 = rep.pptMinEigenvalue >= -1e-10;
    return rep;
}

double traceDistance(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim())
        throw ShapeError("traceDistance: dimension mismatch");
    const Spectrum s = hermitianEigensystem(rho.matrix() - sigma.matrix());
    double d = 0.0;
    for (double l : s.eigenvalues) d += std::abs(l);
    return 0.5 * d;
}

} // namespace deficitlab
