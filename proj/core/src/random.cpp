#include "deficitlab/random.hpp"

#include <cmath>

namespace deficitlab {

ComplexMatrix ginibreMatrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = Complex{gauss(rng), gauss(rng)};
    return g;
}

ComplexMatrix haarUnitary(std::size_t n, Rng& rng) {
    ComplexMatrix g = ginibreMatrix(n, n, rng);
    // modified Gram-Schmidt on columns; divide each column by a unit
    // phase so the implied R has positive diagonal
    ComplexMatrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Complex> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = g(i, j);
        for (std::size_t k = 0; k < j; ++k) {
            Complex dot{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * col[i];
            for (std::size_t i = 0; i < n; ++i) col[i] -= dot * q(i, k);
        }
        double norm2 = 0.0;
        for (const auto& c : col) norm2 += std::norm(c);
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i] * inv;
    }
    return q;
}

DensityOperator randomDensity(std::size_t dA, std::size_t dB, Rng& rng) {
    const std::size_t n = dA * dB;
    ComplexMatrix g = ginibreMatrix(n, n, rng);
    ComplexMatrix m = g * g.dagger();
    m = m * Complex{1.0 / m.trace().real(), 0.0};
    return DensityOperator::make(m.hermitianPart(), dA, dB);
}

ComplexMatrix randomHermitian(std::size_t n, Rng& rng) {
    ComplexMatrix g = ginibreMatrix(n, n, rng);
    return g.hermitianPart();
}

std::vector<Complex> randomKet(std::size_t n, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> v(n);
    double norm2 = 0.0;
    for (auto& a : v) {
        a = Complex{gauss(rng), gauss(rng)};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : v) a *= inv;
    return v;
}

} // namespace deficitlab
