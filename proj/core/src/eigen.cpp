#include "deficitlab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace deficitlab {

ComplexMatrix Spectrum::reconstruct() const {
    std::vector<Complex> d(eigenvalues.begin(), eigenvalues.end());
    return eigenvectors * ComplexMatrix::diagonal(d) * eigenvectors.dagger();
}

namespace {

double offDiagonalNorm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary rotation
//   U = I except U(p,p)=c*u, U(q,p)=s, U(p,q)=-s*u, U(q,q)=c
// where u = a(p,q)/|a(p,q)|. Updates a <- U† a U and v <- v U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex u = apq / mag;
    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();

    double t;
    const double tau = (alpha - beta) / (2.0 * mag);
    if (std::isinf(tau)) {
        t = 0.0;
    } else {
        t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // column update: M <- M U
    for (std::size_t i = 0; i < n; ++i) {
        const Complex mip = a(i, p);
        const Complex miq = a(i, q);
        a(i, p) = mip * (c * u) + miq * s;
        a(i, q) = mip * (-s * u) + miq * c;
    }
    // row update: M <- U† M
    for (std::size_t j = 0; j < n; ++j) {
        const Complex mpj = a(p, j);
        const Complex mqj = a(q, j);
        a(p, j) = c * std::conj(u) * mpj + s * mqj;
        a(q, j) = -s * std::conj(u) * mpj + c * mqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex{a(p, p).real(), 0.0};
    a(q, q) = Complex{a(q, q).real(), 0.0};

    for (std::size_t i = 0; i < n; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = vip * (c * u) + viq * s;
        v(i, q) = vip * (-s * u) + viq * c;
    }
}

} // namespace

Spectrum hermitianEigensystem(const ComplexMatrix& m, double hermTol, double convTol,
                              int maxSweeps) {
    if (!m.isSquare()) throw ShapeError("hermitianEigensystem: matrix not square");
    m.checkFinite();
    if (!m.isHermitian(hermTol))
        throw ValidationError("hermitianEigensystem: matrix not Hermitian within tolerance");

    ComplexMatrix a = m.hermitianPart();
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);

    int sweep = 0;
    while (offDiagonalNorm(a) >= convTol) {
        if (++sweep > maxSweeps)
            throw NumericError("hermitianEigensystem: no convergence after " +
                               std::to_string(maxSweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 0.0) rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> singularValues(const ComplexMatrix& m) {
    const Spectrum s = hermitianEigensystem(m.dagger() * m);
    std::vector<double> sv;
    sv.reserve(s.eigenvalues.size());
    for (auto it = s.eigenvalues.rbegin(); it != s.eigenvalues.rend(); ++it)
        sv.push_back(std::sqrt(std::max(0.0, *it)));
    return sv;
}

} // namespace deficitlab
