#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "deficitlab/complex_matrix.hpp"
#include "deficitlab/eigen.hpp"
#include "deficitlab/random.hpp"

using namespace deficitlab;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ComplexMatrix referenceStateMatrix() {
    // (1/16) [[5,1,1,1],[1,3,1,-1],[1,1,3,-1],[1,-1,-1,5]]
    ComplexMatrix m{{5, 1, 1, 1}, {1, 3, 1, -1}, {1, 1, 3, -1}, {1, -1, -1, 5}};
    return m * Complex{1.0 / 16.0, 0.0};
}

ComplexMatrix bellPhiPlus() {
    const std::vector<Complex> psi{kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    return ComplexMatrix::outer(psi, psi);
}

} // namespace

TEST_CASE("tensorProduct basics") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(tensorProduct(i2, i2).maxAbsDiff(ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix d10 = ComplexMatrix::diagonal({1.0, 0.0});
    const ComplexMatrix d01 = ComplexMatrix::diagonal({0.0, 1.0});
    CHECK(tensorProduct(d10, d01).maxAbsDiff(ComplexMatrix::diagonal({0.0, 1.0, 0.0, 0.0})) ==
          0.0);
}

TEST_CASE("tensorProduct P[|0>] x P[|+>]") {
    const ComplexMatrix p0 = ComplexMatrix::outer({1.0, 0.0}, {1.0, 0.0});
    const ComplexMatrix pPlus =
        ComplexMatrix::outer({kInvSqrt2, kInvSqrt2}, {kInvSqrt2, kInvSqrt2});
    const ComplexMatrix prod = tensorProduct(p0, pPlus);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double expected = (i < 2 && j < 2) ? 0.5 : 0.0;
            CHECK(std::abs(prod(i, j) - Complex{expected, 0.0}) < 1e-15);
        }
}

TEST_CASE("partialTrace examples") {
    const std::vector<Complex> zeroPlus{kInvSqrt2, kInvSqrt2, 0.0, 0.0};
    const ComplexMatrix proj = ComplexMatrix::outer(zeroPlus, zeroPlus);
    const ComplexMatrix pPlus =
        ComplexMatrix::outer({kInvSqrt2, kInvSqrt2}, {kInvSqrt2, kInvSqrt2});
    CHECK(partialTrace(proj, 2, 2, Subsystem::B).maxAbsDiff(pPlus) < 1e-15);

    const ComplexMatrix halfI =
        ComplexMatrix::identity(2) * Complex{0.5, 0.0};
    CHECK(partialTrace(referenceStateMatrix(), 2, 2, Subsystem::B).maxAbsDiff(halfI) < 1e-12);
    CHECK(partialTrace(bellPhiPlus(), 2, 2, Subsystem::A).maxAbsDiff(halfI) < 1e-15);
}

TEST_CASE("partialTranspose examples") {
    const ComplexMatrix d = ComplexMatrix::diagonal({0.1, 0.2, 0.3, 0.4});
    CHECK(partialTranspose(d, 2, 2, Subsystem::B).maxAbsDiff(d) == 0.0);

    const Spectrum bellPT = hermitianEigensystem(partialTranspose(bellPhiPlus(), 2, 2, Subsystem::B));
    CHECK(bellPT.eigenvalues.front() == doctest::Approx(-0.5).epsilon(1e-12));

    // the reference state is separable, PPT must hold
    const Spectrum rhoPT =
        hermitianEigensystem(partialTranspose(referenceStateMatrix(), 2, 2, Subsystem::B));
    CHECK(rhoPT.eigenvalues.front() >= -1e-12);
}

TEST_CASE("hermitianEigensystem examples") {
    const Spectrum d = hermitianEigensystem(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
    CHECK(d.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-12));

    const Spectrum rho = hermitianEigensystem(referenceStateMatrix());
    CHECK(rho.eigenvalues[0] == doctest::Approx(0.125).epsilon(1e-10));
    CHECK(rho.eigenvalues[1] == doctest::Approx(0.125).epsilon(1e-10));
    CHECK(rho.eigenvalues[2] == doctest::Approx(0.375).epsilon(1e-10));
    CHECK(rho.eigenvalues[3] == doctest::Approx(0.375).epsilon(1e-10));

    const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
    const Spectrum sxs = hermitianEigensystem(sx);
    CHECK(sxs.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sxs.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitianEigensystem rejects non-Hermitian input") {
    ComplexMatrix m{{0.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(hermitianEigensystem(m), ValidationError);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(partialTrace(ComplexMatrix::identity(3), 2, 2, Subsystem::A), ShapeError);
    CHECK_THROWS_AS(partialTranspose(ComplexMatrix::identity(6), 2, 2, Subsystem::B), ShapeError);
    CHECK_THROWS_AS(ComplexMatrix::identity(2) * ComplexMatrix::identity(3), ShapeError);
}

TEST_CASE("property: eigendecomposition reconstructs random Hermitian matrices") {
    Rng rng(12345);
    for (std::size_t side : {2, 3, 4, 5, 6, 7, 8, 9}) {
        const ComplexMatrix m = randomHermitian(side, rng);
        const Spectrum s = hermitianEigensystem(m);
        CHECK(s.reconstruct().maxAbsDiff(m) <= 1e-9);
        const ComplexMatrix vtv = s.eigenvectors.dagger() * s.eigenvectors;
        CHECK(vtv.maxAbsDiff(ComplexMatrix::identity(side)) <= 1e-9);
        for (std::size_t k = 0; k + 1 < s.eigenvalues.size(); ++k)
            CHECK(s.eigenvalues[k] <= s.eigenvalues[k + 1]);
    }
}

TEST_CASE("property: trace is multiplicative under tensor products") {
    Rng rng(777);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = ginibreMatrix(3, 3, rng);
        const ComplexMatrix b = ginibreMatrix(2, 2, rng);
        const Complex lhs = tensorProduct(a, b).trace();
        const Complex rhs = a.trace() * b.trace();
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("property: partial trace preserves total trace") {
    Rng rng(4242);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix m = ginibreMatrix(6, 6, rng);
        CHECK(std::abs(partialTrace(m, 2, 3, Subsystem::A).trace() - m.trace()) <= 1e-10);
        CHECK(std::abs(partialTrace(m, 2, 3, Subsystem::B).trace() - m.trace()) <= 1e-10);
    }
}

TEST_CASE("property: partial transpose is an involution") {
    Rng rng(99);
    const ComplexMatrix m = ginibreMatrix(6, 6, rng);
    for (auto sub : {Subsystem::A, Subsystem::B}) {
        const ComplexMatrix twice = partialTranspose(partialTranspose(m, 2, 3, sub), 2, 3, sub);
        CHECK(twice.maxAbsDiff(m) == 0.0);
    }
}
