#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "deficitlab/catalog.hpp"
#include "deficitlab/instruments.hpp"
#include "deficitlab/random.hpp"

using namespace deficitlab;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

RankOnePOVM zBasis() { return basisToPOVM({0.0, 0.0}); }

RankOnePOVM randomProjective(Rng& rng) {
    std::uniform_real_distribution<double> uTheta(0.0, kPi), uPhi(0.0, 2.0 * kPi);
    return basisToPOVM({uTheta(rng), uPhi(rng)});
}

} // namespace

TEST_CASE("basisToPOVM pointers") {
    const RankOnePOVM z = zBasis();
    REQUIRE(z.elements().size() == 2);
    CHECK(std::abs(z.elements()[0].pointer[0] - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(z.elements()[1].pointer[1]) == doctest::Approx(1.0).epsilon(1e-12));

    const RankOnePOVM x = basisToPOVM({kPi / 2.0, 0.0});
    CHECK(std::abs(x.elements()[0].pointer[0] - Complex{kInvSqrt2, 0.0}) < 1e-12);
    CHECK(std::abs(x.elements()[0].pointer[1] - Complex{kInvSqrt2, 0.0}) < 1e-12);

    // theta = pi/4: pointer along the (x+z)/sqrt(2) Bloch axis
    const RankOnePOVM w = basisToPOVM({kPi / 4.0, 0.0});
    const auto& v = w.elements()[0].pointer;
    const double bx = 2.0 * (std::conj(v[0]) * v[1]).real();
    const double bz = std::norm(v[0]) - std::norm(v[1]);
    CHECK(bx == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(bz == doctest::Approx(kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("basis kets are orthogonal") {
    for (double theta : {0.0, 0.3, kPi / 4.0, 2.0}) {
        for (double phi : {0.0, 1.0, 4.0}) {
            const ProjectiveQubitBasis b{theta, phi};
            const auto e0 = b.ket0();
            const auto e1 = b.ket1();
            const Complex overlap = std::conj(e0[0]) * e1[0] + std::conj(e0[1]) * e1[1];
            CHECK(std::abs(overlap) < 1e-12);
        }
    }
}

TEST_CASE("makeFourStatePOVM") {
    const RankOnePOVM povm = makeFourStatePOVM();
    REQUIRE(povm.elements().size() == 4);
    ComplexMatrix sum(2, 2);
    for (const auto& el : povm.elements()) {
        CHECK(el.weight == doctest::Approx(0.5));
        sum += el.matrix();
    }
    CHECK(sum.maxAbsDiff(ComplexMatrix::identity(2)) < 1e-12);

    // each outcome probability is 1/4 on the reference state
    const auto ens = conditionalEnsemble(catalogState("rhoMix", 0.5), povm);
    for (const auto& o : ens) CHECK(o.probability == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("POVM validation") {
    CHECK_THROWS_AS(RankOnePOVM::make({{1.0, {1.0, 0.0}}}), ValidationError);  // incomplete
    CHECK_THROWS_AS(RankOnePOVM::make({{0.0, {1.0, 0.0}}, {1.0, {0.0, 1.0}}}), ValidationError);
    CHECK_THROWS_AS(RankOnePOVM::make({}), ValidationError);
}

TEST_CASE("conditionalEnsemble on the reference state, z basis") {
    const auto ens = conditionalEnsemble(catalogState("rhoMix", 0.5), zBasis());
    REQUIRE(ens.size() == 2);
    CHECK(ens[0].probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ens[1].probability == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(ens[0].bobState.has_value());
    const auto r0 = blochVector(*ens[0].bobState);
    CHECK(r0[0] == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(r0[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(r0[2] == doctest::Approx(0.25).epsilon(1e-10));
    const auto r1 = blochVector(*ens[1].bobState);
    CHECK(r1[0] == doctest::Approx(-0.25).epsilon(1e-10));
    CHECK(r1[2] == doctest::Approx(-0.25).epsilon(1e-10));
}

TEST_CASE("conditionalEnsemble steering of Bell states is pure") {
    Rng rng(31);
    const DensityOperator bell = catalogState("bell", 0);
    for (int rep = 0; rep < 5; ++rep) {
        for (const auto& o : conditionalEnsemble(bell, randomProjective(rng))) {
            REQUIRE(o.bobState.has_value());
            const double purity =
                (o.bobState->matrix() * o.bobState->matrix()).trace().real();
            CHECK(purity == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("conditionalEnsemble with a zero-probability outcome") {
    const DensityOperator zeroPlus =
        DensityOperator::fromKet({kInvSqrt2, kInvSqrt2, 0.0, 0.0}, 2, 2);
    const auto ens = conditionalEnsemble(zeroPlus, zBasis());
    CHECK(ens[0].probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ens[1].probability == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(ens[1].bobState.has_value());
    const auto r = blochVector(*ens[0].bobState);
    CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-10));  // |+>
}

TEST_CASE("conditionalEnsemble rejects mismatched dimensions") {
    CHECK_THROWS_AS(conditionalEnsemble(catalogState("mes3x3", 1), zBasis()), ShapeError);
}

TEST_CASE("luedersDephase fixed point for commuting states") {
    const ComplexMatrix diag = ComplexMatrix::diagonal({0.4, 0.3, 0.2, 0.1});
    const DensityOperator rho = DensityOperator::make(diag, 2, 2);
    const DensityOperator out = luedersDephase(rho, zBasis());
    CHECK(out.matrix().maxAbsDiff(rho.matrix()) < 1e-12);
}

TEST_CASE("luedersDephase of the reference state in the z basis") {
    const DensityOperator rho = catalogState("rhoMix", 0.5);
    const DensityOperator out = luedersDephase(rho, zBasis());
    const double s = entropyOfMatrix(out.matrix());
    // H(1/2) + conditional qubit entropy at Bloch length sqrt(2)/4
    const double expected = 1.0 + binaryEntropy(0.5 * (1.0 + std::numbers::sqrt2 / 4.0));
    CHECK(s == doctest::Approx(expected).epsilon(1e-10));
    CHECK(s == doctest::Approx(1.9079).epsilon(1e-3));
}

TEST_CASE("luedersDephase at theta=pi/4 leaves the reference state unchanged") {
    const DensityOperator rho = catalogState("rhoMix", 0.5);
    const DensityOperator out = luedersDephase(rho, basisToPOVM({kPi / 4.0, 0.0}));
    CHECK(out.matrix().maxAbsDiff(rho.matrix()) <= 1e-12);
}

TEST_CASE("property: dephasing is unital") {
    Rng rng(88);
    const DensityOperator mixed =
        DensityOperator::make(ComplexMatrix::identity(4) * Complex{0.25, 0.0}, 2, 2);
    for (int rep = 0; rep < 5; ++rep) {
        CHECK(luedersDephase(mixed, randomProjective(rng)).matrix().maxAbsDiff(mixed.matrix()) <=
              1e-12);
    }
    CHECK(luedersDephase(mixed, makeFourStatePOVM()).matrix().maxAbsDiff(mixed.matrix()) <=
          1e-12);
}

TEST_CASE("property: dephasing never decreases entropy") {
    Rng rng(1312);
    for (int rep = 0; rep < 100; ++rep) {
        const DensityOperator rho = randomDensity(2, 2, rng);
        const RankOnePOVM m = (rep % 3 == 0) ? makeFourStatePOVM() : randomProjective(rng);
        CHECK(entropyOfMatrix(luedersDephase(rho, m).matrix()) >=
              vonNeumannEntropy(rho) - 1e-10);
    }
}

TEST_CASE("property: ensemble reconstruction equals the dephased state") {
    Rng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityOperator rho = randomDensity(2, 2, rng);
        const RankOnePOVM m = (rep % 2 == 0) ? makeFourStatePOVM() : randomProjective(rng);
        const auto ens = conditionalEnsemble(rho, m);
        double psum = 0.0;
        ComplexMatrix recon(4, 4);
        for (std::size_t k = 0; k < ens.size(); ++k) {
            psum += ens[k].probability;
            if (!ens[k].bobState) continue;
            recon += ens[k].probability *
                     tensorProduct(m.elements()[k].projector(), ens[k].bobState->matrix());
        }
        CHECK(psum == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(recon.maxAbsDiff(luedersDephase(rho, m).matrix()) <= 1e-10);
    }
}

TEST_CASE("property: projective dephasing is idempotent") {
    Rng rng(55);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityOperator rho = randomDensity(2, 2, rng);
        const RankOnePOVM m = randomProjective(rng);
        const DensityOperator once = luedersDephase(rho, m);
        const DensityOperator twice = luedersDephase(once, m);
        CHECK(twice.matrix().maxAbsDiff(once.matrix()) <= 1e-10);
    }
}
