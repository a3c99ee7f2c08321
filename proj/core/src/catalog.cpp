#include "deficitlab/catalog.hpp"

#include <cmath>
#include <numbers>

namespace deficitlab {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::vector<Complex> ketPlus() { return {kInvSqrt2, kInvSqrt2}; }
std::vector<Complex> ketMinus() { return {kInvSqrt2, -kInvSqrt2}; }
std::vector<Complex> ketZ(int b) { return b == 0 ? std::vector<Complex>{1.0, 0.0} : std::vector<Complex>{0.0, 1.0}; }

ComplexMatrix pureProjector(const std::vector<Complex>& ket) {
    return ComplexMatrix::outer(ket, ket);
}

ComplexMatrix rhoZeroMatrix() {
    const auto zeroPlus = tensorKet(ketZ(0), ketPlus());
    const auto plusZero = tensorKet(ketPlus(), ketZ(0));
    return 0.5 * pureProjector(zeroPlus) + 0.5 * pureProjector(plusZero);
}

ComplexMatrix rhoOneMatrix() {
    const auto oneOne = tensorKet(ketZ(1), ketZ(1));
    const auto minusMinus = tensorKet(ketMinus(), ketMinus());
    return 0.5 * pureProjector(oneOne) + 0.5 * pureProjector(minusMinus);
}

DensityOperator bellState(int k) {
    std::vector<Complex> psi(4, 0.0);
    switch (k) {
        case 0: psi = {kInvSqrt2, 0.0, 0.0, kInvSqrt2}; break;   // Phi+
        case 1: psi = {kInvSqrt2, 0.0, 0.0, -kInvSqrt2}; break;  // Phi-
        case 2: psi = {0.0, kInvSqrt2, kInvSqrt2, 0.0}; break;   // Psi+
        case 3: psi = {0.0, kInvSqrt2, -kInvSqrt2, 0.0}; break;  // Psi-
        default: throw UsageError("bell: index must be in 0..3");
    }
    return DensityOperator::fromKet(psi, 2, 2);
}

DensityOperator mes3x3(int k) {
    const double c = 1.0 / std::sqrt(3.0);
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    std::vector<Complex> psi(9, 0.0);
    switch (k) {
        case 1:  // (|00> + w|11> + w^2|22>)/sqrt3
            psi[0] = c; psi[4] = c * omega; psi[8] = c * omega * omega;
            break;
        case 2:  // (|00> + w^2|11> + w|22>)/sqrt3
            psi[0] = c; psi[4] = c * omega * omega; psi[8] = c * omega;
            break;
        case 3:  // (|01> + |12> + |20>)/sqrt3
            psi[1] = c; psi[5] = c; psi[6] = c;
            break;
        default: throw UsageError("mes3x3: index must be in 1..3");
    }
    return DensityOperator::fromKet(psi, 3, 3);
}

double requireParam(const std::string& name, std::optional<double> param) {
    if (!param) throw UsageError("catalogState: '" + name + "' requires a parameter");
    return *param;
}

} // namespace

DensityOperator catalogState(const std::string& name, std::optional<double> param) {
    if (name == "rhoZero") return DensityOperator::make(rhoZeroMatrix(), 2, 2);
    if (name == "rhoOne") return DensityOperator::make(rhoOneMatrix(), 2, 2);
    if (name == "rhoMix") {
        const double lambda = requireParam(name, param);
        if (lambda < 0.0 || lambda > 1.0) throw UsageError("rhoMix: lambda must be in [0,1]");
        return DensityOperator::make(lambda * rhoZeroMatrix() + (1.0 - lambda) * rhoOneMatrix(), 2, 2);
    }
    if (name == "bell") {
        const double k = requireParam(name, param);
        return bellState(static_cast<int>(k));
    }
    if (name == "werner") {
        const double p = requireParam(name, param);
        if (p < 0.0 || p > 1.0) throw UsageError("werner: p must be in [0,1]");
        const ComplexMatrix m =
            p * bellState(0).matrix() + (1.0 - p) * 0.25 * ComplexMatrix::identity(4);
        return DensityOperator::make(m, 2, 2);
    }
    if (name == "schmidtPure") {
        const double a = requireParam(name, param);
        if (a <= 0.0 || a >= 1.0) throw UsageError("schmidtPure: a must be in (0,1)");
        const double b = std::sqrt(1.0 - a * a);
        return DensityOperator::fromKet({a, 0.0, 0.0, b}, 2, 2);
    }
    if (name == "mes3x3") {
        const double k = requireParam(name, param);
        return mes3x3(static_cast<int>(k));
    }
    throw UsageError("catalogState: unknown state name '" + name + "'");
}

std::vector<DensityOperator> mes3x3SwappedSet() {
    std::vector<Complex> prod01(9, 0.0);
    prod01[1] = 1.0;  // |01>
    return {mes3x3(1), mes3x3(2), DensityOperator::fromKet(prod01, 3, 3)};
}

const std::vector<CatalogEntry>& catalogEntries() {
    static const std::vector<CatalogEntry> entries = {
        {"rhoZero", false, "equal mixture of P[|0+>] and P[|+0>]"},
        {"rhoOne", false, "equal mixture of P[|11>] and P[|-->]"},
        {"rhoMix", true, "lambda*rhoZero + (1-lambda)*rhoOne (param lambda in [0,1])"},
        {"bell", true, "Bell state projector (param k in 0..3: Phi+, Phi-, Psi+, Psi-)"},
        {"werner", true, "p*P[Phi+] + (1-p)*I/4 (param p in [0,1])"},
        {"schmidtPure", true, "P[a|00> + sqrt(1-a^2)|11>] (param a in (0,1))"},
        {"mes3x3", true, "maximally entangled 3x3 state (param k in 1..3)"},
        {"mes3x3SwappedSet", false, "set {psi1, psi2, P[|01>]} (use 'catalog show')"},
    };
    return entries;
}

DensityOperator catalogStateFromSpec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::optional<double> param;
    if (colon != std::string::npos) {
        const std::string p = spec.substr(colon + 1);
        try {
            std::size_t pos = 0;
            param = std::stod(p, &pos);
            if (pos != p.size()) throw std::invalid_argument(p);
        } catch (const std::exception&) {
            throw UsageError("catalog spec: cannot parse parameter '" + p + "'");
        }
    }
    return catalogState(name, param);
}

} // namespace deficitlab
