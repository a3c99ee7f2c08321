#include "deficitlab/instruments.hpp"

#include <cmath>
#include <numbers>

namespace deficitlab {

namespace {
constexpr double kCompletenessTol = 1e-9;
constexpr double kOutcomeFloor = 1e-12;
} // namespace

std::vector<Complex> ProjectiveQubitBasis::ket0() const {
    return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

std::vector<Complex> ProjectiveQubitBasis::ket1() const {
    return {std::sin(theta / 2.0), std::polar(-std::cos(theta / 2.0), phi)};
}

ComplexMatrix RankOnePOVM::Element::projector() const {
    return ComplexMatrix::outer(pointer, pointer);
}

ComplexMatrix RankOnePOVM::Element::matrix() const { return weight * projector(); }

RankOnePOVM RankOnePOVM::make(std::vector<Element> elements) {
    if (elements.empty()) throw ValidationError("RankOnePOVM: no elements");
    const std::size_t dim = elements.front().pointer.size();
    ComplexMatrix sum(dim, dim);
    for (auto& el : elements) {
        if (el.pointer.size() != dim) throw ShapeError("RankOnePOVM: mixed pointer dimensions");
        if (el.weight <= 0.0 || el.weight > 1.0 + 1e-12)
            throw ValidationError("RankOnePOVM: weight " + std::to_string(el.weight) +
                                  " outside (0,1]");
        double n2 = 0.0;
        for (const auto& a : el.pointer) n2 += std::norm(a);
        if (n2 < 1e-300) throw ValidationError("RankOnePOVM: zero pointer ket");
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : el.pointer) a *= inv;
        sum += el.matrix();
    }
    const double dev = sum.maxAbsDiff(ComplexMatrix::identity(dim));
    if (dev > kCompletenessTol)
        throw ValidationError("RankOnePOVM: completeness violated by " + std::to_string(dev));
    return RankOnePOVM(std::move(elements), dim);
}

RankOnePOVM basisToPOVM(const ProjectiveQubitBasis& b) {
    return RankOnePOVM::make({{1.0, b.ket0()}, {1.0, b.ket1()}});
}

RankOnePOVM makeFourStatePOVM() {
    const double s = 1.0 / std::numbers::sqrt2;
    return RankOnePOVM::make({{0.5, {1.0, 0.0}},
                              {0.5, {0.0, 1.0}},
                              {0.5, {s, s}},
                              {0.5, {s, -s}}});
}

ConditionalEnsemble conditionalEnsemble(const DensityOperator& rho, const RankOnePOVM& m) {
    if (m.dim() != rho.dimA())
        throw ShapeError("conditionalEnsemble: instrument dimension " + std::to_string(m.dim()) +
                         " does not match Alice's dimension " + std::to_string(rho.dimA()));
    const ComplexMatrix iB = ComplexMatrix::identity(rho.dimB());
    ConditionalEnsemble out;
    out.reserve(m.elements().size());
    for (const auto& el : m.elements()) {
        const ComplexMatrix op = tensorProduct(el.matrix(), iB) * rho.matrix();
        const double p = op.trace().real();
        ConditionalOutcome o{std::max(0.0, p), el.pointer, std::nullopt};
        if (p >= kOutcomeFloor) {
            ComplexMatrix bob = partialTrace(op, rho.dimA(), rho.dimB(), Subsystem::B);
            bob = (bob * Complex{1.0 / p, 0.0}).hermitianPart();
            o.bobState = DensityOperator::make(bob, 1, rho.dimB());
        }
        out.push_back(std::move(o));
    }
    return out;
}

DensityOperator luedersDephase(const DensityOperator& rho, const RankOnePOVM& m) {
    const ConditionalEnsemble ens = conditionalEnsemble(rho, m);
    ComplexMatrix sum(rho.dim(), rho.dim());
    double total = 0.0;
    for (std::size_t k = 0; k < ens.size(); ++k) {
        if (!ens[k].bobState) continue;
        const ComplexMatrix pointerProj = m.elements()[k].projector();
        sum += ens[k].probability * tensorProduct(pointerProj, ens[k].bobState->matrix());
        total += ens[k].probability;
    }
    sum = sum * Complex{1.0 / total, 0.0};
    return DensityOperator::make(sum.hermitianPart(), rho.dimA(), rho.dimB());
}

} // namespace deficitlab
