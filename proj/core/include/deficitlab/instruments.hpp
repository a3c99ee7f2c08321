#pragma once

#include <optional>
#include <vector>

#include "deficitlab/density.hpp"

namespace deficitlab {

/// Orthonormal qubit basis on the Bloch sphere:
///   |e0> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
///   |e1> = sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>
struct ProjectiveQubitBasis {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)

    std::vector<Complex> ket0() const;
    std::vector<Complex> ket1() const;
};

/// Rank-1 POVM on Alice's space: elements M_i = c_i |v_i><v_i| with
/// c_i in (0,1] and sum_i M_i = I.
class RankOnePOVM {
public:
    struct Element {
        double weight;                 // c_i
        std::vector<Complex> pointer;  // normalized |v_i>

        ComplexMatrix projector() const;
        ComplexMatrix matrix() const;  // c_i * |v_i><v_i|
    };

    /// Validates completeness (sum M_i = I within 1e-9) and weights.
    static RankOnePOVM make(std::vector<Element> elements);

    const std::vector<Element>& elements() const { return elements_; }
    std::size_t dim() const { return dim_; }

private:
    explicit RankOnePOVM(std::vector<Element> els, std::size_t dim)
        : elements_(std::move(els)), dim_(dim) {}

    std::vector<Element> elements_;
    std::size_t dim_ = 0;
};

/// Two-element projective measurement {P[|e0>], P[|e1>]}.
RankOnePOVM basisToPOVM(const ProjectiveQubitBasis& b);

/// Four elements of weight 1/2 with pointers |0>, |1>, |+>, |->.
RankOnePOVM makeFourStatePOVM();

/// Outcome bookkeeping for a local measurement on Alice:
/// p_i = Tr((M_i ⊗ I) rho), xi_i = Tr_A((M_i ⊗ I) rho) / p_i.
/// Outcomes with p_i < 1e-12 carry no state and are excluded from
/// entropy averages.
struct ConditionalOutcome {
    double probability;
    std::vector<Complex> pointer;
    std::optional<DensityOperator> bobState;
};

using ConditionalEnsemble = std::vector<ConditionalOutcome>;

ConditionalEnsemble conditionalEnsemble(const DensityOperator& rho, const RankOnePOVM& m);

/// rho' = sum_i p_i P[|v_i>] ⊗ xi_i  (the Lueders channel of the
/// instrument with Hermitian Kraus operators sqrt(M_i) ⊗ I; reduces to
/// block dephasing for projective measurements).
DensityOperator luedersDephase(const DensityOperator& rho, const RankOnePOVM& m);

} // namespace deficitlab
