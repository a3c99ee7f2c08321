#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "deficitlab/instruments.hpp"

namespace deficitlab {

/// Grid-then-refine settings for the projective optimization.
struct DeficitSettings {
    std::size_t nTheta = 64;   // >= 16
    std::size_t nPhi = 128;    // >= 32
    double refineTol = 1e-10;  // stop when the simplex function spread falls below this
    std::size_t maxRefineEvals = 10000;
    unsigned threads = 0;  // 0: resolve from DEFICITLAB_THREADS, else 1
};

struct OptimizerTrace {
    std::size_t evaluations = 0;
    double finalStep = 0.0;
    bool converged = false;
};

struct DeficitResult {
    double deltaBits = 0.0;
    double localWorkBits = 0.0;
    double totalWorkBits = 0.0;
    ProjectiveQubitBasis argmin;
    double entropyAfter = 0.0;
    OptimizerTrace trace;
};

/// W_t = n - S(rho) with n = log2(dA*dB), in bits.
double totalWork(const DensityOperator& rho);

/// n - S(luedersDephase(rho, m)): work extractable after Alice measures
/// with `m` and communicates one way.
double localWorkOneWay(const DensityOperator& rho, const RankOnePOVM& m);

/// One-way deficit over projective measurements on Alice: grid scan of
/// S(rho') over (theta, phi), then Nelder-Mead refinement from the best
/// grid point. Delta = min S(rho') - S(rho).
DeficitResult oneWayDeficitProjective(const DensityOperator& rho,
                                      const DeficitSettings& settings = {});

/// Deficit of a single fixed instrument (no optimization).
DeficitResult povmDeficit(const DensityOperator& rho, const RankOnePOVM& m);

/// Closed form for states with vanishing local Bloch vectors:
/// Delta = 1 + h((1+t)/2) - S(rho), t the largest singular value of T.
double bellDiagonalDeficit(const DensityOperator& rho);

struct CurvePoint {
    double theta;
    double entropyAfter;
    double localWork;
    double delta;
};

/// Uniform theta sweep of the dephasing entropy at fixed phi.
std::vector<CurvePoint> deficitCurve(const DensityOperator& rho, double phi,
                                     std::size_t thetaSteps);

/// Bisection on a theta interval where entropyAfter - level changes
/// sign; returns the crossing angle.
double entropyLevelCrossing(const DensityOperator& rho, double phi, double level,
                            double thetaLo, double thetaHi, double tol = 1e-10);

/// Worst |Delta(U_A ⊗ U_B rho (U_A ⊗ U_B)†) - Delta(rho)| over Haar
/// random local unitaries, each trial re-optimized.
double localUnitaryInvarianceCheck(const DensityOperator& rho, std::size_t trials,
                                   std::uint64_t seed, const DeficitSettings& settings = {});

enum class OrderingAnomaly {
    EOrderVsDeltaOrderReversed,
    DeltaOrderVsMixednessOrderReversed,
    EEqualDeltaDiffers,
};

struct OrderingRecord {
    std::string stateA;
    std::string stateB;
    double eA, eB;  // entanglement of formation, bits
    double dA, dB;  // one-way deficit, bits
    double sA, sB;  // mixedness, chosen kind
    std::set<OrderingAnomaly> anomalies;
};

/// Recomputes the anomaly flags from the six stored numbers (strict
/// inequalities at tolerance 1e-9).
std::set<OrderingAnomaly> orderingAnomalies(double eA, double eB, double dA, double dB,
                                            double sA, double sB);

struct NamedState {
    std::string name;
    DensityOperator state;
};

/// One record per (A, B) pair across the two families.
std::vector<OrderingRecord> orderingScan(const std::vector<NamedState>& familyA,
                                         const std::vector<NamedState>& familyB,
                                         MixednessKind kind,
                                         const DeficitSettings& settings = {});

} // namespace deficitlab
