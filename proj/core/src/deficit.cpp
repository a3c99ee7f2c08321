#include "deficitlab/deficit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "deficitlab/random.hpp"

namespace deficitlab {

namespace {

constexpr double kPi = std::numbers::pi;

unsigned resolveThreads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DEFICITLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

// Entropy in bits of a 2x2 PSD matrix with trace p (eigenvalues in
// closed form), normalized as p * S(m/p).
double scaledQubitEntropy(const ComplexMatrix& m, double p) {
    const double a = m(0, 0).real();
    const double b = m(1, 1).real();
    const double disc = std::sqrt(std::max(0.0, (a - b) * (a - b) + 4.0 * std::norm(m(0, 1))));
    const double l1 = std::max(0.0, 0.5 * (a + b + disc)) / p;
    const double l2 = std::max(0.0, 0.5 * (a + b - disc)) / p;
    double s = 0.0;
    if (l1 > 0.0) s -= l1 * std::log2(l1);
    if (l2 > 0.0) s -= l2 * std::log2(l2);
    return p * s;
}

// S(rho') for a projective measurement in the basis (theta, phi) on
// Alice of a two-qubit state: rho' is block diagonal, so
// S(rho') = H(p0) + sum_i p_i S(xi_i). Closed qubit forms keep the
// grid scan cheap; luedersDephase is the slow reference route.
double dephasedEntropyProjective(const ComplexMatrix& rho, double theta, double phi) {
    const ProjectiveQubitBasis basis{theta, phi};
    const auto kets = {basis.ket0(), basis.ket1()};
    double entropy = 0.0;
    double pSum = 0.0;
    std::vector<double> probs;
    for (const auto& e : kets) {
        // Bob block <e| rho |e>
        ComplexMatrix blk(2, 2);
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l) {
                Complex v{0.0, 0.0};
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j)
                        v += std::conj(e[i]) * e[j] * rho(i * 2 + k, j * 2 + l);
                blk(k, l) = v;
            }
        const double p = blk(0, 0).real() + blk(1, 1).real();
        probs.push_back(std::max(0.0, p));
        pSum += std::max(0.0, p);
        if (p >= 1e-12) entropy += scaledQubitEntropy(blk, p);
    }
    for (double p : probs) {
        const double q = p / pSum;
        if (q > 0.0) entropy -= q * std::log2(q);
    }
    return entropy;
}

// Lexicographically smallest representative of the measurement basis
// under theta wrapping and the pointer-relabeling symmetry
// (theta, phi) -> (pi - theta, phi + pi).
ProjectiveQubitBasis canonicalBasis(double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    double t = std::acos(std::clamp(nz, -1.0, 1.0));
    double f = std::atan2(ny, nx);
    if (f < 0.0) f += 2.0 * kPi;
    if (t < 1e-9 || t > kPi - 1e-9) return {t < 1e-9 ? 0.0 : kPi, 0.0};

    const double tAlt = kPi - t;
    double fAlt = f + kPi;
    if (fAlt >= 2.0 * kPi) fAlt -= 2.0 * kPi;
    if (tAlt < t - 1e-12 || (std::abs(tAlt - t) <= 1e-12 && fAlt < f)) return {tAlt, fAlt};
    return {t, f};
}

struct NelderMeadOut {
    double theta, phi, value;
    std::size_t evaluations;
    double finalStep;
    bool converged;
};

NelderMeadOut nelderMead2d(const std::function<double(double, double)>& f, double theta0,
                           double phi0, double stepTheta, double stepPhi, double tol,
                           std::size_t maxEvals) {
    struct Vertex {
        double x, y, v;
    };
    std::size_t evals = 0;
    auto eval = [&](double x, double y) {
        ++evals;
        return f(x, y);
    };
    std::array<Vertex, 3> s{{{theta0, phi0, eval(theta0, phi0)},
                             {theta0 + stepTheta, phi0, eval(theta0 + stepTheta, phi0)},
                             {theta0, phi0 + stepPhi, eval(theta0, phi0 + stepPhi)}}};

    bool converged = false;
    while (evals < maxEvals) {
        std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v < b.v; });
        if (s[2].v - s[0].v < tol) {
            converged = true;
            break;
        }
        const double cx = 0.5 * (s[0].x + s[1].x);
        const double cy = 0.5 * (s[0].y + s[1].y);
        const double rx = cx + (cx - s[2].x);
        const double ry = cy + (cy - s[2].y);
        const double rv = eval(rx, ry);
        if (rv < s[0].v) {
            const double ex = cx + 2.0 * (cx - s[2].x);
            const double ey = cy + 2.0 * (cy - s[2].y);
            const double ev = eval(ex, ey);
            s[2] = ev < rv ? Vertex{ex, ey, ev} : Vertex{rx, ry, rv};
        } else if (rv < s[1].v) {
            s[2] = {rx, ry, rv};
        } else {
            const double kx = cx + 0.5 * ((rv < s[2].v ? rx : s[2].x) - cx);
            const double ky = cy + 0.5 * ((rv < s[2].v ? ry : s[2].y) - cy);
            const double kv = eval(kx, ky);
            if (kv < std::min(rv, s[2].v)) {
                s[2] = {kx, ky, kv};
            } else {
                // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
                    s[i].y = s[0].y + 0.5 * (s[i].y - s[0].y);
                    s[i].v = eval(s[i].x, s[i].y);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v < b.v; });
    const double diam = std::max(std::hypot(s[1].x - s[0].x, s[1].y - s[0].y),
                                 std::hypot(s[2].x - s[0].x, s[2].y - s[0].y));
    return {s[0].x, s[0].y, s[0].v, evals, diam, converged};
}

} // namespace

double totalWork(const DensityOperator& rho) { return rho.logDim() - vonNeumannEntropy(rho); }

double localWorkOneWay(const DensityOperator& rho, const RankOnePOVM& m) {
    return rho.logDim() - entropyOfMatrix(luedersDephase(rho, m).matrix());
}

DeficitResult oneWayDeficitProjective(const DensityOperator& rho, const DeficitSettings& settings) {
    if (rho.dimA() != 2 || rho.dimB() != 2)
        throw ShapeError("oneWayDeficitProjective: dims must be (2,2)");
    const std::size_t nTheta = std::max<std::size_t>(settings.nTheta, 16);
    const std::size_t nPhi = std::max<std::size_t>(settings.nPhi, 32);

    const ComplexMatrix& m = rho.matrix();
    auto objective = [&m](double theta, double phi) {
        return dephasedEntropyProjective(m, theta, phi);
    };

    // grid scan over [0,pi] x [0,2pi)
    std::vector<double> values(nTheta * nPhi);
    const double dTheta = kPi / static_cast<double>(nTheta - 1);
    const double dPhi = 2.0 * kPi / static_cast<double>(nPhi);
    const unsigned threads = std::min<unsigned>(resolveThreads(settings.threads),
                                                static_cast<unsigned>(nTheta));
    auto evalRows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < nPhi; ++j)
                values[i * nPhi + j] = objective(i * dTheta, j * dPhi);
    };
    if (threads <= 1) {
        evalRows(0, nTheta);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (nTheta + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(nTheta, lo + chunk);
            if (lo < hi) pool.emplace_back(evalRows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    // sequential argmin in scan order keeps ties lexicographic
    std::size_t bestIdx = 0;
    for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k] < values[bestIdx]) bestIdx = k;
    const double gridBest = values[bestIdx];
    const double theta0 = static_cast<double>(bestIdx / nPhi) * dTheta;
    const double phi0 = static_cast<double>(bestIdx % nPhi) * dPhi;

    const NelderMeadOut nm = nelderMead2d(objective, theta0, phi0, dTheta, dPhi,
                                          settings.refineTol, settings.maxRefineEvals);
    if (!nm.converged)
        throw NumericError("oneWayDeficitProjective: refinement did not converge after " +
                           std::to_string(settings.maxRefineEvals) +
                           " evaluations; best entropy so far " + std::to_string(nm.value));

    double minEntropy = nm.value;
    double bestTheta = nm.theta;
    double bestPhi = nm.phi;
    if (gridBest < minEntropy) {  // refinement never loses to the grid
        minEntropy = gridBest;
        bestTheta = theta0;
        bestPhi = phi0;
    }

    const double sRho = vonNeumannEntropy(rho);
    const double n = rho.logDim();
    DeficitResult res;
    res.entropyAfter = minEntropy;
    res.totalWorkBits = n - sRho;
    res.localWorkBits = n - minEntropy;
    res.deltaBits = res.totalWorkBits - res.localWorkBits;
    res.argmin = canonicalBasis(bestTheta, bestPhi);
    res.trace = {values.size() + nm.evaluations, nm.finalStep, nm.converged};
    return res;
}

DeficitResult povmDeficit(const DensityOperator& rho, const RankOnePOVM& m) {
    const double sAfter = entropyOfMatrix(luedersDephase(rho, m).matrix());
    const double sRho = vonNeumannEntropy(rho);
    const double n = rho.logDim();
    DeficitResult res;
    res.entropyAfter = sAfter;
    res.totalWorkBits = n - sRho;
    res.localWorkBits = n - sAfter;
    res.deltaBits = res.totalWorkBits - res.localWorkBits;
    res.trace = {1, 0.0, true};
    return res;
}

double bellDiagonalDeficit(const DensityOperator& rho) {
    const LocalBlochForm f = localBlochForm(rho);
    const double lenA = std::hypot(f.rA[0], f.rA[1], f.rA[2]);
    const double lenB = std::hypot(f.rB[0], f.rB[1], f.rB[2]);
    if (lenA > 1e-9 || lenB > 1e-9)
        throw ValidationError("bellDiagonalDeficit: local Bloch vectors do not vanish (|rA| = " +
                              std::to_string(lenA) + ", |rB| = " + std::to_string(lenB) + ")");
    const double t = f.tSingularValues()[0];
    return 1.0 + binaryEntropy(0.5 * (1.0 + t)) - vonNeumannEntropy(rho);
}

std::vector<CurvePoint> deficitCurve(const DensityOperator& rho, double phi,
                                     std::size_t thetaSteps) {
    if (rho.dimA() != 2 || rho.dimB() != 2) throw ShapeError("deficitCurve: dims must be (2,2)");
    if (thetaSteps < 2) throw UsageError("deficitCurve: need at least 2 theta steps");
    const double sRho = vonNeumannEntropy(rho);
    const double n = rho.logDim();
    std::vector<CurvePoint> out;
    out.reserve(thetaSteps);
    for (std::size_t i = 0; i < thetaSteps; ++i) {
        const double theta = kPi * static_cast<double>(i) / static_cast<double>(thetaSteps - 1);
        const double s = dephasedEntropyProjective(rho.matrix(), theta, phi);
        out.push_back({theta, s, n - s, s - sRho});
    }
    return out;
}

double entropyLevelCrossing(const DensityOperator& rho, double phi, double level, double thetaLo,
                            double thetaHi, double tol) {
    auto f = [&](double theta) {
        return dephasedEntropyProjective(rho.matrix(), theta, phi) - level;
    };
    double fLo = f(thetaLo);
    double fHi = f(thetaHi);
    if (fLo * fHi > 0.0)
        throw NumericError("entropyLevelCrossing: no sign change on the given interval");
    while (thetaHi - thetaLo > tol) {
        const double mid = 0.5 * (thetaLo + thetaHi);
        const double fMid = f(mid);
        if (fLo * fMid <= 0.0) {
            thetaHi = mid;
            fHi = fMid;
        } else {
            thetaLo = mid;
            fLo = fMid;
        }
    }
    return 0.5 * (thetaLo + thetaHi);
}

double localUnitaryInvarianceCheck(const DensityOperator& rho, std::size_t trials,
                                   std::uint64_t seed, const DeficitSettings& settings) {
    if (trials < 1) throw UsageError("localUnitaryInvarianceCheck: trials must be >= 1");
    const double base = oneWayDeficitProjective(rho, settings).deltaBits;
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const ComplexMatrix u = tensorProduct(haarUnitary(2, rng), haarUnitary(2, rng));
        const ComplexMatrix rotated = (u * rho.matrix() * u.dagger()).hermitianPart();
        const DensityOperator sigma = DensityOperator::make(rotated, 2, 2);
        const double d = oneWayDeficitProjective(sigma, settings).deltaBits;
        worst = std::max(worst, std::abs(d - base));
    }
    return worst;
}

std::set<OrderingAnomaly> orderingAnomalies(double eA, double eB, double dA, double dB, double sA,
                                            double sB) {
    constexpr double tol = 1e-9;
    const bool eGt = eA - eB > tol, eLt = eB - eA > tol;
    const bool dGt = dA - dB > tol, dLt = dB - dA > tol;
    const bool sGt = sA - sB > tol, sLt = sB - sA > tol;
    std::set<OrderingAnomaly> flags;
    if ((eGt && dLt) || (eLt && dGt)) flags.insert(OrderingAnomaly::EOrderVsDeltaOrderReversed);
    // deficit and mixedness co-varying reverses the expected trend
    if ((dGt && sGt) || (dLt && sLt))
        flags.insert(OrderingAnomaly::DeltaOrderVsMixednessOrderReversed);
    if (!eGt && !eLt && (dGt || dLt)) flags.insert(OrderingAnomaly::EEqualDeltaDiffers);
    return flags;
}

std::vector<OrderingRecord> orderingScan(const std::vector<NamedState>& familyA,
                                         const std::vector<NamedState>& familyB,
                                         MixednessKind kind, const DeficitSettings& settings) {
    struct Row {
        const NamedState* s;
        double e, d, mix;
    };
    auto evaluate = [&](const NamedState& ns) {
        return Row{&ns, entanglementReport(ns.state).eof,
                   oneWayDeficitProjective(ns.state, settings).deltaBits,
                   mixedness(ns.state, kind)};
    };
    std::vector<Row> rowsA, rowsB;
    for (const auto& s : familyA) rowsA.push_back(evaluate(s));
    for (const auto& s : familyB) rowsB.push_back(evaluate(s));

    std::vector<OrderingRecord> out;
    for (const auto& a : rowsA)
        for (const auto& b : rowsB) {
            OrderingRecord rec{a.s->name, b.s->name, a.e, b.e, a.d, b.d, a.mix, b.mix, {}};
            rec.anomalies = orderingAnomalies(rec.eA, rec.eB, rec.dA, rec.dB, rec.sA, rec.sB);
            out.push_back(std::move(rec));
        }
    return out;
}

} // namespace deficitlab
