#include "deficitlab/adjudicate.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "deficitlab/catalog.hpp"

namespace deficitlab {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// rho as an explicit mixture in the product basis built from the
// (x+z)/sqrt(2) Bloch-axis eigenstates; the classical decomposition
// behind the zero projective optimum.
ComplexMatrix wBasisMixture() {
    const double c = std::cos(kPi / 8.0);
    const double s = std::sin(kPi / 8.0);
    const std::vector<Complex> wPlus{c, s};
    const std::vector<Complex> wMinus{s, -c};
    auto proj = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        const auto ket = tensorKet(a, b);
        return ComplexMatrix::outer(ket, ket);
    };
    return 0.375 * proj(wPlus, wPlus) + 0.125 * proj(wPlus, wMinus) +
           0.125 * proj(wMinus, wPlus) + 0.375 * proj(wMinus, wMinus);
}

} // namespace

std::string statusName(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Reproduced: return "reproduced";
        case ClaimStatus::RefutedWithDerivation: return "refuted-with-derivation";
        default: return "soft-target";
    }
}

AdjudicationReport runReproduce(const ReproduceSettings& settings) {
    AdjudicationReport report;
    report.version = kVersion;
    report.seed = settings.seed;
    report.gridTheta = settings.deficit.nTheta;
    report.gridPhi = settings.deficit.nPhi;
    report.refineTol = settings.deficit.refineTol;

    const DensityOperator rho = catalogState("rhoMix", 0.5);
    const double sRho = vonNeumannEntropy(rho);
    const double wTotal = totalWork(rho);

    auto compare = [](const std::string& id, double published, double computed, double tol,
                      std::string note) {
        ClaimRecord r;
        r.claimId = id;
        r.publishedValue = published;
        r.computedValue = computed;
        r.absoluteGap = std::abs(computed - published);
        r.status = *r.absoluteGap <= tol ? ClaimStatus::Reproduced
                                         : ClaimStatus::RefutedWithDerivation;
        r.note = std::move(note);
        return r;
    };

    report.claims.push_back(
        compare("S(rho)", 1.81128, sRho, 1e-5, "von Neumann entropy of the equal mixture"));
    report.claims.push_back(compare("W_t(rho)", 0.18872, wTotal, 1e-5, "total work, 2 - S(rho)"));

    // projective optimum: exhaustive grid + refinement
    const DeficitResult opt = oneWayDeficitProjective(rho, settings.deficit);
    {
        const double oracleResidual = rho.matrix().maxAbsDiff(wBasisMixture());
        const double crossing = entropyLevelCrossing(rho, 0.0, 1.87852, 0.0, kPi / 4.0);
        std::string note =
            "exhaustive optimizer reaches the dephasing fixed point at theta=" +
            fmt(opt.argmin.theta) + ", phi=" + fmt(opt.argmin.phi) +
            "; product-basis mixture oracle residual " + fmt(oracleResidual) +
            "; the published entropy level 1.87852 is an interior curve point at theta=" +
            fmt(crossing) + " (phi=0), not the optimum";
        ClaimRecord wl = compare("projective-optimal-W_l", 0.12148, opt.localWorkBits, 1e-5, note);
        report.claims.push_back(std::move(wl));
        ClaimRecord delta =
            compare("projective-optimal-delta", 0.06724, opt.deltaBits, 1e-5,
                    "computed projective optimum is zero: rho is classical in the (x+z)/sqrt(2) "
                    "product basis (probabilities 3/8, 1/8, 1/8, 3/8)");
        report.claims.push_back(std::move(delta));
    }

    // four-state POVM, soft target
    {
        const DeficitResult povm = povmDeficit(rho, makeFourStatePOVM());
        const double zBasisWork = localWorkOneWay(rho, basisToPOVM({0.0, 0.0}));
        ClaimRecord r;
        r.claimId = "povm-four-state-W_l";
        r.publishedValue = 0.09215;
        r.computedValue = povm.localWorkBits;
        r.absoluteGap = std::abs(povm.localWorkBits - 0.09215);
        r.status = ClaimStatus::SoftTarget;
        r.note = *r.absoluteGap <= 1e-3
                     ? "pointer accounting agrees with the published value within 1e-3"
                     : "gap exceeds 1e-3; the published ancilla accounting is under-specified. "
                       "The z-basis projective value " +
                           fmt(zBasisWork) + " sits within " + fmt(std::abs(zBasisWork - 0.09215)) +
                           " of the published number";
        report.claims.push_back(std::move(r));
    }

    // separable state with strictly positive deficit
    {
        const DensityOperator werner = catalogState("werner", 1.0 / 3.0);
        const EntanglementReport ent = entanglementReport(werner);
        const double viaOpt = oneWayDeficitProjective(werner, settings.deficit).deltaBits;
        const double viaClosed = bellDiagonalDeficit(werner);
        ClaimRecord r;
        r.claimId = "werner-conjecture";
        r.computedValue = viaOpt;
        const bool separable = ent.separable2x2 && ent.concurrence <= 1e-9;
        const bool agree = std::abs(viaOpt - viaClosed) <= 1e-4;
        r.status = (separable && agree && viaOpt > 1e-3) ? ClaimStatus::Reproduced
                                                         : ClaimStatus::RefutedWithDerivation;
        r.note = "werner(1/3): concurrence " + fmt(ent.concurrence) + ", PPT min eigenvalue " +
                 fmt(ent.pptMinEigenvalue) + ", closed-form deficit " + fmt(viaClosed) +
                 "; a separable state with nonzero deficit";
        report.claims.push_back(std::move(r));
    }

    // local-unitary invariance of the optimum
    {
        const double worst = localUnitaryInvarianceCheck(rho, settings.invarianceTrials,
                                                         settings.seed, settings.deficit);
        ClaimRecord r;
        r.claimId = "local-unitary-invariance";
        r.computedValue = worst;
        r.status = worst <= 1e-4 ? ClaimStatus::Reproduced : ClaimStatus::RefutedWithDerivation;
        r.note = "max |delta(U_A x U_B rho) - delta(rho)| over " +
                 std::to_string(settings.invarianceTrials) + " Haar trials, seed " +
                 std::to_string(settings.seed);
        report.claims.push_back(std::move(r));
    }

    return report;
}

std::string reportToJson(const AdjudicationReport& report) {
    nlohmann::json doc;
    doc["environment"] = {{"version", report.version},
                          {"seed", report.seed},
                          {"grid", {report.gridTheta, report.gridPhi}},
                          {"refine_tol", report.refineTol},
                          {"units", "bits"}};
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : report.claims) {
        nlohmann::json j;
        j["claim"] = c.claimId;
        if (c.publishedValue) j["published_value"] = *c.publishedValue;
        j["computed_value"] = c.computedValue;
        if (c.absoluteGap) j["absolute_gap"] = *c.absoluteGap;
        j["status"] = statusName(c.status);
        j["note"] = c.note;
        claims.push_back(std::move(j));
    }
    doc["claims"] = std::move(claims);
    return doc.dump(2) + "\n";
}

std::string reportToTable(const AdjudicationReport& report) {
    std::ostringstream out;
    out << "adjudication report (all values in bits)\n";
    out << "version " << report.version << ", seed " << report.seed << ", grid "
        << report.gridTheta << "x" << report.gridPhi << ", refine tol " << fmt(report.refineTol)
        << "\n\n";
    for (const auto& c : report.claims) {
        out << c.claimId << "\n";
        if (c.publishedValue) out << "  published: " << fmt(*c.publishedValue) << "\n";
        out << "  computed:  " << fmt(c.computedValue) << "\n";
        if (c.absoluteGap) out << "  gap:       " << fmt(*c.absoluteGap) << "\n";
        out << "  status:    " << statusName(c.status) << "\n";
        if (!c.note.empty()) out << "  note:      " << c.note << "\n";
        out << "\n";
    }
    return out.str();
}

} // namespace deficitlab
