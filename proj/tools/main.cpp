// deficitlab: one-way work deficit workbench for small bipartite states.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deficitlab/adjudicate.hpp"
#include "deficitlab/catalog.hpp"
#include "deficitlab/deficit.hpp"
#include "deficitlab/statefile.hpp"

using namespace deficitlab;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// "catalog:name[:param]" or a path to a JSON state file
NamedDensity resolveState(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) {
        const std::string spec = arg.substr(8);
        return {spec, catalogStateFromSpec(spec)};
    }
    return loadStateFile(arg);
}

void parseGrid(const std::string& text, DeficitSettings& s) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw UsageError("--grid: expected \"TxP\", e.g. 64x128");
    try {
        s.nTheta = std::stoul(text.substr(0, x));
        s.nPhi = std::stoul(text.substr(x + 1));
    } catch (const std::exception&) {
        throw UsageError("--grid: cannot parse \"" + text + "\"");
    }
    if (s.nTheta < 16 || s.nPhi < 32) throw UsageError("--grid: minimum grid is 16x32");
}

void printStateSummary(const std::string& name, const DensityOperator& rho) {
    std::cout << "state: " << (name.empty() ? "(unnamed)" : name) << "\n";
    std::cout << "dims: " << rho.dimA() << " x " << rho.dimB() << "\n";
    std::cout << "S(rho) = " << fmt(vonNeumannEntropy(rho)) << " bits\n";
    std::cout << "matrix:\n";
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            const Complex e = rho.matrix()(i, j);
            std::printf("  %+.6f%+.6fi", e.real(), e.imag());
        }
        std::printf("\n");
    }
}

void printDeficitResult(const DeficitResult& r, bool json) {
    if (json) {
        nlohmann::json doc;
        doc["units"] = "bits";
        doc["delta"] = r.deltaBits;
        doc["local_work"] = r.localWorkBits;
        doc["total_work"] = r.totalWorkBits;
        doc["entropy_after"] = r.entropyAfter;
        doc["argmin"] = {{"theta", r.argmin.theta}, {"phi", r.argmin.phi}};
        doc["optimizer"] = {{"evaluations", r.trace.evaluations},
                            {"final_step", r.trace.finalStep},
                            {"converged", r.trace.converged}};
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "quantity        value (bits)\n";
    std::cout << "delta           " << fmt(r.deltaBits) << "\n";
    std::cout << "local_work      " << fmt(r.localWorkBits) << "\n";
    std::cout << "total_work      " << fmt(r.totalWorkBits) << "\n";
    std::cout << "entropy_after   " << fmt(r.entropyAfter) << "\n";
    std::cout << "argmin          theta = " << fmt(r.argmin.theta)
              << ", phi = " << fmt(r.argmin.phi) << "\n";
    std::cout << "optimizer       " << r.trace.evaluations << " evaluations, "
              << (r.trace.converged ? "converged" : "not converged") << "\n";
}

// "name" or "name:p1,p2,..."
std::vector<NamedState> parseFamily(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<NamedState> out;
    if (colon == std::string::npos) {
        out.push_back({name, catalogState(name)});
        return out;
    }
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        try {
            std::size_t used = 0;
            const double p = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back({name + ":" + tok, catalogState(name, p)});
        } catch (const std::invalid_argument&) {
            throw UsageError("family spec: cannot parse parameter '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"one-way work deficit workbench for small bipartite quantum states"};
    app.require_subcommand(1);

    // catalog
    auto* catalog = app.add_subcommand("catalog", "list or show the built-in states");
    auto* catalogList = catalog->add_subcommand("list", "list catalog state names");
    auto* catalogShow = catalog->add_subcommand("show", "print a catalog state");
    std::string showSpec;
    catalogShow->add_option("name", showSpec, "state name, optionally \"name:param\"")->required();
    catalog->require_subcommand(1);

    // deficit
    auto* deficit = app.add_subcommand("deficit", "optimized projective one-way deficit");
    std::string deficitState, gridText;
    double refineTol = 1e-10;
    bool deficitJson = false;
    deficit->add_option("state", deficitState, "state file path or catalog:name[:param]")
        ->required();
    deficit->add_option("--grid", gridText, "theta x phi grid, e.g. 64x128");
    deficit->add_option("--tol", refineTol, "refinement tolerance")->check(CLI::PositiveNumber);
    deficit->add_flag("--json", deficitJson, "emit JSON");

    // scan-basis
    auto* scan = app.add_subcommand("scan-basis", "CSV sweep of theta at fixed phi");
    std::string scanState;
    double scanPhi = 0.0;
    std::size_t scanSteps = 65;
    scan->add_option("state", scanState)->required();
    scan->add_option("--phi", scanPhi, "azimuthal angle (radians)");
    scan->add_option("--steps", scanSteps, "number of theta samples")->check(CLI::Range(2, 100000));

    // povm
    auto* povm = app.add_subcommand("povm", "deficit of a fixed POVM instrument");
    std::string povmState;
    bool fourState = false, povmJson = false;
    povm->add_option("state", povmState)->required();
    povm->add_flag("--four-state", fourState, "the |0>,|1>,|+>,|-> half-weight POVM");
    povm->add_flag("--json", povmJson, "emit JSON");

    // ordering
    auto* ordering = app.add_subcommand("ordering", "CSV ordering scan across two state families");
    std::string familyA, familyB, mixKind = "vn", orderingGrid;
    ordering->add_option("--family-a", familyA, "catalog family, e.g. schmidtPure:0.1,0.5")
        ->required();
    ordering->add_option("--family-b", familyB, "catalog family, e.g. werner:0.333333")
        ->required();
    ordering->add_option("--mixedness", mixKind, "vn | linear")
        ->check(CLI::IsMember({"vn", "linear"}));
    ordering->add_option("--grid", orderingGrid, "theta x phi grid");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "adjudicate the published numeric claims");
    bool reproduceJson = false;
    std::string reproduceGrid;
    std::uint64_t seed = 20020815;
    reproduce->add_flag("--json", reproduceJson, "emit JSON");
    reproduce->add_option("--grid", reproduceGrid, "theta x phi grid");
    reproduce->add_option("--seed", seed, "64-bit seed for the invariance trials");

    // invariance
    auto* invariance = app.add_subcommand("invariance", "local-unitary invariance of the deficit");
    std::string invState, invGrid;
    std::size_t trials = 20;
    std::uint64_t invSeed = 20020815;
    invariance->add_option("state", invState)->required();
    invariance->add_option("--trials", trials)->check(CLI::Range(1, 100000));
    invariance->add_option("--seed", invSeed, "64-bit seed");
    invariance->add_option("--grid", invGrid, "theta x phi grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (catalogList->parsed()) {
        std::cout << "name              param  description\n";
        for (const auto& e : catalogEntries())
            std::printf("%-17s %-6s %s\n", e.name.c_str(), e.takesParam ? "yes" : "no",
                        e.description.c_str());
        return 0;
    }
    if (catalogShow->parsed()) {
        if (showSpec == "mes3x3SwappedSet") {
            const auto set = mes3x3SwappedSet();
            const char* names[] = {"psi1", "psi2", "P[|01>]"};
            for (std::size_t k = 0; k < set.size(); ++k) printStateSummary(names[k], set[k]);
            return 0;
        }
        printStateSummary(showSpec, catalogStateFromSpec(showSpec));
        return 0;
    }
    if (deficit->parsed()) {
        DeficitSettings s;
        if (!gridText.empty()) parseGrid(gridText, s);
        s.refineTol = refineTol;
        const NamedDensity nd = resolveState(deficitState);
        printDeficitResult(oneWayDeficitProjective(nd.state, s), deficitJson);
        return 0;
    }
    if (scan->parsed()) {
        const NamedDensity nd = resolveState(scanState);
        std::cout << "theta,phi,entropy_after,local_work,delta\n";
        for (const auto& p : deficitCurve(nd.state, scanPhi, scanSteps))
            std::cout << fmt(p.theta) << "," << fmt(scanPhi) << "," << fmt(p.entropyAfter) << ","
                      << fmt(p.localWork) << "," << fmt(p.delta) << "\n";
        return 0;
    }
    if (povm->parsed()) {
        if (!fourState) throw UsageError("povm: specify an instrument (--four-state)");
        const NamedDensity nd = resolveState(povmState);
        printDeficitResult(povmDeficit(nd.state, makeFourStatePOVM()), povmJson);
        return 0;
    }
    if (ordering->parsed()) {
        DeficitSettings s;
        if (!orderingGrid.empty()) parseGrid(orderingGrid, s);
        const MixednessKind kind =
            mixKind == "vn" ? MixednessKind::VonNeumann : MixednessKind::Linear;
        const auto records = orderingScan(parseFamily(familyA), parseFamily(familyB), kind, s);
        std::cout << "state_a,state_b,e_a,e_b,delta_a,delta_b,mixedness_a,mixedness_b,flags\n";
        for (const auto& r : records) {
            std::string flags;
            for (const auto f : r.anomalies) {
                if (!flags.empty()) flags += ";";
                switch (f) {
                    case OrderingAnomaly::EOrderVsDeltaOrderReversed:
                        flags += "E-order-vs-delta-order-reversed";
                        break;
                    case OrderingAnomaly::DeltaOrderVsMixednessOrderReversed:
                        flags += "delta-order-vs-mixedness-order-reversed";
                        break;
                    case OrderingAnomaly::EEqualDeltaDiffers:
                        flags += "E-equal-delta-differs";
                        break;
                }
            }
            std::cout << r.stateA << "," << r.stateB << "," << fmt(r.eA) << "," << fmt(r.eB) << ","
                      << fmt(r.dA) << "," << fmt(r.dB) << "," << fmt(r.sA) << "," << fmt(r.sB)
                      << "," << flags << "\n";
        }
        return 0;
    }
    if (reproduce->parsed()) {
        ReproduceSettings s;
        if (!reproduceGrid.empty()) parseGrid(reproduceGrid, s.deficit);
        s.seed = seed;
        const AdjudicationReport rep = runReproduce(s);
        std::cout << (reproduceJson ? reportToJson(rep) : reportToTable(rep));
        return 0;
    }
    if (invariance->parsed()) {
        DeficitSettings s;
        if (!invGrid.empty()) parseGrid(invGrid, s);
        const NamedDensity nd = resolveState(invState);
        const double worst = localUnitaryInvarianceCheck(nd.state, trials, invSeed, s);
        std::cout << "max |delta deviation| over " << trials << " trials (bits): " << fmt(worst)
                  << "\n";
        return 0;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
