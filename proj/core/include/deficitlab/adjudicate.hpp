#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deficitlab/deficit.hpp"

namespace deficitlab {

enum class ClaimStatus { Reproduced, RefutedWithDerivation, SoftTarget };

std::string statusName(ClaimStatus s);

struct ClaimRecord {
    std::string claimId;
    std::optional<double> publishedValue;
    double computedValue = 0.0;
    std::optional<double> absoluteGap;  // vs publishedValue when present
    ClaimStatus status = ClaimStatus::Reproduced;
    std::string note;
};

struct ReproduceSettings {
    DeficitSettings deficit;
    std::uint64_t seed = 20020815;
    std::size_t invarianceTrials = 20;
};

/// Computed-vs-published comparison for every numeric claim about the
/// reference state, plus the supporting invariance and separability
/// checks. Deterministic for fixed settings.
struct AdjudicationReport {
    std::vector<ClaimRecord> claims;
    std::string version;
    std::uint64_t seed;
    std::size_t gridTheta;
    std::size_t gridPhi;
    double refineTol;
};

AdjudicationReport runReproduce(const ReproduceSettings& settings = {});

std::string reportToJson(const AdjudicationReport& report);
std::string reportToTable(const AdjudicationReport& report);

} // namespace deficitlab
