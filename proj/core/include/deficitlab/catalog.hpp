#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deficitlab/density.hpp"

namespace deficitlab {

/// States that appear in the workbench by name.
///
/// Names and parameters:
///   rhoZero                 (1/2)P[|0+>] + (1/2)P[|+0>]
///   rhoOne                  (1/2)P[|11>] + (1/2)P[|-->]
///   rhoMix      lambda      lambda*rhoZero + (1-lambda)*rhoOne
///   bell        k in 0..3   Phi+, Phi-, Psi+, Psi-
///   werner      p           p*P[Phi+] + (1-p)*I/4
///   schmidtPure a in (0,1)  P[a|00> + sqrt(1-a^2)|11>]
///   mes3x3      k in 1..3   the three maximally entangled 3x3 states
DensityOperator catalogState(const std::string& name, std::optional<double> param = std::nullopt);

/// {psi1, psi2, P[|01>]}: the locally indistinguishable set obtained by
/// swapping the third maximally entangled state for a product state.
std::vector<DensityOperator> mes3x3SwappedSet();

struct CatalogEntry {
    std::string name;
    bool takesParam;
    std::string description;
};

const std::vector<CatalogEntry>& catalogEntries();

/// Parses "name" or "name:param" into a catalog state.
DensityOperator catalogStateFromSpec(const std::string& spec);

} // namespace deficitlab
