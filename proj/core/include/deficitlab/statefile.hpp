#pragma once

#include <string>

#include "deficitlab/density.hpp"

namespace deficitlab {

struct NamedDensity {
    std::string name;  // empty when the file carries none
    DensityOperator state;
};

/// Parses the JSON state-file format:
///   { "name": "...",               (optional)
///     "dims": [dA, dB],
///     "matrix": [ [ [re, im], ... ], ... ] }   (row-major, basis index i_A*dB + j_B)
/// Throws ValidationError with field context on malformed input; matrix
/// validity errors propagate from DensityOperator::make.
NamedDensity parseStateFile(const std::string& text);

NamedDensity loadStateFile(const std::string& path);

/// Serializes a state into the same format; round-trips entrywise.
std::string serializeState(const DensityOperator& rho, const std::string& name = "");

} // namespace deficitlab
