#include "deficitlab/statefile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace deficitlab {

namespace {
using nlohmann::json;

json requireField(const json& doc, const char* field) {
    if (!doc.contains(field))
        throw ValidationError(std::string("state file: missing field '") + field + "'");
    return doc.at(field);
}
} // namespace

NamedDensity parseStateFile(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("state file: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("state file: top level must be an object");

    const json dims = requireField(doc, "dims");
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_unsigned() ||
        !dims[1].is_number_unsigned())
        throw ValidationError("state file: 'dims' must be [dA, dB] with positive integers");
    const std::size_t dA = dims[0].get<std::size_t>();
    const std::size_t dB = dims[1].get<std::size_t>();

    const json rows = requireField(doc, "matrix");
    if (!rows.is_array() || rows.size() != dA * dB)
        throw ValidationError("state file: 'matrix' must have dA*dB rows");
    ComplexMatrix m(dA * dB, dA * dB);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != dA * dB)
            throw ValidationError("state file: matrix row " + std::to_string(i) +
                                  " must have dA*dB entries");
        for (std::size_t j = 0; j < row.size(); ++j) {
            const json& e = row[j];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ValidationError("state file: entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") must be a [re, im] pair");
            m(i, j) = Complex{e[0].get<double>(), e[1].get<double>()};
        }
    }

    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ValidationError("state file: 'name' must be a string");
        name = doc["name"].get<std::string>();
    }
    return {name, DensityOperator::make(m, dA, dB)};
}

NamedDensity loadStateFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("state file: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseStateFile(buf.str());
}

std::string serializeState(const DensityOperator& rho, const std::string& name) {
    json doc;
    if (!name.empty()) doc["name"] = name;
    doc["dims"] = {rho.dimA(), rho.dimB()};
    json rows = json::array();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            const Complex e = rho.matrix()(i, j);
            row.push_back({e.real(), e.imag()});
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc.dump(2) + "\n";
}

} // namespace deficitlab
