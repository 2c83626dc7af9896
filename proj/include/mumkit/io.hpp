#pragma once

#include <string>

#include <json.hpp>

#include "mumkit/mum.hpp"
#include "mumkit/witness.hpp"

namespace mumkit {

// Field order is fixed so that identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const CMatrix& m);
/// Real matrices (rotations, circulants) share the complex entry format.
Json matrix_to_json(const RMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

/// Families serialize as spectrum plus unitaries; the POVM elements are
/// reconstructed on load.
Json family_to_json(const MumFamily& f);
MumFamily family_from_json(const Json& j);

Json witness_result_to_json(const WitnessResult& r);

Json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace mumkit
