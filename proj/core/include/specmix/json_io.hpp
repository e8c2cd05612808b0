#pragma once

#include <string>

#include <json.hpp>

#include "specmix/detailed_balance.hpp"
#include "specmix/map_matrix.hpp"
#include "specmix/spectral.hpp"

namespace specmix {

using Json = nlohmann::ordered_json;

// Map file format:
//   {"dim": D, "kind": "...", "entries": [[[re,im],...],...]}
// stochastic shorthand: entries may be plain reals. Kraus input:
//   {"base_dim": d, "kraus": [matrix, ...]}
// is converted to the natural representation on load.
Json map_to_json(const TransitionMap& T);
TransitionMap map_from_json(const Json& j);

TransitionMap load_map(const std::string& path);
void save_map(const TransitionMap& T, const std::string& path);

Json cert_to_json(const DetailedBalanceCert& cert);
DetailedBalanceCert cert_from_json(const Json& j);
DetailedBalanceCert load_cert(const std::string& path);
void save_cert(const DetailedBalanceCert& cert, const std::string& path);

// spectrum.json schema
Json spectral_to_json(const SpectralData& spec);
Json blaschke_to_json(const BlaschkeData& B);

Json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const Json& j);

}  // namespace specmix
