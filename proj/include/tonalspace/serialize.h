// JSON encodings shared by the CLI and the report writer.

#pragma once

#include <string>

#include "json.hpp"
#include "tonalspace/descriptors.h"
#include "tonalspace/key.h"
#include "tonalspace/tiv.h"

namespace tonalspace {

using Json = nlohmann::ordered_json;

/// {"coeffs": [[re, im] x 6], "energy": number}
Json to_json(const Tiv& t);
/// Inverse of to_json(Tiv); weights are not part of the encoding.
Tiv tiv_from_json(const Json& j, const WeightVector& weights = WeightVector());

/// {"lambda": [...], "peaks": [...]}
Json to_json(const HarmonicChangeSeries& series);

/// {"index", "tonic", "mode", "label"}
Json to_json(const KeyResult& key);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

}  // namespace tonalspace
