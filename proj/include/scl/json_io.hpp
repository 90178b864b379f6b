#pragma once

#include <optional>

#include "json.hpp"
#include "scl/rational.hpp"
#include "scl/scl.hpp"
#include "scl/surface.hpp"

namespace scl {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json result_to_json(const SclResult& result);
Json surface_to_json(const SurfaceDescription& surface);

// Reads the stated scl from a result document and recomputes
// |w|/4 - (sum of weights)/(2n) from the embedded certificate. Returns nullopt
// for an infinite result. Throws InvariantViolation when the two disagree and
// InputError for a malformed document.
std::optional<BigRational> certified_scl_from_json(const Json& doc);

}  // namespace scl
