#ifndef DMORSE_FIELD_IO_HPP
#define DMORSE_FIELD_IO_HPP

#include <json.hpp>

#include "dmorse/forman.hpp"

namespace dmorse {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

/// JSON array of {"tail", "head", "stage"} objects in graph text format,
/// sorted by (stage, tail). Arrows without a stage get "stage": null.
nlohmann::json field_to_json(const NComplex& k, const DiscreteVectorField& v);

/// Inverse of field_to_json. Graphs that are not simplices of k (connected
/// graphs) are kept as ids past the end of the complex, so that
/// validate_matching reports them. Throws GraphError on malformed text or a
/// graph of another order.
DiscreteVectorField field_from_json(const NComplex& k, const nlohmann::json& doc);

}  // namespace dmorse

#endif  // DMORSE_FIELD_IO_HPP
