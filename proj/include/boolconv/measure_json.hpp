#ifndef BOOLCONV_MEASURE_JSON_HPP
#define BOOLCONV_MEASURE_JSON_HPP

#include <string>

#include <json.hpp>

#include "boolconv/measure.hpp"

namespace boolconv {

/// {"atoms":[{"x":..., "w":...}, ...]}; atoms may arrive unsorted and are
/// validated exactly like any other constructed measure.
AtomicMeasure measure_from_json(const nlohmann::json& j);

nlohmann::ordered_json measure_to_json(const AtomicMeasure& mu);

/// Reads and validates a measure file. Throws InvalidMeasure on I/O,
/// parse or schema problems.
AtomicMeasure load_measure_file(const std::string& path);

}  // namespace boolconv

#endif
