#pragma once

#include "qpov/quantile_model.hpp"

#include <string>

namespace qpov {

// {"family": ..., "params": {...}, "u_domain": [lo, hi]}. Lorenz-derived
// models use family "lorenz:<kind>"; tabulated models add
// "table": {"u": [...], "q": [...]} and optional "lower_tail"/"upper_tail".
std::string model_to_json(const QuantileModel& model);

// Parses and validates; malformed documents raise ValidationError.
QuantileModel model_from_json(const std::string& text, const std::string& source = "model");

// Throws IoError when the file cannot be read.
QuantileModel read_model_file(const std::string& path);

} // namespace qpov
