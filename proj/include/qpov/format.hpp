#pragma once

#include <string>

namespace qpov {

// Locale-independent decimal with 12 significant digits; non-finite values
// print as "nan", "inf" or "-inf".
std::string format_number(double value);

// Parses a full decimal string; throws ValidationError naming `what` otherwise.
double parse_number(const std::string& text, const std::string& what);

} // namespace qpov
