#include "qpov/format.hpp"

#include "qpov/error.hpp"

#include <charconv>
#include <cmath>

namespace qpov {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string& text, const std::string& what) {
    std::size_t start = text.find_first_not_of(" \t\r");
    std::size_t end = text.find_last_not_of(" \t\r");
    if (start == std::string::npos) throw ValidationError(what + ": empty number");
    const char* first = text.data() + start;
    const char* last = text.data() + end + 1;
    if (*first == '+') ++first;
    double v = 0.0;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw ValidationError(what + ": cannot parse '" + text + "' as a number");
    return v;
}

} // namespace qpov
