#pragma once

#include <string>
#include <vector>

namespace qpov {

// List of violated invariants; an empty report means the input is valid.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string message) { violations.push_back(std::move(message)); }
    std::string to_string() const;
};

} // namespace qpov
