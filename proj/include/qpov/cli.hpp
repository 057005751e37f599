#pragma once

#include "qpov/quantile_model.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace qpov::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 2 validation or domain error, 3 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "start:stop:step" (stop included when it lies within half a step of the
// last point), a comma list, or "" for no points.
std::vector<double> parse_grid(const std::string& spec);

// Comma list of numbers; "" gives an empty list.
std::vector<double> parse_list(const std::string& spec, const std::string& what);

// "name=value,name=value".
Params parse_params(const std::string& spec);

} // namespace qpov::cli
