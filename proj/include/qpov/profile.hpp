#pragma once

#include "qpov/measures.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qpov {

// All measures of one model on a grid of head-count levels. A cell whose
// evaluation failed holds nullopt and prints as "nan".
struct PovertyProfile {
    std::string model;
    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
    std::optional<double> mean;
    std::optional<double> gini;
    std::vector<std::string> cell_errors; // "u=<u> <column>: <message>"
};

// Rows come out in ascending u whatever the order of `u_grid`.
PovertyProfile profile(const QuantileModel& model, std::vector<double> u_grid,
                       const std::vector<double>& alphas, const std::vector<double>& betas,
                       const MeasureOptions& opts = {});

void write_profile_csv(const PovertyProfile& profile, std::ostream& out);

} // namespace qpov
