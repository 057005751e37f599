#pragma once

#include "qpov/validation.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qpov {

enum class CurveKind { PGR, Watts, GiniPoor, Dfunc, Q };

std::string to_string(CurveKind kind);
std::optional<CurveKind> curve_kind_from_string(const std::string& name);

// A measure curve sampled at strictly increasing u in (0, 1).
struct CurveSamples {
    std::vector<double> u;
    std::vector<double> value;
    CurveKind kind = CurveKind::PGR;
};

// Grid shape plus the kind-specific value ranges: PGR 0 <= value < u,
// GiniPoor in [0, 1), Dfunc in (0, u], Watts >= 0 and non-decreasing.
ValidationReport validate(const CurveSamples& curve);

CurveSamples sample_curve(const std::function<double(double)>& f, const std::vector<double>& u,
                          CurveKind kind);

// n points (i - 1/2)/n, i = 1..n.
std::vector<double> midpoint_grid(int n);

// Reads `u,value` CSV (rows sorted by the caller's file).
CurveSamples read_curve_csv(std::istream& in, CurveKind kind, const std::string& source);
void write_curve_csv(const CurveSamples& curve, std::ostream& out);

} // namespace qpov
