#pragma once

#include "qpov/quantile_model.hpp"
#include "qpov/validation.hpp"

namespace qpov {

// Parametric Lorenz curve with the mean income that fixes the scale.
// Parameter names: kakwani73, kakwani80 "delta"; chotikapanich "k";
// aggarwal, ortega "theta"; gupta "T"; rohde "beta".
struct LorenzFamily {
    LorenzKind kind = LorenzKind::Rohde;
    Params params;
    double mu = 1.0;
};

double lorenz_curve(const LorenzFamily& lf, double u);

// Poverty gap ratio implied by the curve, u - L(u)/L'(u).
double lorenz_pgr(const LorenzFamily& lf, double u);

// Parameter ranges, L(0) = 0, L(1) = 1 and convexity on a grid.
ValidationReport validate(const LorenzFamily& lf);

// LorenzDerived model with Q(u) = mu L'(u). Throws ValidationError when the
// family is invalid.
QuantileModel lorenz_to_quantile(const LorenzFamily& lf);

} // namespace qpov
