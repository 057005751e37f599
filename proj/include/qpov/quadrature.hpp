#pragma once

#include <functional>

namespace qpov {

struct QuadratureOptions {
    // Converged when the summed error estimate is at most
    // max(abs_tol, rel_tol * integral of |f|).
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_intervals = 10000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;      // integral of |f|
    int intervals = 0;
    int evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (G10/K21) quadrature. The interval with the
// largest error estimate is bisected until the tolerance is met. The rule never
// samples the endpoints, so integrable endpoint singularities are fine.
//
// Throws NumericalError (carrying the achieved error estimate) when the budget
// of subintervals is exhausted, or when f returns a non-finite value.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

// Integrates g(p, 1 - p) over [a, b] subset of [0, 1]. The right half of the
// unit interval is integrated in the complement variable s = 1 - p, so g
// receives an exact small complement near p = 1 and singularities such as
// (1 - p)^(-c) are resolved to full relative precision.
QuadratureResult integrate_unit(const std::function<double(double, double)>& g, double a,
                                double b, const QuadratureOptions& opts = {});

} // namespace qpov
