#pragma once

#include "qpov/curve.hpp"
#include "qpov/quantile_model.hpp"
#include "qpov/validation.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qpov {

// Two equivalent routes from a PGR curve to Q:
//   Integral       Q = exp(-int_u^1 dp / (p - A1)) / (u - A1)
//   LogDerivative  Q = exp(-int_u^1 A1' / (p - A1) dp) / (1 - A1(1))
enum class PgrFormula { Integral, LogDerivative };

struct InversionOptions {
    // Tail integrals stop at 1 - tail_eps and are extrapolated to 1 from the
    // values at tail_eps and 2 tail_eps.
    double tail_eps = 1e-6;
    QuadratureOptions quad = {1e-14, 1e-12, 20000};
};

// Every reconstruction returns a TabulatedQ on `eval_grid`, which must be
// strictly increasing and inside [u_1, u_n] of the curve. The curve is
// interpolated by a monotone cubic, which also supplies its derivative.
// Throws InvalidCurveError when the curve fails its checks.

// Unit-mean Q (int_0^1 Q = 1); rescale by the known mean.
QuantileModel q_from_pgr(const CurveSamples& curve, const std::vector<double>& eval_grid,
                         PgrFormula formula = PgrFormula::Integral,
                         const InversionOptions& opts = {});

// Q(u) = exp(-int_u^1 W'(p) / p dp), normalized so that Q(1) = 1.
QuantileModel q_from_watts(const CurveSamples& curve, const std::vector<double>& eval_grid,
                           const InversionOptions& opts = {});

// Q = B exp(-int_u^1 B) with B = (1 + G + u G') / (u (1 - G)); unit mean.
QuantileModel q_from_gini_poor(const CurveSamples& curve, const std::vector<double>& eval_grid,
                               const InversionOptions& opts = {});

// Q = (mu / D) exp(-int_u^1 dp / D); mean mu.
QuantileModel q_from_D(const CurveSamples& curve, double mu, const std::vector<double>& eval_grid,
                       const InversionOptions& opts = {});

// Quantile-domain conditions for a PGR curve: 0 <= A1, u - A1 > 0, A1
// non-decreasing and free of jumps.
ValidationReport pgr_validity(const CurveSamples& curve);

// Income-scale conditions for A1(t) sampled at increasing incomes t: t A1(t)
// convex, d/dt [t A1(t)] >= 0 at the low end and within `top_tol` of 1 at the
// high end.
ValidationReport pgr_validity_income(const std::vector<double>& t, const std::vector<double>& a1,
                                     double top_tol = 0.05);
ValidationReport pgr_validity_income(const std::function<double(double)>& a1,
                                     const std::vector<double>& t, double top_tol = 0.05);

struct SenCharacterization {
    bool is_proportional = false;
    double K = 0.0;        // least-squares slope of S(u) = K u
    double residual = 0.0; // max |S - K u|
    std::optional<double> beta; // power parameter with (3b+1)/((b+1)(2b+1)) = K
    bool degenerate = false;    // K = 0
    bool no_solution = false;   // K outside (0, 1)
};

SenCharacterization sen_power_characterization(const CurveSamples& sen_curve, double tol = 1e-6);

// Solves (3b+1)/((b+1)(2b+1)) = K for b > 0; nullopt unless 0 < K < 1.
std::optional<double> power_beta_from_sen_slope(double K);

} // namespace qpov
