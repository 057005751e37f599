#pragma once

#include "qpov/quantile_model.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qpov::detail {

class ModelImpl {
public:
    virtual ~ModelImpl() = default;

    virtual double quantile(double u, double ubar) const = 0;
    virtual double density(double u, double ubar) const = 0;

    // int_a^b of the moment integrand when the family has an antiderivative.
    virtual std::optional<double> moment(MomentKind, double, double) const {
        return std::nullopt;
    }

    virtual bool finite_mean() const { return true; }

    // Family-specific parameter conditions.
    virtual void check(ValidationReport&) const {}

    virtual TailMasses tails() const { return {}; }
    virtual std::vector<double> knots_u() const { return {}; }
    virtual std::vector<double> knots_q() const { return {}; }
};

std::shared_ptr<const ModelImpl> make_parametric(Family family, const Params& params,
                                                 const UDomain& domain);
std::shared_ptr<const ModelImpl> make_lorenz(LorenzKind kind, const Params& params);
std::shared_ptr<const ModelImpl> make_tabulated(std::vector<double> u, std::vector<double> q,
                                                TailMasses tails);

// Parameter names accepted by each family, in canonical order.
std::vector<std::string> parameter_names(Family family);
std::vector<std::string> parameter_names(LorenzKind kind);

// Fetches a required parameter; throws ValidationError if absent or not finite.
double require(const Params& params, const std::string& name);

// log u computed from whichever of u, 1 - u is exact.
inline double log_u(double u, double ubar) { return u < 0.5 ? std::log(u) : std::log1p(-ubar); }
inline double log_ubar(double u, double ubar) {
    return u > 0.5 ? std::log(ubar) : std::log1p(-u);
}

// int_a^b p^c dp, a >= 0. Infinite when a = 0 and c <= -1.
double pow_integral(double a, double b, double c);

// int_a^b (1 - p)^c dp.
inline double comp_integral(double a, double b, double c) {
    return pow_integral(1.0 - b, 1.0 - a, c);
}

// int_a^b p (1 - p)^c dp.
inline double comp_p_integral(double a, double b, double c) {
    double sa = 1.0 - b;
    double sb = 1.0 - a;
    return pow_integral(sa, sb, c) - pow_integral(sa, sb, c + 1.0);
}

} // namespace qpov::detail
