#pragma once

#include "qpov/quadrature.hpp"
#include "qpov/validation.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qpov {

enum class Family {
    Power,
    Exponential,
    ParetoI,
    Dagum,
    Govindarajulu,
    Kappa,
    GldRs,
    GldFmkl,
    Wakeby,
    BetaQDensity,
    LogLinear,
    LorenzDerived,
    TabulatedQ,
};

// Parametric Lorenz curves whose derivative yields a quantile function.
enum class LorenzKind { Kakwani73, Kakwani80, Chotikapanich, Aggarwal, Gupta, Ortega, Rohde };

using Params = std::map<std::string, double>;

struct UDomain {
    double lo = 0.0;
    double hi = 1.0;
};

// Integrands of partial_moment: Q, p*Q, Q^2, log Q, p*q, p^2*q.
enum class MomentKind { Q, pQ, Qsq, logQ, pq, p2q };

enum class MomentMethod { Auto, ClosedForm, Quadrature };

// Known mass int Q dp lying left of u_lo / right of u_hi. Tabulated models
// produced by inversion carry these so their mean is exact.
struct TailMasses {
    std::optional<double> lower;
    std::optional<double> upper;
};

namespace detail {
class ModelImpl;
}

// An income distribution given by its quantile function Q(u) on u_domain.
// Immutable; copies share the implementation.
class QuantileModel {
public:
    // Builds the model and validates it; throws ValidationError with the full
    // report when any invariant fails.
    static QuantileModel create(Family family, Params params,
                                std::optional<UDomain> domain = std::nullopt);

    // Builds the model without invariant checks (parameters must still be
    // present and finite). Use validate() to inspect it.
    static QuantileModel unchecked(Family family, Params params,
                                   std::optional<UDomain> domain = std::nullopt);

    static QuantileModel lorenz_derived(LorenzKind kind, Params params);

    static QuantileModel tabulated(std::vector<double> u, std::vector<double> q_values,
                                   TailMasses tails = {});

    Family family() const { return family_; }
    std::optional<LorenzKind> lorenz_kind() const { return lorenz_kind_; }
    const Params& params() const { return params_; }
    UDomain domain() const { return domain_; }
    std::string family_name() const;
    std::string describe() const;

    // Q(u), q(u) with u and its complement 1 - u supplied separately.
    double quantile(double u, double ubar) const;
    double density(double u, double ubar) const;

    // Q at the domain ends; may be -inf / +inf.
    double lower_value() const;
    double upper_value() const;

    bool has_finite_mean() const;
    std::optional<double> closed_moment(MomentKind kind, double a, double b) const;
    TailMasses tail_masses() const;

    // Tabulated knots (empty for parametric families).
    std::vector<double> table_u() const;
    std::vector<double> table_q() const;

    // Same family with Q replaced by c * Q, c > 0.
    QuantileModel scaled(double c) const;

    ValidationReport family_checks() const;

private:
    QuantileModel() = default;

    Family family_ = Family::Power;
    std::optional<LorenzKind> lorenz_kind_;
    Params params_;
    UDomain domain_;
    std::shared_ptr<const detail::ModelImpl> impl_;
};

// Q(u) for u in the domain; throws DomainError outside it or when Q(u) is infinite.
double eval_Q(const QuantileModel& model, double u);

// q(u) = dQ/du for u in the interior of the domain.
double eval_q(const QuantileModel& model, double u);

// int_a^b of the chosen integrand; closed form when available (Auto), else
// adaptive quadrature with absolute error <= tol.
double partial_moment(const QuantileModel& model, MomentKind kind, double a, double b,
                      double tol = 1e-10, MomentMethod method = MomentMethod::Auto);

// Same with explicit quadrature options (used where relative accuracy matters).
double partial_moment(const QuantileModel& model, MomentKind kind, double a, double b,
                      const QuadratureOptions& opts, MomentMethod method = MomentMethod::Auto);

// F(x): the u with Q(u) = x, by bisection to relative tolerance 1e-12 in u.
double u_from_income(const QuantileModel& model, double x);

// Non-negativity, monotonicity on a 1024-point grid, and domain checks.
ValidationReport validate(const QuantileModel& model);

std::string to_string(Family family);
std::string to_string(LorenzKind kind);
std::optional<Family> family_from_string(const std::string& name);
std::optional<LorenzKind> lorenz_kind_from_string(const std::string& name);

std::string to_string(MomentKind kind);

} // namespace qpov
