#pragma once

#include "qpov/quantile_model.hpp"

#include <functional>

namespace qpov {

// Numerical settings shared by every measure. The default tolerance is
// relative so that measures stay accurate at small u and under rescaling.
struct MeasureOptions {
    MomentMethod method = MomentMethod::Auto;
    QuadratureOptions quad = {0.0, 1e-12, 20000};
};

// Accepted order range for the Clark index. Standard is beta <= 1; Extended
// also admits beta > 1, as needed for C_2 = A_1 - A_2 / 2.
enum class ClarkRange { Standard, Extended };

// Deprivation kernel a(x, t) of the additive class int_0^u a(Q(p), Q(u)) dp.
struct MeasureKernel {
    enum class Kind { FGT, Clark, Watts, Custom };
    Kind kind = Kind::FGT;
    double order = 1.0;                              // alpha for FGT, beta for Clark
    std::function<double(double x, double t)> custom; // Kind::Custom only

    static MeasureKernel fgt(double alpha) { return {Kind::FGT, alpha, {}}; }
    static MeasureKernel clark(double beta) { return {Kind::Clark, beta, {}}; }
    static MeasureKernel watts() { return {Kind::Watts, 0.0, {}}; }
    static MeasureKernel from(std::function<double(double, double)> a) {
        return {Kind::Custom, 0.0, std::move(a)};
    }
};

// Rank weight q(F, x; z) of the class int_0^u q(p, Q(p); Q(u)) dp.
struct RankKernel {
    enum class Kind { Sen, Takayama, Kakwani, Thon };
    // Thon's weight reads [c - z F(x)]; the CF variant uses [c - c F(x)].
    enum class ThonForm { ZF, CF };
    Kind kind = Kind::Sen;
    double param = 0.0; // k for Kakwani, c for Thon
    ThonForm thon_form = ThonForm::ZF;

    static RankKernel sen() { return {Kind::Sen, 0.0, ThonForm::ZF}; }
    static RankKernel takayama() { return {Kind::Takayama, 0.0, ThonForm::ZF}; }
    static RankKernel kakwani(double k) { return {Kind::Kakwani, k, ThonForm::ZF}; }
    static RankKernel thon(double c, ThonForm form = ThonForm::ZF) { return {Kind::Thon, c, form}; }
};

// Utility-gap class A_H(u) int_0^u [g(u) - g(p)] dp with g = U(Q(p)).
struct UtilityKernel {
    std::function<double(double)> utility;
    // A_H as a function of u and the poverty line z = Q(u).
    std::function<double(double u, double z)> normalizer = [](double, double) { return 1.0; };

    static UtilityKernel log_utility();
    // U(x) = x with A_H = 1 / Q(u); reproduces the poverty gap ratio.
    static UtilityKernel linear_gap();
};

struct FgtDecomposition {
    double headcount = 0.0;   // H = u
    double igr = 0.0;         // I_Q(u)
    double cv_poor = 0.0;     // Cp, coefficient of variation below Q(u)
    double recomposed = 0.0;  // H [I^2 + (1 - I)^2 Cp^2]
};

struct SenComponents {
    double igr = 0.0;
    double gini_poor = 0.0;
    double composite = 0.0; // u [I + (1 - I) G]
    double single = 0.0;    // u - 2 int Q / Q(u) + 2 int pQ / (u Q(u))
};

// Every function below takes the head-count level u in (0, u_hi] with
// Q(u) > 0; Q(u) = 0 throws DegenerateInputError. Integrals from 0 extend a
// model whose domain starts at u_lo > 0 by its tabulated lower tail mass, or
// by the constant Q(u_lo).

double fgt(const QuantileModel& m, double u, double alpha, const MeasureOptions& o = {});
double pgr(const QuantileModel& m, double u, const MeasureOptions& o = {});
// A_1 from the quantile density: (1/Q(u)) int_0^u p q(p) dp.
double pgr_via_density(const QuantileModel& m, double u, const MeasureOptions& o = {});
double depth(const QuantileModel& m, double u, const MeasureOptions& o = {});
// A_2 built from the A_1 curve: (2/Q(u)^2) int_0^u Q(p) A_1(p) q(p) dp.
double depth_via_pgr(const QuantileModel& m, double u, const MeasureOptions& o = {});
double clark(const QuantileModel& m, double u, double beta,
             ClarkRange range = ClarkRange::Standard, const MeasureOptions& o = {});
double watts(const QuantileModel& m, double u, const MeasureOptions& o = {});

double igr(const QuantileModel& m, double u, const MeasureOptions& o = {});
double mean_income_poor(const QuantileModel& m, double u, const MeasureOptions& o = {});
double gini_poor(const QuantileModel& m, double u, const MeasureOptions& o = {});
// D(u) = u (1 - I_Q(u)).
double d_function(const QuantileModel& m, double u, const MeasureOptions& o = {});

// Throw DivergentMeanError when the mean is infinite.
double mean(const QuantileModel& m, const MeasureOptions& o = {});
double lorenz(const QuantileModel& m, double u, const MeasureOptions& o = {});
double gini(const QuantileModel& m, const MeasureOptions& o = {});

double sen(const QuantileModel& m, double u, const MeasureOptions& o = {});
SenComponents sen_components(const QuantileModel& m, double u, const MeasureOptions& o = {});
double shorrocks_sen(const QuantileModel& m, double u, const MeasureOptions& o = {});

double rank_based(const QuantileModel& m, double u, const RankKernel& kernel,
                  const MeasureOptions& o = {});
FgtDecomposition fgt_decomposition(const QuantileModel& m, double u, const MeasureOptions& o = {});
double hagenaars(const QuantileModel& m, double u, const UtilityKernel& utility,
                 const MeasureOptions& o = {});
double additive_measure(const QuantileModel& m, double u, const MeasureKernel& kernel,
                        const MeasureOptions& o = {});

// int_0^u of the moment integrand, with the lower extension described above.
double moment_from_zero(const QuantileModel& m, MomentKind kind, double u,
                        const MeasureOptions& o = {});

} // namespace qpov
