#include "qpov/measures.hpp"

#include "qpov/error.hpp"

#include <cmath>
#include <sstream>

namespace qpov {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Poverty line z = Q(u) after checking the head-count level.
double poverty_line(const QuantileModel& m, double u) {
    UDomain d = m.domain();
    if (!(u > 0.0 && u >= d.lo && u <= d.hi))
        throw DomainError("head-count level u=" + fmt(u) + " must lie in (0, 1] inside [" +
                          fmt(d.lo) + ", " + fmt(d.hi) + "]");
    double z = eval_Q(m, u);
    if (!(z > 0.0)) throw DegenerateInputError("poverty line Q(" + fmt(u) + ")=" + fmt(z) + " is not positive");
    return z;
}

// Value that stands in for Q on [0, u_lo).
double lower_fill(const QuantileModel& m) {
    UDomain d = m.domain();
    TailMasses t = m.tail_masses();
    if (t.lower) return *t.lower / d.lo;
    return eval_Q(m, d.lo);
}

// Value that stands in for Q on (u_hi, 1].
double upper_fill(const QuantileModel& m) {
    UDomain d = m.domain();
    TailMasses t = m.tail_masses();
    if (t.upper) return *t.upper / (1.0 - d.hi);
    return eval_Q(m, d.hi);
}

// int_0^u g(p, Q(p)) dp.
double poor_integral(const QuantileModel& m, double u, const std::function<double(double, double)>& g,
                     const MeasureOptions& o) {
    UDomain d = m.domain();
    double total = 0.0;
    if (d.lo > 0.0) {
        double c = lower_fill(m);
        total += integrate([&](double p) { return g(p, c); }, 0.0, d.lo, o.quad).value;
    }
    total += integrate_unit([&](double p, double s) { return g(p, m.quantile(p, s)); }, d.lo, u,
                            o.quad)
                 .value;
    return total;
}

double mean_checked(const QuantileModel& m, const MeasureOptions& o) {
    if (!m.has_finite_mean())
        throw DivergentMeanError("the mean of " + m.describe() + " is infinite");
    UDomain d = m.domain();
    double total = moment_from_zero(m, MomentKind::Q, d.hi, o);
    if (d.hi < 1.0) total += (1.0 - d.hi) * upper_fill(m);
    if (!std::isfinite(total) || !(total > 0.0))
        throw DivergentMeanError("the mean of " + m.describe() + " is not a positive finite number");
    return total;
}

} // namespace

UtilityKernel UtilityKernel::log_utility() {
    return {[](double x) { return std::log(x); }, [](double, double) { return 1.0; }};
}

UtilityKernel UtilityKernel::linear_gap() {
    return {[](double x) { return x; }, [](double, double z) { return 1.0 / z; }};
}

double moment_from_zero(const QuantileModel& m, MomentKind kind, double u, const MeasureOptions& o) {
    UDomain d = m.domain();
    if (!(u >= d.lo && u <= d.hi))
        throw DomainError("u=" + fmt(u) + " outside the model domain");
    double ext = 0.0;
    if (d.lo > 0.0) {
        double c = lower_fill(m);
        double lo = d.lo;
        switch (kind) {
        case MomentKind::Q: ext = c * lo; break;
        case MomentKind::pQ: ext = 0.5 * c * lo * lo; break;
        case MomentKind::Qsq: ext = c * c * lo; break;
        case MomentKind::logQ: ext = lo * std::log(c); break;
        case MomentKind::pq:
        case MomentKind::p2q: ext = 0.0; break;
        }
    }
    return ext + partial_moment(m, kind, d.lo, u, o.quad, o.method);
}

double pgr(const QuantileModel& m, double u, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    return u - moment_from_zero(m, MomentKind::Q, u, o) / z;
}

double pgr_via_density(const QuantileModel& m, double u, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    double lo = m.domain().lo;
    // p Q(p) at the left end of the domain is the boundary term of the parts formula.
    double boundary = lo > 0.0 ? lo * (eval_Q(m, lo) - lower_fill(m)) : 0.0;
    return (moment_from_zero(m, MomentKind::pq, u, o) + boundary) / z;
}

double fgt(const QuantileModel& m, double u, double alpha, const MeasureOptions& o) {
    if (!(alpha >= 0.0)) throw DomainError("FGT order alpha must be >= 0 (got " + fmt(alpha) + ")");
    double z = poverty_line(m, u);
    if (alpha == 0.0) return u;
    if (alpha == 1.0) return u - moment_from_zero(m, MomentKind::Q, u, o) / z;
    if (alpha == 2.0) {
        double mq = moment_from_zero(m, MomentKind::Q, u, o);
        double mqq = moment_from_zero(m, MomentKind::Qsq, u, o);
        return u - 2.0 * mq / z + mqq / (z * z);
    }
    return poor_integral(
        m, u, [&](double, double q) { return std::pow(std::max(0.0, 1.0 - q / z), alpha); }, o);
}

double depth(const QuantileModel& m, double u, const MeasureOptions& o) { return fgt(m, u, 2.0, o); }

double depth_via_pgr(const QuantileModel& m, double u, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    UDomain d = m.domain();
    // The gap p Q(p) - int_0^p Q equals Q(p) A_1(p).
    auto integrand = [&](double p, double s) {
        double gap = p * m.quantile(p, s) - moment_from_zero(m, MomentKind::Q, p, o);
        return m.density(p, s) * gap;
    };
    double h = integrate_unit(integrand, d.lo, u, o.quad).value;
    return 2.0 * h / (z * z);
}

double watts(const QuantileModel& m, double u, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    if (o.method != MomentMethod::Quadrature) {
        if (auto closed = m.closed_moment(MomentKind::logQ, m.domain().lo, u);
            closed && m.domain().lo == 0.0)
            return u * std::log(z) - *closed;
    }
    return poor_integral(m, u, [&](double, double q) { return std::log(z / q); }, o);
}

double clark(const QuantileModel& m, double u, double beta, ClarkRange range,
             const MeasureOptions& o) {
    if (!std::isfinite(beta)) throw DomainError("Clark order must be finite");
    if (std::abs(beta) < 1e-8) return watts(m, u, o);
    if (beta > 1.0 && range == ClarkRange::Standard)
        throw DomainError("Clark order beta must be <= 1 (got " + fmt(beta) + ")");
    double z = poverty_line(m, u);
    if (beta == 1.0) return u - moment_from_zero(m, MomentKind::Q, u, o) / z;
    if (beta == 2.0) return 0.5 * (u - moment_from_zero(m, MomentKind::Qsq, u, o) / (z * z));
    return poor_integral(
               m, u, [&](double, double q) { return 1.0 - std::pow(q / z, beta); }, o) /
           beta;
}

double igr(const QuantileModel& m, double u, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    return 1.0 - moment_from_zero(m, MomentKind::Q, u, o) / (u * z);
}

double mean_income_poor(const QuantileModel& m, double u, const MeasureOptions& o) {
    poverty_line(m, u);
    return moment_from_zero(m, MomentKind::Q, u, o) / u;
}

double gini_poor(const QuantileModel& m, double u, const MeasureOptions& o) {
    poverty_line(m, u);
    double mq = moment_from_zero(m, MomentKind::Q, u, o);
    if (!(mq > 0.0)) throw DegenerateInputError("the poor have zero total income at u=" + fmt(u));
    return 2.0 * moment_from_zero(m, MomentKind::pQ, u, o) / (u * mq) - 1.0;
}

double d_function(const QuantileModel& m, double u, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    return moment_from_zero(m, MomentKind::Q, u, o) / z;
}

double mean(const QuantileModel& m, const MeasureOptions& o) { return mean_checked(m, o); }

double lorenz(const QuantileModel& m, double u, const MeasureOptions& o) {
    double mu = mean_checked(m, o);
    UDomain d = m.domain();
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("lorenz: u must lie in [0, 1]");
    if (u == 0.0) return 0.0;
    if (u < d.lo) return u * lower_fill(m) / mu;
    if (u > d.hi) return (mu - (1.0 - u) * upper_fill(m)) / mu;
    return moment_from_zero(m, MomentKind::Q, u, o) / mu;
}

double gini(const QuantileModel& m, const MeasureOptions& o) {
    double mu = mean_checked(m, o);
    UDomain d = m.domain();
    double mpq = moment_from_zero(m, MomentKind::pQ, d.hi, o);
    if (d.hi < 1.0) mpq += 0.5 * (1.0 - d.hi * d.hi) * upper_fill(m);
    return 2.0 * mpq / mu - 1.0;
}

SenComponents sen_components(const QuantileModel& m, double u, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    double mq = moment_from_zero(m, MomentKind::Q, u, o);
    double mpq = moment_from_zero(m, MomentKind::pQ, u, o);
    SenComponents c;
    c.igr = 1.0 - mq / (u * z);
    if (!(mq > 0.0)) throw DegenerateInputError("the poor have zero total income at u=" + fmt(u));
    c.gini_poor = 2.0 * mpq / (u * mq) - 1.0;
    c.composite = u * (c.igr + (1.0 - c.igr) * c.gini_poor);
    c.single = u - 2.0 * mq / z + 2.0 * mpq / (u * z);
    return c;
}

double sen(const QuantileModel& m, double u, const MeasureOptions& o) {
    return sen_components(m, u, o).single;
}

double shorrocks_sen(const QuantileModel& m, double u, const MeasureOptions& o) {
    SenComponents c = sen_components(m, u, o);
    return (2.0 - u) * u * c.igr + u * u * (1.0 - c.igr) * c.gini_poor;
}

double rank_based(const QuantileModel& m, double u, const RankKernel& k, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    switch (k.kind) {
    case RankKernel::Kind::Sen:
        return poor_integral(
            m, u, [&](double p, double q) { return 2.0 * (1.0 - p / u) * (1.0 - q / z); }, o);
    case RankKernel::Kind::Takayama: {
        double mu_f = moment_from_zero(m, MomentKind::Q, u, o) + (1.0 - u) * z;
        if (!(mu_f > 0.0)) throw DegenerateInputError("censored mean is not positive");
        return poor_integral(
            m, u, [&](double p, double q) { return 2.0 * (1.0 - p) * (1.0 - q / mu_f); }, o);
    }
    case RankKernel::Kind::Kakwani: {
        double kk = k.param;
        if (!(kk > 0.0)) throw DomainError("Kakwani rank order k must be > 0 (got " + fmt(kk) + ")");
        return poor_integral(
            m, u,
            [&](double p, double q) {
                return (kk + 1.0) * std::pow(1.0 - p / u, kk) * (1.0 - q / z);
            },
            o);
    }
    case RankKernel::Kind::Thon: {
        double c = k.param;
        if (!(c >= 2.0)) throw DomainError("Thon constant c must be >= 2 (got " + fmt(c) + ")");
        double w = k.thon_form == RankKernel::ThonForm::ZF ? z : c;
        return poor_integral(
            m, u,
            [&](double p, double q) { return 2.0 / (c - 1.0) * (c - w * p) * (1.0 - q / z); }, o);
    }
    }
    throw DomainError("unknown rank kernel");
}

FgtDecomposition fgt_decomposition(const QuantileModel& m, double u, const MeasureOptions& o) {
    double z = poverty_line(m, u);
    double mq = moment_from_zero(m, MomentKind::Q, u, o);
    double mqq = moment_from_zero(m, MomentKind::Qsq, u, o);
    FgtDecomposition r;
    r.headcount = u;
    double mu_p = mq / u;
    r.igr = 1.0 - mu_p / z;
    double cv2 = std::max(0.0, (mqq / u) / (mu_p * mu_p) - 1.0);
    r.cv_poor = std::sqrt(cv2);
    r.recomposed = u * (r.igr * r.igr + (1.0 - r.igr) * (1.0 - r.igr) * cv2);
    return r;
}

double hagenaars(const QuantileModel& m, double u, const UtilityKernel& k, const MeasureOptions& o) {
    if (!k.utility) throw DomainError("utility kernel has no utility function");
    double z = poverty_line(m, u);
    double gu = k.utility(z);
    if (!std::isfinite(gu)) throw DomainError("utility is undefined at the poverty line");
    double a = k.normalizer ? k.normalizer(u, z) : 1.0;
    return a * poor_integral(m, u, [&](double, double q) { return gu - k.utility(q); }, o);
}

double additive_measure(const QuantileModel& m, double u, const MeasureKernel& k,
                        const MeasureOptions& o) {
    switch (k.kind) {
    case MeasureKernel::Kind::FGT: return fgt(m, u, k.order, o);
    case MeasureKernel::Kind::Clark: return clark(m, u, k.order, ClarkRange::Standard, o);
    case MeasureKernel::Kind::Watts: return watts(m, u, o);
    case MeasureKernel::Kind::Custom: {
        if (!k.custom) throw DomainError("custom measure kernel has no deprivation function");
        double z = poverty_line(m, u);
        return poor_integral(
            m, u,
            [&](double, double q) {
                double a = k.custom(q, z);
                if (!(a >= 0.0)) throw DomainError("deprivation a(x, t) must be >= 0");
                return a;
            },
            o);
    }
    }
    throw DomainError("unknown measure kernel");
}

} // namespace qpov
