#include "qpov/quantile_model.hpp"

#include "model_impl.hpp"
#include "qpov/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qpov {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void check_names(const std::string& family, const Params& params,
                 const std::vector<std::string>& allowed) {
    std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto& [name, value] : params) {
        if (!known.count(name))
            throw ValidationError("unknown parameter '" + name + "' for family " + family);
    }
}

} // namespace

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Numerical: return "numerical error";
    case ErrorKind::Degenerate: return "degenerate input";
    case ErrorKind::Data: return "data error";
    case ErrorKind::Range: return "range error";
    case ErrorKind::InsufficientData: return "insufficient data";
    case ErrorKind::DivergentMean: return "divergent mean";
    case ErrorKind::InvalidCurve: return "invalid curve";
    case ErrorKind::Fit: return "fit error";
    case ErrorKind::Io: return "i/o error";
    }
    return "error";
}

std::string ValidationReport::to_string() const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "\n";
        out += v;
    }
    return out;
}

// ---------------------------------------------------------------- names

std::string to_string(Family family) {
    switch (family) {
    case Family::Power: return "power";
    case Family::Exponential: return "exponential";
    case Family::ParetoI: return "pareto1";
    case Family::Dagum: return "dagum";
    case Family::Govindarajulu: return "govindarajulu";
    case Family::Kappa: return "kappa";
    case Family::GldRs: return "gld_rs";
    case Family::GldFmkl: return "gld_fmkl";
    case Family::Wakeby: return "wakeby";
    case Family::BetaQDensity: return "beta_q_density";
    case Family::LogLinear: return "log_linear";
    case Family::LorenzDerived: return "lorenz";
    case Family::TabulatedQ: return "tabulated";
    }
    return "unknown";
}

std::string to_string(LorenzKind kind) {
    switch (kind) {
    case LorenzKind::Kakwani73: return "kakwani73";
    case LorenzKind::Kakwani80: return "kakwani80";
    case LorenzKind::Chotikapanich: return "chotikapanich";
    case LorenzKind::Aggarwal: return "aggarwal";
    case LorenzKind::Gupta: return "gupta";
    case LorenzKind::Ortega: return "ortega";
    case LorenzKind::Rohde: return "rohde";
    }
    return "unknown";
}

std::string to_string(MomentKind kind) {
    switch (kind) {
    case MomentKind::Q: return "Q";
    case MomentKind::pQ: return "pQ";
    case MomentKind::Qsq: return "Qsq";
    case MomentKind::logQ: return "logQ";
    case MomentKind::pq: return "pq";
    case MomentKind::p2q: return "p2q";
    }
    return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Family::TabulatedQ); ++i) {
        auto f = static_cast<Family>(i);
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

std::optional<LorenzKind> lorenz_kind_from_string(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(LorenzKind::Rohde); ++i) {
        auto k = static_cast<LorenzKind>(i);
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- construction

QuantileModel QuantileModel::unchecked(Family family, Params params,
                                       std::optional<UDomain> domain) {
    if (family == Family::LorenzDerived || family == Family::TabulatedQ)
        throw ValidationError("use lorenz_derived() or tabulated() for family " +
                              to_string(family));
    check_names(to_string(family), params, detail::parameter_names(family));
    if (family == Family::BetaQDensity && !params.count("location")) params["location"] = 0.0;
    QuantileModel m;
    m.family_ = family;
    m.domain_ = domain.value_or(UDomain{});
    m.impl_ = detail::make_parametric(family, params, m.domain_);
    m.params_ = std::move(params);
    return m;
}

QuantileModel QuantileModel::create(Family family, Params params, std::optional<UDomain> domain) {
    QuantileModel m = unchecked(family, std::move(params), domain);
    ValidationReport r = validate(m);
    if (!r.ok()) throw ValidationError("invalid " + m.describe() + ":\n" + r.to_string());
    return m;
}

QuantileModel QuantileModel::lorenz_derived(LorenzKind kind, Params params) {
    if (!params.count("mu")) params["mu"] = 1.0;
    check_names("lorenz:" + to_string(kind), params, detail::parameter_names(kind));
    QuantileModel m;
    m.family_ = Family::LorenzDerived;
    m.lorenz_kind_ = kind;
    m.impl_ = detail::make_lorenz(kind, params);
    m.params_ = std::move(params);
    ValidationReport r = validate(m);
    if (!r.ok()) throw ValidationError("invalid " + m.describe() + ":\n" + r.to_string());
    return m;
}

QuantileModel QuantileModel::tabulated(std::vector<double> u, std::vector<double> q_values,
                                       TailMasses tails) {
    QuantileModel m;
    m.family_ = Family::TabulatedQ;
    if (u.empty()) throw ValidationError("tabulated: empty table");
    m.domain_ = {u.front(), u.back()};
    m.impl_ = detail::make_tabulated(std::move(u), std::move(q_values), tails);
    ValidationReport r = validate(m);
    if (!r.ok()) throw ValidationError("invalid tabulated model:\n" + r.to_string());
    return m;
}

// ---------------------------------------------------------------- accessors

std::string QuantileModel::family_name() const {
    if (family_ == Family::LorenzDerived && lorenz_kind_) return "lorenz:" + to_string(*lorenz_kind_);
    return to_string(family_);
}

std::string QuantileModel::describe() const {
    std::ostringstream os;
    os << family_name() << "(";
    bool first = true;
    for (const auto& [name, value] : params_) {
        if (!first) os << ", ";
        first = false;
        os << name << "=" << fmt(value);
    }
    if (family_ == Family::TabulatedQ) os << table_u().size() << " knots";
    os << ") on [" << fmt(domain_.lo) << ", " << fmt(domain_.hi) << "]";
    return os.str();
}

double QuantileModel::quantile(double u, double ubar) const { return impl_->quantile(u, ubar); }
double QuantileModel::density(double u, double ubar) const { return impl_->density(u, ubar); }

double QuantileModel::lower_value() const { return impl_->quantile(domain_.lo, 1.0 - domain_.lo); }
double QuantileModel::upper_value() const { return impl_->quantile(domain_.hi, 1.0 - domain_.hi); }

bool QuantileModel::has_finite_mean() const { return impl_->finite_mean(); }

std::optional<double> QuantileModel::closed_moment(MomentKind kind, double a, double b) const {
    return impl_->moment(kind, a, b);
}

TailMasses QuantileModel::tail_masses() const { return impl_->tails(); }
std::vector<double> QuantileModel::table_u() const { return impl_->knots_u(); }
std::vector<double> QuantileModel::table_q() const { return impl_->knots_q(); }

ValidationReport QuantileModel::family_checks() const {
    ValidationReport r;
    impl_->check(r);
    return r;
}

QuantileModel QuantileModel::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("scale factor must be positive");
    if (family_ == Family::TabulatedQ) {
        auto u = table_u();
        auto q = table_q();
        for (double& v : q) v *= c;
        TailMasses t = tail_masses();
        if (t.lower) *t.lower *= c;
        if (t.upper) *t.upper *= c;
        return tabulated(std::move(u), std::move(q), t);
    }
    Params p = params_;
    auto mul = [&](const char* name) { p.at(name) *= c; };
    switch (family_) {
    case Family::Power: mul("alpha"); break;
    case Family::Exponential: p.at("lambda") /= c; break;
    case Family::ParetoI:
    case Family::Govindarajulu: mul("sigma"); break;
    case Family::Dagum: mul("b"); break;
    case Family::Kappa:
        mul("alpha");
        mul("beta");
        break;
    case Family::GldRs:
    case Family::GldFmkl:
        mul("lambda1");
        p.at("lambda2") /= c;
        break;
    case Family::Wakeby:
        mul("lambda");
        mul("theta");
        mul("phi");
        break;
    case Family::BetaQDensity:
        mul("k");
        mul("location");
        break;
    case Family::LogLinear:
        mul("alpha");
        mul("beta");
        mul("r");
        break;
    case Family::LorenzDerived: mul("mu"); return lorenz_derived(*lorenz_kind_, p);
    case Family::TabulatedQ: break;
    }
    return unchecked(family_, p, domain_);
}

// ---------------------------------------------------------------- free functions

double eval_Q(const QuantileModel& model, double u) {
    UDomain d = model.domain();
    if (!(u >= d.lo && u <= d.hi))
        throw DomainError("u=" + fmt(u) + " outside the model domain [" + fmt(d.lo) + ", " +
                          fmt(d.hi) + "]");
    double v = model.quantile(u, 1.0 - u);
    if (!std::isfinite(v)) throw DomainError("Q(" + fmt(u) + ") is not finite");
    return v;
}

double eval_q(const QuantileModel& model, double u) {
    UDomain d = model.domain();
    if (!(u >= d.lo && u <= d.hi))
        throw DomainError("u=" + fmt(u) + " outside the model domain [" + fmt(d.lo) + ", " +
                          fmt(d.hi) + "]");
    double v = model.density(u, 1.0 - u);
    if (!std::isfinite(v)) throw DomainError("q(" + fmt(u) + ") is not finite");
    return v;
}

double partial_moment(const QuantileModel& model, MomentKind kind, double a, double b,
                      const QuadratureOptions& opts, MomentMethod method) {
    UDomain d = model.domain();
    if (!(a >= d.lo && b <= d.hi && a <= b))
        throw DomainError("partial_moment: [" + fmt(a) + ", " + fmt(b) +
                          "] is not an interval inside the model domain");
    if (a == b) return 0.0;
    if (method != MomentMethod::Quadrature) {
        auto closed = model.closed_moment(kind, a, b);
        if (closed) return *closed;
        if (method == MomentMethod::ClosedForm)
            throw DomainError("no closed form for " + to_string(kind) + " moments of " +
                              model.family_name());
    }
    std::function<double(double, double)> g;
    switch (kind) {
    case MomentKind::Q: g = [&](double p, double s) { return model.quantile(p, s); }; break;
    case MomentKind::pQ: g = [&](double p, double s) { return p * model.quantile(p, s); }; break;
    case MomentKind::Qsq:
        g = [&](double p, double s) {
            double v = model.quantile(p, s);
            return v * v;
        };
        break;
    case MomentKind::logQ: g = [&](double p, double s) { return std::log(model.quantile(p, s)); }; break;
    case MomentKind::pq: g = [&](double p, double s) { return p * model.density(p, s); }; break;
    case MomentKind::p2q: g = [&](double p, double s) { return p * p * model.density(p, s); }; break;
    }
    return integrate_unit(g, a, b, opts).value;
}

double partial_moment(const QuantileModel& model, MomentKind kind, double a, double b, double tol,
                      MomentMethod method) {
    if (!(tol > 0.0)) throw DomainError("partial_moment: tol must be > 0");
    QuadratureOptions opts;
    opts.abs_tol = tol;
    return partial_moment(model, kind, a, b, opts, method);
}

double u_from_income(const QuantileModel& model, double x) {
    UDomain d = model.domain();
    double qlo = model.quantile(d.lo, 1.0 - d.lo);
    double qhi = model.quantile(d.hi, 1.0 - d.hi);
    if (!(x >= qlo && x <= qhi))
        throw RangeError("income " + fmt(x) + " outside the model range [" + fmt(qlo) + ", " +
                         fmt(qhi) + "]");
    double lo = d.lo;
    double hi = d.hi;
    for (int it = 0; it < 400; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 1e-14 * mid) break;
        if (model.quantile(mid, 1.0 - mid) < x) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

ValidationReport validate(const QuantileModel& model) {
    ValidationReport r;
    try {
        r = model.family_checks();
    } catch (const Error& e) {
        r.add(e.what());
        return r;
    }
    UDomain d = model.domain();
    if (!(d.lo >= 0.0 && d.hi <= 1.0 && d.lo < d.hi)) {
        r.add("u_domain [" + fmt(d.lo) + ", " + fmt(d.hi) + "] must satisfy 0 <= lo < hi <= 1");
        return r;
    }
    double q0 = model.quantile(d.lo, 1.0 - d.lo);
    if (std::isnan(q0) || q0 < 0.0) r.add("Q(" + fmt(d.lo) + ")=" + fmt(q0) + "<0");

    // Degenerate (constant) reconstructions are legitimate for these.
    bool allow_flat =
        model.family() == Family::TabulatedQ || model.family() == Family::LorenzDerived;
    constexpr int n = 1024;
    double prev = q0;
    bool bad_density = false;
    bool bad_monotone = false;
    for (int i = 0; i < n; ++i) {
        double u = d.lo + (d.hi - d.lo) * (i + 0.5) / n;
        double ubar = 1.0 - u;
        double q = model.density(u, ubar);
        double Q = model.quantile(u, ubar);
        bool q_ok = std::isfinite(q) && (allow_flat ? q >= 0.0 : q > 0.0);
        if (!q_ok && !bad_density) {
            r.add("q(" + fmt(u) + ")=" + fmt(q) + (allow_flat ? " is negative" : " is not positive"));
            bad_density = true;
        }
        double slack = 1e-12 * std::max(1.0, std::abs(Q));
        if (!bad_monotone && (!std::isfinite(Q) || (!std::isnan(prev) && Q < prev - slack))) {
            r.add("Q is not non-decreasing near u=" + fmt(u));
            bad_monotone = true;
        }
        prev = Q;
    }
    return r;
}

} // namespace qpov
