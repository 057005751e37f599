#include "qpov/lorenz.hpp"

#include "model_impl.hpp"
#include "qpov/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qpov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// L, L', L'' of one parametric curve; u and 1 - u passed separately.
class Curve {
public:
    Curve(LorenzKind kind, const Params& params) : kind_(kind) {
        for (const auto& name : detail::parameter_names(kind)) {
            if (name == "mu") continue;
            c_ = detail::require(params, name);
        }
    }

    double L(double u, double s) const {
        switch (kind_) {
        case LorenzKind::Kakwani73: return u * std::exp(-c_ * s);
        case LorenzKind::Kakwani80: return u * (1.0 - c_ * std::sqrt(s));
        case LorenzKind::Chotikapanich: return std::expm1(c_ * u) / std::expm1(c_);
        case LorenzKind::Aggarwal: {
            double a = 1.0 + c_;
            return (1.0 - c_) * (1.0 - c_) * u / (a * a - 4.0 * c_ * u);
        }
        case LorenzKind::Gupta: return u * std::exp(-s * std::log(c_));
        case LorenzKind::Ortega: return s > 0.0 ? -u * std::expm1(c_ * std::log(s)) : u;
        case LorenzKind::Rohde: return u * (c_ - 1.0) / (c_ - u);
        }
        return 0.0;
    }

    double dL(double u, double s) const {
        switch (kind_) {
        case LorenzKind::Kakwani73: return std::exp(-c_ * s) * (1.0 + c_ * u);
        case LorenzKind::Kakwani80: {
            if (s <= 0.0) return kInf;
            double r = std::sqrt(s);
            return 1.0 - c_ * r + 0.5 * c_ * u / r;
        }
        case LorenzKind::Chotikapanich: return c_ * std::exp(c_ * u) / std::expm1(c_);
        case LorenzKind::Aggarwal: {
            double a = 1.0 + c_;
            double d = a * a - 4.0 * c_ * u;
            double n = (1.0 - c_) * (1.0 + c_);
            return n * n / (d * d);
        }
        case LorenzKind::Gupta: {
            double lt = std::log(c_);
            return std::exp(-s * lt) * (1.0 + u * lt);
        }
        case LorenzKind::Ortega: {
            if (s <= 0.0) return c_ < 1.0 ? kInf : 2.0;
            double ls = std::log(s);
            return -std::expm1(c_ * ls) + c_ * u * std::exp((c_ - 1.0) * ls);
        }
        case LorenzKind::Rohde: {
            double d = c_ - u;
            return c_ * (c_ - 1.0) / (d * d);
        }
        }
        return 0.0;
    }

    double d2L(double u, double s) const {
        switch (kind_) {
        case LorenzKind::Kakwani73: return c_ * std::exp(-c_ * s) * (2.0 + c_ * u);
        case LorenzKind::Kakwani80: {
            if (s <= 0.0) return kInf;
            double r = std::sqrt(s);
            return c_ / r + 0.25 * c_ * u / (s * r);
        }
        case LorenzKind::Chotikapanich: return c_ * c_ * std::exp(c_ * u) / std::expm1(c_);
        case LorenzKind::Aggarwal: {
            double a = 1.0 + c_;
            double d = a * a - 4.0 * c_ * u;
            double n = (1.0 - c_) * (1.0 + c_);
            return 8.0 * c_ * n * n / (d * d * d);
        }
        case LorenzKind::Gupta: {
            double lt = std::log(c_);
            return std::exp(-s * lt) * lt * (2.0 + u * lt);
        }
        case LorenzKind::Ortega: {
            if (s <= 0.0) return c_ < 1.0 ? kInf : 2.0;
            double ls = std::log(s);
            return c_ * std::exp((c_ - 2.0) * ls) * (2.0 * s - (c_ - 1.0) * u);
        }
        case LorenzKind::Rohde: {
            double d = c_ - u;
            return 2.0 * c_ * (c_ - 1.0) / (d * d * d);
        }
        }
        return 0.0;
    }

    void check_range(ValidationReport& r) const {
        const std::string name = to_string(kind_);
        switch (kind_) {
        case LorenzKind::Kakwani73:
            if (!(c_ >= 0.0)) r.add(name + ": delta must be >= 0 (got " + fmt(c_) + ")");
            break;
        case LorenzKind::Kakwani80:
            if (!(c_ > 0.0 && c_ < 1.0)) r.add(name + ": need 0 < delta < 1 (got " + fmt(c_) + ")");
            break;
        case LorenzKind::Chotikapanich:
            if (!(c_ > 0.0)) r.add(name + ": k must be > 0 (got " + fmt(c_) + ")");
            break;
        case LorenzKind::Aggarwal:
            if (!(c_ >= 0.0 && c_ < 1.0))
                r.add(name + ": need 0 <= theta < 1 (got " + fmt(c_) + ")");
            break;
        case LorenzKind::Gupta:
            if (!(c_ > 1.0)) r.add(name + ": T must be > 1 (got " + fmt(c_) + ")");
            break;
        case LorenzKind::Ortega:
            if (!(c_ > 0.0 && c_ <= 1.0))
                r.add(name + ": need 0 < theta <= 1 (got " + fmt(c_) + ")");
            break;
        case LorenzKind::Rohde:
            if (!(c_ > 1.0)) r.add(name + ": beta must be > 1 (got " + fmt(c_) + ")");
            break;
        }
    }

private:
    LorenzKind kind_;
    double c_ = 0.0;
};

void check_shape(const Curve& curve, LorenzKind kind, ValidationReport& r) {
    const std::string name = to_string(kind);
    double l0 = curve.L(0.0, 1.0);
    double l1 = curve.L(1.0, 0.0);
    if (!(std::abs(l0) <= 1e-12)) r.add(name + ": L(0)=" + fmt(l0) + " != 0");
    if (!(std::abs(l1 - 1.0) <= 1e-12)) r.add(name + ": L(1)=" + fmt(l1) + " != 1");
    constexpr int n = 1024;
    double h = 1.0 / n;
    double prev = l0;
    double cur = curve.L(h, 1.0 - h);
    for (int i = 1; i < n; ++i) {
        double u = (i + 1) * h;
        double next = curve.L(u, 1.0 - u);
        double second = next - 2.0 * cur + prev;
        if (!std::isfinite(second) || second < -1e-12) {
            r.add(name + ": L is not convex near u=" + fmt(i * h));
            return;
        }
        prev = cur;
        cur = next;
    }
}

class LorenzModel final : public detail::ModelImpl {
public:
    LorenzModel(LorenzKind kind, const Params& params)
        : kind_(kind), curve_(kind, params), mu_(detail::require(params, "mu")) {}

    double quantile(double u, double ubar) const override { return mu_ * curve_.dL(u, ubar); }
    double density(double u, double ubar) const override { return mu_ * curve_.d2L(u, ubar); }

    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        double La = curve_.L(a, 1.0 - a);
        double Lb = curve_.L(b, 1.0 - b);
        switch (kind) {
        case MomentKind::Q: return mu_ * (Lb - La);
        case MomentKind::pq: {
            double qa = a > 0.0 ? a * curve_.dL(a, 1.0 - a) : 0.0;
            double qb = b * curve_.dL(b, 1.0 - b);
            if (!std::isfinite(qb)) return std::nullopt;
            return mu_ * (qb - qa - (Lb - La));
        }
        default: return std::nullopt;
        }
    }

    void check(ValidationReport& r) const override {
        if (!(mu_ > 0.0)) r.add(to_string(kind_) + ": mu must be > 0 (got " + fmt(mu_) + ")");
        ValidationReport range;
        curve_.check_range(range);
        for (auto& v : range.violations) r.add(v);
        if (range.ok()) check_shape(curve_, kind_, r);
    }

private:
    LorenzKind kind_;
    Curve curve_;
    double mu_;
};

Params with_mu(const LorenzFamily& lf) {
    Params p = lf.params;
    p["mu"] = lf.mu;
    return p;
}

} // namespace

namespace detail {

std::vector<std::string> parameter_names(LorenzKind kind) {
    switch (kind) {
    case LorenzKind::Kakwani73:
    case LorenzKind::Kakwani80: return {"delta", "mu"};
    case LorenzKind::Chotikapanich: return {"k", "mu"};
    case LorenzKind::Aggarwal:
    case LorenzKind::Ortega: return {"theta", "mu"};
    case LorenzKind::Gupta: return {"T", "mu"};
    case LorenzKind::Rohde: return {"beta", "mu"};
    }
    return {};
}

std::shared_ptr<const ModelImpl> make_lorenz(LorenzKind kind, const Params& params) {
    return std::make_shared<LorenzModel>(kind, params);
}

} // namespace detail

double lorenz_curve(const LorenzFamily& lf, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("lorenz_curve: u must lie in [0, 1]");
    return Curve(lf.kind, lf.params).L(u, 1.0 - u);
}

double lorenz_pgr(const LorenzFamily& lf, double u) {
    if (!(u > 0.0 && u <= 1.0)) throw DomainError("lorenz_pgr: u must lie in (0, 1]");
    Curve c(lf.kind, lf.params);
    return u - c.L(u, 1.0 - u) / c.dL(u, 1.0 - u);
}

ValidationReport validate(const LorenzFamily& lf) {
    ValidationReport r;
    LorenzModel(lf.kind, with_mu(lf)).check(r);
    return r;
}

QuantileModel lorenz_to_quantile(const LorenzFamily& lf) {
    return QuantileModel::lorenz_derived(lf.kind, with_mu(lf));
}

} // namespace qpov
