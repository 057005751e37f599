#include "model_impl.hpp"

#include "qpov/error.hpp"
#include "qpov/quadrature.hpp"
#include "qpov/special.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qpov::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// x log x with the continuous extension 0 at x = 0.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Box-Cox style (x^lambda - 1) / lambda from log x, continuous at lambda = 0.
double box_cox(double log_x, double lambda) {
    if (std::abs(lambda) < 1e-12) return log_x;
    return std::expm1(lambda * log_x) / lambda;
}

// ---------------------------------------------------------------- Power
// Q = alpha u^(1/beta)
class Power final : public ModelImpl {
public:
    explicit Power(const Params& p) : alpha_(require(p, "alpha")), beta_(require(p, "beta")) {}

    double quantile(double u, double) const override { return alpha_ * std::pow(u, 1.0 / beta_); }
    double density(double u, double) const override {
        return alpha_ / beta_ * std::pow(u, 1.0 / beta_ - 1.0);
    }
    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        const double e = 1.0 / beta_;
        switch (kind) {
        case MomentKind::Q: return alpha_ * pow_integral(a, b, e);
        case MomentKind::pQ: return alpha_ * pow_integral(a, b, e + 1.0);
        case MomentKind::Qsq: return alpha_ * alpha_ * pow_integral(a, b, 2.0 * e);
        case MomentKind::logQ:
            return std::log(alpha_) * (b - a) + e * ((xlogx(b) - b) - (xlogx(a) - a));
        case MomentKind::pq: return alpha_ * e * pow_integral(a, b, e);
        case MomentKind::p2q: return alpha_ * e * pow_integral(a, b, e + 1.0);
        }
        return std::nullopt;
    }
    void check(ValidationReport& r) const override {
        if (!(alpha_ > 0.0)) r.add("power: alpha must be > 0 (got " + fmt(alpha_) + ")");
        if (!(beta_ > 0.0)) r.add("power: beta must be > 0 (got " + fmt(beta_) + ")");
    }

private:
    double alpha_, beta_;
};

// ---------------------------------------------------------------- Exponential
// Q = -log(1 - u) / lambda
class Exponential final : public ModelImpl {
public:
    explicit Exponential(const Params& p) : lambda_(require(p, "lambda")) {}

    double quantile(double u, double ubar) const override {
        return -log_ubar(u, ubar) / lambda_;
    }
    double density(double, double ubar) const override { return 1.0 / (lambda_ * ubar); }

    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        // The antiderivatives cancel badly near the origin.
        if (a < 0.01 && b < 0.01) return std::nullopt;
        auto slog = [](double p) {
            double s = 1.0 - p;
            return p < 0.5 ? std::log1p(-p) : (s > 0.0 ? std::log(s) : -kInf);
        };
        switch (kind) {
        case MomentKind::Q: {
            auto F = [&](double p) {
                double s = 1.0 - p;
                return (s > 0.0 ? s * slog(p) : 0.0) + p;
            };
            return (F(b) - F(a)) / lambda_;
        }
        case MomentKind::pQ: {
            auto H = [&](double p) {
                double s = 1.0 - p;
                double head = s > 0.0 ? 0.5 * s * (2.0 - s) * slog(p) : 0.0;
                return head + 0.25 * p * p + 0.5 * p;
            };
            return (H(b) - H(a)) / lambda_;
        }
        case MomentKind::Qsq: {
            auto K = [&](double p) {
                double s = 1.0 - p;
                if (s <= 0.0) return 0.0;
                double l = slog(p);
                return -(s * l * l - 2.0 * s * l + 2.0 * s);
            };
            return (K(b) - K(a)) / (lambda_ * lambda_);
        }
        default: return std::nullopt;
        }
    }
    void check(ValidationReport& r) const override {
        if (!(lambda_ > 0.0)) r.add("exponential: lambda must be > 0 (got " + fmt(lambda_) + ")");
    }

private:
    double lambda_;
};

// ---------------------------------------------------------------- Pareto I
// Q = sigma (1 - u)^(-1/alpha)
class ParetoI final : public ModelImpl {
public:
    explicit ParetoI(const Params& p) : sigma_(require(p, "sigma")), alpha_(require(p, "alpha")) {}

    double quantile(double u, double ubar) const override {
        return sigma_ * std::exp(-log_ubar(u, ubar) / alpha_);
    }
    double density(double u, double ubar) const override {
        return sigma_ / alpha_ * std::exp((-1.0 / alpha_ - 1.0) * log_ubar(u, ubar));
    }
    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        const double c = -1.0 / alpha_;
        switch (kind) {
        case MomentKind::Q: return sigma_ * comp_integral(a, b, c);
        case MomentKind::pQ: return sigma_ * comp_p_integral(a, b, c);
        case MomentKind::Qsq: return sigma_ * sigma_ * comp_integral(a, b, 2.0 * c);
        default: return std::nullopt;
        }
    }
    bool finite_mean() const override { return alpha_ > 1.0; }
    void check(ValidationReport& r) const override {
        if (!(sigma_ > 0.0)) r.add("pareto1: sigma must be > 0 (got " + fmt(sigma_) + ")");
        if (!(alpha_ > 0.0)) r.add("pareto1: alpha must be > 0 (got " + fmt(alpha_) + ")");
    }

private:
    double sigma_, alpha_;
};

// ---------------------------------------------------------------- Dagum
// Q = b (u^(-1/beta) - 1)^(-1/a)
class Dagum final : public ModelImpl {
public:
    explicit Dagum(const Params& p)
        : a_(require(p, "a")), b_(require(p, "b")), beta_(require(p, "beta")) {}

    double quantile(double u, double ubar) const override {
        return b_ * std::exp(-log_w(u, ubar) / a_);
    }
    double density(double u, double ubar) const override {
        double lu = log_u(u, ubar);
        return std::exp(std::log(b_ / (a_ * beta_)) + (-1.0 / a_ - 1.0) * log_w(u, ubar) +
                        (-1.0 / beta_ - 1.0) * lu);
    }
    bool finite_mean() const override { return a_ > 1.0; }
    void check(ValidationReport& r) const override {
        if (!(a_ > 0.0)) r.add("dagum: a must be > 0 (got " + fmt(a_) + ")");
        if (!(b_ > 0.0)) r.add("dagum: b must be > 0 (got " + fmt(b_) + ")");
        if (!(beta_ > 0.0)) r.add("dagum: beta must be > 0 (got " + fmt(beta_) + ")");
    }

private:
    // log(u^(-1/beta) - 1)
    double log_w(double u, double ubar) const {
        double x = -log_u(u, ubar) / beta_;
        if (x > 30.0) return x + std::log1p(-std::exp(-x));
        return std::log(std::expm1(x));
    }

    double a_, b_, beta_;
};

// ---------------------------------------------------------------- Govindarajulu
// Q = sigma ((beta + 1) u^beta - beta u^(beta + 1))
class Govindarajulu final : public ModelImpl {
public:
    explicit Govindarajulu(const Params& p)
        : sigma_(require(p, "sigma")), beta_(require(p, "beta")) {}

    double quantile(double u, double ubar) const override {
        return sigma_ * std::pow(u, beta_) * (1.0 + beta_ * ubar);
    }
    double density(double u, double ubar) const override {
        return sigma_ * beta_ * (beta_ + 1.0) * std::pow(u, beta_ - 1.0) * ubar;
    }
    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        const double s = sigma_, k = beta_;
        auto P = [&](double c) { return pow_integral(a, b, c); };
        switch (kind) {
        case MomentKind::Q: return s * ((k + 1.0) * P(k) - k * P(k + 1.0));
        case MomentKind::pQ: return s * ((k + 1.0) * P(k + 1.0) - k * P(k + 2.0));
        case MomentKind::Qsq:
            return s * s *
                   ((k + 1.0) * (k + 1.0) * P(2.0 * k) - 2.0 * k * (k + 1.0) * P(2.0 * k + 1.0) +
                    k * k * P(2.0 * k + 2.0));
        case MomentKind::pq: return s * k * (k + 1.0) * (P(k) - P(k + 1.0));
        case MomentKind::p2q: return s * k * (k + 1.0) * (P(k + 1.0) - P(k + 2.0));
        default: return std::nullopt;
        }
    }
    void check(ValidationReport& r) const override {
        if (!(sigma_ > 0.0)) r.add("govindarajulu: sigma must be > 0 (got " + fmt(sigma_) + ")");
        if (!(beta_ > 0.0)) r.add("govindarajulu: beta must be > 0 (got " + fmt(beta_) + ")");
    }

private:
    double sigma_, beta_;
};

// ---------------------------------------------------------------- Kappa
// Q = alpha + (beta/gamma) [1 - ((1 - u^delta)/delta)^gamma]
class Kappa final : public ModelImpl {
public:
    explicit Kappa(const Params& p)
        : alpha_(require(p, "alpha")),
          beta_(require(p, "beta")),
          gamma_(require(p, "gamma")),
          delta_(require(p, "delta")) {}

    double quantile(double u, double ubar) const override {
        double lw = log_w(u, ubar);
        if (std::abs(gamma_) < 1e-12) return alpha_ - beta_ * lw;
        return alpha_ - beta_ * std::expm1(gamma_ * lw) / gamma_;
    }
    double density(double u, double ubar) const override {
        return beta_ * std::exp((delta_ - 1.0) * log_u(u, ubar) + (gamma_ - 1.0) * log_w(u, ubar));
    }
    bool finite_mean() const override { return gamma_ > -1.0; }
    void check(ValidationReport& r) const override {
        if (!(beta_ > 0.0)) r.add("kappa: beta must be > 0 (got " + fmt(beta_) + ")");
        if (delta_ > 0.0 && std::abs(gamma_) > 1e-12) {
            double q0 = alpha_ + beta_ / gamma_ * (1.0 - std::pow(delta_, -gamma_));
            if (q0 < 0.0)
                r.add("kappa: alpha+(beta/gamma)(1-delta^-gamma)=" + fmt(q0) + "<0");
        }
    }

private:
    // log((1 - u^delta)/delta), or log(-log u) at delta = 0.
    double log_w(double u, double ubar) const {
        double lu = log_u(u, ubar);
        if (std::abs(delta_) < 1e-12) return std::log(-lu);
        return std::log(-std::expm1(delta_ * lu) / delta_);
    }

    double alpha_, beta_, gamma_, delta_;
};

// ---------------------------------------------------------------- GLD (Ramberg-Schmeiser)
// Q = lambda1 + (u^lambda3 - (1 - u)^lambda4) / lambda2
class GldRs final : public ModelImpl {
public:
    explicit GldRs(const Params& p)
        : l1_(require(p, "lambda1")),
          l2_(require(p, "lambda2")),
          l3_(require(p, "lambda3")),
          l4_(require(p, "lambda4")) {}

    double quantile(double u, double ubar) const override {
        return l1_ + (std::exp(l3_ * log_u(u, ubar)) - std::exp(l4_ * log_ubar(u, ubar))) / l2_;
    }
    double density(double u, double ubar) const override {
        return (l3_ * std::exp((l3_ - 1.0) * log_u(u, ubar)) +
                l4_ * std::exp((l4_ - 1.0) * log_ubar(u, ubar))) /
               l2_;
    }
    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        if (!(l3_ > -1.0 && l4_ > -1.0)) return std::nullopt;
        switch (kind) {
        case MomentKind::Q:
            return l1_ * (b - a) + (pow_integral(a, b, l3_) - comp_integral(a, b, l4_)) / l2_;
        case MomentKind::pQ:
            return l1_ * 0.5 * (b * b - a * a) +
                   (pow_integral(a, b, l3_ + 1.0) - comp_p_integral(a, b, l4_)) / l2_;
        default: return std::nullopt;
        }
    }
    bool finite_mean() const override { return l3_ > -1.0 && l4_ > -1.0; }
    void check(ValidationReport& r) const override {
        if (!(l2_ > 0.0)) r.add("gld_rs: lambda2 must be > 0 (got " + fmt(l2_) + ")");
        else if (l3_ > 0.0 && l1_ - 1.0 / l2_ < 0.0)
            r.add("gld_rs: lambda1-1/lambda2=" + fmt(l1_ - 1.0 / l2_) + "<0");
    }

private:
    double l1_, l2_, l3_, l4_;
};

// ---------------------------------------------------------------- GLD (Freimer et al.)
// Q = lambda1 + ((u^lambda3 - 1)/lambda3 - ((1 - u)^lambda4 - 1)/lambda4) / lambda2
class GldFmkl final : public ModelImpl {
public:
    explicit GldFmkl(const Params& p)
        : l1_(require(p, "lambda1")),
          l2_(require(p, "lambda2")),
          l3_(require(p, "lambda3")),
          l4_(require(p, "lambda4")) {}

    double quantile(double u, double ubar) const override {
        return l1_ + (box_cox(log_u(u, ubar), l3_) - box_cox(log_ubar(u, ubar), l4_)) / l2_;
    }
    double density(double u, double ubar) const override {
        return (std::exp((l3_ - 1.0) * log_u(u, ubar)) +
                std::exp((l4_ - 1.0) * log_ubar(u, ubar))) /
               l2_;
    }
    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        // The closed forms divide by lambda3, lambda4 and lose precision near 0.
        if (!(l3_ > -1.0 && l4_ > -1.0) || std::abs(l3_) < 1e-4 || std::abs(l4_) < 1e-4)
            return std::nullopt;
        switch (kind) {
        case MomentKind::Q: {
            double w = b - a;
            return l1_ * w +
                   ((pow_integral(a, b, l3_) - w) / l3_ - (comp_integral(a, b, l4_) - w) / l4_) /
                       l2_;
        }
        case MomentKind::pQ: {
            double w = 0.5 * (b * b - a * a);
            return l1_ * w + ((pow_integral(a, b, l3_ + 1.0) - w) / l3_ -
                              (comp_p_integral(a, b, l4_) - w) / l4_) /
                                 l2_;
        }
        default: return std::nullopt;
        }
    }
    bool finite_mean() const override { return l3_ > -1.0 && l4_ > -1.0; }
    void check(ValidationReport& r) const override {
        if (!(l2_ > 0.0)) r.add("gld_fmkl: lambda2 must be > 0 (got " + fmt(l2_) + ")");
        else if (l3_ > 0.0 && l1_ - 1.0 / (l2_ * l3_) < 0.0)
            r.add("gld_fmkl: lambda1-1/(lambda2*lambda3)=" + fmt(l1_ - 1.0 / (l2_ * l3_)) + "<0");
    }

private:
    double l1_, l2_, l3_, l4_;
};

// ---------------------------------------------------------------- Wakeby
// Q = lambda + theta (1 - u)^(-alpha) - phi (1 - u)^beta
class Wakeby final : public ModelImpl {
public:
    explicit Wakeby(const Params& p)
        : lambda_(require(p, "lambda")),
          theta_(require(p, "theta")),
          phi_(require(p, "phi")),
          alpha_(require(p, "alpha")),
          beta_(require(p, "beta")) {}

    double quantile(double u, double ubar) const override {
        double ls = log_ubar(u, ubar);
        double v = lambda_;
        if (theta_ != 0.0) v += theta_ * std::exp(-alpha_ * ls);
        if (phi_ != 0.0) v -= phi_ * std::exp(beta_ * ls);
        return v;
    }
    double density(double u, double ubar) const override {
        double ls = log_ubar(u, ubar);
        double v = 0.0;
        if (theta_ != 0.0) v += alpha_ * theta_ * std::exp((-alpha_ - 1.0) * ls);
        if (phi_ != 0.0) v += beta_ * phi_ * std::exp((beta_ - 1.0) * ls);
        return v;
    }
    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        double t = 0.0, f = 0.0;
        switch (kind) {
        case MomentKind::Q:
            if (theta_ != 0.0) t = theta_ * comp_integral(a, b, -alpha_);
            if (phi_ != 0.0) f = phi_ * comp_integral(a, b, beta_);
            return lambda_ * (b - a) + t - f;
        case MomentKind::pQ:
            if (theta_ != 0.0) t = theta_ * comp_p_integral(a, b, -alpha_);
            if (phi_ != 0.0) f = phi_ * comp_p_integral(a, b, beta_);
            return lambda_ * 0.5 * (b * b - a * a) + t - f;
        default: return std::nullopt;
        }
    }
    bool finite_mean() const override {
        return (theta_ == 0.0 || alpha_ < 1.0) && (phi_ == 0.0 || beta_ > -1.0);
    }
    void check(ValidationReport& r) const override {
        if (theta_ < 0.0) r.add("wakeby: theta must be >= 0 (got " + fmt(theta_) + ")");
        if (phi_ < 0.0) r.add("wakeby: phi must be >= 0 (got " + fmt(phi_) + ")");
        if (!(theta_ > 0.0) && !(phi_ > 0.0)) r.add("wakeby: theta and phi cannot both vanish");
        double q0 = lambda_ + theta_ - phi_;
        if (q0 < 0.0) r.add("wakeby: lambda+theta-phi=" + fmt(q0) + "<0");
    }

private:
    double lambda_, theta_, phi_, alpha_, beta_;
};

// ---------------------------------------------------------------- q(u) = k u^alpha (1-u)^beta
class BetaQDensity final : public ModelImpl {
public:
    explicit BetaQDensity(const Params& p)
        : k_(require(p, "k")), alpha_(require(p, "alpha")), beta_(require(p, "beta")) {
        auto it = p.find("location");
        if (it != p.end()) location_ = it->second;
    }

    double quantile(double u, double ubar) const override {
        if (u <= 0.0) return location_;
        if (!(alpha_ > -1.0)) return -kInf;
        if (beta_ > -1.0) {
            if (u >= 1.0) return location_ + k_ * incomplete_beta(alpha_ + 1.0, beta_ + 1.0, 1.0);
            return location_ + k_ * incomplete_beta(alpha_ + 1.0, beta_ + 1.0, u);
        }
        if (ubar <= 0.0) return kInf;
        // No finite upper end: integrate the density from the origin.
        QuadratureOptions opts;
        opts.abs_tol = 0.0;
        opts.rel_tol = 1e-13;
        auto dens = [&](double p, double pbar) { return density(p, pbar); };
        double total = 0.0;
        total += integrate([&](double p) { return dens(p, 1.0 - p); }, 0.0, std::min(u, 0.5), opts)
                     .value;
        if (u > 0.5)
            total += integrate([&](double s) { return dens(1.0 - s, s); }, ubar, 0.5, opts).value;
        return location_ + total;
    }
    double density(double u, double ubar) const override {
        return k_ * std::exp(alpha_ * log_u(u, ubar) + beta_ * log_ubar(u, ubar));
    }
    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        if (!(alpha_ > -1.0 && beta_ > -1.0)) return std::nullopt;
        auto B = [&](double x, double y) {
            return incomplete_beta(x, y, b) - incomplete_beta(x, y, a);
        };
        double pq = k_ * B(alpha_ + 2.0, beta_ + 1.0);
        double p2q = k_ * B(alpha_ + 3.0, beta_ + 1.0);
        switch (kind) {
        case MomentKind::pq: return pq;
        case MomentKind::p2q: return p2q;
        case MomentKind::Q: return b * quantile(b, 1.0 - b) - a * quantile(a, 1.0 - a) - pq;
        case MomentKind::pQ:
            return 0.5 * (b * b * quantile(b, 1.0 - b) - a * a * quantile(a, 1.0 - a) - p2q);
        default: return std::nullopt;
        }
    }
    bool finite_mean() const override { return beta_ > -2.0; }
    void check(ValidationReport& r) const override {
        if (!(k_ > 0.0)) r.add("beta_q_density: k must be > 0 (got " + fmt(k_) + ")");
        if (!(alpha_ > -1.0))
            r.add("beta_q_density: alpha must be > -1 for a finite Q(0) (got " + fmt(alpha_) + ")");
    }

private:
    double k_, alpha_, beta_;
    double location_ = 0.0;
};

// ---------------------------------------------------------------- Log-linear
// Q = alpha log u + 2 beta u + r on [u_lo, 1], u_lo > 0
class LogLinear final : public ModelImpl {
public:
    LogLinear(const Params& p, const UDomain& d)
        : alpha_(require(p, "alpha")), beta_(require(p, "beta")), r_(require(p, "r")), lo_(d.lo) {}

    double quantile(double u, double ubar) const override {
        return alpha_ * log_u(u, ubar) + 2.0 * beta_ * u + r_;
    }
    double density(double u, double) const override { return alpha_ / u + 2.0 * beta_; }
    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        auto diff = [&](auto F) { return F(b) - F(a); };
        switch (kind) {
        case MomentKind::Q:
            return diff([&](double p) {
                return alpha_ * (xlogx(p) - p) + beta_ * p * p + r_ * p;
            });
        case MomentKind::pQ:
            return diff([&](double p) {
                return alpha_ * (0.5 * p * xlogx(p) - 0.25 * p * p) + 2.0 * beta_ * p * p * p / 3.0 +
                       0.5 * r_ * p * p;
            });
        case MomentKind::pq: return alpha_ * (b - a) + beta_ * (b * b - a * a);
        case MomentKind::p2q:
            return 0.5 * alpha_ * (b * b - a * a) + 2.0 * beta_ * (b * b * b - a * a * a) / 3.0;
        default: return std::nullopt;
        }
    }
    void check(ValidationReport& r) const override {
        if (!(lo_ > 0.0)) r.add("log_linear: u_lo must be > 0 (Q is unbounded below at u = 0)");
    }

private:
    double alpha_, beta_, r_, lo_;
};

} // namespace

double require(const Params& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw ValidationError("missing parameter '" + name + "'");
    if (!std::isfinite(it->second))
        throw ValidationError("parameter '" + name + "' must be finite");
    return it->second;
}

double pow_integral(double a, double b, double c) {
    if (a == b) return 0.0;
    if (a > b) return -pow_integral(b, a, c);
    const double e = c + 1.0;
    if (a == 0.0) {
        if (e <= 0.0) return kInf;
        return std::pow(b, e) / e;
    }
    double la = std::log(a);
    double lb = std::log(b);
    if (std::abs(e) < 1e-14) return lb - la;
    return std::exp(e * la) * std::expm1(e * (lb - la)) / e;
}

std::vector<std::string> parameter_names(Family family) {
    switch (family) {
    case Family::Power: return {"alpha", "beta"};
    case Family::Exponential: return {"lambda"};
    case Family::ParetoI: return {"sigma", "alpha"};
    case Family::Dagum: return {"a", "b", "beta"};
    case Family::Govindarajulu: return {"sigma", "beta"};
    case Family::Kappa: return {"alpha", "beta", "gamma", "delta"};
    case Family::GldRs:
    case Family::GldFmkl: return {"lambda1", "lambda2", "lambda3", "lambda4"};
    case Family::Wakeby: return {"lambda", "theta", "phi", "alpha", "beta"};
    case Family::BetaQDensity: return {"k", "alpha", "beta", "location"};
    case Family::LogLinear: return {"alpha", "beta", "r"};
    case Family::LorenzDerived:
    case Family::TabulatedQ: return {};
    }
    return {};
}

std::shared_ptr<const ModelImpl> make_parametric(Family family, const Params& params,
                                                 const UDomain& domain) {
    switch (family) {
    case Family::Power: return std::make_shared<Power>(params);
    case Family::Exponential: return std::make_shared<Exponential>(params);
    case Family::ParetoI: return std::make_shared<ParetoI>(params);
    case Family::Dagum: return std::make_shared<Dagum>(params);
    case Family::Govindarajulu: return std::make_shared<Govindarajulu>(params);
    case Family::Kappa: return std::make_shared<Kappa>(params);
    case Family::GldRs: return std::make_shared<GldRs>(params);
    case Family::GldFmkl: return std::make_shared<GldFmkl>(params);
    case Family::Wakeby: return std::make_shared<Wakeby>(params);
    case Family::BetaQDensity: return std::make_shared<BetaQDensity>(params);
    case Family::LogLinear: return std::make_shared<LogLinear>(params, domain);
    case Family::LorenzDerived:
    case Family::TabulatedQ: break;
    }
    throw ValidationError("family " + to_string(family) + " is not a parametric family");
}

} // namespace qpov::detail
