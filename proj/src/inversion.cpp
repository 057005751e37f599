#include "qpov/inversion.hpp"

#include "qpov/error.hpp"
#include "qpov/format.hpp"
#include "qpov/monotone_cubic.hpp"
#include "qpov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <span>

namespace qpov {

namespace {

void require_valid(const CurveSamples& curve, CurveKind kind, const ValidationReport& extra = {}) {
    if (curve.kind != kind)
        throw InvalidCurveError("expected a " + to_string(kind) + " curve, got " + to_string(curve.kind));
    ValidationReport r = validate(curve);
    for (const auto& v : extra.violations) r.add(v);
    if (!r.ok()) throw InvalidCurveError("invalid " + to_string(kind) + " curve:\n" + r.to_string());
}

void check_grid(const std::vector<double>& grid, const CurveSamples& curve) {
    if (grid.size() < 2) throw DomainError("evaluation grid needs at least two points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw DomainError("evaluation grid must be strictly increasing");
        if (!(grid[i] >= curve.u.front() && grid[i] <= curve.u.back()))
            throw DomainError("evaluation point u=" + format_number(grid[i]) +
                              " lies outside the sampled range [" + format_number(curve.u.front()) +
                              ", " + format_number(curve.u.back()) + "]");
    }
}

// Integral over [a, b] broken at the interpolation knots, where the
// integrand loses smoothness.
double piecewise(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> knots, const QuadratureOptions& q) {
    double total = 0.0;
    double left = a;
    auto it = std::upper_bound(knots.begin(), knots.end(), a);
    for (; it != knots.end() && *it < b; ++it) {
        total += integrate(f, left, *it, q).value;
        left = *it;
    }
    total += integrate(f, left, b, q).value;
    return total;
}

// T_k = int_{u_k}^1 rate, accumulated from the top. The last piece stops at
// 1 - eps and is extrapolated: T = 2 T(eps) - T(2 eps).
std::vector<double> tail_integrals(const std::function<double(double)>& rate,
                                   const std::vector<double>& grid, std::span<const double> knots,
                                   const InversionOptions& o) {
    const double eps = o.tail_eps;
    std::vector<double> T(grid.size());
    double top = grid.back();
    double t;
    if (top < 1.0 - 2.0 * eps) {
        double base = piecewise(rate, top, 1.0 - 2.0 * eps, knots, o.quad);
        double extra = integrate(rate, 1.0 - 2.0 * eps, 1.0 - eps, o.quad).value;
        t = base + 2.0 * extra;
    } else {
        t = top < 1.0 - eps ? integrate(rate, top, 1.0 - eps, o.quad).value : 0.0;
    }
    if (!std::isfinite(t))
        throw NumericalError("tail integral diverges beyond u=" + format_number(top), t);
    T.back() = t;
    for (std::size_t k = grid.size() - 1; k-- > 0;) {
        T[k] = T[k + 1] + piecewise(rate, grid[k], grid[k + 1], knots, o.quad);
        if (!std::isfinite(T[k]))
            throw NumericalError("inversion integral is not finite at u=" + format_number(grid[k]), T[k]);
    }
    return T;
}

QuantileModel finish(const std::vector<double>& grid, std::vector<double> q, TailMasses tails) {
    // Flat stretches come back with rounding-level descents; take those out before validation.
    for (std::size_t k = 1; k < q.size(); ++k)
        if (q[k] < q[k - 1] && q[k - 1] - q[k] <= 1e-12 * std::abs(q[k - 1])) q[k] = q[k - 1];
    try {
        return QuantileModel::tabulated(grid, std::move(q), tails);
    } catch (const ValidationError& e) {
        throw InvalidCurveError(std::string("reconstructed quantile function is invalid: ") + e.what());
    }
}

// Q = mu r(u) exp(-int_u^1 r) where r = Q / int_0^u Q.
QuantileModel from_rate(const std::function<double(double)>& rate, const std::vector<double>& grid,
                        const MonotoneCubic& cubic, double mu, const InversionOptions& o) {
    auto T = tail_integrals(rate, grid, cubic.knots(), o);
    std::vector<double> q(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) q[k] = mu * rate(grid[k]) * std::exp(-T[k]);
    TailMasses tails;
    tails.lower = mu * std::exp(-T.front());
    tails.upper = std::max(0.0, mu * -std::expm1(-T.back()));
    return finish(grid, std::move(q), tails);
}

double positive(double v, const char* what, double p) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidCurveError(std::string(what) + " is not positive at u=" + format_number(p));
    return v;
}

} // namespace

QuantileModel q_from_pgr(const CurveSamples& curve, const std::vector<double>& grid,
                         PgrFormula formula, const InversionOptions& o) {
    if (curve.kind != CurveKind::PGR)
        throw InvalidCurveError("expected a pgr curve, got " + to_string(curve.kind));
    ValidationReport r = pgr_validity(curve);
    if (!r.ok()) throw InvalidCurveError("invalid pgr curve:\n" + r.to_string());
    check_grid(grid, curve);
    MonotoneCubic a(curve.u, curve.value);

    if (formula == PgrFormula::Integral) {
        auto rate = [&](double p) { return 1.0 / positive(p - a(p), "u - A1(u)", p); };
        return from_rate(rate, grid, a, 1.0, o);
    }

    auto rate = [&](double p) { return a.derivative(p) / positive(p - a(p), "u - A1(u)", p); };
    double gap1 = positive(1.0 - a(1.0), "1 - A1(1)", 1.0);
    auto T = tail_integrals(rate, grid, a.knots(), o);
    std::vector<double> q(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) q[k] = std::exp(-T[k]) / gap1;
    TailMasses tails;
    tails.lower = q.front() * (grid.front() - a(grid.front()));
    tails.upper = std::max(0.0, 1.0 - q.back() * (grid.back() - a(grid.back())));
    return finish(grid, std::move(q), tails);
}

QuantileModel q_from_watts(const CurveSamples& curve, const std::vector<double>& grid,
                           const InversionOptions& o) {
    require_valid(curve, CurveKind::Watts);
    check_grid(grid, curve);
    MonotoneCubic w(curve.u, curve.value);
    auto rate = [&](double p) { return w.derivative(p) / p; };
    auto T = tail_integrals(rate, grid, w.knots(), o);
    std::vector<double> q(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) q[k] = std::exp(-T[k]);
    return finish(grid, std::move(q), {});
}

QuantileModel q_from_gini_poor(const CurveSamples& curve, const std::vector<double>& grid,
                               const InversionOptions& o) {
    require_valid(curve, CurveKind::GiniPoor);
    check_grid(grid, curve);
    MonotoneCubic g(curve.u, curve.value);
    auto rate = [&](double p) {
        double G = g(p);
        if (!(G < 1.0)) throw InvalidCurveError("interpolated G_Q reaches 1 at u=" + format_number(p));
        return positive((1.0 + G + p * g.derivative(p)) / (p * (1.0 - G)), "B(u)", p);
    };
    return from_rate(rate, grid, g, 1.0, o);
}

QuantileModel q_from_D(const CurveSamples& curve, double mu, const std::vector<double>& grid,
                       const InversionOptions& o) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mean income must be positive");
    require_valid(curve, CurveKind::Dfunc);
    check_grid(grid, curve);
    MonotoneCubic d(curve.u, curve.value);
    auto rate = [&](double p) { return 1.0 / positive(d(p), "D(u)", p); };
    return from_rate(rate, grid, d, mu, o);
}

ValidationReport pgr_validity(const CurveSamples& curve) {
    CurveSamples c = curve;
    c.kind = CurveKind::PGR;
    ValidationReport r = validate(c);
    if (c.u.size() != c.value.size() || c.u.size() < 2) return r;
    const auto& u = c.u;
    const auto& a = c.value;
    bool reported_monotone = false;
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (!reported_monotone && a[i] < a[i - 1] - 1e-12 * std::max(1.0, std::abs(a[i]))) {
            r.add("A1 is not increasing near u=" + format_number(u[i]));
            reported_monotone = true;
        }
    }
    // A jump shows up as one increment far steeper than both neighbours.
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
        double s_prev = (a[i] - a[i - 1]) / (u[i] - u[i - 1]);
        double s_here = (a[i + 1] - a[i]) / (u[i + 1] - u[i]);
        double s_next = i + 2 < u.size() ? (a[i + 2] - a[i + 1]) / (u[i + 2] - u[i + 1]) : s_prev;
        double jump = a[i + 1] - a[i];
        if (jump > 1e-3 && s_here > 50.0 * std::max({std::abs(s_prev), std::abs(s_next), 1e-12})) {
            r.add("A1 jumps between u=" + format_number(u[i]) + " and u=" + format_number(u[i + 1]));
            break;
        }
    }
    return r;
}

ValidationReport pgr_validity_income(const std::vector<double>& t, const std::vector<double>& a1,
                                     double top_tol) {
    ValidationReport r;
    if (t.size() != a1.size() || t.size() < 3) {
        r.add("income-scale check needs at least three (t, A1) pairs of matching length");
        return r;
    }
    std::vector<double> g(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0 && !(t[i] > t[i - 1])) {
            r.add("incomes must be strictly increasing");
            return r;
        }
        if (!std::isfinite(a1[i]) || a1[i] < 0.0) r.add("A1(" + format_number(t[i]) + ") must be >= 0");
        g[i] = t[i] * a1[i];
    }
    // Slopes of t A1(t) between samples; they estimate F(t), so they must
    // increase (convexity) and stay within [0, 1].
    std::vector<double> slope(t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) slope[i] = (g[i + 1] - g[i]) / (t[i + 1] - t[i]);
    for (std::size_t i = 1; i < slope.size(); ++i) {
        if (slope[i] < slope[i - 1] - 1e-9) {
            r.add("t*A1(t) is not convex near t=" + format_number(t[i]));
            break;
        }
    }
    if (slope.front() < -1e-12) r.add("d/dt[t*A1(t)] is negative at the low end");
    if (std::abs(slope.back() - 1.0) > top_tol)
        r.add("d/dt[t*A1(t)]=" + format_number(slope.back()) + " at the high end does not approach 1");
    for (double s : slope) {
        if (s > 1.0 + 1e-9) {
            r.add("d/dt[t*A1(t)] exceeds 1");
            break;
        }
    }
    return r;
}

ValidationReport pgr_validity_income(const std::function<double(double)>& a1,
                                     const std::vector<double>& t, double top_tol) {
    std::vector<double> v;
    for (double x : t) v.push_back(a1(x));
    return pgr_validity_income(t, v, top_tol);
}

std::optional<double> power_beta_from_sen_slope(double K) {
    if (!(K > 0.0 && K < 1.0)) return std::nullopt;
    auto f = [](double b) { return (3.0 * b + 1.0) / ((b + 1.0) * (2.0 * b + 1.0)); };
    double lo = 0.0, hi = 1.0;
    while (f(hi) > K) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) return std::nullopt;
    }
    for (int i = 0; i < 400; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) > K) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

SenCharacterization sen_power_characterization(const CurveSamples& s, double tol) {
    if (s.u.size() != s.value.size() || s.u.empty())
        throw InvalidCurveError("Sen curve needs matching, non-empty u and value columns");
    SenCharacterization out;
    double su = 0.0, uu = 0.0;
    for (std::size_t i = 0; i < s.u.size(); ++i) {
        su += s.u[i] * s.value[i];
        uu += s.u[i] * s.u[i];
    }
    out.K = su / uu;
    for (std::size_t i = 0; i < s.u.size(); ++i)
        out.residual = std::max(out.residual, std::abs(s.value[i] - out.K * s.u[i]));
    out.is_proportional = out.residual < tol;
    if (out.K == 0.0) {
        out.degenerate = true;
        return out;
    }
    out.beta = power_beta_from_sen_slope(out.K);
    out.no_solution = !out.beta.has_value();
    return out;
}

} // namespace qpov
