#include "qpov/quadrature.hpp"

#include "qpov/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace qpov {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    double l1;
    bool splittable;
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, int& evals) {
    double error = 0.0;
    double l1 = 0.0;
    bool finite = true;
    auto guarded = [&](double x) {
        double y = f(x);
        if (!std::isfinite(y)) finite = false;
        return y;
    };
    double value = Rule::integrate(guarded, a, b, 0, 0.0, &error, &l1);
    evals += 21;
    // Boost 1.74 reports the single-panel error on the reference interval
    // [-1, 1]; L1 is already scaled.
    error *= 0.5 * (b - a);
    if (!finite) {
        std::ostringstream msg;
        msg << "integrand is not finite on [" << a << ", " << b << "]";
        throw NumericalError(msg.str(), std::numeric_limits<double>::infinity());
    }
    double mid = 0.5 * (a + b);
    double width = b - a;
    bool splittable = mid > a && mid < b &&
                      width > 8.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(a), std::abs(b)) &&
                      width > 1e-300;
    return {a, b, value, error, std::abs(l1), splittable};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
    QuadratureResult result;
    if (a == b) return result;
    if (!(a < b)) {
        QuadratureResult r = integrate(f, b, a, opts);
        r.value = -r.value;
        return r;
    }

    int evals = 0;
    std::priority_queue<Panel, std::vector<Panel>, ByError> active;
    std::vector<Panel> frozen;

    Panel first = evaluate_panel(f, a, b, evals);
    double total = first.value;
    double total_err = first.error;
    double total_l1 = first.l1;
    active.push(first);
    int intervals = 1;

    auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * total_l1); };

    while (total_err > tolerance()) {
        if (active.empty()) break;
        Panel worst = active.top();
        active.pop();
        if (!worst.splittable) {
            frozen.push_back(worst);
            continue;
        }
        if (intervals >= opts.max_intervals) {
            active.push(worst);
            break;
        }
        double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid, evals);
        Panel right = evaluate_panel(f, mid, worst.b, evals);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        total_l1 += left.l1 + right.l1 - worst.l1;
        active.push(left);
        active.push(right);
        ++intervals;
    }

    // Re-sum from the panels to shed accumulated update rounding.
    double sum = 0.0;
    double err = 0.0;
    double l1 = 0.0;
    auto absorb = [&](const Panel& p) {
        sum += p.value;
        err += p.error;
        l1 += p.l1;
    };
    for (const Panel& p : frozen) absorb(p);
    while (!active.empty()) {
        absorb(active.top());
        active.pop();
    }

    result.value = sum;
    result.error = err;
    result.l1 = l1;
    result.intervals = intervals;
    result.evaluations = evals;

    double tol = std::max(opts.abs_tol, opts.rel_tol * l1);
    // Panels that can no longer be bisected sit at the rounding floor; accept
    // them when they are within a few ulps of the integrand scale.
    double floor = 64.0 * std::numeric_limits<double>::epsilon() * l1;
    if (err > tol && err > floor) {
        std::ostringstream msg;
        msg << "adaptive quadrature on [" << a << ", " << b << "] did not converge: error estimate "
            << err << " exceeds tolerance " << tol << " after " << intervals << " subintervals";
        throw NumericalError(msg.str(), err);
    }
    return result;
}

QuadratureResult integrate_unit(const std::function<double(double, double)>& g, double a,
                                double b, const QuadratureOptions& opts) {
    QuadratureResult total;
    if (a == b) return total;
    if (a > b) {
        QuadratureResult r = integrate_unit(g, b, a, opts);
        r.value = -r.value;
        return r;
    }
    // Split the tolerance between the halves.
    QuadratureOptions half = opts;
    half.abs_tol = opts.abs_tol / 2.0;

    auto combine = [&](const QuadratureResult& r) {
        total.value += r.value;
        total.error += r.error;
        total.l1 += r.l1;
        total.intervals += r.intervals;
        total.evaluations += r.evaluations;
    };

    if (a < 0.5) {
        double hi = std::min(b, 0.5);
        combine(integrate([&](double p) { return g(p, 1.0 - p); }, a, hi, half));
    }
    if (b > 0.5) {
        double lo = std::max(a, 0.5);
        // s runs over [1 - b, 1 - lo]; dp = -ds, orientation flips back.
        combine(integrate([&](double s) { return g(1.0 - s, s); }, 1.0 - b, 1.0 - lo, half));
    }
    return total;
}

} // namespace qpov
