#include "qpov/monotone_cubic.hpp"

#include "qpov/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qpov {

namespace {

double sign(double v) { return (v > 0.0) - (v < 0.0); }

// One-sided three-point end slope, limited to keep the end segment in shape.
double end_slope(double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(m) != sign(d0)) return 0.0;
    if (sign(d0) != sign(d1) && std::abs(m) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return m;
}

} // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw DomainError("monotone cubic needs at least two knots with matching values");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x_[i]) || !std::isfinite(y_[i]))
            throw DomainError("monotone cubic knots must be finite");
        if (i > 0 && !(x_[i] > x_[i - 1]))
            throw DomainError("monotone cubic knots must be strictly increasing");
    }

    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = x_[k + 1] - x_[k];
        d[k] = (y_[k + 1] - y_[k]) / h[k];
    }

    m_.assign(n, 0.0);
    if (n == 2) {
        m_[0] = m_[1] = d[0];
        return;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (d[k - 1] * d[k] <= 0.0) {
            m_[k] = 0.0;
        } else {
            m_[k] = (h[k] * d[k - 1] + h[k - 1] * d[k]) / (h[k - 1] + h[k]);
        }
    }
    m_[0] = end_slope(h[0], h[1], d[0], d[1]);
    m_[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);

    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (d[k] == 0.0) {
            m_[k] = 0.0;
            m_[k + 1] = 0.0;
            continue;
        }
        double alpha = m_[k] / d[k];
        double beta = m_[k + 1] / d[k];
        double r = alpha * alpha + beta * beta;
        if (r > 9.0) {
            double tau = 3.0 / std::sqrt(r);
            m_[k] = tau * alpha * d[k];
            m_[k + 1] = tau * beta * d[k];
        }
    }
}

std::size_t MonotoneCubic::segment(double t) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    std::size_t k = static_cast<std::size_t>(std::distance(x_.begin(), it));
    if (k == 0) return 0;
    return std::min(k - 1, x_.size() - 2);
}

double MonotoneCubic::operator()(double t) const {
    if (t <= x_.front()) return y_.front() + m_.front() * (t - x_.front());
    if (t >= x_.back()) return y_.back() + m_.back() * (t - x_.back());
    std::size_t k = segment(t);
    double h = x_[k + 1] - x_[k];
    double s = (t - x_[k]) / h;
    double s2 = s * s;
    double s3 = s2 * s;
    double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    double h10 = s3 - 2.0 * s2 + s;
    double h01 = -2.0 * s3 + 3.0 * s2;
    double h11 = s3 - s2;
    return h00 * y_[k] + h10 * h * m_[k] + h01 * y_[k + 1] + h11 * h * m_[k + 1];
}

double MonotoneCubic::derivative(double t) const {
    if (t <= x_.front()) return m_.front();
    if (t >= x_.back()) return m_.back();
    std::size_t k = segment(t);
    double h = x_[k + 1] - x_[k];
    double s = (t - x_[k]) / h;
    double s2 = s * s;
    double d00 = (6.0 * s2 - 6.0 * s) / h;
    double d10 = 3.0 * s2 - 4.0 * s + 1.0;
    double d01 = (-6.0 * s2 + 6.0 * s) / h;
    double d11 = 3.0 * s2 - 2.0 * s;
    return d00 * y_[k] + d10 * m_[k] + d01 * y_[k + 1] + d11 * m_[k + 1];
}

double MonotoneCubic::integrate(double a, double b,
                                const std::function<double(double, double, double)>& g) const {
    if (a == b) return 0.0;
    if (a > b) return -integrate(b, a, g);
    // Four-point Gauss-Legendre per segment.
    static constexpr std::array<double, 4> node = {-0.8611363115940526, -0.3399810435848563,
                                                   0.3399810435848563, 0.8611363115940526};
    static constexpr std::array<double, 4> weight = {0.3478548451374538, 0.6521451548625461,
                                                     0.6521451548625461, 0.3478548451374538};
    auto piece = [&](double lo, double hi) {
        double c = 0.5 * (lo + hi);
        double r = 0.5 * (hi - lo);
        double s = 0.0;
        for (std::size_t i = 0; i < node.size(); ++i) {
            double t = c + r * node[i];
            s += weight[i] * g(t, (*this)(t), derivative(t));
        }
        return s * r;
    };
    double total = 0.0;
    double lo = a;
    // Knots interior to (a, b) split the integral into polynomial pieces.
    auto it = std::upper_bound(x_.begin(), x_.end(), a);
    for (; it != x_.end() && *it < b; ++it) {
        total += piece(lo, *it);
        lo = *it;
    }
    total += piece(lo, b);
    return total;
}

} // namespace qpov
