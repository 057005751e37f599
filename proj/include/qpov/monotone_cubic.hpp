#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qpov {

// Shape-preserving piecewise cubic Hermite interpolant (Fritsch-Carlson).
// Monotone data give a monotone interpolant; slopes vanish at local extrema.
// Outside [x.front(), x.back()] the interpolant continues linearly with the
// end slope.
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;
    double derivative(double t) const;

    // Integral of g(t, f(t), f'(t)) over [a, b], a and b inside the knot range.
    // Exact when g is a polynomial of degree <= 7 in t on each segment.
    double integrate(double a, double b,
                     const std::function<double(double, double, double)>& g) const;

    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    std::span<const double> knots() const { return x_; }
    std::span<const double> values() const { return y_; }
    std::span<const double> slopes() const { return m_; }

private:
    std::size_t segment(double t) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;
};

} // namespace qpov
