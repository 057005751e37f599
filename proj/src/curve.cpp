#include "qpov/curve.hpp"

#include "qpov/csv.hpp"
#include "qpov/format.hpp"

#include <cmath>

namespace qpov {

std::string to_string(CurveKind kind) {
    switch (kind) {
    case CurveKind::PGR: return "pgr";
    case CurveKind::Watts: return "watts";
    case CurveKind::GiniPoor: return "gini-poor";
    case CurveKind::Dfunc: return "d";
    case CurveKind::Q: return "q";
    }
    return "unknown";
}

std::optional<CurveKind> curve_kind_from_string(const std::string& name) {
    for (auto k : {CurveKind::PGR, CurveKind::Watts, CurveKind::GiniPoor, CurveKind::Dfunc, CurveKind::Q})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

ValidationReport validate(const CurveSamples& c) {
    ValidationReport r;
    if (c.u.size() != c.value.size()) {
        r.add("u and value columns differ in length");
        return r;
    }
    if (c.u.size() < 2) {
        r.add("a curve needs at least two samples");
        return r;
    }
    for (std::size_t i = 0; i < c.u.size(); ++i) {
        double u = c.u[i], v = c.value[i];
        std::string at = "u=" + format_number(u);
        if (!(u > 0.0 && u < 1.0)) r.add(at + ": u must lie in (0, 1)");
        if (i > 0 && !(u > c.u[i - 1])) r.add(at + ": u must be strictly increasing");
        if (!std::isfinite(v)) {
            r.add(at + ": value is not finite");
            continue;
        }
        switch (c.kind) {
        case CurveKind::PGR:
            if (!(v >= 0.0 && v < u)) r.add(at + ": PGR must satisfy 0 <= A1 < u (got " + format_number(v) + ")");
            break;
        case CurveKind::GiniPoor:
            if (!(v >= 0.0 && v < 1.0)) r.add(at + ": Gini of the poor must lie in [0, 1) (got " + format_number(v) + ")");
            break;
        case CurveKind::Dfunc:
            if (!(v > 0.0 && v <= u * (1.0 + 1e-12)))
                r.add(at + ": D must lie in (0, u] (got " + format_number(v) + ")");
            break;
        case CurveKind::Watts:
            if (!(v >= 0.0)) r.add(at + ": Watts measure must be >= 0 (got " + format_number(v) + ")");
            if (i > 0 && v < c.value[i - 1] - 1e-12 * std::max(1.0, std::abs(v)))
                r.add(at + ": Watts measure must be non-decreasing");
            break;
        case CurveKind::Q: break;
        }
    }
    return r;
}

CurveSamples sample_curve(const std::function<double(double)>& f, const std::vector<double>& u,
                          CurveKind kind) {
    CurveSamples c;
    c.kind = kind;
    c.u = u;
    for (double x : u) c.value.push_back(f(x));
    return c;
}

std::vector<double> midpoint_grid(int n) {
    std::vector<double> u;
    for (int i = 1; i <= n; ++i) u.push_back((i - 0.5) / n);
    return u;
}

CurveSamples read_curve_csv(std::istream& in, CurveKind kind, const std::string& source) {
    CsvTable t = read_csv(in, source);
    CurveSamples c;
    c.kind = kind;
    c.u = t.values("u");
    c.value = t.values("value");
    return c;
}

void write_curve_csv(const CurveSamples& c, std::ostream& out) {
    out << "u,value\n";
    for (std::size_t i = 0; i < c.u.size(); ++i)
        out << format_number(c.u[i]) << "," << format_number(c.value[i]) << "\n";
}

} // namespace qpov
