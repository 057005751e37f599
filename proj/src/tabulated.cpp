#include "model_impl.hpp"

#include "qpov/error.hpp"
#include "qpov/monotone_cubic.hpp"

#include <cmath>

namespace qpov::detail {

namespace {

class Tabulated final : public ModelImpl {
public:
    Tabulated(std::vector<double> u, std::vector<double> q, TailMasses tails)
        : cubic_(std::move(u), std::move(q)), tails_(tails) {}

    double quantile(double u, double) const override { return cubic_(u); }
    double density(double u, double) const override { return cubic_.derivative(u); }

    std::optional<double> moment(MomentKind kind, double a, double b) const override {
        switch (kind) {
        case MomentKind::Q:
            return cubic_.integrate(a, b, [](double, double f, double) { return f; });
        case MomentKind::pQ:
            return cubic_.integrate(a, b, [](double t, double f, double) { return t * f; });
        case MomentKind::Qsq:
            return cubic_.integrate(a, b, [](double, double f, double) { return f * f; });
        case MomentKind::pq:
            return cubic_.integrate(a, b, [](double t, double, double df) { return t * df; });
        case MomentKind::p2q:
            return cubic_.integrate(a, b, [](double t, double, double df) { return t * t * df; });
        case MomentKind::logQ: return std::nullopt;
        }
        return std::nullopt;
    }

    TailMasses tails() const override { return tails_; }
    std::vector<double> knots_u() const override {
        return {cubic_.knots().begin(), cubic_.knots().end()};
    }
    std::vector<double> knots_q() const override {
        return {cubic_.values().begin(), cubic_.values().end()};
    }

    void check(ValidationReport& r) const override {
        if (cubic_.front() < 0.0 || cubic_.back() > 1.0) r.add("tabulated: knots must lie in [0, 1]");
        if (tails_.lower && !(*tails_.lower >= 0.0))
            r.add("tabulated: lower tail mass must be >= 0");
        if (tails_.upper && !(*tails_.upper >= 0.0))
            r.add("tabulated: upper tail mass must be >= 0");
    }

private:
    MonotoneCubic cubic_;
    TailMasses tails_;
};

} // namespace

std::shared_ptr<const ModelImpl> make_tabulated(std::vector<double> u, std::vector<double> q,
                                                TailMasses tails) {
    if (u.size() != q.size()) throw ValidationError("tabulated: u and Q columns differ in length");
    try {
        return std::make_shared<Tabulated>(std::move(u), std::move(q), tails);
    } catch (const DomainError& e) {
        throw ValidationError(std::string("tabulated: ") + e.what());
    }
}

} // namespace qpov::detail
