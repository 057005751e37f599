#include "qpov/error.hpp"
#include "qpov/inversion.hpp"
#include "qpov/lorenz.hpp"
#include "qpov/measures.hpp"

#include <doctest.h>

#include <cmath>

using namespace qpov;

namespace {

QuantileModel power2() { return QuantileModel::create(Family::Power, {{"alpha", 1}, {"beta", 2}}); }
QuantileModel govind() {
    return QuantileModel::create(Family::Govindarajulu, {{"sigma", 1}, {"beta", 2}});
}
QuantileModel expo() { return QuantileModel::create(Family::Exponential, {{"lambda", 1}}); }

// Chebyshev-type grid: dense near both ends, which heavy right tails need.
std::vector<double> cosine_grid(int n) {
    std::vector<double> u;
    for (int i = 1; i <= n; ++i) u.push_back(0.5 * (1 - std::cos(M_PI * (i - 0.5) / n)));
    return u;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> u;
    for (int i = 0; i < n; ++i) u.push_back(a + (b - a) * i / (n - 1));
    u.back() = b;
    return u;
}

double max_rel_error(const QuantileModel& rec, const std::function<double(double)>& truth,
                     double a, double b) {
    double worst = 0;
    for (int i = 0; i <= 200; ++i) {
        double u = i == 200 ? b : a + (b - a) * i / 200;
        worst = std::max(worst, std::abs(eval_Q(rec, u) / truth(u) - 1));
    }
    return worst;
}

} // namespace

TEST_CASE("q_from_pgr: Rohde example") {
    auto u = midpoint_grid(512);
    auto curve = sample_curve([](double p) { return p * p / 2; }, u, CurveKind::PGR);
    auto grid = linspace(u.front(), u.back(), 801);
    for (auto f : {PgrFormula::Integral, PgrFormula::LogDerivative}) {
        auto q = q_from_pgr(curve, grid, f);
        CHECK(std::abs(eval_Q(q, 0.5) - 2.0 / 2.25) < 1e-6);
        CHECK(std::abs(mean(q) - 1.0) < 1e-6);
        // Rohde Q = 2 / (2 - u)^2 has unit mean, so no rescaling is needed.
        CHECK(max_rel_error(q, [](double p) { return 2 / ((2 - p) * (2 - p)); }, 0.05, 0.95) < 1e-6);
    }
}

TEST_CASE("q_from_pgr: power example and round trip") {
    auto u = midpoint_grid(512);
    auto curve = sample_curve([](double p) { return p / 3; }, u, CurveKind::PGR);
    auto grid = linspace(0.05, 0.95, 181);
    auto q = q_from_pgr(curve, grid);
    // Unit-mean power beta = 2 is 1.5 sqrt(u): Q(0.25) / Q(1) = 0.5.
    CHECK(eval_Q(q, 0.25) / 1.5 == doctest::Approx(0.5).epsilon(1e-6));

    auto m = power2();
    auto sampled = sample_curve([&](double p) { return pgr(m, p); }, u, CurveKind::PGR);
    for (auto f : {PgrFormula::Integral, PgrFormula::LogDerivative}) {
        auto r = q_from_pgr(sampled, grid, f);
        CHECK(max_rel_error(r, [](double p) { return 1.5 * std::sqrt(p); }, 0.05, 0.95) < 1e-5);
    }
}

TEST_CASE("q_from_pgr: both formulas agree and outputs have unit mean") {
    auto u = midpoint_grid(512);
    auto grid = linspace(0.1, 0.9, 161);
    for (auto m : {power2(), govind(), lorenz_to_quantile({LorenzKind::Rohde, {{"beta", 2}}, 1.0})}) {
        auto c = sample_curve([&](double p) { return pgr(m, p); }, u, CurveKind::PGR);
        auto a = q_from_pgr(c, grid, PgrFormula::Integral);
        auto b = q_from_pgr(c, grid, PgrFormula::LogDerivative);
        for (double x : grid) CHECK(std::abs(eval_Q(a, x) - eval_Q(b, x)) < 1e-6);
        CHECK(std::abs(mean(a) - 1.0) < 1e-6);
    }
}

TEST_CASE("q_from_watts") {
    auto u = midpoint_grid(512);
    auto grid = linspace(u.front(), u.back(), 400);
    auto q = q_from_watts(sample_curve([](double p) { return p / 2; }, u, CurveKind::Watts), grid);
    CHECK(eval_Q(q, 0.25) == doctest::Approx(0.5).epsilon(1e-6));
    // Q(1-) = 1.
    CHECK(eval_Q(q, u.back()) == doctest::Approx(std::sqrt(u.back())).epsilon(1e-6));

    auto flat = q_from_watts(sample_curve([](double) { return 0.0; }, u, CurveKind::Watts), grid);
    for (double x : {0.1, 0.5, 0.9}) CHECK(eval_Q(flat, x) == doctest::Approx(1.0).epsilon(1e-12));

    // Exponential round trip; the scale is arbitrary so compare ratios.
    auto m = expo();
    auto cu = cosine_grid(512);
    auto w = sample_curve([&](double p) { return watts(m, p); }, cu, CurveKind::Watts);
    auto r = q_from_watts(w, linspace(0.05, 0.9, 171));
    double scale = eval_Q(r, 0.5) / std::log(2.0);
    CHECK(max_rel_error(r, [&](double p) { return -scale * std::log1p(-p); }, 0.05, 0.9) < 1e-4);

    auto bad = sample_curve([](double p) { return p < 0.5 ? p : 1 - p; }, u, CurveKind::Watts);
    CHECK_THROWS_AS(q_from_watts(bad, grid), InvalidCurveError);
}

TEST_CASE("q_from_gini_poor") {
    auto u = midpoint_grid(512);
    auto grid = linspace(0.05, 0.95, 181);
    auto q = q_from_gini_poor(sample_curve([](double) { return 0.2; }, u, CurveKind::GiniPoor), grid);
    // Tight at the nodes; between them the interpolant adds O(h^3) error.
    for (double x : grid) CHECK(eval_Q(q, x) == doctest::Approx(1.5 * std::sqrt(x)).epsilon(1e-8));
    CHECK(max_rel_error(q, [](double p) { return 1.5 * std::sqrt(p); }, 0.05, 0.95) < 1e-5);
    CHECK(std::abs(mean(q) - 1.0) < 1e-6);

    auto flat = q_from_gini_poor(sample_curve([](double) { return 0.0; }, u, CurveKind::GiniPoor), grid);
    for (double x : {0.1, 0.5, 0.9}) CHECK(eval_Q(flat, x) == doctest::Approx(1.0).epsilon(1e-9));

    auto g = govind();
    auto c = sample_curve([&](double p) { return gini_poor(g, p); }, u, CurveKind::GiniPoor);
    auto r = q_from_gini_poor(c, linspace(0.1, 0.9, 161));
    CHECK(max_rel_error(r, [](double p) { return 2 * (3 * p * p - 2 * p * p * p); }, 0.1, 0.9) < 1e-4);
    CHECK(std::abs(mean(r) - 1.0) < 1e-6);

    auto bad = sample_curve([](double p) { return p; }, u, CurveKind::GiniPoor);
    bad.value.back() = 1.0;
    CHECK_THROWS_AS(q_from_gini_poor(bad, grid), InvalidCurveError);
}

TEST_CASE("q_from_D") {
    auto u = midpoint_grid(512);
    auto grid = linspace(0.05, 0.95, 181);
    auto q = q_from_D(sample_curve([](double p) { return p * 2 / 3; }, u, CurveKind::Dfunc), 2.0 / 3, grid);
    CHECK(eval_Q(q, 0.25) == doctest::Approx(0.5).epsilon(1e-6));
    auto flat = q_from_D(sample_curve([](double p) { return p; }, u, CurveKind::Dfunc), 4.0, grid);
    for (double x : {0.1, 0.5, 0.9}) CHECK(eval_Q(flat, x) == doctest::Approx(4.0).epsilon(1e-9));

    auto m = expo();
    auto cu = cosine_grid(512);
    auto d = sample_curve([&](double p) { return p * (1 - igr(m, p)); }, cu, CurveKind::Dfunc);
    auto r = q_from_D(d, 1.0, linspace(0.05, 0.9, 171));
    CHECK(max_rel_error(r, [](double p) { return -std::log1p(-p); }, 0.05, 0.9) < 1e-4);

    auto bad = sample_curve([](double p) { return p - 0.5; }, u, CurveKind::Dfunc);
    CHECK_THROWS_AS(q_from_D(bad, 1.0, grid), InvalidCurveError);
    CHECK_THROWS_AS(q_from_D(sample_curve([](double p) { return p; }, u, CurveKind::Dfunc), -1.0, grid),
                    DomainError);
}

TEST_CASE("round trips through every inversion on the Rohde-derived model") {
    auto m = lorenz_to_quantile({LorenzKind::Rohde, {{"beta", 2}}, 1.0});
    auto truth = [](double p) { return 2 / ((2 - p) * (2 - p)); };
    auto u = midpoint_grid(512);
    auto grid = linspace(0.1, 0.9, 161);
    auto pg = q_from_pgr(sample_curve([&](double p) { return pgr(m, p); }, u, CurveKind::PGR), grid);
    CHECK(max_rel_error(pg, truth, 0.1, 0.9) < 1e-4);
    auto gp = q_from_gini_poor(sample_curve([&](double p) { return gini_poor(m, p); }, u, CurveKind::GiniPoor), grid);
    CHECK(max_rel_error(gp, truth, 0.1, 0.9) < 1e-4);
    auto dd = q_from_D(sample_curve([&](double p) { return d_function(m, p); }, u, CurveKind::Dfunc), 1.0, grid);
    CHECK(max_rel_error(dd, truth, 0.1, 0.9) < 1e-4);
    auto ww = q_from_watts(sample_curve([&](double p) { return watts(m, p); }, u, CurveKind::Watts), grid);
    // Q(1) = 2 for this model.
    CHECK(max_rel_error(ww, [&](double p) { return truth(p) / 2; }, 0.1, 0.9) < 1e-4);
}

TEST_CASE("inversion preconditions") {
    auto u = midpoint_grid(64);
    auto c = sample_curve([](double p) { return p / 3; }, u, CurveKind::PGR);
    CHECK_THROWS_AS(q_from_pgr(c, {0.0001, 0.5}), DomainError);
    CHECK_THROWS_AS(q_from_pgr(c, {0.5}), DomainError);
    CHECK_THROWS_AS(q_from_pgr(c, {0.6, 0.5}), DomainError);
    auto w = c;
    w.kind = CurveKind::Watts;
    CHECK_THROWS_AS(q_from_pgr(w, {0.2, 0.5}), InvalidCurveError);
    auto bad = sample_curve([](double p) { return p; }, u, CurveKind::PGR);
    CHECK_THROWS_AS(q_from_pgr(bad, {0.2, 0.5}), InvalidCurveError);
}

TEST_CASE("pgr_validity") {
    auto u = midpoint_grid(200);
    CHECK(pgr_validity(sample_curve([](double p) { return p * p / 2; }, u, CurveKind::PGR)).ok());
    CHECK_FALSE(pgr_validity(sample_curve([](double p) { return p; }, u, CurveKind::PGR)).ok());
    auto wiggle = pgr_validity(
        sample_curve([](double p) { return p / 2 - 0.1 * std::sin(10 * p); }, u, CurveKind::PGR));
    CHECK_FALSE(wiggle.ok());
    bool monotone_flag = false;
    for (const auto& v : wiggle.violations) monotone_flag |= v.find("not increasing") != std::string::npos;
    CHECK(monotone_flag);
    // Non-monotone but within 0 <= A1 < u.
    auto shifted = pgr_validity(
        sample_curve([](double p) { return 0.3 * p + 0.05 * p * std::sin(20 * p); }, u, CurveKind::PGR));
    CHECK_FALSE(shifted.ok());
    // A jump.
    auto step = pgr_validity(sample_curve([](double p) { return p < 0.5 ? 0.1 * p : 0.1 * p + 0.2; }, u,
                                          CurveKind::PGR));
    CHECK_FALSE(step.ok());
    CHECK(step.violations.front().find("jumps") != std::string::npos);

    // Income scale: incomes x = sqrt(u) give F(t) = t^2 and A1(t) = t^2 / 3 on (0, 1].
    std::vector<double> t;
    for (int i = 1; i <= 400; ++i) t.push_back(i / 400.0);
    CHECK(pgr_validity_income([](double x) { return x * x / 3; }, t).ok());
    CHECK_FALSE(pgr_validity_income([](double x) { return x; }, t).ok());
    CHECK_FALSE(pgr_validity_income([](double x) { return 0.5 / std::sqrt(x); }, t).ok());
    // Stops short of the top of the distribution.
    CHECK_FALSE(pgr_validity_income([](double x) { return x * x / 3; }, {0.1, 0.2, 0.3, 0.4}).ok());
}

TEST_CASE("sen_power_characterization") {
    std::vector<double> u;
    for (int i = 1; i < 100; ++i) u.push_back(i / 100.0);
    for (double beta : {0.5, 2.0, 5.0}) {
        auto m = QuantileModel::create(Family::Power, {{"alpha", 1}, {"beta", beta}});
        auto c = sample_curve([&](double p) { return sen(m, p); }, u, CurveKind::Q);
        auto r = sen_power_characterization(c);
        CHECK(r.is_proportional);
        CHECK(r.residual < 1e-6);
        REQUIRE(r.beta);
        CHECK(std::abs(*r.beta - beta) < 1e-6);
    }
    auto m = QuantileModel::create(Family::Power, {{"alpha", 1}, {"beta", 2}});
    auto r = sen_power_characterization(sample_curve([&](double p) { return sen(m, p); }, u, CurveKind::Q));
    CHECK(r.K == doctest::Approx(7.0 / 15).epsilon(1e-10));

    auto e = expo();
    auto re = sen_power_characterization(sample_curve([&](double p) { return sen(e, p); }, u, CurveKind::Q));
    CHECK_FALSE(re.is_proportional);

    auto z = sen_power_characterization(sample_curve([](double) { return 0.0; }, u, CurveKind::Q));
    CHECK(z.degenerate);
    CHECK(z.K == 0.0);
    auto big = sen_power_characterization(sample_curve([](double p) { return 1.5 * p; }, u, CurveKind::Q));
    CHECK(big.no_solution);
    CHECK_FALSE(power_beta_from_sen_slope(1.0));
    CHECK(*power_beta_from_sen_slope(7.0 / 15) == doctest::Approx(2.0).epsilon(1e-12));
}
