#include "qpov/empirical.hpp"

#include "qpov/csv.hpp"
#include "qpov/error.hpp"
#include "qpov/format.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qpov {

std::string to_string(EstimatorMode mode) {
    return mode == EstimatorMode::Consistent ? "consistent" : "literal";
}

std::optional<EstimatorMode> estimator_mode_from_string(const std::string& name) {
    if (name == "consistent") return EstimatorMode::Consistent;
    if (name == "literal") return EstimatorMode::Literal;
    return std::nullopt;
}

IncomeSample load_sample(const std::vector<double>& raw) {
    if (raw.size() < 2)
        throw DataError("an income sample needs at least two values, got " + std::to_string(raw.size()));
    IncomeSample s;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!(raw[i] > 0.0) || !std::isfinite(raw[i]))
            throw DataError("income #" + std::to_string(i + 1) + " = " + format_number(raw[i]) +
                            " is not a positive amount");
        if (i > 0 && raw[i] < raw[i - 1]) s.anomalies.push_back({i, raw[i], raw[i - 1]});
    }
    s.values = raw;
    std::sort(s.values.begin(), s.values.end());
    return s;
}

const std::vector<double>& california_raw() {
    static const std::vector<double> data = {
        38130, 38445, 39443, 40447, 41077, 41267, 41843, 42043,  //
        42418, 42845, 43268, 43471, 43536, 44259, 45487, 45742,  //
        45920, 47139, 47245, 47245, 47605, 47860, 48438, 48841,  //
        49194, 49654, 51088, 51131, 51342, 52976, 53500, 53505,  //
        54715, 55261, 55266, 55910, 56123, 56534, 59838, 60513,  //
        61004, 63542, 63729, 65094, 66076, 66700, 68936, 69898,  //
        71592, 71711, 72155, 75717, 81171, 85324, 11547, 134107, //
        139405, 147135,
    };
    return data;
}

IncomeSample builtin_california() { return load_sample(california_raw()); }

namespace {

double plot_position(std::size_t i, std::size_t n) { return (static_cast<double>(i) + 0.5) / n; }

void check_interior(const IncomeSample& s, double u) {
    double n = static_cast<double>(s.n());
    if (!(u >= 0.5 / n && u <= 1.0 - 0.5 / n))
        throw DomainError("u=" + format_number(u) + " outside the plot-position range [" +
                          format_number(0.5 / n) + ", " + format_number(1.0 - 0.5 / n) + "]");
}

// 0-based band index i with ((i + 1/2)/n, (i + 3/2)/n) holding u.
std::size_t band(const IncomeSample& s, double u) {
    double n = static_cast<double>(s.n());
    auto i = static_cast<std::size_t>(std::max(0.0, std::floor(n * u - 0.5)));
    return std::min(i, s.n() - 2);
}

} // namespace

double empirical_Q(const IncomeSample& s, double u) {
    check_interior(s, u);
    std::size_t i = band(s, u);
    double u0 = plot_position(i, s.n()), u1 = plot_position(i + 1, s.n());
    double w = std::clamp((u - u0) / (u1 - u0), 0.0, 1.0);
    return s.values[i] + w * (s.values[i + 1] - s.values[i]);
}

double empirical_q(const IncomeSample& s, double u) {
    check_interior(s, u);
    std::size_t i = band(s, u);
    return static_cast<double>(s.n()) * (s.values[i + 1] - s.values[i]);
}

double empirical_F(const IncomeSample& s, double t) {
    auto count = std::upper_bound(s.values.begin(), s.values.end(), t) - s.values.begin();
    return static_cast<double>(count) / s.n();
}

std::size_t poor_count(const IncomeSample& s, double u) {
    if (!(u > 0.0 && u <= 1.0)) throw DomainError("u=" + format_number(u) + " outside (0, 1]");
    // The small offset keeps u = j/n from rounding down to j - 1.
    auto j = static_cast<std::size_t>(std::floor(s.n() * u + 1e-9));
    if (j < 2)
        throw InsufficientDataError("u=" + format_number(u) + " leaves j=" + std::to_string(j) +
                                    " poor incomes; at least 2 are needed");
    return j;
}

EstimatorRow estimate(const IncomeSample& s, double u, EstimatorMode mode) {
    const std::size_t j = poor_count(s, u);
    const auto& x = s.values; // x[i - 1] is x_{i:n}
    const double xj = x[j - 1];
    const double dj = static_cast<double>(j);
    EstimatorRow row;
    row.u = u;
    row.j = j;
    row.mode = mode;

    if (mode == EstimatorMode::Literal) {
        double gap = 0.0, gap2 = 0.0;
        for (std::size_t i = 1; i < j; ++i) {
            double d = x[i] - x[i - 1];
            gap += static_cast<double>(i) * d;
            gap2 += static_cast<double>(i) * static_cast<double>(i) * d;
        }
        row.mu_poor = gap / dj;
        row.igr = row.mu_poor / xj;
        row.gini_poor = row.mu_poor == 0.0 ? 0.0 : 2.0 * gap2 / (dj * dj * row.mu_poor);
    } else {
        // 2 sum(i x_i) / (j^2 mean) - 1 - 1/j, written as sum (2i - j - 1)(x_i - x_1) / (j sum x)
        // so that equal incomes give exactly zero.
        double sum = 0.0, ranked = 0.0;
        for (std::size_t i = 1; i <= j; ++i) {
            sum += x[i - 1];
            ranked += (2.0 * static_cast<double>(i) - dj - 1.0) * (x[i - 1] - x[0]);
        }
        row.mu_poor = sum / dj;
        row.igr = 1.0 - row.mu_poor / xj;
        double g = ranked / (dj * sum);
        row.gini_clamped = g < 0.0 || g >= 1.0;
        row.gini_poor = std::clamp(g, 0.0, std::nextafter(1.0, 0.0));
    }
    row.pgr = u * row.igr;
    row.sen = u * (row.igr + (1.0 - row.igr) * row.gini_poor);
    return row;
}

std::vector<EstimatorRow> estimate_grid(const IncomeSample& s, EstimatorMode mode) {
    std::vector<EstimatorRow> rows;
    for (std::size_t j = 2; j <= s.n(); ++j)
        rows.push_back(estimate(s, static_cast<double>(j) / s.n(), mode));
    return rows;
}

double est_mean_income_poor(const IncomeSample& s, double u, EstimatorMode m) { return estimate(s, u, m).mu_poor; }
double est_igr(const IncomeSample& s, double u, EstimatorMode m) { return estimate(s, u, m).igr; }
double est_pgr(const IncomeSample& s, double u, EstimatorMode m) { return estimate(s, u, m).pgr; }
double est_gini_poor(const IncomeSample& s, double u, EstimatorMode m) { return estimate(s, u, m).gini_poor; }
double est_sen(const IncomeSample& s, double u, EstimatorMode m) { return estimate(s, u, m).sen; }

LinearMeanFit fit_linear_mean(const IncomeSample& s, double u_min, double u_max) {
    if (!(u_min <= u_max)) throw FitError("empty u range for the linear mean fit");
    std::vector<double> us, ys;
    double running = 0.0;
    for (std::size_t j = 1; j <= s.n(); ++j) {
        running += s.values[j - 1];
        double u = static_cast<double>(j) / s.n();
        if (j < 2 || u < u_min - 1e-12 || u > u_max + 1e-12) continue;
        us.push_back(u);
        ys.push_back(s.values[j - 1] - running / j);
    }
    if (us.size() < 10)
        throw FitError("the linear mean fit needs at least 10 grid points, got " + std::to_string(us.size()));

    const double k = static_cast<double>(us.size());
    const double ub = std::accumulate(us.begin(), us.end(), 0.0) / k;
    const double yb = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < us.size(); ++i) {
        sxx += (us[i] - ub) * (us[i] - ub);
        sxy += (us[i] - ub) * (ys[i] - yb);
    }
    if (!(sxx > 0.0)) throw FitError("degenerate design: all u values coincide");

    LinearMeanFit fit;
    fit.points = us.size();
    fit.beta = sxy / sxx;
    fit.alpha = yb - fit.beta * ub;
    double median = empirical_Q(s, 0.5);
    fit.r = median - fit.alpha * std::log(0.5) - fit.beta;
    double scale = std::max(std::abs(median), 1e-300);
    fit.degenerate = std::abs(fit.alpha) <= 1e-9 * scale && std::abs(fit.beta) <= 1e-9 * scale;
    if (fit.degenerate) return fit;
    try {
        fit.model = QuantileModel::create(Family::LogLinear,
                                          {{"alpha", fit.alpha}, {"beta", fit.beta}, {"r", fit.r}},
                                          UDomain{0.5 / s.n(), 1.0});
    } catch (const ValidationError& e) {
        throw FitError(std::string("fitted log-linear model is invalid: ") + e.what());
    }
    return fit;
}

IncomeSample read_income_csv(std::istream& in, const std::string& source) {
    CsvTable t = read_csv(in, source);
    return load_sample(t.values("income"));
}

void write_income_csv(const std::vector<double>& values, std::ostream& out) {
    out << "income\n";
    for (double v : values) out << format_number(v) << '\n';
}

void write_estimator_csv(const std::vector<EstimatorRow>& rows, std::ostream& out) {
    out << "u,mu_poor,igr,pgr,gini_poor,sen,mode\n";
    for (const auto& r : rows)
        out << format_number(r.u) << ',' << format_number(r.mu_poor) << ',' << format_number(r.igr) << ','
            << format_number(r.pgr) << ',' << format_number(r.gini_poor) << ',' << format_number(r.sen)
            << ',' << to_string(r.mode) << '\n';
}

} // namespace qpov
