#include "qpov/profile.hpp"

#include "qpov/error.hpp"
#include "qpov/format.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qpov {

PovertyProfile profile(const QuantileModel& model, std::vector<double> u_grid,
                       const std::vector<double>& alphas, const std::vector<double>& betas,
                       const MeasureOptions& opts) {
    PovertyProfile p;
    p.model = model.describe();
    p.alphas = alphas;
    p.betas = betas;
    std::sort(u_grid.begin(), u_grid.end());

    using Cell = std::function<double(double)>;
    std::vector<std::pair<std::string, Cell>> cells;
    cells.emplace_back("u", [](double u) { return u; });
    cells.emplace_back("headcount", [](double u) { return u; });
    cells.emplace_back("A1", [&](double u) { return pgr(model, u, opts); });
    cells.emplace_back("A2", [&](double u) { return depth(model, u, opts); });
    for (double a : alphas)
        cells.emplace_back("fgt_" + format_number(a), [&, a](double u) { return fgt(model, u, a, opts); });
    cells.emplace_back("watts", [&](double u) { return watts(model, u, opts); });
    for (double b : betas)
        cells.emplace_back("clark_" + format_number(b), [&, b](double u) {
            return clark(model, u, b, ClarkRange::Standard, opts);
        });
    cells.emplace_back("igr", [&](double u) { return igr(model, u, opts); });
    cells.emplace_back("mu_poor", [&](double u) { return mean_income_poor(model, u, opts); });
    cells.emplace_back("gini_poor", [&](double u) { return gini_poor(model, u, opts); });
    cells.emplace_back("lorenz", [&](double u) { return lorenz(model, u, opts); });
    cells.emplace_back("sen", [&](double u) { return sen(model, u, opts); });
    cells.emplace_back("shorrocks_sen", [&](double u) { return shorrocks_sen(model, u, opts); });

    for (const auto& c : cells) p.columns.push_back(c.first);

    for (double u : u_grid) {
        std::vector<std::optional<double>> row;
        for (const auto& [name, f] : cells) {
            try {
                double v = f(u);
                if (std::isfinite(v)) {
                    row.emplace_back(v);
                } else {
                    row.emplace_back(std::nullopt);
                    p.cell_errors.push_back("u=" + format_number(u) + " " + name + ": not finite");
                }
            } catch (const Error& e) {
                row.emplace_back(std::nullopt);
                p.cell_errors.push_back("u=" + format_number(u) + " " + name + ": " + e.what());
            }
        }
        p.rows.push_back(std::move(row));
    }

    try {
        p.mean = mean(model, opts);
        p.gini = gini(model, opts);
    } catch (const Error&) {
    }
    return p;
}

void write_profile_csv(const PovertyProfile& profile, std::ostream& out) {
    for (std::size_t i = 0; i < profile.columns.size(); ++i)
        out << (i ? "," : "") << profile.columns[i];
    out << "\n";
    for (const auto& row : profile.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << (row[i] ? format_number(*row[i]) : std::string("nan"));
        out << "\n";
    }
}

} // namespace qpov
