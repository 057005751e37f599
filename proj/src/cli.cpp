#include "qpov/cli.hpp"

#include "qpov/curve.hpp"
#include "qpov/empirical.hpp"
#include "qpov/error.hpp"
#include "qpov/format.hpp"
#include "qpov/inversion.hpp"
#include "qpov/model_json.hpp"
#include "qpov/profile.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace qpov::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Writes to --output when given, else to `out`.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    write(f);
    if (!f) throw IoError("failed writing " + path);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    return f;
}

struct ModelArgs {
    std::string family;
    std::string params;
    std::string model_file;
    std::string u_lo;
    std::string u_hi;
};

void add_model_options(CLI::App* cmd, ModelArgs& m) {
    auto* fam = cmd->add_option("--family", m.family, "Family name, or lorenz:<kind>");
    auto* file = cmd->add_option("--model", m.model_file, "Model JSON file");
    fam->excludes(file);
    cmd->add_option("--params", m.params, "Parameters as name=value,...");
    cmd->add_option("--u-lo", m.u_lo, "Lower end of the u domain");
    cmd->add_option("--u-hi", m.u_hi, "Upper end of the u domain");
}

QuantileModel build_model(const ModelArgs& a) {
    if (!a.model_file.empty()) return read_model_file(a.model_file);
    if (a.family.empty()) throw ValidationError("give --family or --model");
    Params params = parse_params(a.params);
    const std::string prefix = "lorenz:";
    if (a.family.rfind(prefix, 0) == 0) {
        auto kind = lorenz_kind_from_string(a.family.substr(prefix.size()));
        if (!kind) throw ValidationError("unknown Lorenz curve " + a.family);
        return QuantileModel::lorenz_derived(*kind, params);
    }
    auto f = family_from_string(a.family);
    if (!f || *f == Family::TabulatedQ || *f == Family::LorenzDerived)
        throw ValidationError("unknown family " + a.family);
    std::optional<UDomain> domain;
    if (!a.u_lo.empty() || !a.u_hi.empty()) {
        UDomain d;
        if (!a.u_lo.empty()) d.lo = parse_number(a.u_lo, "--u-lo");
        if (!a.u_hi.empty()) d.hi = parse_number(a.u_hi, "--u-hi");
        domain = d;
    }
    return QuantileModel::create(*f, params, domain);
}

int cmd_measures(const ModelArgs& m, const std::string& grid, const std::string& alphas,
                 const std::string& betas, const std::string& output, std::ostream& out, std::ostream& err) {
    QuantileModel model = build_model(m);
    auto prof = profile(model, parse_grid(grid), parse_list(alphas, "--alphas"), parse_list(betas, "--betas"));
    for (const auto& e : prof.cell_errors) err << "warning: " << e << '\n';
    emit(output, out, [&](std::ostream& o) { write_profile_csv(prof, o); });
    return 0;
}

struct InvertArgs {
    std::string from;
    std::string input;
    std::string grid;
    std::string mean;
    std::string formula = "integral";
    std::string model_out;
    std::string output;
};

int cmd_invert(const InvertArgs& a, std::ostream& out, std::ostream& err) {
    auto kind = curve_kind_from_string(a.from);
    if (!kind || *kind == CurveKind::Q)
        throw ValidationError("--from must be one of pgr, watts, gini-poor, d");
    auto in = open_input(a.input);
    CurveSamples curve = read_curve_csv(in, *kind, a.input);
    std::vector<double> grid = a.grid.empty() ? curve.u : parse_grid(a.grid);
    std::optional<double> mu;
    if (!a.mean.empty()) mu = parse_number(a.mean, "--mean");
    if (mu && !(*mu > 0.0)) throw DomainError("--mean must be positive");

    std::optional<QuantileModel> q;
    switch (*kind) {
    case CurveKind::PGR: {
        PgrFormula f;
        if (a.formula == "integral") f = PgrFormula::Integral;
        else if (a.formula == "log-derivative") f = PgrFormula::LogDerivative;
        else throw ValidationError("--formula must be integral or log-derivative");
        q = q_from_pgr(curve, grid, f);
        err << "normalization: unit mean" << (mu ? ", rescaled to mean " + format_number(*mu) : "") << '\n';
        if (mu) q = q->scaled(*mu);
        break;
    }
    case CurveKind::GiniPoor:
        q = q_from_gini_poor(curve, grid);
        err << "normalization: unit mean" << (mu ? ", rescaled to mean " + format_number(*mu) : "") << '\n';
        if (mu) q = q->scaled(*mu);
        break;
    case CurveKind::Dfunc:
        q = q_from_D(curve, mu.value_or(1.0), grid);
        err << "normalization: mean " << format_number(mu.value_or(1.0)) << '\n';
        break;
    case CurveKind::Watts:
        q = q_from_watts(curve, grid);
        if (mu) {
            // No tail masses here: the mean extends Q flat past the table.
            q = q->scaled(*mu / qpov::mean(*q));
            err << "normalization: Q(1-) = 1, rescaled to mean " << format_number(*mu)
                << " with flat extension past the sampled range\n";
        } else {
            err << "normalization: Q(1-) = 1\n";
        }
        break;
    case CurveKind::Q: break;
    }

    if (!a.model_out.empty())
        emit(a.model_out, out, [&](std::ostream& o) { o << model_to_json(*q); });
    emit(a.output, out, [&](std::ostream& o) {
        o << "u,Q\n";
        for (double u : grid) o << format_number(u) << ',' << format_number(eval_Q(*q, u)) << '\n';
    });
    return 0;
}

struct SampleArgs {
    std::string input;
    std::string dataset;
};

void add_sample_options(CLI::App* cmd, SampleArgs& s) {
    auto* in = cmd->add_option("--input", s.input, "Income CSV with an `income` column");
    auto* ds = cmd->add_option("--dataset", s.dataset, "Builtin dataset (california)");
    in->excludes(ds);
}

IncomeSample load(const SampleArgs& s, std::ostream& err) {
    IncomeSample sample;
    if (!s.dataset.empty()) {
        if (s.dataset != "california") throw ValidationError("unknown dataset " + s.dataset);
        sample = builtin_california();
    } else if (!s.input.empty()) {
        auto in = open_input(s.input);
        sample = read_income_csv(in, s.input);
    } else {
        throw ValidationError("give --input or --dataset");
    }
    const std::size_t shown = std::min<std::size_t>(sample.anomalies.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& a = sample.anomalies[i];
        err << "warning: order anomaly: income #" << a.index + 1 << " (" << format_number(a.value)
            << ") follows the larger " << format_number(a.previous) << '\n';
    }
    if (sample.anomalies.size() > shown)
        err << "warning: " << sample.anomalies.size() - shown << " more order anomalies not shown\n";
    return sample;
}

struct EmpiricalArgs {
    SampleArgs sample;
    std::string mode = "consistent";
    std::string poverty_u;
    std::string poverty_line;
    std::string grid;
    std::string output;
};

int cmd_empirical(const EmpiricalArgs& a, std::ostream& out, std::ostream& err) {
    auto mode = estimator_mode_from_string(a.mode);
    if (!mode) throw ValidationError("--mode must be consistent or literal");
    int selectors = !a.poverty_u.empty() + !a.poverty_line.empty() + !a.grid.empty();
    if (selectors > 1) throw ValidationError("give at most one of --poverty-u, --poverty-line, --grid");
    IncomeSample s = load(a.sample, err);

    std::vector<EstimatorRow> rows;
    if (!a.poverty_u.empty()) {
        rows.push_back(estimate(s, parse_number(a.poverty_u, "--poverty-u"), *mode));
    } else if (!a.poverty_line.empty()) {
        double u = empirical_F(s, parse_number(a.poverty_line, "--poverty-line"));
        rows.push_back(estimate(s, u, *mode));
    } else if (a.grid.empty() || a.grid == "full") {
        rows = estimate_grid(s, *mode);
    } else {
        for (double u : parse_grid(a.grid)) rows.push_back(estimate(s, u, *mode));
    }
    for (const auto& r : rows)
        if (r.gini_clamped) err << "warning: Gini of the poor clamped at u=" << format_number(r.u) << '\n';
    emit(a.output, out, [&](std::ostream& o) { write_estimator_csv(rows, o); });
    return 0;
}

int cmd_fit_mean(const SampleArgs& sa, const std::string& u_min, const std::string& u_max,
                 const std::string& output, std::ostream& out, std::ostream& err) {
    IncomeSample s = load(sa, err);
    double lo = u_min.empty() ? 0.0 : parse_number(u_min, "--u-min");
    double hi = u_max.empty() ? 1.0 : parse_number(u_max, "--u-max");
    LinearMeanFit fit = fit_linear_mean(s, lo, hi);
    err << "alpha=" << format_number(fit.alpha) << " beta=" << format_number(fit.beta)
        << " r=" << format_number(fit.r) << " points=" << fit.points << '\n';
    if (fit.degenerate) throw FitError("degenerate fit: the sample shows no spread below the line");
    emit(output, out, [&](std::ostream& o) { o << model_to_json(*fit.model); });
    return 0;
}

int cmd_dataset(const std::string& name, bool sorted, const std::string& output, std::ostream& out) {
    if (name != "california") throw ValidationError("unknown dataset " + name);
    const auto& values = sorted ? builtin_california().values : california_raw();
    emit(output, out, [&](std::ostream& o) { write_income_csv(values, o); });
    return 0;
}

int exit_code(const Error& e) { return e.kind() == ErrorKind::Io ? 3 : 2; }

} // namespace

std::vector<double> parse_list(const std::string& spec, const std::string& what) {
    std::vector<double> v;
    if (trim(spec).empty()) return v;
    for (const auto& part : split(spec, ',')) v.push_back(parse_number(trim(part), what));
    return v;
}

std::vector<double> parse_grid(const std::string& spec) {
    if (spec.find(':') == std::string::npos) return parse_list(spec, "--grid");
    auto parts = split(spec, ':');
    if (parts.size() != 3) throw ValidationError("grid must be start:stop:step, got " + spec);
    double a = parse_number(trim(parts[0]), "grid start");
    double b = parse_number(trim(parts[1]), "grid stop");
    double s = parse_number(trim(parts[2]), "grid step");
    if (!(s > 0.0)) throw ValidationError("grid step must be positive");
    if (!(b >= a)) throw ValidationError("grid stop lies below its start");
    double steps = (b - a) / s;
    if (steps > 1e7) throw ValidationError("grid has too many points");
    auto n = static_cast<long>(std::floor(steps + 0.5));
    std::vector<double> g;
    for (long k = 0; k < n; ++k) g.push_back(a + k * s);
    // The last point is the stop itself rather than an accumulated a + n s.
    g.push_back(n == 0 ? a : b);
    return g;
}

Params parse_params(const std::string& spec) {
    Params p;
    if (trim(spec).empty()) return p;
    for (const auto& item : split(spec, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("parameter \"" + item + "\" is not name=value");
        std::string name = trim(item.substr(0, eq));
        if (name.empty()) throw ValidationError("parameter \"" + item + "\" has no name");
        if (p.count(name)) throw ValidationError("parameter " + name + " given twice");
        p[name] = parse_number(trim(item.substr(eq + 1)), "parameter " + name);
    }
    return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantile-based poverty and inequality measures"};
    app.name("qpov");
    app.require_subcommand(1);

    ModelArgs model;
    std::string grid, alphas, betas, output;
    auto* measures = app.add_subcommand("measures", "Profile of every measure on a u grid");
    add_model_options(measures, model);
    measures->add_option("--grid", grid, "start:stop:step or a comma list");
    measures->add_option("--alphas", alphas, "FGT exponents to add as columns");
    measures->add_option("--betas", betas, "Clark exponents to add as columns");
    measures->add_option("--output,-o", output, "Output file (default stdout)");

    InvertArgs inv;
    auto* invert = app.add_subcommand("invert", "Reconstruct Q from a measure curve");
    invert->add_option("--from", inv.from, "Curve kind: pgr, watts, gini-poor, d")->required();
    invert->add_option("--input", inv.input, "Curve CSV with columns u,value")->required();
    invert->add_option("--grid", inv.grid, "Output u grid (default: the curve's u)");
    invert->add_option("--mean", inv.mean, "Mean income; rescales the result");
    invert->add_option("--formula", inv.formula, "pgr only: integral or log-derivative");
    invert->add_option("--model-out", inv.model_out, "Also write the tabulated model JSON here");
    invert->add_option("--output,-o", inv.output, "Output file (default stdout)");

    EmpiricalArgs emp;
    auto* empirical = app.add_subcommand("empirical", "Order-statistics estimators for a sample");
    add_sample_options(empirical, emp.sample);
    empirical->add_option("--mode", emp.mode, "consistent or literal");
    empirical->add_option("--poverty-u", emp.poverty_u, "Head-count level u");
    empirical->add_option("--poverty-line", emp.poverty_line, "Poverty line in income units");
    empirical->add_option("--grid", emp.grid, "full (u = j/n) or a grid spec");
    empirical->add_option("--output,-o", emp.output, "Output file (default stdout)");

    SampleArgs fit_sample;
    std::string u_min, u_max, fit_output;
    auto* fit = app.add_subcommand("fit-mean", "Fit a linear average gap and emit the log-linear model");
    add_sample_options(fit, fit_sample);
    fit->add_option("--u-min", u_min, "Smallest u = j/n used in the fit");
    fit->add_option("--u-max", u_max, "Largest u = j/n used in the fit");
    fit->add_option("--output,-o", fit_output, "Output file (default stdout)");

    std::string ds_name, ds_output;
    bool ds_sorted = false;
    auto* dataset = app.add_subcommand("dataset", "Write a builtin dataset as income CSV");
    dataset->add_option("name", ds_name, "Dataset name (california)")->required();
    dataset->add_flag("--sorted", ds_sorted, "Sort ascending instead of the published order");
    dataset->add_option("--output,-o", ds_output, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*measures) return cmd_measures(model, grid, alphas, betas, output, out, err);
        if (*invert) return cmd_invert(inv, out, err);
        if (*empirical) return cmd_empirical(emp, out, err);
        if (*fit) return cmd_fit_mean(fit_sample, u_min, u_max, fit_output, out, err);
        if (*dataset) return cmd_dataset(ds_name, ds_sorted, ds_output, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace qpov::cli
