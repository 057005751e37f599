#pragma once

#include "qpov/quantile_model.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qpov {

// A place in the raw input where a value is smaller than its predecessor.
struct OrderAnomaly {
    std::size_t index; // 0-based position in the raw input
    double value;
    double previous;
};

// Incomes sorted ascending, with the order violations seen in the raw data.
struct IncomeSample {
    std::vector<double> values;
    std::vector<OrderAnomaly> anomalies;

    std::size_t n() const { return values.size(); }
};

enum class EstimatorMode { Consistent, Literal };

std::string to_string(EstimatorMode mode);
std::optional<EstimatorMode> estimator_mode_from_string(const std::string& name);

// Throws DataError for fewer than two values or any value that is not a
// positive finite number.
IncomeSample load_sample(const std::vector<double>& raw);

// Per capita personal income of the 58 California counties, 2019, in the
// order it was published (one entry is out of order).
const std::vector<double>& california_raw();
IncomeSample builtin_california();

// Piecewise-linear through the plot positions ((i - 1/2)/n, x_i); defined on
// [1/(2n), 1 - 1/(2n)].
double empirical_Q(const IncomeSample& s, double u);
// n (x_{i+1} - x_i) on the band ((i - 1/2)/n, (i + 1/2)/n).
double empirical_q(const IncomeSample& s, double u);

// u = #{x <= t} / n.
double empirical_F(const IncomeSample& s, double t);

// j = floor(n u); throws InsufficientDataError when j < 2.
std::size_t poor_count(const IncomeSample& s, double u);

struct EstimatorRow {
    double u = 0;
    std::size_t j = 0;
    double mu_poor = 0;
    double igr = 0;
    double pgr = 0;
    double gini_poor = 0;
    double sen = 0;
    EstimatorMode mode = EstimatorMode::Consistent;
    bool gini_clamped = false;
};

// Consistent mode: mean of the j poorest, 1 - mean/x_j, the sample Gini of
// the j poorest clamped to [0, 1), and the Sen plug-in. Literal mode keeps
// the classic order-statistics formulas, which estimate the average gap
// (1/u) int_0^u p q(p) dp rather than the mean of the poor.
EstimatorRow estimate(const IncomeSample& s, double u, EstimatorMode mode);

// Rows at u = j/n for j = 2..n.
std::vector<EstimatorRow> estimate_grid(const IncomeSample& s, EstimatorMode mode);

double est_mean_income_poor(const IncomeSample& s, double u, EstimatorMode mode);
double est_igr(const IncomeSample& s, double u, EstimatorMode mode);
double est_pgr(const IncomeSample& s, double u, EstimatorMode mode);
double est_gini_poor(const IncomeSample& s, double u, EstimatorMode mode);
double est_sen(const IncomeSample& s, double u, EstimatorMode mode);

struct LinearMeanFit {
    double alpha = 0;
    double beta = 0;
    double r = 0;
    std::size_t points = 0;
    bool degenerate = false;
    // LogLinear Q(u) = alpha log u + 2 beta u + r on [1/(2n), 1]; absent when degenerate.
    std::optional<QuantileModel> model;
};

// Least squares of y_j = x_j - mean of the j poorest, which estimates
// (1/u) int_0^u p q(p) dp, on (1, u_j) over the u_j = j/n in [u_min, u_max].
// r puts the model median at the sample median.
LinearMeanFit fit_linear_mean(const IncomeSample& s, double u_min = 0.0, double u_max = 1.0);

IncomeSample read_income_csv(std::istream& in, const std::string& source);
void write_income_csv(const std::vector<double>& values, std::ostream& out);
void write_estimator_csv(const std::vector<EstimatorRow>& rows, std::ostream& out);

} // namespace qpov
