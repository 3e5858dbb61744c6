#include "betscan/regression.hpp"

namespace betscan {

std::optional<RegressionResult> linear_regression(std::span<const LinearPoint> data) {
    if (data.size() < 2) return std::nullopt;

    const double count = static_cast<double>(data.size());
    double sum_x = 0.0;
    double sum_y = 0.0;
    for (const auto& d : data) sum_x += d.x;
    for (const auto& d : data) sum_y += d.y;
    const double x_bar = sum_x / count;
    const double y_bar = sum_y / count;

    double cov = 0.0;
    double var_x = 0.0;
    for (const auto& d : data) cov += (d.x - x_bar) * (d.y - y_bar);
    for (const auto& d : data) var_x += (d.x - x_bar) * (d.x - x_bar);
    if (var_x == 0.0) return std::nullopt;

    RegressionResult out;
    out.slope = cov / var_x;
    out.intercept = y_bar - out.slope * x_bar;

    double ss_tot = 0.0;
    for (const auto& d : data) ss_tot += (d.y - y_bar) * (d.y - y_bar);
    const double residual = ss_res(data, out.slope, out.intercept);
    out.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - residual / ss_tot;
    return out;
}

double ss_res(std::span<const LinearPoint> data, double slope, double intercept) {
    double sum = 0.0;
    for (const auto& d : data) {
        const double r = d.y - (slope * d.x + intercept);
        sum += r * r;
    }
    return sum;
}

}  // namespace betscan
