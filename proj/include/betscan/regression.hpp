#pragma once

#include <optional>
#include <span>

#include "betscan/bet_theory.hpp"

namespace betscan {

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares on (x, y) pairs using centred sums:
//   m = sum (x - xbar)(y - ybar) / sum (x - xbar)^2,  b = ybar - m xbar,
//   R^2 = 1 - SSres/SStot, and R^2 = 1 when SStot == 0.
// Returns nullopt for fewer than two points or zero x-variance. Zero tests are
// exact comparisons with 0.0; all sums run left to right in input order.
std::optional<RegressionResult> linear_regression(std::span<const LinearPoint> data);

/// Sum of squared residuals of the line y = m x + b. Empty data gives 0.
double ss_res(std::span<const LinearPoint> data, double slope, double intercept);

}  // namespace betscan
