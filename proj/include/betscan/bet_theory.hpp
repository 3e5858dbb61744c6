// Forward BET model, the linearized BET transform, and parameter recovery.
//
// The layer-model helpers (layer_ratio_closed / layer_ratio_series) express
// V/(V0*A) for the infinite multilayer model with occupancies s_i = C x^i s0,
// s0 = 1. The closed form and the truncated sums must agree; the tests use
// the series as an independent check on the closed form.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "betscan/types.hpp"

namespace betscan {

/// Linearized coordinates (x = p, y = p / (n (1 - p))).
struct LinearPoint {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const LinearPoint&, const LinearPoint&) = default;
};

struct BetParams {
    double nm = 0.0;
    double c = 0.0;
};

/// Thrown by extract_params when b == 0 or b + m == 0.
class DegenerateFit : public std::domain_error {
public:
    enum class Kind { ZeroIntercept, ZeroSlopePlusIntercept };

    explicit DegenerateFit(Kind kind);
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Thrown by linearize_window; index is the first point whose n(1-p) is zero.
class NonLinearizablePoint : public std::domain_error {
public:
    explicit NonLinearizablePoint(std::size_t index);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// n(p) = C nm p / ((1-p)(1+(C-1)p)). Throws std::domain_error unless 0 < p < 1.
double bet_uptake(double p, double nm, double c);

/// (p, p/(n(1-p))), or nullopt when n(1-p) == 0.
std::optional<LinearPoint> linearize_point(const Point& pt) noexcept;

/// Pointwise linearize_point; the whole window is rejected if any point is
/// not linearizable so indices stay aligned with the parent isotherm.
std::vector<LinearPoint> linearize_window(const std::vector<Point>& window);

/// nm = 1/(b+m), C = 1 + m/b.
BetParams extract_params(double slope, double intercept);

/// 1/(sqrt(C)+1). Throws std::domain_error for C <= 0.
double monolayer_pressure(double c);

/// Layer-model parameters; requires 0 < x < 1 and c > 0.
struct LayerModelParams {
    double c = 0.0;
    double x = 0.0;
};

double layer_ratio_closed(const LayerModelParams& params);

// Truncated V/(V0*A) = (sum_{i=1..terms} i C x^i) / (1 + sum_{i=1..terms} C x^i).
// The tail of both sums after `terms` is bounded by a geometric series in x,
// so the truncation error decays like terms * x^terms.
double layer_ratio_series(const LayerModelParams& params, std::size_t terms);

}  // namespace betscan
