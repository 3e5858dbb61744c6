#include "betscan/bet_theory.hpp"

#include <cmath>
#include <string>

namespace betscan {

DegenerateFit::DegenerateFit(Kind kind)
    : std::domain_error(kind == Kind::ZeroIntercept ? "degenerate fit: intercept is zero"
                                                    : "degenerate fit: slope + intercept is zero"),
      kind_(kind) {}

NonLinearizablePoint::NonLinearizablePoint(std::size_t index)
    : std::domain_error("point " + std::to_string(index) + " has n(1-p) == 0"), index_(index) {}

double bet_uptake(double p, double nm, double c) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("bet_uptake: relative pressure must lie in (0, 1)");
    }
    return c * nm * p / ((1.0 - p) * (1.0 + (c - 1.0) * p));
}

std::optional<LinearPoint> linearize_point(const Point& pt) noexcept {
    const double denom = pt.n * (1.0 - pt.p);
    if (denom == 0.0 || !std::isfinite(denom)) return std::nullopt;
    return LinearPoint{pt.p, pt.p / denom};
}

std::vector<LinearPoint> linearize_window(const std::vector<Point>& window) {
    std::vector<LinearPoint> out;
    out.reserve(window.size());
    for (std::size_t k = 0; k < window.size(); ++k) {
        auto lp = linearize_point(window[k]);
        if (!lp) throw NonLinearizablePoint(k);
        out.push_back(*lp);
    }
    return out;
}

BetParams extract_params(double slope, double intercept) {
    if (intercept == 0.0) throw DegenerateFit(DegenerateFit::Kind::ZeroIntercept);
    if (intercept + slope == 0.0) throw DegenerateFit(DegenerateFit::Kind::ZeroSlopePlusIntercept);
    return {1.0 / (intercept + slope), 1.0 + slope / intercept};
}

double monolayer_pressure(double c) {
    if (!(c > 0.0)) throw std::domain_error("monolayer_pressure: C must be positive");
    return 1.0 / (std::sqrt(c) + 1.0);
}

double layer_ratio_closed(const LayerModelParams& params) {
    const double c = params.c;
    const double x = params.x;
    return c * x / ((1.0 - x) * (1.0 - x + c * x));
}

double layer_ratio_series(const LayerModelParams& params, std::size_t terms) {
    double volume = 0.0;  // sum i * s_i
    double area = 1.0;    // s_0
    double xi = 1.0;
    for (std::size_t i = 1; i <= terms; ++i) {
        xi *= params.x;
        const double si = params.c * xi;
        volume += static_cast<double>(i) * si;
        area += si;
    }
    return volume / area;
}

}  // namespace betscan
