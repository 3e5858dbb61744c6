#include "betscan/pchip.hpp"

#include <algorithm>
#include <cmath>

namespace betscan {
namespace {

int sign(double v) noexcept { return (v > 0.0) - (v < 0.0); }

// One-sided three-point estimate at an end knot; h0/d0 belong to the interval
// touching the end, h1/d1 to the next one in.
double end_derivative(double h0, double h1, double d0, double d1) noexcept {
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(d) != sign(d0)) {
        d = 0.0;
    } else if (sign(d0) != sign(d1) && std::fabs(d) > std::fabs(3.0 * d0)) {
        d = 3.0 * d0;
    }
    return d;
}

constexpr int kInvertMaxIterations = 200;

}  // namespace

PchipInterpolant::PchipInterpolant(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    const std::size_t n = knots_.size();
    if (n < 2) throw std::invalid_argument("PCHIP needs at least two knots");
    if (values_.size() != n) throw std::invalid_argument("PCHIP knot/value size mismatch");
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!(knots_[k] < knots_[k + 1])) throw std::invalid_argument("PCHIP knots must be strictly increasing");
    }

    std::vector<double> h(n - 1);
    std::vector<double> delta(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = knots_[k + 1] - knots_[k];
        delta[k] = (values_[k + 1] - values_[k]) / h[k];
    }

    derivs_.assign(n, 0.0);
    if (n == 2) {
        derivs_[0] = derivs_[1] = delta[0];
        return;
    }

    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double dl = delta[k - 1];
        const double dr = delta[k];
        if (sign(dl) * sign(dr) <= 0) continue;
        const double w1 = 2.0 * h[k] + h[k - 1];
        const double w2 = h[k] + 2.0 * h[k - 1];
        derivs_[k] = (w1 + w2) / (w1 / dl + w2 / dr);
    }
    derivs_[0] = end_derivative(h[0], h[1], delta[0], delta[1]);
    derivs_[n - 1] = end_derivative(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

double PchipInterpolant::eval_interval(std::size_t k, double x) const noexcept {
    const double h = knots_[k + 1] - knots_[k];
    const double t = x - knots_[k];
    const double delta = (values_[k + 1] - values_[k]) / h;
    const double d0 = derivs_[k];
    const double d1 = derivs_[k + 1];
    const double c2 = (3.0 * delta - 2.0 * d0 - d1) / h;
    const double c3 = (d0 + d1 - 2.0 * delta) / (h * h);
    return values_[k] + t * (d0 + t * (c2 + t * c3));
}

double PchipInterpolant::operator()(double x) const {
    if (!(x >= knots_.front() && x <= knots_.back())) {
        throw OutOfDomain("PCHIP evaluation outside the knot range");
    }
    // First knot strictly greater than x; x lies in [knots[k], knots[k+1]).
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    const auto k = static_cast<std::size_t>(it - knots_.begin()) - 1;
    if (knots_[k] == x) return values_[k];
    return eval_interval(k, x);
}

PchipInterpolant pchip_build(const Isotherm& iso) {
    std::vector<double> p;
    std::vector<double> n;
    p.reserve(iso.size());
    n.reserve(iso.size());
    for (const auto& pt : iso.points()) {
        p.push_back(pt.p);
        n.push_back(pt.n);
    }
    return PchipInterpolant(std::move(p), std::move(n));
}

double pchip_eval(const PchipInterpolant& f, double p) { return f(p); }

std::optional<double> invert_uptake(const PchipInterpolant& f, double n_target) {
    if (!std::isfinite(n_target)) return std::nullopt;
    const auto& x = f.knots_;
    const auto& y = f.values_;

    const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
    if (n_target < *lo_it || n_target > *hi_it) return std::nullopt;

    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        if (y[k] == n_target) return x[k];
        const double g0 = y[k] - n_target;
        const double g1 = y[k + 1] - n_target;
        // Every interval is monotone, so a target equal to the right knot
        // value is not reached earlier inside it.
        if (g1 == 0.0) return x[k + 1];
        if ((g0 < 0.0) == (g1 < 0.0)) continue;

        double lo = x[k];
        double hi = x[k + 1];
        double g_lo = g0;
        double g_hi = g1;
        const bool increasing = g0 < 0.0;
        for (int it = 0; it < kInvertMaxIterations; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double g = f.eval_interval(k, mid) - n_target;
            if (g == 0.0) return mid;
            if ((g < 0.0) == increasing) {
                lo = mid;
                g_lo = g;
            } else {
                hi = mid;
                g_hi = g;
            }
        }
        // The bracket is now one ulp wide.
        return std::fabs(g_lo) <= std::fabs(g_hi) ? lo : hi;
    }
    return std::nullopt;
}

}  // namespace betscan
