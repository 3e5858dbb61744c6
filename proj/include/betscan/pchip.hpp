// Shape-preserving piecewise cubic Hermite interpolation (PCHIP).
//
// Knot derivatives follow Fritsch-Carlson: a weighted harmonic mean of the
// adjacent secant slopes at interior knots (zero where the secants change sign
// or vanish), and the three-point one-sided formula at the ends, clipped to
// zero on a sign mismatch and to 3x the first secant when the data turn.
// With two knots the interpolant is the secant line. This is the same
// construction as scipy.interpolate.PchipInterpolator.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "betscan/types.hpp"

namespace betscan {

class OutOfDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PchipInterpolant {
public:
    /// Throws std::invalid_argument unless knots are strictly increasing,
    /// sizes match, and there are at least two knots.
    PchipInterpolant(std::vector<double> knots, std::vector<double> values);

    const std::vector<double>& knots() const noexcept { return knots_; }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<double>& derivs() const noexcept { return derivs_; }

    double lower() const noexcept { return knots_.front(); }
    double upper() const noexcept { return knots_.back(); }

    /// Evaluates on [lower(), upper()]; returns values()[k] exactly at knot k.
    /// Throws OutOfDomain elsewhere (including NaN).
    double operator()(double x) const;

private:
    double eval_interval(std::size_t k, double x) const noexcept;

    std::vector<double> knots_;
    std::vector<double> values_;
    std::vector<double> derivs_;

    friend std::optional<double> invert_uptake(const PchipInterpolant&, double);
};

/// Interpolant of uptake over relative pressure. TooShort cannot occur for a
/// validated Isotherm, but pchip_build still guards the two-point minimum.
PchipInterpolant pchip_build(const Isotherm& iso);

double pchip_eval(const PchipInterpolant& f, double p);

// Smallest p in [lower, upper] with f(p) == n_target, or nullopt when n_target
// lies outside the node value range or is never crossed. The crossing interval
// is found by a left-to-right scan of knot values; within it, bisection runs
// until the bracket cannot be split further in double precision (at most 200
// halvings), so the returned p is within one ulp of the crossing.
std::optional<double> invert_uptake(const PchipInterpolant& f, double n_target);

}  // namespace betscan
