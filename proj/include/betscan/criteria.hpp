// Admissibility checks for a single fitting window.
//
// check_window() runs the checks below in this order and stops at the first
// failure:
//
//   1. window length >= min_points                       TooFewPoints
//   2. every point linearizable                          NonLinearizablePoint
//   3. n(1-p) nondecreasing over the window              NotMonotoneN1mP
//   4. p/(n(1-p)) nondecreasing over the window          NotMonotoneLinearized
//   5. regression defined (nonzero x-variance)           ZeroVariance
//   6. R^2 >= min_r_squared                              LowRSquared
//   7. C > 0, then n_m > 0                               NonPositiveC / NonPositiveNm
//   8. isotherm crosses uptake n_m                       MonolayerReadFailed
//   9. p_read within [p_start, p_end]                    MonolayerOutsideWindow
//  10. pc_error(p_nm, p_read) <= tolerance               ToleranceExceeded
//
// A zero intercept leaves C undefined and is reported as NonPositiveC; a zero
// b + m leaves n_m undefined and is reported as NonPositiveNm.

#pragma once

#include <span>
#include <variant>

#include "betscan/bet_theory.hpp"
#include "betscan/pchip.hpp"
#include "betscan/types.hpp"
#include "betscan/windows.hpp"

namespace betscan {

using CheckOutcome = std::variant<Candidate, RejectionReason>;

inline bool accepted(const CheckOutcome& o) noexcept { return std::holds_alternative<Candidate>(o); }

/// seq[k] <= seq[k+1] for all adjacent pairs; vacuously true for size <= 1.
bool is_nondecreasing(std::span<const double> seq) noexcept;

/// 100 |p_nm - p_read| / p_nm. Throws std::domain_error for p_nm <= 0.
double pc_error(double p_nm, double p_read);

/// Check 7 on its own: n_m and C from the fitted line, or the rejection.
std::variant<BetParams, RejectionReason> admissible_params(double slope, double intercept);

/// Window-membership predicate for the monolayer pressure. Uses the pressure
/// read from the isotherm; the analytic p_nm is constrained by check 10.
bool monolayer_within_window(double p_nm, double p_read, double p_start, double p_end) noexcept;

CheckOutcome check_window(const Isotherm& iso, const Window& w, const PchipInterpolant& interpolant,
                          const Config& cfg);

}  // namespace betscan
