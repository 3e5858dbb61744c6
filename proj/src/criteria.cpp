#include "betscan/criteria.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "betscan/regression.hpp"

namespace betscan {

bool is_nondecreasing(std::span<const double> seq) noexcept {
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if (!(seq[k - 1] <= seq[k])) return false;
    }
    return true;
}

double pc_error(double p_nm, double p_read) {
    if (!(p_nm > 0.0)) throw std::domain_error("pc_error: p_nm must be positive");
    return 100.0 * std::fabs(p_nm - p_read) / p_nm;
}

std::variant<BetParams, RejectionReason> admissible_params(double slope, double intercept) {
    BetParams params;
    try {
        params = extract_params(slope, intercept);
    } catch (const DegenerateFit& e) {
        return e.kind() == DegenerateFit::Kind::ZeroIntercept ? RejectionReason::NonPositiveC
                                                              : RejectionReason::NonPositiveNm;
    }
    if (!(params.c > 0.0)) return RejectionReason::NonPositiveC;
    if (!(params.nm > 0.0)) return RejectionReason::NonPositiveNm;
    return params;
}

bool monolayer_within_window(double /*p_nm*/, double p_read, double p_start, double p_end) noexcept {
    return p_start <= p_read && p_read <= p_end;
}

CheckOutcome check_window(const Isotherm& iso, const Window& w, const PchipInterpolant& interpolant,
                          const Config& cfg) {
    const auto& slice = w.slice;
    if (slice.size() < cfg.min_points) return RejectionReason::TooFewPoints;

    std::vector<LinearPoint> linear;
    try {
        linear = linearize_window(slice);
    } catch (const NonLinearizablePoint&) {
        return RejectionReason::NonLinearizablePoint;
    }

    std::vector<double> seq;
    seq.reserve(slice.size());
    for (const auto& pt : slice) seq.push_back(pt.n * (1.0 - pt.p));
    if (!is_nondecreasing(seq)) return RejectionReason::NotMonotoneN1mP;

    seq.clear();
    for (const auto& lp : linear) seq.push_back(lp.y);
    if (!is_nondecreasing(seq)) return RejectionReason::NotMonotoneLinearized;

    const auto reg = linear_regression(linear);
    if (!reg) return RejectionReason::ZeroVariance;
    if (!(reg->r_squared >= cfg.min_r_squared)) return RejectionReason::LowRSquared;

    const auto checked = admissible_params(reg->slope, reg->intercept);
    if (const auto* reason = std::get_if<RejectionReason>(&checked)) return *reason;
    const auto params = std::get<BetParams>(checked);

    const auto p_read = invert_uptake(interpolant, params.nm);
    if (!p_read) return RejectionReason::MonolayerReadFailed;

    const double p_nm = monolayer_pressure(params.c);
    if (!monolayer_within_window(p_nm, *p_read, iso[w.start()].p, iso[w.end()].p)) {
        return RejectionReason::MonolayerOutsideWindow;
    }

    const double err = pc_error(p_nm, *p_read);
    if (!(err <= cfg.monolayer_tolerance_pct)) return RejectionReason::ToleranceExceeded;

    Candidate cand;
    cand.fit = BETFit{reg->slope, reg->intercept, reg->r_squared, params.nm, params.c, w.range, slice.size()};
    cand.window = slice;
    cand.p_nm = p_nm;
    cand.p_read = *p_read;
    cand.pc_error = err;
    return cand;
}

}  // namespace betscan
