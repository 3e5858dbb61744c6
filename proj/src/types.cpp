#include "betscan/types.hpp"

#include <cmath>
#include <stdexcept>

namespace betscan {

std::vector<Point> Isotherm::slice(IndexRange r) const {
    if (r.start > r.end || r.end >= points_.size()) {
        throw std::out_of_range("Isotherm::slice: range outside isotherm");
    }
    return {points_.begin() + static_cast<std::ptrdiff_t>(r.start),
            points_.begin() + static_cast<std::ptrdiff_t>(r.end) + 1};
}

double uptake_unit_scale(UptakeUnit unit) noexcept {
    switch (unit) {
        case UptakeUnit::MmolPerGram: return 1e-3;
        case UptakeUnit::MolPerGram: return 1.0;
        case UptakeUnit::Cm3StpPerGram: return 1.0 / kStpMolarVolumeCm3;
    }
    return 1e-3;
}

void validate_config(const Config& cfg) {
    if (cfg.min_points < 2) {
        throw std::invalid_argument("min_points must be at least 2");
    }
    if (!(cfg.min_r_squared > 0.0 && cfg.min_r_squared <= 1.0)) {
        throw std::invalid_argument("min_r_squared must lie in (0, 1]");
    }
    if (!(cfg.monolayer_tolerance_pct > 0.0) || !std::isfinite(cfg.monolayer_tolerance_pct)) {
        throw std::invalid_argument("monolayer_tolerance_pct must be positive and finite");
    }
    if (!(cfg.cross_section_nm2 > 0.0) || !std::isfinite(cfg.cross_section_nm2)) {
        throw std::invalid_argument("cross_section_nm2 must be positive and finite");
    }
    if (!(cfg.uptake_unit_scale > 0.0) || !std::isfinite(cfg.uptake_unit_scale)) {
        throw std::invalid_argument("uptake_unit_scale must be positive and finite");
    }
}

std::string_view to_string(RejectionReason reason) noexcept {
    switch (reason) {
        case RejectionReason::TooFewPoints: return "TooFewPoints";
        case RejectionReason::NonLinearizablePoint: return "NonLinearizablePoint";
        case RejectionReason::ZeroVariance: return "ZeroVariance";
        case RejectionReason::LowRSquared: return "LowRSquared";
        case RejectionReason::NotMonotoneN1mP: return "NotMonotoneN1mP";
        case RejectionReason::NotMonotoneLinearized: return "NotMonotoneLinearized";
        case RejectionReason::NonPositiveC: return "NonPositiveC";
        case RejectionReason::NonPositiveNm: return "NonPositiveNm";
        case RejectionReason::MonolayerOutsideWindow: return "MonolayerOutsideWindow";
        case RejectionReason::MonolayerReadFailed: return "MonolayerReadFailed";
        case RejectionReason::ToleranceExceeded: return "ToleranceExceeded";
    }
    return "Unknown";
}

std::optional<RejectionReason> rejection_reason_from_string(std::string_view name) noexcept {
    for (auto r : kAllRejectionReasons) {
        if (to_string(r) == name) return r;
    }
    return std::nullopt;
}

std::size_t RejectionCounts::total() const noexcept {
    std::size_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

RejectionCounts& RejectionCounts::operator+=(const RejectionCounts& other) noexcept {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += other.counts[k];
    return *this;
}

}  // namespace betscan
