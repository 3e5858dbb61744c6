// Shared value types for BET window analysis.
//
// Everything here is an immutable-by-convention aggregate; the pipeline never
// mutates an isotherm or a fit after construction.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace betscan {

/// One isotherm sample: relative pressure p = P/P0 and uptake n.
struct Point {
    double p = 0.0;
    double n = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Inclusive index range [start, end] into the parent isotherm.
struct IndexRange {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - start + 1; }

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

class Isotherm;

/// Defined in isotherm.cpp; declared here so Isotherm can befriend it.
Isotherm validate_isotherm(std::vector<Point> points);

/// A validated isotherm. Construct through validate_isotherm() or
/// parse_isotherm_csv(); the invariants (0 < p < 1, n > 0, strictly
/// increasing p, at least two points) are established there.
class Isotherm {
public:
    Isotherm() = default;

    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](std::size_t k) const { return points_[k]; }

    /// Copy of points [r.start, r.end].
    std::vector<Point> slice(IndexRange r) const;

    friend bool operator==(const Isotherm&, const Isotherm&) = default;

private:
    friend Isotherm validate_isotherm(std::vector<Point> points);
    explicit Isotherm(std::vector<Point> points) : points_(std::move(points)) {}

    std::vector<Point> points_;
};

/// Linearized BET regression result for one window, plus derived n_m and C.
struct BETFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double nm = 0.0;
    double c = 0.0;
    IndexRange range;
    std::size_t n_points = 0;

    friend bool operator==(const BETFit&, const BETFit&) = default;
};

/// An admissible window: its fit, the window slice, the analytic monolayer
/// pressure p_nm = 1/(sqrt(C)+1), the pressure read from the interpolated
/// isotherm at uptake n_m, and their percentage disagreement.
struct Candidate {
    BETFit fit;
    std::vector<Point> window;
    double p_nm = 0.0;
    double p_read = 0.0;
    double pc_error = 0.0;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

enum class UptakeUnit { MmolPerGram, MolPerGram, Cm3StpPerGram };

/// Molar volume of an ideal gas at STP used for cm3(STP)/g inputs.
inline constexpr double kStpMolarVolumeCm3 = 22413.96;

/// mol/g per one input uptake unit.
double uptake_unit_scale(UptakeUnit unit) noexcept;

struct Config {
    std::size_t min_points = 10;
    double min_r_squared = 0.995;
    double monolayer_tolerance_pct = 20.0;
    double cross_section_nm2 = 0.162;  // N2 at 77 K
    double uptake_unit_scale = 1e-3;   // mmol/g

    friend bool operator==(const Config&, const Config&) = default;
};

/// Throws std::invalid_argument naming the first out-of-range field.
void validate_config(const Config& cfg);

/// Why a window was not admitted. Declaration order is the reporting order
/// used by the JSON and CSV writers.
enum class RejectionReason : std::size_t {
    TooFewPoints,
    NonLinearizablePoint,
    ZeroVariance,
    LowRSquared,
    NotMonotoneN1mP,
    NotMonotoneLinearized,
    NonPositiveC,
    NonPositiveNm,
    MonolayerOutsideWindow,
    MonolayerReadFailed,
    ToleranceExceeded,
};

inline constexpr std::size_t kRejectionReasonCount = 11;

inline constexpr std::array<RejectionReason, kRejectionReasonCount> kAllRejectionReasons{
    RejectionReason::TooFewPoints,          RejectionReason::NonLinearizablePoint,
    RejectionReason::ZeroVariance,          RejectionReason::LowRSquared,
    RejectionReason::NotMonotoneN1mP,       RejectionReason::NotMonotoneLinearized,
    RejectionReason::NonPositiveC,          RejectionReason::NonPositiveNm,
    RejectionReason::MonolayerOutsideWindow, RejectionReason::MonolayerReadFailed,
    RejectionReason::ToleranceExceeded,
};

std::string_view to_string(RejectionReason reason) noexcept;
std::optional<RejectionReason> rejection_reason_from_string(std::string_view name) noexcept;

/// Per-reason rejection tally, indexed by the enum value.
struct RejectionCounts {
    std::array<std::size_t, kRejectionReasonCount> counts{};

    std::size_t& operator[](RejectionReason r) noexcept { return counts[static_cast<std::size_t>(r)]; }
    std::size_t operator[](RejectionReason r) const noexcept { return counts[static_cast<std::size_t>(r)]; }
    std::size_t total() const noexcept;

    RejectionCounts& operator+=(const RejectionCounts& other) noexcept;

    friend bool operator==(const RejectionCounts&, const RejectionCounts&) = default;
};

struct AnalysisReport {
    std::optional<Candidate> chosen;
    std::vector<Candidate> candidates;  // sorted by (end, start)
    RejectionCounts rejections;
    std::optional<double> surface_area_m2_per_g;
    std::string input_digest;  // lowercase hex SHA-256

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

}  // namespace betscan
