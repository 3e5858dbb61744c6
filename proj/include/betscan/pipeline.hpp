#pragma once

#include "betscan/types.hpp"

namespace betscan {

/// Avogadro constant, 1/mol (exact, SI 2019).
inline constexpr double kAvogadro = 6.02214076e23;

enum class Execution { Sequential, Parallel };

struct AnalyzeOptions {
    Execution execution = Execution::Parallel;
    unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
};

/// Full window scan: every window is checked against the shared PCHIP
/// interpolant of the whole isotherm, admissible windows are collected and
/// sorted by (end, start), and the knee rule picks the reported one. The
/// result does not depend on options.execution or the thread count.
AnalysisReport analyze(const Isotherm& iso, const Config& cfg, const AnalyzeOptions& options = {});

/// nm * uptake_unit_scale * N_A * cross_section_nm2 * 1e-18, in m^2/g.
/// Throws std::domain_error for nm < 0.
double surface_area(double nm, const Config& cfg);

}  // namespace betscan
