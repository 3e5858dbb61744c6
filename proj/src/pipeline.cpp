#include "betscan/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "betscan/criteria.hpp"
#include "betscan/isotherm.hpp"
#include "betscan/pchip.hpp"
#include "betscan/selection.hpp"
#include "betscan/windows.hpp"

namespace betscan {

AnalysisReport analyze(const Isotherm& iso, const Config& cfg, const AnalyzeOptions& options) {
    validate_config(cfg);

    const PchipInterpolant interpolant = pchip_build(iso);
    const std::vector<IndexRange> ranges = enumerate_window_ranges(iso.size());
    std::vector<CheckOutcome> outcomes(ranges.size(), RejectionReason::TooFewPoints);

    auto run_span = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const Window w{ranges[k], iso.slice(ranges[k])};
            outcomes[k] = check_window(iso, w, interpolant, cfg);
        }
    };

    unsigned workers = 1;
    if (options.execution == Execution::Parallel) {
        workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, ranges.size())));
    }

    if (workers <= 1) {
        run_span(0, ranges.size());
    } else {
        // Each worker owns a disjoint slot range of `outcomes`.
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (ranges.size() + workers - 1) / workers;
        for (std::size_t begin = 0; begin < ranges.size(); begin += chunk) {
            pool.emplace_back(run_span, begin, std::min(ranges.size(), begin + chunk));
        }
    }

    AnalysisReport report;
    for (auto& outcome : outcomes) {
        if (auto* cand = std::get_if<Candidate>(&outcome)) {
            report.candidates.push_back(std::move(*cand));
        } else {
            ++report.rejections[std::get<RejectionReason>(outcome)];
        }
    }
    std::sort(report.candidates.begin(), report.candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.fit.range.end != b.fit.range.end) return a.fit.range.end < b.fit.range.end;
        return a.fit.range.start < b.fit.range.start;
    });

    report.chosen = select_knee(report.candidates);
    if (report.chosen) report.surface_area_m2_per_g = surface_area(report.chosen->fit.nm, cfg);
    report.input_digest = isotherm_digest(iso);
    return report;
}

double surface_area(double nm, const Config& cfg) {
    if (nm < 0.0) throw std::domain_error("surface_area: negative monolayer capacity");
    return nm * cfg.uptake_unit_scale * kAvogadro * cfg.cross_section_nm2 * 1e-18;
}

}  // namespace betscan
