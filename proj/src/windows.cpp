#include "betscan/windows.hpp"

namespace betscan {

std::vector<IndexRange> enumerate_window_ranges(std::size_t n_points) {
    std::vector<IndexRange> ranges;
    if (n_points < 2) return ranges;
    ranges.reserve(n_points * (n_points - 1) / 2);
    for (std::size_t i = 0; i + 1 < n_points; ++i) {
        for (std::size_t j = i + 1; j < n_points; ++j) ranges.push_back({i, j});
    }
    return ranges;
}

std::vector<Window> enumerate_windows(const Isotherm& iso) {
    std::vector<Window> out;
    for (const auto& r : enumerate_window_ranges(iso.size())) out.push_back({r, iso.slice(r)});
    return out;
}

std::set<WindowTriple> reference_windows(const std::vector<Point>& points) {
    std::set<WindowTriple> out;
    const std::size_t n = points.size();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            std::vector<std::pair<double, double>> slice;
            for (std::size_t k = i; k <= j; ++k) slice.emplace_back(points[k].p, points[k].n);
            out.emplace(i, j, std::move(slice));
        }
    }
    return out;
}

}  // namespace betscan
