#pragma once

#include <cstddef>
#include <set>
#include <tuple>
#include <vector>

#include "betscan/types.hpp"

namespace betscan {

/// Contiguous fitting window [start, end] (inclusive) with its point slice.
struct Window {
    IndexRange range;
    std::vector<Point> slice;

    std::size_t start() const noexcept { return range.start; }
    std::size_t end() const noexcept { return range.end; }

    friend bool operator==(const Window&, const Window&) = default;
};

/// All windows with start < end, ordered by start then end. N(N-1)/2 entries.
std::vector<Window> enumerate_windows(const Isotherm& iso);

/// Index pairs only, same order as enumerate_windows.
std::vector<IndexRange> enumerate_window_ranges(std::size_t n_points);

using WindowTriple = std::tuple<std::size_t, std::size_t, std::vector<std::pair<double, double>>>;

/// Brute-force reference set of (start, end, slice) triples built by an
/// independent double loop with element-by-element copying. Test oracle.
std::set<WindowTriple> reference_windows(const std::vector<Point>& points);

}  // namespace betscan
