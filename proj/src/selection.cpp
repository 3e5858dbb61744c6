#include "betscan/selection.hpp"

#include <algorithm>
#include <vector>

namespace betscan {

std::optional<Candidate> select_knee(std::span<const Candidate> candidates) {
    if (candidates.empty()) return std::nullopt;

    std::size_t j_max = 0;
    for (const auto& c : candidates) j_max = std::max(j_max, c.fit.range.end);

    std::vector<const Candidate*> at_knee;
    for (const auto& c : candidates) {
        if (c.fit.range.end == j_max) at_knee.push_back(&c);
    }

    const Candidate* best = at_knee.front();
    for (const Candidate* c : at_knee) {
        if (c->pc_error < best->pc_error ||
            (c->pc_error == best->pc_error && c->fit.range.start < best->fit.range.start)) {
            best = c;
        }
    }
    return *best;
}

}  // namespace betscan
