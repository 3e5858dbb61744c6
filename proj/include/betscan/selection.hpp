#pragma once

#include <optional>
#include <span>

#include "betscan/types.hpp"

namespace betscan {

// Knee rule: keep the candidates whose window ends at the largest end index,
// then take the smallest pc_error among them; equal errors go to the smallest
// start index (the longest window). Empty input gives nullopt.
std::optional<Candidate> select_knee(std::span<const Candidate> candidates);

}  // namespace betscan
