#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "betscan/types.hpp"

namespace betscan {

/// Raised by validate_isotherm(). index is the offending point's position,
/// absent for TooShort.
class IsothermError : public std::runtime_error {
public:
    enum class Kind { NonMonotonePressure, PressureOutOfRange, NonPositiveUptake, NonFinite, TooShort };

    IsothermError(Kind kind, std::optional<std::size_t> index);

    Kind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

protected:
    IsothermError(Kind kind, std::optional<std::size_t> index, const std::string& what);

private:
    Kind kind_;
    std::optional<std::size_t> index_;
};

const char* to_string(IsothermError::Kind kind) noexcept;

// Checks, per point in order: finiteness, 0 < p < 1, n > 0, then p strictly
// above the previous point. The first violation found is thrown. Fewer than
// two points throws TooShort after the per-point checks pass.
//
// Isotherm validate_isotherm(std::vector<Point> points);   (declared in types.hpp)

/// SHA-256 over the canonical text form of the points ("%.17g,%.17g\n" per
/// point), lowercase hex.
std::string isotherm_digest(const Isotherm& iso);

}  // namespace betscan
