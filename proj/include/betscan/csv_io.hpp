// Isotherm CSV ingestion and CSV exports (BET plot data, candidate table).
//
// Input format: two comma-separated numeric columns, relative pressure then
// uptake, '.' as decimal point. Blank lines and lines starting with '#' are
// skipped. The first remaining line is treated as a header when none of its
// fields parse as numbers.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "betscan/isotherm.hpp"
#include "betscan/types.hpp"

namespace betscan {

/// Malformed CSV text. line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::string text, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& text() const noexcept { return text_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string text_;
};

/// A validation failure on parsed CSV data, carrying the source line of the
/// offending point (0 for TooShort).
class IsothermInputError : public IsothermError {
public:
    IsothermInputError(const IsothermError& cause, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

Isotherm parse_isotherm_csv(std::string_view text);

/// Columns p, y_linearized, y_fitted, in_window; one row per isotherm point.
std::string write_bet_plot_csv(const Isotherm& iso, const Candidate& chosen);

/// Full candidate table in report order.
std::string write_candidates_csv(const std::vector<Candidate>& candidates);

}  // namespace betscan
