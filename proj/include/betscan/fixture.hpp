// Comparison of computed surface areas against a reference table.
//
// Reference CSV: columns name, area (m^2/g). With a header line the columns
// are located by name (case-insensitive) and extra columns are ignored;
// without one, column 1 is the name and column 2 the area.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace betscan {

struct FixtureRow {
    std::string name;
    std::optional<double> reference_area;
    std::optional<double> computed_area;
    std::optional<double> deviation_pct;  // both sides present and reference > 0

    friend bool operator==(const FixtureRow&, const FixtureRow&) = default;
};

/// name -> area. Throws ParseError on malformed text or duplicate names.
std::map<std::string, double> parse_reference_csv(std::string_view text);

/// Outer join on name, sorted by name. deviation_pct = 100 |computed - reference| / reference.
std::vector<FixtureRow> compare_fixture(std::string_view reference_csv, const std::map<std::string, double>& computed);

/// Columns name, reference_area, computed_area, deviation_pct; missing values
/// are written as NA.
std::string write_fixture_csv(const std::vector<FixtureRow>& rows);

}  // namespace betscan
