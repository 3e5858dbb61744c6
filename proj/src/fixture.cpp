#include "betscan/fixture.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "betscan/csv_io.hpp"
#include "text_util.hpp"

namespace betscan {
namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string optional_number(const std::optional<double>& v) {
    return v ? detail::format_double(*v) : std::string("NA");
}

}  // namespace

std::map<std::string, double> parse_reference_csv(std::string_view text) {
    std::map<std::string, double> out;
    std::size_t name_col = 0;
    std::size_t area_col = 1;
    bool seen_first_row = false;

    const auto all_lines = detail::lines(text);
    for (std::size_t k = 0; k < all_lines.size(); ++k) {
        const std::size_t line_no = k + 1;
        const std::string_view line = detail::trim(all_lines[k]);
        if (line.empty() || line.front() == '#') continue;
        const auto fields = detail::split(line, ',');

        if (!seen_first_row) {
            seen_first_row = true;
            if (fields.size() >= 2 && !detail::parse_double(fields[1])) {
                std::optional<std::size_t> found_name;
                std::optional<std::size_t> found_area;
                for (std::size_t c = 0; c < fields.size(); ++c) {
                    const auto label = lower(detail::trim(fields[c]));
                    if (label == "name") found_name = c;
                    if (label == "area") found_area = c;
                }
                if (!found_name || !found_area) {
                    throw ParseError(line_no, 1, std::string(line), "header must name columns 'name' and 'area'");
                }
                name_col = *found_name;
                area_col = *found_area;
                continue;
            }
        }

        const std::size_t needed = std::max(name_col, area_col) + 1;
        if (fields.size() < needed) {
            throw ParseError(line_no, fields.size() + 1, std::string(line), "missing field");
        }
        const std::string name(detail::trim(fields[name_col]));
        if (name.empty()) throw ParseError(line_no, name_col + 1, std::string(line), "empty name");
        const auto area = detail::parse_double(fields[area_col]);
        if (!area || !std::isfinite(*area)) {
            throw ParseError(line_no, area_col + 1, std::string(detail::trim(fields[area_col])), "not a number");
        }
        if (!out.emplace(name, *area).second) {
            throw ParseError(line_no, name_col + 1, name, "duplicate name");
        }
    }
    return out;
}

std::vector<FixtureRow> compare_fixture(std::string_view reference_csv, const std::map<std::string, double>& computed) {
    const auto reference = parse_reference_csv(reference_csv);

    std::set<std::string> names;
    for (const auto& [name, _] : reference) names.insert(name);
    for (const auto& [name, _] : computed) names.insert(name);

    std::vector<FixtureRow> rows;
    rows.reserve(names.size());
    for (const auto& name : names) {
        FixtureRow row{name, std::nullopt, std::nullopt, std::nullopt};
        if (auto it = reference.find(name); it != reference.end()) row.reference_area = it->second;
        if (auto it = computed.find(name); it != computed.end()) row.computed_area = it->second;
        if (row.reference_area && row.computed_area && *row.reference_area > 0.0) {
            row.deviation_pct = 100.0 * std::fabs(*row.computed_area - *row.reference_area) / *row.reference_area;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string write_fixture_csv(const std::vector<FixtureRow>& rows) {
    std::string out = "name,reference_area,computed_area,deviation_pct\n";
    for (const auto& row : rows) {
        out += row.name + ',' + optional_number(row.reference_area) + ',' + optional_number(row.computed_area) + ',' +
               optional_number(row.deviation_pct) + '\n';
    }
    return out;
}

}  // namespace betscan
