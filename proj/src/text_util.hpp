// Internal text helpers shared by the CSV and JSON writers.
#pragma once

#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace betscan::detail {

/// 17 significant digits: enough to round-trip any double.
inline std::string format_double(double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

inline std::string_view trim(std::string_view s) noexcept {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

/// Whole-field decimal parse ('.' separator); nullopt on any leftover text.
inline std::optional<double> parse_double(std::string_view field) noexcept {
    field = trim(field);
    if (field.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) return std::nullopt;
    return v;
}

/// Physical lines, 1-based numbering implied by position; strips '\r'.
inline std::vector<std::string_view> lines(std::string_view text) {
    auto out = split(text, '\n');
    if (!out.empty() && out.back().empty()) out.pop_back();
    for (auto& l : out) {
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    }
    return out;
}

}  // namespace betscan::detail
