#include "betscan/csv_io.hpp"

#include <algorithm>

#include "betscan/bet_theory.hpp"
#include "text_util.hpp"

namespace betscan {

using detail::format_double;

ParseError::ParseError(std::size_t line, std::size_t column, std::string text, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what +
                         " ('" + text + "')"),
      line_(line),
      column_(column),
      text_(std::move(text)) {}

IsothermInputError::IsothermInputError(const IsothermError& cause, std::size_t line)
    : IsothermError(cause.kind(), cause.index(),
                    line != 0 ? "line " + std::to_string(line) + ": " + cause.what() : std::string(cause.what())),
      line_(line) {}

Isotherm parse_isotherm_csv(std::string_view text) {
    std::vector<Point> points;
    std::vector<std::size_t> source_lines;
    bool seen_first_row = false;

    const auto all_lines = detail::lines(text);
    for (std::size_t k = 0; k < all_lines.size(); ++k) {
        const std::size_t line_no = k + 1;
        const std::string_view line = detail::trim(all_lines[k]);
        if (line.empty() || line.front() == '#') continue;

        const auto fields = detail::split(line, ',');
        if (!seen_first_row) {
            seen_first_row = true;
            const bool header = std::none_of(fields.begin(), fields.end(),
                                             [](std::string_view f) { return detail::parse_double(f).has_value(); });
            if (header) continue;
        }

        if (fields.size() != 2) {
            const std::size_t column = fields.size() < 2 ? fields.size() + 1 : 3;
            throw ParseError(line_no, column, std::string(line), "expected exactly two fields");
        }
        Point pt;
        for (std::size_t c = 0; c < 2; ++c) {
            const auto value = detail::parse_double(fields[c]);
            if (!value) {
                throw ParseError(line_no, c + 1, std::string(detail::trim(fields[c])), "not a number");
            }
            (c == 0 ? pt.p : pt.n) = *value;
        }
        points.push_back(pt);
        source_lines.push_back(line_no);
    }

    try {
        return validate_isotherm(std::move(points));
    } catch (const IsothermError& e) {
        const std::size_t line = e.index() ? source_lines.at(*e.index()) : 0;
        throw IsothermInputError(e, line);
    }
}

std::string write_bet_plot_csv(const Isotherm& iso, const Candidate& chosen) {
    std::string out = "p,y_linearized,y_fitted,in_window\n";
    const auto& fit = chosen.fit;
    for (std::size_t k = 0; k < iso.size(); ++k) {
        const Point& pt = iso[k];
        const auto lp = linearize_point(pt);
        const bool in_window = fit.range.start <= k && k <= fit.range.end;
        out += format_double(pt.p);
        out += ',';
        if (lp) out += format_double(lp->y);
        out += ',';
        out += format_double(fit.slope * pt.p + fit.intercept);
        out += in_window ? ",1\n" : ",0\n";
    }
    return out;
}

std::string write_candidates_csv(const std::vector<Candidate>& candidates) {
    std::string out = "start,end,n_points,p_start,p_end,slope,intercept,r_squared,nm,c,p_nm,p_read,pc_error\n";
    for (const auto& cand : candidates) {
        const auto& f = cand.fit;
        const double p_start = cand.window.front().p;
        const double p_end = cand.window.back().p;
        out += std::to_string(f.range.start) + ',' + std::to_string(f.range.end) + ',' + std::to_string(f.n_points);
        for (double v : {p_start, p_end, f.slope, f.intercept, f.r_squared, f.nm, f.c, cand.p_nm, cand.p_read,
                         cand.pc_error}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace betscan
