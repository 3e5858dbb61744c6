#include "betscan/report_json.hpp"

#include <json.hpp>

#include "betscan/isotherm.hpp"
#include "text_util.hpp"

namespace betscan {
namespace {

using detail::format_double;

void append_candidate(std::string& out, const Candidate& cand) {
    const auto& f = cand.fit;
    out += "{\"start\": " + std::to_string(f.range.start);
    out += ", \"end\": " + std::to_string(f.range.end);
    out += ", \"n_points\": " + std::to_string(f.n_points);
    out += ", \"slope\": " + format_double(f.slope);
    out += ", \"intercept\": " + format_double(f.intercept);
    out += ", \"r_squared\": " + format_double(f.r_squared);
    out += ", \"nm\": " + format_double(f.nm);
    out += ", \"c\": " + format_double(f.c);
    out += ", \"p_nm\": " + format_double(cand.p_nm);
    out += ", \"p_read\": " + format_double(cand.p_read);
    out += ", \"pc_error\": " + format_double(cand.pc_error);
    out += '}';
}

Candidate read_candidate(const nlohmann::json& j, const Isotherm& iso) {
    Candidate cand;
    auto& f = cand.fit;
    f.range.start = j.at("start").get<std::size_t>();
    f.range.end = j.at("end").get<std::size_t>();
    f.n_points = j.at("n_points").get<std::size_t>();
    f.slope = j.at("slope").get<double>();
    f.intercept = j.at("intercept").get<double>();
    f.r_squared = j.at("r_squared").get<double>();
    f.nm = j.at("nm").get<double>();
    f.c = j.at("c").get<double>();
    cand.p_nm = j.at("p_nm").get<double>();
    cand.p_read = j.at("p_read").get<double>();
    cand.pc_error = j.at("pc_error").get<double>();
    if (f.range.start >= f.range.end || f.range.end >= iso.size() || f.n_points != f.range.size()) {
        throw ReportFormatError("candidate window does not fit the isotherm");
    }
    cand.window = iso.slice(f.range);
    return cand;
}

}  // namespace

std::string write_report_json(const AnalysisReport& report) {
    std::string out = "{\n  \"chosen\": ";
    if (report.chosen) {
        append_candidate(out, *report.chosen);
    } else {
        out += "null";
    }

    out += ",\n  \"candidates\": [";
    for (std::size_t k = 0; k < report.candidates.size(); ++k) {
        out += k == 0 ? "\n    " : ",\n    ";
        append_candidate(out, report.candidates[k]);
    }
    out += report.candidates.empty() ? "]" : "\n  ]";

    out += ",\n  \"rejections\": {";
    for (std::size_t k = 0; k < kAllRejectionReasons.size(); ++k) {
        const auto reason = kAllRejectionReasons[k];
        out += k == 0 ? "" : ", ";
        out += '"';
        out += to_string(reason);
        out += "\": " + std::to_string(report.rejections[reason]);
    }
    out += "},\n  \"surface_area_m2_per_g\": ";
    out += report.surface_area_m2_per_g ? format_double(*report.surface_area_m2_per_g) : "null";
    out += ",\n  \"input_digest\": \"" + report.input_digest + "\"\n}\n";
    return out;
}

AnalysisReport parse_report_json(std::string_view json, const Isotherm& iso) {
    try {
        const auto j = nlohmann::json::parse(json);
        AnalysisReport report;

        report.input_digest = j.at("input_digest").get<std::string>();
        if (report.input_digest != isotherm_digest(iso)) {
            throw ReportFormatError("input_digest does not match the supplied isotherm");
        }

        if (!j.at("chosen").is_null()) report.chosen = read_candidate(j.at("chosen"), iso);
        for (const auto& c : j.at("candidates")) report.candidates.push_back(read_candidate(c, iso));

        for (const auto& [name, count] : j.at("rejections").items()) {
            const auto reason = rejection_reason_from_string(name);
            if (!reason) throw ReportFormatError("unknown rejection reason '" + name + "'");
            report.rejections[*reason] = count.get<std::size_t>();
        }

        const auto& area = j.at("surface_area_m2_per_g");
        if (!area.is_null()) report.surface_area_m2_per_g = area.get<double>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ReportFormatError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace betscan
