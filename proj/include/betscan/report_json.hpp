// JSON report serialization.
//
// Top-level keys, in this order: chosen, candidates, rejections,
// surface_area_m2_per_g, input_digest. Candidate objects carry
// start, end, n_points, slope, intercept, r_squared, nm, c, p_nm, p_read,
// pc_error. The window slice is not serialized; it is rebuilt from the
// isotherm on parse. Every double is printed with 17 significant digits, so
// parse(write(r)) reproduces r bit for bit.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "betscan/types.hpp"

namespace betscan {

class ReportFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string write_report_json(const AnalysisReport& report);

/// Parses a report and rebuilds each candidate's window from `iso`. Throws
/// ReportFormatError if the JSON is malformed, does not follow the schema,
/// or its input_digest does not match `iso`.
AnalysisReport parse_report_json(std::string_view json, const Isotherm& iso);

}  // namespace betscan
