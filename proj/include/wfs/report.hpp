#pragma once

#include <string>

#include "wfs/solver.hpp"

namespace wfs {

// JSON document with the full run report, including the iteration log.
std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

// Iteration log as CSV with the columns
// T_len,skipped,status,incumbent,K_star,theta_cap,nodes,seconds.
std::string iterations_to_csv(const RunReport& report);

// Structural equality ignoring wall-clock fields.
bool reports_equivalent(const RunReport& a, const RunReport& b);

} // namespace wfs
