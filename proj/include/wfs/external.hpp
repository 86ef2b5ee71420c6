#pragma once

#include "wfs/model.hpp"
#include "wfs/solver.hpp"

namespace wfs {

// Runs a configured external MIP solver on the model: writes the LP file,
// invokes the command, parses the assignment file and re-certifies the
// result through extract_sequence and evaluate. Solver failures of any kind
// raise BackendError; they are never mapped to NoImprovingSolution.
SolveOutcome external_backend_solve(const Model& m, const Backend& backend,
                                    const Budget& budget);

// Fixed-length solve through the LP-export path: builds the model for
// (inst, t_len, b, cfg), short-circuiting lengths the bounds already prove
// non-improving, then defers to external_backend_solve.
SolveOutcome external_fixed_length_solve(const Instance& inst, int t_len,
                                         const IterationBounds& b, const Settings& cfg,
                                         const Backend& backend, const Budget& budget);

// True when the leading word of the command template resolves to an
// executable (absolute/relative path or via PATH).
bool solver_command_available(const std::string& command_template);

} // namespace wfs
