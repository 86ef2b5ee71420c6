#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfs/bounds.hpp"
#include "wfs/core.hpp"
#include "wfs/settings.hpp"

namespace wfs {

using Clock = std::chrono::steady_clock;

// Wall-clock allowance for a solve. No deadline means unlimited.
struct Budget {
    std::optional<Clock::time_point> deadline;

    static Budget unlimited() { return {}; }
    static Budget seconds(double s) {
        Budget b;
        b.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(s));
        return b;
    }
    bool expired() const { return deadline.has_value() && Clock::now() >= *deadline; }
    // Seconds left, if bounded; never negative.
    std::optional<double> remaining_seconds() const {
        if (!deadline.has_value()) return std::nullopt;
        const double s = std::chrono::duration<double>(*deadline - Clock::now()).count();
        return s > 0 ? s : 0.0;
    }
};

enum class SolveStatus { Improved, NoImprovingSolution, TimedOut };

std::string to_string(SolveStatus s);
SolveStatus solve_status_from_string(const std::string& s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::NoImprovingSolution;
    std::optional<Sequence> sequence;            // Improved, or best found on timeout
    std::optional<std::int64_t> objective;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// A configured external MIP solver invocation failed; never reported as
// NoImprovingSolution.
struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BackendKind { Native, LpExport };

struct Backend {
    BackendKind kind = BackendKind::Native;
    // Command template for LpExport: "{lp}" and "{sol}" expand to the model
    // and assignment paths, "{tl}" to the remaining seconds; without
    // placeholders both paths are appended. Exit 0 = optimal, 10 =
    // infeasible, 20 = time limit.
    std::string solver_command;
    // Where LpExport keeps the files it exchanges with the solver.
    std::string work_dir = ".";
};

// Internal switches of the native search. The two bounds only discard
// subtrees whose best completion is provably no better than the current cap,
// and the warm start only seeds that cap with a constructed solution, so
// every combination returns the same objective.
struct BnbOptions {
    bool closed_gap_bound = true;
    bool lookahead_bound = true;
    bool warm_start = true;
};

// Search-space description in canonical symbol order. The first-position fix
// and the tied-symbol ordering are always sound reductions: the feasible set
// is closed under rotation and under exchanging symbols with equal weight,
// frequency and count window, so they never change the optimal value.
struct BnbProblem {
    int n = 0;
    int t_len = 0;
    std::vector<std::int64_t> w;       // canonical order
    std::vector<int> count_lb;
    std::vector<int> count_ub;
    std::vector<char> no_self_adjacent;
    std::vector<char> tied_to_previous; // equal (w, f) with the previous symbol
    bool fix_first_symbol = false;
    std::optional<std::int64_t> cap;   // search for objective < cap
};

struct BnbResult {
    bool found = false;
    std::int64_t objective = 0;
    std::vector<int> sequence; // canonical symbols
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

// Exact depth-first search over position assignments. Returns the optimal
// sequence with objective < cap (if any), or proves none exists.
BnbResult branch_and_bound(const BnbProblem& problem, const Budget& budget,
                           const BnbOptions& options = {});

// One fixed-length solve with the native backend: derives the effective
// occurrence windows and cap from (b, cfg) and searches directly in
// sequence space.
SolveOutcome native_branch_and_bound(const Instance& inst, int t_len,
                                     const IterationBounds& b, const Settings& cfg,
                                     const Budget& budget, const BnbOptions& options = {});

// One fixed-length solve with either backend.
SolveOutcome solve_fixed_length(const Instance& inst, int t_len, const IterationBounds& b,
                                const Settings& cfg, const Backend& backend,
                                const Budget& budget);

struct IterationLogEntry {
    int t_len = 0;
    bool skipped = false;
    std::string skip_reason;
    SolveStatus status = SolveStatus::NoImprovingSolution; // meaningful when solved
    std::optional<std::int64_t> objective;                 // on Improved
    std::int64_t incumbent_before = 0;
    std::int64_t incumbent_after = 0;
    std::optional<std::int64_t> k_star_sum;
    std::optional<std::int64_t> theta_cap;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct RunReport {
    Instance instance;
    Settings settings;
    std::string backend_name;
    Sequence best_sequence;
    std::int64_t objective = 0;
    bool proven_optimal = false;
    std::string termination; // "exhausted" or "time-limit"
    std::vector<IterationLogEntry> iterations;
    std::uint64_t total_nodes = 0;
    double total_seconds = 0.0;
};

// The iterative outer loop: seeds the incumbent with the trivial solution,
// then tries every length from sum(f) to T in ascending order, updating the
// incumbent whenever a length yields an improvement.
RunReport run(const Instance& inst, const Settings& cfg, const Backend& backend,
              const Budget& budget);

} // namespace wfs
