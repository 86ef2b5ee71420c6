#include "wfs/solver.hpp"

#include <algorithm>

#include "wfs/external.hpp"

namespace wfs {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Improved: return "improved";
        case SolveStatus::NoImprovingSolution: return "no_improving";
        case SolveStatus::TimedOut: return "timed_out";
    }
    return "?";
}

SolveStatus solve_status_from_string(const std::string& s) {
    if (s == "improved") return SolveStatus::Improved;
    if (s == "no_improving") return SolveStatus::NoImprovingSolution;
    if (s == "timed_out") return SolveStatus::TimedOut;
    throw std::invalid_argument("unknown solve status '" + s + "'");
}

SolveOutcome native_branch_and_bound(const Instance& inst, int t_len,
                                     const IterationBounds& b, const Settings& cfg,
                                     const Budget& budget, const BnbOptions& options) {
    const auto start = Clock::now();
    SolveOutcome outcome;

    const auto eff = make_effective(inst, b, cfg);
    if (eff.provably_no_improvement) {
        outcome.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return outcome;
    }

    const auto order = canonical_symbol_order(inst);
    BnbProblem prob;
    prob.n = inst.n;
    prob.t_len = t_len;
    prob.cap = eff.cap;
    prob.fix_first_symbol = true;
    prob.w.resize(static_cast<std::size_t>(inst.n));
    prob.count_lb.resize(static_cast<std::size_t>(inst.n));
    prob.count_ub.resize(static_cast<std::size_t>(inst.n));
    prob.no_self_adjacent.resize(static_cast<std::size_t>(inst.n));
    prob.tied_to_previous.assign(static_cast<std::size_t>(inst.n), 0);
    for (int c = 0; c < inst.n; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        const auto orig = static_cast<std::size_t>(order[cc] - 1);
        prob.w[cc] = inst.w[orig];
        prob.count_lb[cc] = eff.count_lb[orig];
        prob.count_ub[cc] = std::min(eff.count_ub[orig], t_len);
        prob.no_self_adjacent[cc] = eff.no_self_adjacent[orig];
        if (c > 0) {
            const auto prev = static_cast<std::size_t>(order[cc - 1] - 1);
            prob.tied_to_previous[cc] =
                inst.w[orig] == inst.w[prev] && inst.f[orig] == inst.f[prev];
        }
    }

    const auto result = branch_and_bound(prob, budget, options);
    outcome.nodes = result.nodes;
    if (result.found) {
        Sequence seq;
        seq.symbols.reserve(result.sequence.size());
        for (const int c : result.sequence)
            seq.symbols.push_back(order[static_cast<std::size_t>(c - 1)]);
        const auto certified = evaluate(inst, seq).objective;
        if (certified != result.objective)
            throw std::logic_error("search result failed re-certification");
        outcome.sequence = std::move(seq);
        outcome.objective = certified;
    }
    if (result.timed_out) {
        outcome.status = SolveStatus::TimedOut;
    } else if (result.found &&
               (!b.incumbent.has_value() || result.objective < *b.incumbent)) {
        outcome.status = SolveStatus::Improved;
    } else {
        outcome.status = SolveStatus::NoImprovingSolution;
        outcome.sequence.reset();
        outcome.objective.reset();
    }
    outcome.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return outcome;
}

SolveOutcome solve_fixed_length(const Instance& inst, int t_len, const IterationBounds& b,
                                const Settings& cfg, const Backend& backend,
                                const Budget& budget) {
    if (backend.kind == BackendKind::Native)
        return native_branch_and_bound(inst, t_len, b, cfg, budget);
    return external_fixed_length_solve(inst, t_len, b, cfg, backend, budget);
}

namespace {

std::string skip_reason_of(const IterationBounds& b) {
    if (b.no_improving_objective) return "no-improving-objective-value";
    if (!b.k_star_sum.has_value()) return "required-count-impossible";
    return "K*-exceeds-length";
}

} // namespace

RunReport run(const Instance& inst, const Settings& cfg, const Backend& backend,
              const Budget& budget) {
    RunReport report;
    report.instance = inst;
    report.settings = cfg;
    report.backend_name = backend.kind == BackendKind::Native ? "native" : "lp-export";

    report.best_sequence = trivial_solution(inst);
    report.objective = evaluate(inst, report.best_sequence).objective;
    report.termination = "exhausted";
    report.proven_optimal = true;

    const auto start = Clock::now();
    for (int t_len = inst.total_required(); t_len <= inst.t_max; ++t_len) {
        IterationLogEntry entry;
        entry.t_len = t_len;
        entry.incumbent_before = report.objective;

        const auto b = compute_bounds(inst, t_len, report.objective);
        entry.k_star_sum = b.k_star_sum;
        entry.theta_cap = b.theta_cap;

        if (cfg.skip_rule && should_skip(b)) {
            entry.skipped = true;
            entry.skip_reason = skip_reason_of(b);
            entry.incumbent_after = report.objective;
            report.iterations.push_back(std::move(entry));
            continue;
        }

        auto outcome = solve_fixed_length(inst, t_len, b, cfg, backend, budget);
        entry.status = outcome.status;
        entry.nodes = outcome.nodes;
        entry.seconds = outcome.seconds;
        report.total_nodes += outcome.nodes;

        const bool improved = outcome.sequence.has_value() && outcome.objective.has_value() &&
                              *outcome.objective < report.objective;
        if (improved) {
            const auto check = evaluate(inst, *outcome.sequence).objective;
            if (check != *outcome.objective)
                throw std::logic_error("improved solution failed re-certification");
            entry.objective = outcome.objective;
            report.objective = *outcome.objective;
            report.best_sequence = std::move(*outcome.sequence);
        }
        entry.incumbent_after = report.objective;
        report.iterations.push_back(std::move(entry));

        if (outcome.status == SolveStatus::TimedOut) {
            report.termination = "time-limit";
            report.proven_optimal = false;
            break;
        }
    }
    report.total_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

} // namespace wfs
