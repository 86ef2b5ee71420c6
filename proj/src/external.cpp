#include "wfs/external.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wfs/lp_io.hpp"

namespace wfs {

namespace {

namespace fs = std::filesystem;

std::string first_word(const std::string& command) {
    std::istringstream is(command);
    std::string word;
    is >> word;
    return word;
}

bool executable_file(const fs::path& p) {
    std::error_code ec;
    return fs::is_regular_file(p, ec) && ::access(p.c_str(), X_OK) == 0;
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (const char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

bool substitute(std::string& text, const std::string& placeholder, const std::string& value) {
    bool any = false;
    std::size_t pos = 0;
    while ((pos = text.find(placeholder, pos)) != std::string::npos) {
        text.replace(pos, placeholder.size(), value);
        pos += value.size();
        any = true;
    }
    return any;
}

} // namespace

bool solver_command_available(const std::string& command_template) {
    const std::string word = first_word(command_template);
    if (word.empty()) return false;
    if (word.find('/') != std::string::npos) return executable_file(word);
    const char* path_env = std::getenv("PATH");
    if (path_env == nullptr) return false;
    std::istringstream is(path_env);
    std::string dir;
    while (std::getline(is, dir, ':'))
        if (!dir.empty() && executable_file(fs::path(dir) / word)) return true;
    return false;
}

SolveOutcome external_backend_solve(const Model& m, const Backend& backend,
                                    const Budget& budget) {
    const auto start = Clock::now();
    if (backend.solver_command.empty())
        throw BackendError("no solver command configured for the lp-export backend");
    if (!solver_command_available(backend.solver_command))
        throw BackendError("solver command '" + first_word(backend.solver_command) +
                           "' not found");

    SolveOutcome outcome;
    if (budget.expired()) {
        outcome.status = SolveStatus::TimedOut;
        return outcome;
    }

    std::error_code ec;
    fs::create_directories(backend.work_dir, ec);
    const std::string stem = "model_T" + std::to_string(m.meta.t_len);
    const fs::path lp_path = fs::path(backend.work_dir) / (stem + ".lp");
    const fs::path sol_path = fs::path(backend.work_dir) / (stem + ".sol");
    {
        std::ofstream lp(lp_path);
        if (!lp) throw BackendError("cannot write LP file " + lp_path.string());
        lp << emit_lp(m);
    }
    fs::remove(sol_path, ec);

    std::string command = backend.solver_command;
    const bool has_lp = substitute(command, "{lp}", shell_quote(lp_path.string()));
    substitute(command, "{sol}", shell_quote(sol_path.string()));
    const auto remaining = budget.remaining_seconds();
    substitute(command, "{tl}",
               std::to_string(remaining.has_value()
                                  ? std::max<long long>(1, static_cast<long long>(*remaining))
                                  : 86400LL));
    if (!has_lp)
        command += " " + shell_quote(lp_path.string()) + " " + shell_quote(sol_path.string());

    const int raw = std::system(command.c_str());
    if (raw == -1) throw BackendError("failed to launch solver command");
    if (!WIFEXITED(raw))
        throw BackendError("solver command terminated abnormally");
    const int exit_code = WEXITSTATUS(raw);

    auto read_solution = [&]() -> std::map<std::string, double> {
        std::ifstream sol(sol_path);
        if (!sol)
            throw BackendError("solver wrote no assignment file " + sol_path.string());
        try {
            return parse_assignment(sol);
        } catch (const ParseError& e) {
            throw BackendError(std::string("unparseable solver output: ") + e.what());
        }
    };

    if (exit_code == 0) {
        const auto assignment = read_solution();
        ExtractResult extracted;
        try {
            extracted = extract_sequence(m, assignment);
        } catch (const std::exception& e) {
            throw BackendError(std::string("solver assignment rejected: ") + e.what());
        }
        const auto claimed = assignment.find("theta");
        if (claimed != assignment.end() &&
            std::llround(claimed->second) != extracted.objective)
            throw BackendError("certification mismatch: solver claims objective " +
                               std::to_string(std::llround(claimed->second)) +
                               " but the sequence evaluates to " +
                               std::to_string(extracted.objective));
        const auto z = m.meta.incumbent;
        if (m.meta.settings.improvement_cap && z.has_value() && extracted.objective >= *z)
            throw BackendError("solver returned a non-improving solution despite the cap");
        outcome.sequence = extracted.sequence;
        outcome.objective = extracted.objective;
        outcome.status = (!z.has_value() || extracted.objective < *z)
                             ? SolveStatus::Improved
                             : SolveStatus::NoImprovingSolution;
        if (outcome.status == SolveStatus::NoImprovingSolution) {
            outcome.sequence.reset();
            outcome.objective.reset();
        }
    } else if (exit_code == 10) {
        outcome.status = SolveStatus::NoImprovingSolution;
    } else if (exit_code == 20) {
        outcome.status = SolveStatus::TimedOut;
        std::error_code exists_ec;
        if (fs::exists(sol_path, exists_ec)) {
            const auto assignment = read_solution();
            try {
                const auto extracted = extract_sequence(m, assignment);
                outcome.sequence = extracted.sequence;
                outcome.objective = extracted.objective;
            } catch (const std::exception&) {
                // An unusable incumbent on timeout is not an error.
            }
        }
    } else {
        throw BackendError("solver command failed with exit code " +
                           std::to_string(exit_code));
    }
    outcome.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return outcome;
}

SolveOutcome external_fixed_length_solve(const Instance& inst, int t_len,
                                         const IterationBounds& b, const Settings& cfg,
                                         const Backend& backend, const Budget& budget) {
    const auto eff = make_effective(inst, b, cfg);
    if (eff.provably_no_improvement) return {};
    const Model m = build_fixed_length_model(inst, t_len, b, cfg);
    return external_backend_solve(m, backend, budget);
}

} // namespace wfs
