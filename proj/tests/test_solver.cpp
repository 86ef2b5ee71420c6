#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support/fixtures.hpp"
#include "wfs/external.hpp"
#include "wfs/oracle.hpp"
#include "wfs/report.hpp"
#include "wfs/solver.hpp"

using namespace wfs;
using wfs::testing::fig1_instance;

namespace {

namespace fs = std::filesystem;

const std::vector<SettingLevel> kLevels{SettingLevel::Basic, SettingLevel::Ineqs,
                                        SettingLevel::Enhanced};

Instance make_instance(int t_max, std::vector<std::int64_t> w, std::vector<int> f) {
    Instance inst;
    inst.n = static_cast<int>(w.size());
    inst.t_max = t_max;
    inst.w = std::move(w);
    inst.f = std::move(f);
    return inst;
}

fs::path fresh_dir(const std::string& tag) {
    const auto dir = fs::temp_directory_path() / ("wfs_test_" + tag + "_" +
                                                  std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_script(const fs::path& dir, const std::string& name, const std::string& body) {
    const auto path = dir / name;
    {
        std::ofstream out(path);
        out << "#!/bin/sh\n" << body;
    }
    fs::permissions(path, fs::perms::owner_all, fs::perm_options::add);
    return path;
}

} // namespace

TEST_CASE("iterative run solves the worked example with every setting") {
    const auto inst = fig1_instance();
    for (const auto level : kLevels) {
        const auto report =
            run(inst, Settings::preset(level), Backend{}, Budget::unlimited());
        CHECK(report.objective == 48);
        CHECK(report.proven_optimal);
        CHECK(report.termination == "exhausted");
        CHECK(validate(inst, report.best_sequence).empty());
        CHECK(evaluate(inst, report.best_sequence).objective == 48);
    }
}

TEST_CASE("enhanced run skips the full length once 48 is known") {
    const auto report = run(fig1_instance(), Settings::preset(SettingLevel::Enhanced),
                            Backend{}, Budget::unlimited());
    bool saw_t10 = false;
    for (const auto& entry : report.iterations) {
        if (entry.t_len != 10) continue;
        saw_t10 = true;
        CHECK(entry.incumbent_before == 48);
        CHECK(entry.skipped);
        CHECK(entry.k_star_sum == 11);
    }
    CHECK(saw_t10);
}

TEST_CASE("incumbent trajectory is non-increasing and certified") {
    const auto report = run(fig1_instance(), Settings::preset(SettingLevel::Enhanced),
                            Backend{}, Budget::unlimited());
    std::int64_t last = report.iterations.front().incumbent_before;
    for (const auto& entry : report.iterations) {
        CHECK(entry.incumbent_before == last);
        CHECK(entry.incumbent_after <= entry.incumbent_before);
        last = entry.incumbent_after;
    }
    CHECK(report.objective == last);
}

TEST_CASE("fixed-length solves at the pivotal lengths") {
    const auto inst = fig1_instance();
    for (const auto level : kLevels) {
        const auto cfg = Settings::preset(level);

        const auto at8 = solve_fixed_length(inst, 8, compute_bounds(inst, 8, 50), cfg,
                                            Backend{}, Budget::unlimited());
        CHECK(at8.status == SolveStatus::Improved);
        REQUIRE(at8.objective.has_value());
        CHECK(*at8.objective == 48);
        REQUIRE(at8.sequence.has_value());
        CHECK(evaluate(inst, *at8.sequence).objective == 48);

        const auto at5 = solve_fixed_length(inst, 5, compute_bounds(inst, 5, 50), cfg,
                                            Backend{}, Budget::unlimited());
        CHECK(at5.status == SolveStatus::NoImprovingSolution);
    }
}

TEST_CASE("zero budget times out") {
    const auto inst = fig1_instance();
    const auto outcome = solve_fixed_length(inst, 8, compute_bounds(inst, 8, 50),
                                            Settings::preset(SettingLevel::Basic), Backend{},
                                            Budget::seconds(0.0));
    CHECK(outcome.status == SolveStatus::TimedOut);

    const auto report = run(inst, Settings::preset(SettingLevel::Basic), Backend{},
                            Budget::seconds(0.0));
    CHECK(!report.proven_optimal);
    CHECK(report.termination == "time-limit");
    CHECK(report.objective == 50); // the trivial incumbent survives
}

TEST_CASE("native search agrees with brute force on every length") {
    SplitMix64 gen(401);
    const auto basic = Settings::preset(SettingLevel::Basic);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(next_below(gen, 2));
        const int t_max = n + 2 + static_cast<int>(next_below(gen, 3));
        const auto inst = generate_instance(n, t_max, gen.next());
        for (int t_len = inst.total_required(); t_len <= inst.t_max; ++t_len) {
            const auto reference = oracle::brute_force_fixed_length(inst, t_len);
            const auto outcome =
                solve_fixed_length(inst, t_len, compute_bounds(inst, t_len, std::nullopt),
                                   basic, Backend{}, Budget::unlimited());
            REQUIRE(reference.feasible);
            CHECK(outcome.status == SolveStatus::Improved);
            CHECK(outcome.objective == reference.objective);
        }
    }
}

TEST_CASE("pruning switches never change the optimum") {
    SplitMix64 gen(419);
    for (int trial = 0; trial < 6; ++trial) {
        const auto inst = generate_instance(3, 7, gen.next());
        const auto b = compute_bounds(inst, 6, std::nullopt);
        const auto cfg = Settings::preset(SettingLevel::Basic);
        BnbOptions none;
        none.closed_gap_bound = false;
        none.lookahead_bound = false;
        const auto fast = native_branch_and_bound(inst, 6, b, cfg, Budget::unlimited());
        const auto slow = native_branch_and_bound(inst, 6, b, cfg, Budget::unlimited(), none);
        CHECK(fast.objective == slow.objective);
        CHECK(fast.nodes <= slow.nodes);
    }
}

TEST_CASE("dominant weights need occurrence caps that keep the optimum") {
    // The optimum 16 here takes four copies of the heavy symbol at length 8.
    const auto inst = make_instance(9, {8, 1, 1, 1}, {1, 1, 1, 1});
    CHECK(oracle::brute_force_global(inst).objective == 16);
    for (const auto level : kLevels) {
        const auto report = run(inst, Settings::preset(level), Backend{}, Budget::unlimited());
        CHECK(report.objective == 16);
        CHECK(report.proven_optimal);
    }
}

TEST_CASE("forced self-adjacency under general frequencies stays solvable") {
    // Every improving solution repeats symbol 1 next to itself (f_1 = 4), so
    // the adjacency exclusion must not apply to it.
    const auto inst = make_instance(6, {1, 10}, {4, 1});
    CHECK(oracle::brute_force_global(inst).objective == 30);
    for (const auto level : kLevels) {
        const auto report = run(inst, Settings::preset(level), Backend{}, Budget::unlimited());
        CHECK(report.objective == 30);
        CHECK(report.proven_optimal);
    }
}

TEST_CASE("random general-frequency instances agree with brute force") {
    SplitMix64 gen(509);
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst;
        inst.n = 2 + static_cast<int>(next_below(gen, 2));
        for (int i = 0; i < inst.n; ++i) {
            inst.w.push_back(1 + static_cast<std::int64_t>(next_below(gen, 9)));
            inst.f.push_back(1 + static_cast<int>(next_below(gen, 3)));
        }
        inst.t_max = inst.total_required() + static_cast<int>(next_below(gen, 4));
        if (inst.t_max > 8) inst.t_max = 8;
        if (inst.t_max < inst.total_required()) continue;

        const auto reference = oracle::brute_force_global(inst);
        REQUIRE(reference.feasible);
        for (const auto level : kLevels) {
            const auto report =
                run(inst, Settings::preset(level), Backend{}, Budget::unlimited());
            CHECK(report.proven_optimal);
            CHECK(report.objective == reference.objective);
        }
    }
}

TEST_CASE("single symbol degenerate instance") {
    const auto inst = make_instance(3, {1}, {1});
    for (const auto level : kLevels) {
        const auto report = run(inst, Settings::preset(level), Backend{}, Budget::unlimited());
        CHECK(report.objective == 1);
        CHECK(report.proven_optimal);
    }
}

TEST_CASE("identical runs produce identical reports") {
    const auto inst = fig1_instance();
    for (const auto level : kLevels) {
        const auto a = run(inst, Settings::preset(level), Backend{}, Budget::unlimited());
        const auto b = run(inst, Settings::preset(level), Backend{}, Budget::unlimited());
        CHECK(reports_equivalent(a, b));
    }
}

TEST_CASE("report JSON and CSV round-trip") {
    const auto report = run(fig1_instance(), Settings::preset(SettingLevel::Enhanced),
                            Backend{}, Budget::unlimited());
    const auto parsed = report_from_json(report_to_json(report));
    CHECK(reports_equivalent(report, parsed));

    const auto csv = iterations_to_csv(report);
    CHECK(csv.rfind("T_len,skipped,status,incumbent,K_star,theta_cap,nodes,seconds\n", 0) == 0);
    const auto lines = static_cast<std::size_t>(
        std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == report.iterations.size() + 1);
}

TEST_CASE("capped no-improvement answers are sound") {
    SplitMix64 gen(431);
    for (int trial = 0; trial < 5; ++trial) {
        const auto inst = generate_instance(3, 8, gen.next());
        const auto report = run(inst, Settings::preset(SettingLevel::Ineqs), Backend{},
                                Budget::unlimited());
        for (const auto& entry : report.iterations) {
            if (entry.skipped || entry.status != SolveStatus::NoImprovingSolution) continue;
            const auto reference = oracle::brute_force_fixed_length(inst, entry.t_len);
            REQUIRE(reference.feasible);
            CHECK(reference.objective >= entry.incumbent_before);
        }
    }
}

TEST_CASE("external backend requires a resolvable command") {
    const auto inst = fig1_instance();
    const auto dir = fresh_dir("missing_cmd");
    Backend backend;
    backend.kind = BackendKind::LpExport;
    backend.solver_command = "/nonexistent/mip_solver {lp} {sol}";
    backend.work_dir = (dir / "work").string();
    CHECK_THROWS_AS(external_fixed_length_solve(inst, 8, compute_bounds(inst, 8, 50),
                                                Settings::preset(SettingLevel::Enhanced),
                                                backend, Budget::unlimited()),
                    BackendError);
    CHECK(!fs::exists(dir / "work")); // nothing written before the resolution check
    fs::remove_all(dir);
}

TEST_CASE("external backend certifies claimed objectives") {
    const auto inst = fig1_instance();
    const auto dir = fresh_dir("mismatch");
    const auto script = write_script(dir, "lying_solver.sh",
                                     "cat > \"$2\" <<EOD\n"
                                     "x_2_1 1\nx_1_2 1\nx_3_3 1\nx_5_4 1\n"
                                     "x_2_5 1\nx_1_6 1\nx_4_7 1\nx_3_8 1\n"
                                     "theta 47\nEOD\nexit 0\n");
    Backend backend;
    backend.kind = BackendKind::LpExport;
    backend.solver_command = script.string() + " {lp} {sol}";
    backend.work_dir = (dir / "work").string();
    CHECK_THROWS_WITH_AS(
        external_fixed_length_solve(inst, 8, compute_bounds(inst, 8, 50),
                                    Settings::preset(SettingLevel::Enhanced), backend,
                                    Budget::unlimited()),
        doctest::Contains("certification mismatch"), BackendError);
    fs::remove_all(dir);
}

TEST_CASE("external backend accepts a certified improving answer") {
    const auto inst = fig1_instance();
    const auto dir = fresh_dir("honest");
    const auto script = write_script(dir, "honest_solver.sh",
                                     "cat > \"$2\" <<EOD\n"
                                     "x_2_1 1\nx_1_2 1\nx_3_3 1\nx_5_4 1\n"
                                     "x_2_5 1\nx_1_6 1\nx_4_7 1\nx_3_8 1\n"
                                     "theta 48\nEOD\nexit 0\n");
    Backend backend;
    backend.kind = BackendKind::LpExport;
    backend.solver_command = script.string() + " {lp} {sol}";
    backend.work_dir = (dir / "work").string();
    const auto outcome = external_fixed_length_solve(
        inst, 8, compute_bounds(inst, 8, 50), Settings::preset(SettingLevel::Enhanced),
        backend, Budget::unlimited());
    CHECK(outcome.status == SolveStatus::Improved);
    CHECK(outcome.objective == 48);
    REQUIRE(outcome.sequence.has_value());
    CHECK(outcome.sequence->symbols == std::vector<int>{2, 1, 3, 5, 2, 1, 4, 3});
    CHECK(fs::exists(dir / "work" / "model_T8.lp"));
    fs::remove_all(dir);
}

TEST_CASE("external backend maps the exit-code contract") {
    const auto inst = fig1_instance();
    const auto dir = fresh_dir("codes");
    const auto cfg = Settings::preset(SettingLevel::Enhanced);
    const auto bounds = compute_bounds(inst, 8, 50);

    Backend backend;
    backend.kind = BackendKind::LpExport;
    backend.work_dir = (dir / "work").string();

    backend.solver_command =
        write_script(dir, "infeasible.sh", "exit 10\n").string() + " {lp} {sol}";
    CHECK(external_fixed_length_solve(inst, 8, bounds, cfg, backend, Budget::unlimited())
              .status == SolveStatus::NoImprovingSolution);

    backend.solver_command =
        write_script(dir, "timeout.sh", "exit 20\n").string() + " {lp} {sol}";
    CHECK(external_fixed_length_solve(inst, 8, bounds, cfg, backend, Budget::unlimited())
              .status == SolveStatus::TimedOut);

    backend.solver_command =
        write_script(dir, "crash.sh", "exit 7\n").string() + " {lp} {sol}";
    CHECK_THROWS_WITH_AS(
        external_fixed_length_solve(inst, 8, bounds, cfg, backend, Budget::unlimited()),
        doctest::Contains("exit code 7"), BackendError);

    backend.solver_command =
        write_script(dir, "no_output.sh", "exit 0\n").string() + " {lp} {sol}";
    CHECK_THROWS_WITH_AS(
        external_fixed_length_solve(inst, 8, bounds, cfg, backend, Budget::unlimited()),
        doctest::Contains("no assignment file"), BackendError);
    fs::remove_all(dir);
}
