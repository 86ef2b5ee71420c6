#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "wfs/core.hpp"
#include "wfs/external.hpp"
#include "wfs/lp_io.hpp"
#include "wfs/model.hpp"
#include "wfs/report.hpp"
#include "wfs/rng.hpp"
#include "wfs/solver.hpp"

namespace fs = std::filesystem;

namespace {

// Exit codes: 0 success/proven optimal, 1 verification failure, 2 time limit
// reached with an incumbent, 3 input error, 4 backend error.
constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitTimeLimit = 2;
constexpr int kExitInputError = 3;
constexpr int kExitBackendError = 4;

std::string file_stem(const std::string& path) { return fs::path(path).stem().string(); }

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

struct SolveArgs {
    std::vector<std::string> instances;
    std::string setting = "enhanced";
    std::string backend = "native";
    std::string solver_cmd;
    double time_limit = 1800.0;
    std::string out_dir = ".";
    unsigned jobs = 1;
};

int cmd_solve(const SolveArgs& args) {
    const auto level = wfs::setting_level_from_string(args.setting);
    const auto cfg = wfs::Settings::preset(level);

    wfs::Backend backend;
    if (args.backend == "native") {
        backend.kind = wfs::BackendKind::Native;
    } else if (args.backend == "lp-export") {
        backend.kind = wfs::BackendKind::LpExport;
        backend.solver_command = args.solver_cmd;
        if (backend.solver_command.empty()) {
            std::cerr << "error: --backend lp-export requires --solver-cmd\n";
            return kExitBackendError;
        }
        if (!wfs::solver_command_available(backend.solver_command)) {
            std::cerr << "error: solver command '" << backend.solver_command
                      << "' not found\n";
            return kExitBackendError;
        }
    } else {
        std::cerr << "error: unknown backend '" << args.backend << "'\n";
        return kExitInputError;
    }

    std::vector<wfs::Instance> instances;
    for (const auto& path : args.instances) {
        try {
            instances.push_back(wfs::load_instance(path));
        } catch (const std::exception& e) {
            std::cerr << "error: " << path << ": " << e.what() << "\n";
            return kExitInputError;
        }
    }

    fs::create_directories(args.out_dir);
    auto solve_one = [&](std::size_t idx) -> wfs::RunReport {
        wfs::Backend b = backend;
        if (b.kind == wfs::BackendKind::LpExport)
            b.work_dir = (fs::path(args.out_dir) /
                          (file_stem(args.instances[idx]) + "_lp"))
                             .string();
        return wfs::run(instances[idx], cfg, b, wfs::Budget::seconds(args.time_limit));
    };

    std::vector<wfs::RunReport> reports(instances.size());
    try {
        if (args.jobs <= 1 || instances.size() <= 1) {
            for (std::size_t i = 0; i < instances.size(); ++i) reports[i] = solve_one(i);
        } else {
            std::vector<std::future<wfs::RunReport>> futures;
            futures.reserve(instances.size());
            for (std::size_t i = 0; i < instances.size(); ++i)
                futures.push_back(std::async(std::launch::async, solve_one, i));
            for (std::size_t i = 0; i < instances.size(); ++i) reports[i] = futures[i].get();
        }
    } catch (const wfs::BackendError& e) {
        std::cerr << "error: backend: " << e.what() << "\n";
        return kExitBackendError;
    }

    bool any_time_limit = false;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& report = reports[i];
        const std::string stem = file_stem(args.instances[i]);
        const std::string base = stem + "." + args.setting;
        write_text_file(fs::path(args.out_dir) / (base + ".report.json"),
                        wfs::report_to_json(report));
        write_text_file(fs::path(args.out_dir) / (base + ".iterations.csv"),
                        wfs::iterations_to_csv(report));
        const std::string verdict = report.proven_optimal ? "proven-optimal" : "time-limit";
        if (reports.size() == 1)
            std::cout << report.objective << " " << verdict << "\n";
        else
            std::cout << stem << ": " << report.objective << " " << verdict << "\n";
        if (!report.proven_optimal) any_time_limit = true;
    }
    return any_time_limit ? kExitTimeLimit : kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& sequence_path) {
    wfs::Instance inst;
    wfs::Sequence seq;
    try {
        inst = wfs::load_instance(instance_path);
        seq = wfs::load_sequence(sequence_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    const auto violations = wfs::validate(inst, seq);
    if (!violations.empty()) {
        std::cout << "infeasible\n";
        for (const auto& v : violations) std::cout << "violation: " << v << "\n";
        return kExitInfeasible;
    }
    const auto ev = wfs::evaluate(inst, seq);
    for (int i = 1; i <= inst.n; ++i)
        std::cout << "a" << i << ": D=" << ev.max_gap[static_cast<std::size_t>(i - 1)]
                  << " w*D=" << ev.product[static_cast<std::size_t>(i - 1)] << "\n";
    std::cout << "objective " << ev.objective << "\n";
    std::cout << "binding:";
    for (const int i : ev.binding_symbols()) std::cout << " a" << i;
    std::cout << "\nfeasible\n";
    return kExitOk;
}

struct GenArgs {
    int n = 0;
    int t_max = 0;
    int count = 10;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::string preset;
};

int cmd_gen(const GenArgs& args) {
    struct Config {
        int n;
        int t_max;
    };
    std::vector<Config> configs;
    if (args.preset == "normal") {
        for (const int n : {5, 7, 9, 11, 13, 15})
            for (const int factor : {2, 3, 4}) configs.push_back({n, factor * n});
    } else if (!args.preset.empty()) {
        std::cerr << "error: unknown preset '" << args.preset << "'\n";
        return kExitInputError;
    } else {
        if (args.n < 1 || args.t_max < args.n) {
            std::cerr << "error: gen requires --n >= 1 and --t-max >= n\n";
            return kExitInputError;
        }
        configs.push_back({args.n, args.t_max});
    }

    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (!fs::is_directory(args.out_dir)) {
        std::cerr << "error: cannot create output directory '" << args.out_dir << "'\n";
        return kExitInputError;
    }

    int written = 0;
    std::uint64_t index = 0;
    for (const auto& config : configs) {
        for (int i = 0; i < args.count; ++i, ++index) {
            const std::uint64_t seed = wfs::derive_seed(args.seed, index);
            const auto inst = wfs::generate_instance(config.n, config.t_max, seed);
            std::ostringstream name;
            name << "n" << config.n << "_T" << config.t_max << "_i";
            if (i < 10) name << '0';
            name << i << ".wfs";
            std::ostringstream content;
            content << "# n=" << config.n << " T=" << config.t_max << " master-seed="
                    << args.seed << " index=" << index << "\n"
                    << wfs::format_instance(inst);
            write_text_file(fs::path(args.out_dir) / name.str(), content.str());
            ++written;
        }
    }
    std::cout << "wrote " << written << " instances to " << args.out_dir << "\n";
    return kExitOk;
}

struct EmitArgs {
    std::string instance_path;
    int length = 0;
    std::string setting = "basic";
    std::int64_t z_star = -1;
    std::string out;
    std::string out_dir = ".";
    std::string format = "lp";
};

int cmd_emit(const EmitArgs& args) {
    wfs::Instance inst;
    try {
        inst = wfs::load_instance(args.instance_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (args.length < inst.total_required() || args.length > inst.t_max) {
        std::cerr << "error: --length must lie in [" << inst.total_required() << ","
                  << inst.t_max << "]\n";
        return kExitInputError;
    }
    wfs::Settings cfg;
    std::optional<std::int64_t> incumbent;
    try {
        cfg = wfs::Settings::preset(wfs::setting_level_from_string(args.setting));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (args.z_star >= 0) incumbent = args.z_star;

    const auto bounds = wfs::compute_bounds(inst, args.length, incumbent);
    std::string text;
    try {
        const auto model = wfs::build_fixed_length_model(inst, args.length, bounds, cfg);
        text = args.format == "mps" ? wfs::emit_mps(model) : wfs::emit_lp(model);
    } catch (const wfs::ModelInfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    fs::path out_path;
    if (!args.out.empty()) {
        out_path = args.out;
    } else {
        std::error_code dir_ec;
        fs::create_directories(args.out_dir, dir_ec);
        out_path = fs::path(args.out_dir) /
                   (file_stem(args.instance_path) + "_T" + std::to_string(args.length) +
                    "_" + args.setting + "." + args.format);
    }
    write_text_file(out_path, text);
    std::cout << "wrote " << out_path.string() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver suite for weighted fair sequencing"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Run the iterative exact solver");
    solve->add_option("--instance", solve_args.instances, "Instance file(s)")
        ->required()
        ->expected(-1);
    solve->add_option("--setting", solve_args.setting, "basic, ineqs or enhanced");
    solve->add_option("--backend", solve_args.backend, "native or lp-export");
    solve->add_option("--solver-cmd", solve_args.solver_cmd,
                      "External solver command template ({lp}, {sol}, {tl})");
    solve->add_option("--time-limit", solve_args.time_limit, "Wall clock limit in seconds");
    solve->add_option("--out-dir", solve_args.out_dir, "Directory for reports");
    solve->add_option("--jobs", solve_args.jobs, "Parallel instances in a sweep");

    std::string verify_instance;
    std::string verify_sequence;
    auto* verify = app.add_subcommand("verify", "Evaluate and check a sequence");
    verify->add_option("--instance", verify_instance, "Instance file")->required();
    verify->add_option("--sequence", verify_sequence, "Sequence file")->required();

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate benchmark instances");
    gen->add_option("--n", gen_args.n, "Number of symbols");
    gen->add_option("--t-max", gen_args.t_max, "Maximum sequence length");
    gen->add_option("--count", gen_args.count, "Instances per configuration");
    gen->add_option("--seed", gen_args.seed, "Master seed");
    gen->add_option("--out-dir", gen_args.out_dir, "Output directory");
    gen->add_option("--preset", gen_args.preset, "Named benchmark grid (normal)");

    EmitArgs emit_args;
    auto* emit = app.add_subcommand("emit", "Write the fixed-length model to a file");
    emit->add_option("--instance", emit_args.instance_path, "Instance file")->required();
    emit->add_option("--length", emit_args.length, "Fixed sequence length")->required();
    emit->add_option("--setting", emit_args.setting, "basic, ineqs or enhanced");
    emit->add_option("--z-star", emit_args.z_star, "Incumbent objective value");
    emit->add_option("--out", emit_args.out, "Output file path");
    emit->add_option("--out-dir", emit_args.out_dir, "Output directory");
    emit->add_option("--format", emit_args.format, "lp or mps")
        ->check(CLI::IsMember({"lp", "mps"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (verify->parsed()) return cmd_verify(verify_instance, verify_sequence);
        if (gen->parsed()) return cmd_gen(gen_args);
        if (emit->parsed()) return cmd_emit(emit_args);
    } catch (const wfs::BackendError& e) {
        std::cerr << "error: backend: " << e.what() << "\n";
        return kExitBackendError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
