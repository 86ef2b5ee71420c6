#include "wfs/report.hpp"

#include <sstream>

#include <json.hpp>

namespace wfs {

namespace {

using nlohmann::json;

json settings_to_json(const Settings& s) {
    return json{{"level", to_string(s.level)},
                {"count_upper_bounds", s.count_upper_bounds},
                {"adjacency_fixings", s.adjacency_fixings},
                {"objective_fixings", s.objective_fixings},
                {"rhs_lifting", s.rhs_lifting},
                {"improvement_cap", s.improvement_cap},
                {"symmetry_breaking", s.symmetry_breaking},
                {"skip_rule", s.skip_rule},
                {"lifted_count_bounds", s.lifted_count_bounds},
                {"extended_count_model", s.extended_count_model}};
}

Settings settings_from_json(const json& j) {
    Settings s;
    s.level = setting_level_from_string(j.at("level").get<std::string>());
    s.count_upper_bounds = j.at("count_upper_bounds").get<bool>();
    s.adjacency_fixings = j.at("adjacency_fixings").get<bool>();
    s.objective_fixings = j.at("objective_fixings").get<bool>();
    s.rhs_lifting = j.at("rhs_lifting").get<bool>();
    s.improvement_cap = j.at("improvement_cap").get<bool>();
    s.symmetry_breaking = j.at("symmetry_breaking").get<bool>();
    s.skip_rule = j.at("skip_rule").get<bool>();
    s.lifted_count_bounds = j.at("lifted_count_bounds").get<bool>();
    s.extended_count_model = j.at("extended_count_model").get<bool>();
    return s;
}

template <typename T>
json opt_to_json(const std::optional<T>& v) {
    if (v.has_value()) return json(*v);
    return json(nullptr);
}

template <typename T>
std::optional<T> opt_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

} // namespace

std::string report_to_json(const RunReport& report) {
    json j;
    j["instance"] = {{"n", report.instance.n},
                     {"t_max", report.instance.t_max},
                     {"w", report.instance.w},
                     {"f", report.instance.f}};
    j["settings"] = settings_to_json(report.settings);
    j["backend"] = report.backend_name;
    j["objective"] = report.objective;
    j["proven_optimal"] = report.proven_optimal;
    j["termination"] = report.termination;
    j["sequence"] = report.best_sequence.symbols;
    j["total_nodes"] = report.total_nodes;
    j["total_seconds"] = report.total_seconds;
    j["iterations"] = json::array();
    for (const auto& it : report.iterations) {
        json entry;
        entry["t_len"] = it.t_len;
        entry["skipped"] = it.skipped;
        entry["skip_reason"] = it.skip_reason;
        entry["status"] = to_string(it.status);
        entry["objective"] = opt_to_json(it.objective);
        entry["incumbent_before"] = it.incumbent_before;
        entry["incumbent_after"] = it.incumbent_after;
        entry["k_star_sum"] = opt_to_json(it.k_star_sum);
        entry["theta_cap"] = opt_to_json(it.theta_cap);
        entry["nodes"] = it.nodes;
        entry["seconds"] = it.seconds;
        j["iterations"].push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    RunReport report;
    report.instance.n = j.at("instance").at("n").get<int>();
    report.instance.t_max = j.at("instance").at("t_max").get<int>();
    report.instance.w = j.at("instance").at("w").get<std::vector<std::int64_t>>();
    report.instance.f = j.at("instance").at("f").get<std::vector<int>>();
    report.settings = settings_from_json(j.at("settings"));
    report.backend_name = j.at("backend").get<std::string>();
    report.objective = j.at("objective").get<std::int64_t>();
    report.proven_optimal = j.at("proven_optimal").get<bool>();
    report.termination = j.at("termination").get<std::string>();
    report.best_sequence.symbols = j.at("sequence").get<std::vector<int>>();
    report.total_nodes = j.at("total_nodes").get<std::uint64_t>();
    report.total_seconds = j.at("total_seconds").get<double>();
    for (const auto& entry : j.at("iterations")) {
        IterationLogEntry it;
        it.t_len = entry.at("t_len").get<int>();
        it.skipped = entry.at("skipped").get<bool>();
        it.skip_reason = entry.at("skip_reason").get<std::string>();
        it.status = solve_status_from_string(entry.at("status").get<std::string>());
        it.objective = opt_from_json<std::int64_t>(entry.at("objective"));
        it.incumbent_before = entry.at("incumbent_before").get<std::int64_t>();
        it.incumbent_after = entry.at("incumbent_after").get<std::int64_t>();
        it.k_star_sum = opt_from_json<std::int64_t>(entry.at("k_star_sum"));
        it.theta_cap = opt_from_json<std::int64_t>(entry.at("theta_cap"));
        it.nodes = entry.at("nodes").get<std::uint64_t>();
        it.seconds = entry.at("seconds").get<double>();
        report.iterations.push_back(std::move(it));
    }
    return report;
}

std::string iterations_to_csv(const RunReport& report) {
    std::ostringstream os;
    os << "T_len,skipped,status,incumbent,K_star,theta_cap,nodes,seconds\n";
    for (const auto& it : report.iterations) {
        os << it.t_len << ',' << (it.skipped ? 1 : 0) << ','
           << (it.skipped ? "skipped" : to_string(it.status)) << ',' << it.incumbent_after
           << ',';
        if (it.k_star_sum.has_value()) os << *it.k_star_sum;
        os << ',';
        if (it.theta_cap.has_value()) os << *it.theta_cap;
        os << ',' << it.nodes << ',' << it.seconds << '\n';
    }
    return os.str();
}

bool reports_equivalent(const RunReport& a, const RunReport& b) {
    if (a.instance.n != b.instance.n || a.instance.t_max != b.instance.t_max ||
        a.instance.w != b.instance.w || a.instance.f != b.instance.f)
        return false;
    if (to_string(a.settings.level) != to_string(b.settings.level)) return false;
    if (a.backend_name != b.backend_name) return false;
    if (a.objective != b.objective || a.proven_optimal != b.proven_optimal ||
        a.termination != b.termination)
        return false;
    if (a.best_sequence.symbols != b.best_sequence.symbols) return false;
    if (a.total_nodes != b.total_nodes) return false;
    if (a.iterations.size() != b.iterations.size()) return false;
    for (std::size_t i = 0; i < a.iterations.size(); ++i) {
        const auto& x = a.iterations[i];
        const auto& y = b.iterations[i];
        if (x.t_len != y.t_len || x.skipped != y.skipped || x.skip_reason != y.skip_reason ||
            x.status != y.status || x.objective != y.objective ||
            x.incumbent_before != y.incumbent_before ||
            x.incumbent_after != y.incumbent_after || x.k_star_sum != y.k_star_sum ||
            x.theta_cap != y.theta_cap || x.nodes != y.nodes)
            return false;
    }
    return true;
}

} // namespace wfs
