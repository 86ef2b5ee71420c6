#include "wfs/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace wfs {

namespace {

std::string x_name(int i, int t) {
    return "x_" + std::to_string(i) + "_" + std::to_string(t);
}
std::string p_name(int i, int t, int tp) {
    return "p_" + std::to_string(i) + "_" + std::to_string(t) + "_" + std::to_string(tp);
}
std::string s_name(int i, int t, int tp) {
    return "s_" + std::to_string(i) + "_" + std::to_string(t) + "_" + std::to_string(tp);
}
std::string d_name(int i, int j) {
    return "d_" + std::to_string(i) + "_" + std::to_string(j);
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

int Model::find_var(const std::string& name) const {
    for (std::size_t idx = 0; idx < vars.size(); ++idx)
        if (vars[idx].name == name) return static_cast<int>(idx);
    return -1;
}

Model build_fixed_length_model(const Instance& inst, int t_len,
                               const IterationBounds& b, const Settings& cfg) {
    if (t_len < inst.total_required() || t_len > inst.t_max)
        throw std::invalid_argument("model length out of range [" +
                                    std::to_string(inst.total_required()) + "," +
                                    std::to_string(inst.t_max) + "]");

    const auto eff_original = make_effective(inst, b, cfg);
    if (eff_original.provably_no_improvement)
        throw ModelInfeasibleError("no improving solution of length " +
                                   std::to_string(t_len) + " exists");

    Model m;
    m.meta.instance = inst;
    m.meta.t_len = t_len;
    m.meta.settings = cfg;
    m.meta.incumbent = b.incumbent;
    m.meta.canonical_to_original = canonical_symbol_order(inst);

    const int n = inst.n;
    Instance canonical;
    canonical.n = n;
    canonical.t_max = inst.t_max;
    std::vector<int> count_lb(static_cast<std::size_t>(n));
    std::vector<int> count_ub(static_cast<std::size_t>(n));
    std::vector<char> no_self_adjacent(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        const auto orig = static_cast<std::size_t>(m.meta.canonical_to_original[static_cast<std::size_t>(c)] - 1);
        canonical.w.push_back(inst.w[orig]);
        canonical.f.push_back(inst.f[orig]);
        count_lb[static_cast<std::size_t>(c)] = eff_original.count_lb[orig];
        count_ub[static_cast<std::size_t>(c)] = eff_original.count_ub[orig];
        no_self_adjacent[static_cast<std::size_t>(c)] = eff_original.no_self_adjacent[orig];
    }
    m.meta.canonical = canonical;

    // --- variables ---
    m.x_idx.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(t_len));
    m.p_idx.resize(m.x_idx.size() * static_cast<std::size_t>(t_len));
    m.s_idx.resize(m.p_idx.size());
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= t_len; ++t) {
            m.x_idx[static_cast<std::size_t>((i - 1) * t_len + (t - 1))] =
                static_cast<int>(m.vars.size());
            m.vars.push_back({x_name(i, t), VarKind::Binary, 0, 1, false});
        }

    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= t_len; ++t)
            for (int tp = 1; tp <= t_len; ++tp) {
                Variable v{p_name(i, t, tp), VarKind::Binary, 0, 1, false};
                bool fix = false;
                if (cfg.adjacency_fixings && no_self_adjacent[static_cast<std::size_t>(i - 1)] &&
                    adjacent_positions(t, tp, t_len))
                    fix = true;
                if (cfg.objective_fixings && b.incumbent.has_value() &&
                    canonical.w[static_cast<std::size_t>(i - 1)] *
                            static_cast<std::int64_t>(circular_distance(t, tp, t_len)) >=
                        *b.incumbent)
                    fix = true;
                if (fix) v.ub = 0;
                m.p_idx[static_cast<std::size_t>(((i - 1) * t_len + (t - 1)) * t_len + (tp - 1))] =
                    static_cast<int>(m.vars.size());
                m.vars.push_back(v);
            }
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= t_len; ++t)
            for (int tp = 1; tp <= t_len; ++tp) {
                Variable v{s_name(i, t, tp), VarKind::Binary, 0, 1, false};
                bool fix = false;
                if (cfg.adjacency_fixings && no_self_adjacent[static_cast<std::size_t>(i - 1)] &&
                    adjacent_positions(t, tp, t_len))
                    fix = true;
                if (cfg.objective_fixings && b.incumbent.has_value() &&
                    canonical.w[static_cast<std::size_t>(i - 1)] *
                            static_cast<std::int64_t>(circular_distance(tp, t, t_len)) >=
                        *b.incumbent)
                    fix = true;
                if (fix) v.ub = 0;
                m.s_idx[static_cast<std::size_t>(((i - 1) * t_len + (t - 1)) * t_len + (tp - 1))] =
                    static_cast<int>(m.vars.size());
                m.vars.push_back(v);
            }

    // --- objective variable ---
    Variable theta{"theta", VarKind::Integer, 1, 0, true};
    if (cfg.improvement_cap && b.theta_cap.has_value()) {
        theta.ub = *b.theta_cap;
        theta.unbounded_above = false;
    }
    m.theta_idx = static_cast<int>(m.vars.size());
    m.vars.push_back(theta);
    m.objective_var = m.theta_idx;

    // --- constraints ---
    for (int i = 1; i <= n; ++i) {
        Constraint c{"chosenmin_" + std::to_string(i), {}, Sense::GE,
                     count_lb[static_cast<std::size_t>(i - 1)]};
        for (int t = 1; t <= t_len; ++t) c.terms.push_back({m.x(i, t), 1});
        m.cons.push_back(std::move(c));
    }
    for (int t = 1; t <= t_len; ++t) {
        Constraint c{"position_" + std::to_string(t), {}, Sense::EQ, 1};
        for (int i = 1; i <= n; ++i) c.terms.push_back({m.x(i, t), 1});
        m.cons.push_back(std::move(c));
    }
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= t_len; ++t) {
            Constraint c{"pred_" + std::to_string(i) + "_" + std::to_string(t),
                         {}, Sense::EQ, 0};
            c.terms.push_back({m.x(i, t), 1});
            for (int tp = 1; tp <= t_len; ++tp) c.terms.push_back({m.p(i, t, tp), -1});
            m.cons.push_back(std::move(c));
        }
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= t_len; ++t) {
            Constraint c{"succ_" + std::to_string(i) + "_" + std::to_string(t),
                         {}, Sense::EQ, 0};
            c.terms.push_back({m.x(i, t), 1});
            for (int tp = 1; tp <= t_len; ++tp) c.terms.push_back({m.s(i, t, tp), -1});
            m.cons.push_back(std::move(c));
        }
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= t_len; ++t)
            for (int tp = 1; tp <= t_len; ++tp) {
                Constraint c{"link_" + std::to_string(i) + "_" + std::to_string(t) +
                                 "_" + std::to_string(tp),
                             {}, Sense::EQ, 0};
                c.terms.push_back({m.s(i, t, tp), 1});
                c.terms.push_back({m.p(i, tp, t), -1});
                m.cons.push_back(std::move(c));
            }
    for (int t = 1; t <= t_len; ++t) {
        Constraint c{"objpred_" + std::to_string(t), {}, Sense::GE, 0};
        c.terms.push_back({m.theta_idx, 1});
        for (int i = 1; i <= n; ++i)
            for (int tp = 1; tp <= t_len; ++tp)
                c.terms.push_back({m.p(i, t, tp),
                                   -canonical.w[static_cast<std::size_t>(i - 1)] *
                                       static_cast<std::int64_t>(circular_distance(t, tp, t_len))});
        m.cons.push_back(std::move(c));
    }
    for (int t = 1; t <= t_len; ++t) {
        Constraint c{"objsucc_" + std::to_string(t), {}, Sense::GE, 0};
        c.terms.push_back({m.theta_idx, 1});
        for (int i = 1; i <= n; ++i)
            for (int tp = 1; tp <= t_len; ++tp)
                c.terms.push_back({m.s(i, t, tp),
                                   -canonical.w[static_cast<std::size_t>(i - 1)] *
                                       static_cast<std::int64_t>(circular_distance(tp, t, t_len))});
        m.cons.push_back(std::move(c));
    }
    if (cfg.count_upper_bounds)
        for (int i = 1; i <= n; ++i) {
            Constraint c{"count_ub_" + std::to_string(i), {}, Sense::LE,
                         count_ub[static_cast<std::size_t>(i - 1)]};
            for (int t = 1; t <= t_len; ++t) c.terms.push_back({m.x(i, t), 1});
            m.cons.push_back(std::move(c));
        }

    if (cfg.symmetry_breaking) add_symmetry_breaking(m, canonical);
    if (cfg.extended_count_model)
        add_extended_count_model(m, canonical, count_ub, b.incumbent);

    return m;
}

void add_symmetry_breaking(Model& m, const Instance& canonical) {
    const int t_len = m.meta.t_len;
    // Rotational symmetry: the first canonical symbol opens the sequence.
    m.vars[static_cast<std::size_t>(m.x(1, 1))].lb = 1;

    for (int l = 1; l < canonical.n; ++l) {
        const auto a = static_cast<std::size_t>(l - 1);
        const auto bidx = static_cast<std::size_t>(l);
        if (canonical.w[a] != canonical.w[bidx] || canonical.f[a] != canonical.f[bidx])
            continue;
        for (int t = 1; t <= t_len; ++t) {
            Constraint c{"sym2_" + std::to_string(l) + "_" + std::to_string(t),
                         {}, Sense::GE, 0};
            for (int tp = 1; tp <= t; ++tp) c.terms.push_back({m.x(l, tp), 1});
            c.terms.push_back({m.x(l + 1, t), -1});
            m.cons.push_back(std::move(c));
        }
    }
}

void add_extended_count_model(Model& m, const Instance& canonical,
                              const std::vector<int>& count_ub,
                              std::optional<std::int64_t> incumbent) {
    const int t_len = m.meta.t_len;
    m.d_idx.assign(static_cast<std::size_t>(canonical.n), {});
    for (int i = 1; i <= canonical.n; ++i) {
        auto& slots = m.d_idx[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= count_ub[static_cast<std::size_t>(i - 1)]; ++j) {
            slots.push_back(static_cast<int>(m.vars.size()));
            m.vars.push_back({d_name(i, j), VarKind::Binary, 0, 1, false});
        }
    }
    for (int i = 1; i <= canonical.n; ++i) {
        Constraint c{"dlink_" + std::to_string(i), {}, Sense::EQ, 0};
        for (int t = 1; t <= t_len; ++t) c.terms.push_back({m.x(i, t), 1});
        const auto& slots = m.d_idx[static_cast<std::size_t>(i - 1)];
        for (std::size_t j = 0; j < slots.size(); ++j)
            c.terms.push_back({slots[j], -static_cast<std::int64_t>(j + 1)});
        m.cons.push_back(std::move(c));
    }
    // Exactly one selector per symbol; the count link alone would allow
    // splitting a count across several selectors and weaken the cap below.
    for (int i = 1; i <= canonical.n; ++i) {
        Constraint c{"dsel_" + std::to_string(i), {}, Sense::EQ, 1};
        for (const int idx : m.d_idx[static_cast<std::size_t>(i - 1)])
            c.terms.push_back({idx, 1});
        m.cons.push_back(std::move(c));
    }
    if (incumbent.has_value()) {
        for (int i = 1; i <= canonical.n; ++i) {
            Constraint c{"dcap_" + std::to_string(i), {}, Sense::GE, *incumbent};
            c.terms.push_back({m.theta_idx, 1});
            const auto& slots = m.d_idx[static_cast<std::size_t>(i - 1)];
            for (std::size_t j = 0; j < slots.size(); ++j) {
                const std::int64_t placed_best =
                    canonical.w[static_cast<std::size_t>(i - 1)] *
                    static_cast<std::int64_t>(ceil_div(t_len, static_cast<int>(j + 1)));
                if (placed_best <= *incumbent)
                    c.terms.push_back({slots[j], *incumbent - placed_best});
            }
            m.cons.push_back(std::move(c));
        }
    }
}

ExtractResult extract_sequence(const Model& m,
                               const std::map<std::string, double>& assignment) {
    std::unordered_set<std::string> known;
    known.reserve(m.vars.size());
    for (const auto& v : m.vars) known.insert(v.name);
    for (const auto& [name, value] : assignment) {
        (void)value;
        if (!known.contains(name))
            throw std::runtime_error("unknown variable '" + name + "' in assignment");
    }

    const int n = m.meta.canonical.n;
    const int t_len = m.meta.t_len;
    std::vector<int> symbol_at(static_cast<std::size_t>(t_len), 0);
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= t_len; ++t) {
            const auto& var = m.vars[static_cast<std::size_t>(m.x(i, t))];
            const auto it = assignment.find(var.name);
            const double value = it == assignment.end() ? 0.0 : it->second;
            const double rounded = std::round(value);
            if (std::abs(value - rounded) > 1e-6 || (rounded != 0.0 && rounded != 1.0))
                throw std::runtime_error("fractional value " + std::to_string(value) +
                                         " for variable " + var.name);
            if (rounded == 1.0) {
                auto& slot = symbol_at[static_cast<std::size_t>(t - 1)];
                if (slot != 0)
                    throw std::runtime_error("position " + std::to_string(t) +
                                             " assigned two symbols");
                slot = i;
            }
        }
    for (int t = 1; t <= t_len; ++t)
        if (symbol_at[static_cast<std::size_t>(t - 1)] == 0)
            throw std::runtime_error("position " + std::to_string(t) + " unassigned");

    ExtractResult out;
    out.sequence.symbols.reserve(static_cast<std::size_t>(t_len));
    for (int t = 1; t <= t_len; ++t)
        out.sequence.symbols.push_back(
            m.meta.canonical_to_original[static_cast<std::size_t>(
                symbol_at[static_cast<std::size_t>(t - 1)] - 1)]);
    out.objective = evaluate(m.meta.instance, out.sequence).objective;
    return out;
}

} // namespace wfs
