#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfs/bounds.hpp"
#include "wfs/core.hpp"
#include "wfs/settings.hpp"

namespace wfs {

// Building the model proved, from the bounds alone, that no improving
// solution of this length exists; there is nothing to solve.
struct ModelInfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class VarKind { Binary, Integer };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Binary;
    std::int64_t lb = 0;
    std::int64_t ub = 1;
    bool unbounded_above = false;

    bool fixed() const { return !unbounded_above && lb == ub; }
};

enum class Sense { LE, GE, EQ };

struct LinTerm {
    int var = 0;
    std::int64_t coef = 0;
};

struct Constraint {
    std::string name;
    std::vector<LinTerm> terms;
    Sense sense = Sense::EQ;
    std::int64_t rhs = 0;
};

// Solver-independent integer program for one fixed sequence length. Symbols
// inside the model are in canonical order (weight descending, frequency
// descending, original index ascending); meta.canonical_to_original maps
// them back so extracted sequences always use the caller's labels.
struct Model {
    std::vector<Variable> vars;
    std::vector<Constraint> cons;
    int objective_var = -1;

    struct Meta {
        Instance instance;       // original order
        Instance canonical;      // model order
        int t_len = 0;
        Settings settings;
        std::vector<int> canonical_to_original; // 1-based, size n
        std::optional<std::int64_t> incumbent;
    } meta;

    // Variable index tables (canonical symbol/position indices, 1-based).
    std::vector<int> x_idx;              // (i-1)*t_len + (t-1)
    std::vector<int> p_idx;              // ((i-1)*t_len + (t-1))*t_len + (tp-1)
    std::vector<int> s_idx;
    std::vector<std::vector<int>> d_idx; // [i-1][j-1]
    int theta_idx = -1;

    int x(int i, int t) const { return x_idx[static_cast<std::size_t>((i - 1) * meta.t_len + (t - 1))]; }
    int p(int i, int t, int tp) const {
        return p_idx[static_cast<std::size_t>(((i - 1) * meta.t_len + (t - 1)) * meta.t_len + (tp - 1))];
    }
    int s(int i, int t, int tp) const {
        return s_idx[static_cast<std::size_t>(((i - 1) * meta.t_len + (t - 1)) * meta.t_len + (tp - 1))];
    }

    int find_var(const std::string& name) const; // -1 when absent
};

// The full fixed-length model with every strengthening cfg enables. Throws
// ModelInfeasibleError when the bounds already rule out an improving
// solution at this length.
Model build_fixed_length_model(const Instance& inst, int t_len,
                               const IterationBounds& b, const Settings& cfg);

// First-position fix plus the prefix-dominance ordering for adjacent
// canonical symbols sharing weight and frequency. Expects the model's
// canonical instance.
void add_symmetry_breaking(Model& m, const Instance& canonical);

// Occurrence-count selector variables with their linking, selection and,
// given an incumbent, count-based objective constraints. count_ub holds the
// per-symbol selector range in canonical order.
void add_extended_count_model(Model& m, const Instance& canonical,
                              const std::vector<int>& count_ub,
                              std::optional<std::int64_t> incumbent);

struct ExtractResult {
    Sequence sequence;       // original symbol labels
    std::int64_t objective;  // re-certified with evaluate()
};

// Reads the position variables out of a (possibly fractional within 1e-6)
// assignment, maps symbols back to original labels and re-certifies the
// objective. Throws std::runtime_error naming the offending position or
// variable on conflicts, gaps or fractional values.
ExtractResult extract_sequence(const Model& m,
                               const std::map<std::string, double>& assignment);

} // namespace wfs
