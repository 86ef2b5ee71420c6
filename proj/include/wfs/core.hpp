#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace wfs {

// Raised for malformed instance/sequence files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A problem instance: n symbols with positive weights w_i, each required to
// occur at least f_i times, in a sequence of at most t_max positions.
struct Instance {
    int n = 0;
    int t_max = 0;
    std::vector<std::int64_t> w;
    std::vector<int> f;

    // Sum of all minimum occurrence counts; the shortest feasible length.
    int total_required() const;
};

// A candidate sequence. Symbols are 1-based indices into the instance;
// positions are 1-based throughout the public interface.
struct Sequence {
    std::vector<int> symbols;

    int length() const { return static_cast<int>(symbols.size()); }
    int at(int pos) const { return symbols[static_cast<std::size_t>(pos - 1)]; }
};

// Per-symbol maximum circular gap and weight-gap products of a sequence.
struct Evaluation {
    std::vector<int> max_gap;             // D_i
    std::vector<std::int64_t> product;    // w_i * D_i
    std::int64_t objective = 0;           // max_i w_i * D_i

    // Symbols whose product attains the objective (1-based).
    std::vector<int> binding_symbols() const;
};

// Circular distance from position tp back to position t in a cycle of length
// t_len: t - tp if t > tp, otherwise t_len + t - tp. Positions must lie in
// [1, t_len]. Note dist(t, t, t_len) == t_len.
int circular_distance(int t, int tp, int t_len);

// Feasibility check: returns an empty list when seq is feasible for inst,
// otherwise one human-readable violation per failed condition.
std::vector<std::string> validate(const Instance& inst, const Sequence& seq);

// Computes gaps and the objective. Throws std::invalid_argument with the
// first violation if the sequence is infeasible.
Evaluation evaluate(const Instance& inst, const Sequence& seq);

// The length-sum(f) sequence that places f_1 copies of symbol 1, then f_2
// copies of symbol 2, and so on. Always feasible when total_required() <= T.
Sequence trivial_solution(const Instance& inst);

// Cyclic left rotation by r positions (r may be any integer).
Sequence rotate(const Sequence& seq, int r);

// Instance text format: a "n T" header line, a line of n weights, a line of
// n frequencies. Blank lines and '#' comments are ignored.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);
std::string format_instance(const Instance& inst);

// Sequence text format: a length line, then that many 1-based symbol indices.
Sequence parse_sequence(std::istream& in);
Sequence parse_sequence(const std::string& text);
Sequence load_sequence(const std::string& path);
std::string format_sequence(const Sequence& seq);

// Random instance: weights uniform on {1, ..., 2n}, all frequencies 1,
// deterministic in (n, t_max, seed) via SplitMix64. Requires t_max >= n.
Instance generate_instance(int n, int t_max, std::uint64_t seed);

// Symbol order used by the model and the native search: weight descending,
// frequency descending, original index ascending. Returns 1-based original
// indices; result[c] is the original symbol at canonical slot c.
std::vector<int> canonical_symbol_order(const Instance& inst);

} // namespace wfs
