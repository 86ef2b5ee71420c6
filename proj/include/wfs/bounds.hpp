#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wfs/core.hpp"
#include "wfs/settings.hpp"

namespace wfs {

// Everything derivable for one fixed length t_len and incumbent value z
// (std::nullopt = no incumbent yet): occurrence-count windows, the objective
// cap and the skip certificate.
struct IterationBounds {
    int t_len = 0;
    std::optional<std::int64_t> incumbent;

    // Largest value expressible as a positive weight multiple strictly below
    // the incumbent. Empty while no incumbent exists, or when no improving
    // objective value exists at all (see no_improving_objective).
    std::optional<std::int64_t> theta_cap;
    bool no_improving_objective = false;

    // Minimum occurrence count per symbol compatible with beating the
    // incumbent at this length; empty where no count works at all.
    std::vector<std::optional<int>> k_star;
    std::optional<std::int64_t> k_star_sum; // defined only if every k_star is

    std::vector<int> count_ub;        // incumbent-free occurrence caps
    std::vector<int> count_ub_lifted; // incumbent-lifted caps (== count_ub without one)
};

// Smallest k >= f with w * ceil(t_len / k) < z, or empty if no k <= t_len
// works. Without an incumbent every count qualifies and the result is f.
std::optional<int> k_star(std::int64_t w, int f, int t_len, std::optional<std::int64_t> z);

// Largest positive multiple of any weight strictly below z; empty when z is
// at most the smallest weight, i.e. no improving objective value exists.
std::optional<std::int64_t> theta_cap(const Instance& inst, std::int64_t z);

IterationBounds compute_bounds(const Instance& inst, int t_len,
                               std::optional<std::int64_t> z);

// Length t_len provably admits no improving solution: some k_star is
// impossible or their sum exceeds t_len. Always false without an incumbent.
bool should_skip(const IterationBounds& b);

// Positions t and tp are circular neighbors (|t - tp| == 1 or the {1, t_len}
// wrap pair).
bool adjacent_positions(int t, int tp, int t_len);

// Predecessor-indicator fixing for symbol i (0-based) and position pair
// (t, tp): adjacent pair, the {1, t_len} wrap pair, or priced at >= z.
bool pred_fixed_zero(const Instance& inst, int i, int t, int tp, const IterationBounds& b);
// Successor-indicator fixing; same rule with the distance arguments reversed.
bool succ_fixed_zero(const Instance& inst, int i, int t, int tp, const IterationBounds& b);

// The occurrence window and objective cap a backend must honor for one
// fixed-length solve under the given settings, with symbols still in
// original order. lo/hi empty means the length is provably non-improving
// (some required count is impossible).
struct EffectiveBounds {
    bool provably_no_improvement = false;
    std::vector<int> count_lb;
    std::vector<int> count_ub;
    // Solutions must have objective < cap when engaged.
    std::optional<std::int64_t> cap;
    // Per symbol: forbid placement next to itself (circularly).
    std::vector<char> no_self_adjacent;
};

EffectiveBounds make_effective(const Instance& inst, const IterationBounds& b,
                               const Settings& cfg);

} // namespace wfs
