#pragma once

#include <cstdint>
#include <stdexcept>

#include "wfs/core.hpp"

namespace wfs::oracle {

// Enumeration budget exhausted before the search space was covered.
struct WorkLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Result {
    bool feasible = false;
    std::int64_t objective = 0;
    Sequence sequence;
};

inline constexpr std::uint64_t kDefaultWorkLimit = 500'000'000ULL;

// Exhaustive minimum over all n^t_len sequences of exactly t_len positions.
// Prunes only by occurrence-count feasibility of the remaining suffix, never
// by objective bounds. Ties resolve to the lexicographically first optimum.
Result brute_force_fixed_length(const Instance& inst, int t_len,
                                std::uint64_t work_limit = kDefaultWorkLimit);

// Minimum of brute_force_fixed_length over all lengths from sum(f) to T.
// Ties resolve to the shortest length, then lexicographically.
Result brute_force_global(const Instance& inst,
                          std::uint64_t work_limit = kDefaultWorkLimit);

// Minimum over all circular placements of k marks in t_len slots of the
// largest gap between consecutive marks, by exhaustive enumeration.
int min_max_gap(int t_len, int k);

} // namespace wfs::oracle
