#pragma once

#include <string>
#include <vector>

#include "wfs/core.hpp"
#include "wfs/rng.hpp"

namespace wfs::testing {

inline std::string data_path(const std::string& name) {
    return std::string(WFS_TEST_DATA_DIR) + "/" + name;
}

inline Instance fig1_instance() { return load_instance(data_path("fig1.wfs")); }

struct SuiteInstance {
    std::string id;
    Instance instance;
};

// Fixed seeded micro-suite: small enough for exhaustive certification, with
// hand-picked weight-dominant cases where occurrence caps are tightest.
inline std::vector<SuiteInstance> oracle_suite() {
    std::vector<SuiteInstance> suite;
    std::uint64_t index = 0;
    auto add_generated = [&suite, &index](int n, int t, int copies) {
        for (int c = 0; c < copies; ++c, ++index) {
            const auto seed = derive_seed(20240101, index);
            suite.push_back({"gen_n" + std::to_string(n) + "_T" + std::to_string(t) +
                                 "_c" + std::to_string(c),
                             generate_instance(n, t, seed)});
        }
    };
    for (int t = 1; t <= 3; ++t) add_generated(1, t, 1);
    for (int t = 2; t <= 9; ++t) add_generated(2, t, 2);
    for (int t = 3; t <= 9; ++t) add_generated(3, t, 2);
    for (int t = 4; t <= 9; ++t) add_generated(4, t, 3);

    auto add_hand = [&suite](std::string id, int t_max, std::vector<std::int64_t> w,
                             std::vector<int> f) {
        Instance inst;
        inst.n = static_cast<int>(w.size());
        inst.t_max = t_max;
        inst.w = std::move(w);
        inst.f = std::move(f);
        suite.push_back({std::move(id), std::move(inst)});
    };
    add_hand("hand_heavy4_T8", 8, {8, 1, 1, 1}, {1, 1, 1, 1});
    add_hand("hand_heavy4_T9", 9, {8, 1, 1, 1}, {1, 1, 1, 1});
    add_hand("hand_heavy3_T9", 9, {6, 1, 1}, {1, 1, 1});
    add_hand("hand_heavy2_T9", 9, {3, 1}, {1, 1});
    return suite;
}

// Desk-scale benchmark set: n=5 with T in {10, 15, 20}, ten instances each.
inline std::vector<SuiteInstance> desk_suite() {
    std::vector<SuiteInstance> suite;
    std::uint64_t index = 0;
    for (const int t : {10, 15, 20})
        for (int c = 0; c < 10; ++c, ++index)
            suite.push_back({"desk_n5_T" + std::to_string(t) + "_i" + std::to_string(c),
                             generate_instance(5, t, derive_seed(777, index))});
    return suite;
}

// Random feasible sequence: required counts plus random padding, shuffled.
inline Sequence random_feasible_sequence(const Instance& inst, int t_len, SplitMix64& gen) {
    Sequence seq = trivial_solution(inst);
    while (seq.length() < t_len)
        seq.symbols.push_back(1 + static_cast<int>(next_below(
                                      gen, static_cast<std::uint64_t>(inst.n))));
    for (int i = seq.length() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(
            next_below(gen, static_cast<std::uint64_t>(i) + 1));
        std::swap(seq.symbols[static_cast<std::size_t>(i)], seq.symbols[j]);
    }
    return seq;
}

} // namespace wfs::testing
