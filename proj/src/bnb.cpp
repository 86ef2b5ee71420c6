#include <algorithm>
#include <limits>

#include "wfs/solver.hpp"

namespace wfs {

namespace {

constexpr std::uint64_t kDeadlineCheckMask = 0x1FFF;
constexpr std::int64_t kNoCap = std::numeric_limits<std::int64_t>::max();

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Deterministic warm start: choose occurrence counts greedily against the
// even-spread gap bound, then place each symbol at evenly spaced slots.
// Returns an empty vector when the count window cannot fill the length.
std::vector<int> even_spread_seed(const BnbProblem& prob) {
    const int n = prob.n;
    const int t_len = prob.t_len;
    std::vector<int> count(static_cast<std::size_t>(n));
    int total = 0;
    for (int i = 0; i < n; ++i) {
        count[static_cast<std::size_t>(i)] = prob.count_lb[static_cast<std::size_t>(i)];
        total += count[static_cast<std::size_t>(i)];
    }
    if (total > t_len) return {};
    while (total < t_len) {
        int pick = -1;
        std::int64_t worst = -1;
        for (int i = 0; i < n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            if (count[idx] >= prob.count_ub[idx]) continue;
            const std::int64_t pressure = prob.w[idx] * ceil_div(t_len, count[idx]);
            if (pressure > worst) {
                worst = pressure;
                pick = i;
            }
        }
        if (pick < 0) return {};
        ++count[static_cast<std::size_t>(pick)];
        ++total;
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&count](int a, int b) {
        const int ca = count[static_cast<std::size_t>(a)];
        const int cb = count[static_cast<std::size_t>(b)];
        if (ca != cb) return ca > cb;
        return a < b;
    });

    std::vector<int> seq(static_cast<std::size_t>(t_len), 0);
    for (const int i : order) {
        const int c = count[static_cast<std::size_t>(i)];
        for (int j = 0; j < c; ++j) {
            int slot = static_cast<int>(static_cast<std::int64_t>(j) * t_len / c);
            while (seq[static_cast<std::size_t>(slot)] != 0) slot = (slot + 1) % t_len;
            seq[static_cast<std::size_t>(slot)] = i + 1;
        }
    }
    return seq;
}

std::int64_t sequence_objective(const BnbProblem& prob, const std::vector<int>& seq) {
    std::vector<int> first(static_cast<std::size_t>(prob.n), 0);
    std::vector<int> last(static_cast<std::size_t>(prob.n), 0);
    std::vector<int> gap(static_cast<std::size_t>(prob.n), 0);
    for (int t = 1; t <= prob.t_len; ++t) {
        const auto idx = static_cast<std::size_t>(seq[static_cast<std::size_t>(t - 1)] - 1);
        if (first[idx] == 0)
            first[idx] = t;
        else
            gap[idx] = std::max(gap[idx], t - last[idx]);
        last[idx] = t;
    }
    std::int64_t obj = 0;
    for (int i = 0; i < prob.n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const int wrap = prob.t_len + first[idx] - last[idx];
        obj = std::max(obj, prob.w[idx] * static_cast<std::int64_t>(std::max(gap[idx], wrap)));
    }
    return obj;
}

struct Search {
    const BnbProblem& prob;
    const BnbOptions& opts;
    const Budget& budget;

    std::vector<int> seq;        // 1-based positions, values 1..n (0 = empty)
    std::vector<int> count;
    std::vector<int> first_pos;
    std::vector<int> last_pos;
    std::vector<int> max_gap;    // largest closed gap so far
    int deficit = 0;             // outstanding required occurrences
    int headroom = 0;            // remaining allowed occurrences

    std::int64_t cap = kNoCap;
    bool found = false;
    std::vector<int> best_seq;
    std::int64_t best_obj = 0;

    std::uint64_t nodes = 0;
    bool timed_out = false;

    Search(const BnbProblem& p, const BnbOptions& o, const Budget& b)
        : prob(p), opts(o), budget(b),
          seq(static_cast<std::size_t>(p.t_len) + 1, 0),
          count(static_cast<std::size_t>(p.n), 0),
          first_pos(static_cast<std::size_t>(p.n), 0),
          last_pos(static_cast<std::size_t>(p.n), 0),
          max_gap(static_cast<std::size_t>(p.n), 0) {
        if (p.cap.has_value()) cap = *p.cap;
        for (int i = 0; i < p.n; ++i) {
            deficit += p.count_lb[static_cast<std::size_t>(i)];
            headroom += p.count_ub[static_cast<std::size_t>(i)];
        }
    }

    bool out_of_time() {
        if ((nodes & kDeadlineCheckMask) == 0 && budget.expired()) timed_out = true;
        return timed_out;
    }

    void seed() {
        const auto warm = even_spread_seed(prob);
        if (warm.empty()) return;
        const auto obj = sequence_objective(prob, warm);
        if (obj < cap) {
            cap = obj;
            found = true;
            best_obj = obj;
            best_seq = warm;
        }
    }

    // No completion of the current prefix can reach an objective below cap:
    // every symbol needs all its circular gaps priced under the cap, which
    // pins a minimum number of future copies; those must fit the remaining
    // positions and the count window.
    bool completion_hopeless(int t_next) const {
        if (cap == kNoCap) return false;
        const int remaining = prob.t_len - t_next + 1;
        int required_total = 0;
        for (int i = 0; i < prob.n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const std::int64_t allowed = (cap - 1) / prob.w[idx]; // largest priced-under gap
            if (allowed < 1) return true;
            int required;
            if (count[idx] == 0) {
                required = allowed >= prob.t_len
                               ? 1
                               : ceil_div(prob.t_len, static_cast<int>(allowed));
            } else {
                const int span = prob.t_len + first_pos[idx] - last_pos[idx];
                if (t_next - last_pos[idx] > allowed) return true;
                required = allowed >= span
                               ? 0
                               : ceil_div(span, static_cast<int>(allowed)) - 1;
            }
            required = std::max(required, prob.count_lb[idx] - count[idx]);
            if (count[idx] + required > prob.count_ub[idx]) return true;
            required_total += required;
            if (required_total > remaining) return true;
        }
        return false;
    }

    void record_leaf() {
        if (deficit > 0) return;
        std::int64_t obj = 0;
        for (int i = 0; i < prob.n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const int wrap = prob.t_len + first_pos[idx] - last_pos[idx];
            obj = std::max(obj, prob.w[idx] *
                                    static_cast<std::int64_t>(std::max(max_gap[idx], wrap)));
        }
        if (obj < cap) {
            cap = obj;
            found = true;
            best_obj = obj;
            best_seq.assign(seq.begin() + 1, seq.end());
        }
    }

    void descend(int t) {
        if (t > prob.t_len) {
            record_leaf();
            return;
        }
        const int remaining = prob.t_len - t + 1;
        if (deficit > remaining || headroom < remaining) return;

        const int last_candidate = (t == 1 && prob.fix_first_symbol) ? 1 : prob.n;
        for (int sym = 1; sym <= last_candidate; ++sym) {
            const auto idx = static_cast<std::size_t>(sym - 1);
            if (count[idx] >= prob.count_ub[idx]) continue;
            if (prob.no_self_adjacent[idx]) {
                if (t > 1 && seq[static_cast<std::size_t>(t - 1)] == sym) continue;
                if (t == prob.t_len && seq[1] == sym) continue;
            }
            if (sym > 1 && prob.tied_to_previous[idx] && count[idx - 1] == 0) continue;

            const int prev_last = last_pos[idx];
            const int prev_gap = max_gap[idx];
            if (opts.closed_gap_bound && count[idx] > 0 &&
                prob.w[idx] * static_cast<std::int64_t>(t - prev_last) >= cap)
                continue;

            ++nodes;
            if (out_of_time()) return;

            const bool was_needed = count[idx] < prob.count_lb[idx];
            seq[static_cast<std::size_t>(t)] = sym;
            if (count[idx] == 0)
                first_pos[idx] = t;
            else
                max_gap[idx] = std::max(prev_gap, t - prev_last);
            last_pos[idx] = t;
            ++count[idx];
            if (was_needed) --deficit;
            --headroom;

            const bool prune =
                opts.lookahead_bound && t < prob.t_len && completion_hopeless(t + 1);
            if (!prune) descend(t + 1);

            ++headroom;
            if (was_needed) ++deficit;
            --count[idx];
            last_pos[idx] = prev_last;
            max_gap[idx] = prev_gap;
            if (count[idx] == 0) first_pos[idx] = 0;
            seq[static_cast<std::size_t>(t)] = 0;
            if (timed_out) return;
        }
    }
};

} // namespace

BnbResult branch_and_bound(const BnbProblem& problem, const Budget& budget,
                           const BnbOptions& options) {
    BnbResult result;
    if (budget.expired()) {
        result.timed_out = true;
        return result;
    }
    Search search(problem, options, budget);
    if (options.warm_start) search.seed();
    search.descend(1);
    result.found = search.found;
    result.objective = search.best_obj;
    result.sequence = search.best_seq;
    result.nodes = search.nodes;
    result.timed_out = search.timed_out;
    return result;
}

} // namespace wfs
