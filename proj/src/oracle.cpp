#include "wfs/oracle.hpp"

#include <algorithm>

namespace wfs::oracle {

namespace {

struct Enumerator {
    const Instance& inst;
    int t_len;
    std::uint64_t work_limit;
    std::uint64_t work = 0;

    Sequence current;
    std::vector<int> count;
    int deficit; // sum over symbols of remaining required occurrences

    bool found = false;
    std::int64_t best = 0;
    Sequence best_seq;

    Enumerator(const Instance& inst_, int t_len_, std::uint64_t limit)
        : inst(inst_), t_len(t_len_), work_limit(limit),
          count(static_cast<std::size_t>(inst_.n), 0), deficit(inst_.total_required()) {
        current.symbols.reserve(static_cast<std::size_t>(t_len_));
    }

    void run() { descend(); }

    void descend() {
        const int filled = current.length();
        if (filled == t_len) {
            if (++work > work_limit)
                throw WorkLimitExceeded("fixed-length enumeration exceeded work limit");
            const auto ev = evaluate(inst, current);
            if (!found || ev.objective < best) {
                found = true;
                best = ev.objective;
                best_seq = current;
            }
            return;
        }
        const int remaining = t_len - filled;
        for (int sym = 1; sym <= inst.n; ++sym) {
            const auto idx = static_cast<std::size_t>(sym - 1);
            const bool still_needed = count[idx] < inst.f[idx];
            // Suffix counting: every still-required occurrence must fit.
            if (deficit - (still_needed ? 1 : 0) > remaining - 1) continue;
            if (++work > work_limit)
                throw WorkLimitExceeded("fixed-length enumeration exceeded work limit");
            ++count[idx];
            if (still_needed) --deficit;
            current.symbols.push_back(sym);
            descend();
            current.symbols.pop_back();
            if (still_needed) ++deficit;
            --count[idx];
        }
    }
};

} // namespace

Result brute_force_fixed_length(const Instance& inst, int t_len, std::uint64_t work_limit) {
    if (t_len < 1) throw std::invalid_argument("brute_force_fixed_length: length must be positive");
    Result result;
    if (t_len < inst.total_required() || t_len > inst.t_max) return result;
    Enumerator e(inst, t_len, work_limit);
    e.run();
    if (e.found) {
        result.feasible = true;
        result.objective = e.best;
        result.sequence = e.best_seq;
    }
    return result;
}

Result brute_force_global(const Instance& inst, std::uint64_t work_limit) {
    Result best;
    for (int t_len = inst.total_required(); t_len <= inst.t_max; ++t_len) {
        const auto r = brute_force_fixed_length(inst, t_len, work_limit);
        if (r.feasible && (!best.feasible || r.objective < best.objective)) best = r;
    }
    return best;
}

namespace {

void min_max_gap_descend(int t_len, int k, int next_slot, std::vector<int>& marks, int& best) {
    const auto placed = static_cast<int>(marks.size());
    if (placed == k) {
        int gap = t_len + marks.front() - marks.back();
        for (std::size_t i = 1; i < marks.size(); ++i)
            gap = std::max(gap, marks[i] - marks[i - 1]);
        best = std::min(best, gap);
        return;
    }
    for (int slot = next_slot; slot <= t_len - (k - placed - 1); ++slot) {
        marks.push_back(slot);
        min_max_gap_descend(t_len, k, slot + 1, marks, best);
        marks.pop_back();
    }
}

} // namespace

int min_max_gap(int t_len, int k) {
    if (t_len < 1 || k < 1 || k > t_len)
        throw std::invalid_argument("min_max_gap: need 1 <= k <= t_len");
    std::vector<int> marks;
    marks.reserve(static_cast<std::size_t>(k));
    int best = t_len;
    min_max_gap_descend(t_len, k, 1, marks, best);
    return best;
}

} // namespace wfs::oracle
