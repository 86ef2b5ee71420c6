#include "wfs/bounds.hpp"

#include <algorithm>

namespace wfs {

namespace {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

std::optional<int> k_star(std::int64_t w, int f, int t_len, std::optional<std::int64_t> z) {
    if (!z.has_value()) return f;
    for (int k = f; k <= t_len; ++k)
        if (w * static_cast<std::int64_t>(ceil_div(t_len, k)) < *z) return k;
    return std::nullopt;
}

std::optional<std::int64_t> theta_cap(const Instance& inst, std::int64_t z) {
    std::int64_t best = 0;
    for (const auto w : inst.w) {
        const std::int64_t multiplier = (z - 1) / w;
        if (multiplier >= 1) best = std::max(best, w * multiplier);
    }
    if (best == 0) return std::nullopt;
    return best;
}

IterationBounds compute_bounds(const Instance& inst, int t_len,
                               std::optional<std::int64_t> z) {
    IterationBounds b;
    b.t_len = t_len;
    b.incumbent = z;

    const int total = inst.total_required();
    b.count_ub.resize(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) {
        const int f = inst.f[static_cast<std::size_t>(i)];
        // A symbol never needs to sit next to itself more often than its
        // required count forces, so half the circle caps it; the other
        // symbols' required occurrences cap it from the remaining capacity.
        const int half = std::max(f, t_len / 2);
        const int capacity = t_len - (total - f);
        b.count_ub[static_cast<std::size_t>(i)] = std::min(half, capacity);
    }

    b.k_star.resize(static_cast<std::size_t>(inst.n));
    bool all_defined = true;
    std::int64_t sum = 0;
    for (int i = 0; i < inst.n; ++i) {
        const auto k = k_star(inst.w[static_cast<std::size_t>(i)],
                              inst.f[static_cast<std::size_t>(i)], t_len, z);
        b.k_star[static_cast<std::size_t>(i)] = k;
        if (k.has_value())
            sum += *k;
        else
            all_defined = false;
    }
    if (all_defined) b.k_star_sum = sum;

    b.count_ub_lifted = b.count_ub;
    if (z.has_value() && b.k_star_sum.has_value()) {
        for (int i = 0; i < inst.n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const std::int64_t lifted =
                static_cast<std::int64_t>(t_len) - *b.k_star_sum + *b.k_star[idx];
            b.count_ub_lifted[idx] = static_cast<int>(
                std::min<std::int64_t>(b.count_ub[idx], std::max<std::int64_t>(lifted, 0)));
        }
    }

    if (z.has_value()) {
        b.theta_cap = theta_cap(inst, *z);
        b.no_improving_objective = !b.theta_cap.has_value();
    }
    return b;
}

bool should_skip(const IterationBounds& b) {
    if (!b.incumbent.has_value()) return false;
    if (b.no_improving_objective) return true;
    if (!b.k_star_sum.has_value()) return true; // some required count impossible
    return *b.k_star_sum > b.t_len;
}

bool adjacent_positions(int t, int tp, int t_len) {
    if (t == tp) return false;
    const int lo = std::min(t, tp);
    const int hi = std::max(t, tp);
    return hi - lo == 1 || (lo == 1 && hi == t_len);
}

bool pred_fixed_zero(const Instance& inst, int i, int t, int tp, const IterationBounds& b) {
    if (adjacent_positions(t, tp, b.t_len)) return true;
    if (!b.incumbent.has_value()) return false;
    const std::int64_t d = circular_distance(t, tp, b.t_len);
    return inst.w[static_cast<std::size_t>(i)] * d >= *b.incumbent;
}

bool succ_fixed_zero(const Instance& inst, int i, int t, int tp, const IterationBounds& b) {
    if (adjacent_positions(t, tp, b.t_len)) return true;
    if (!b.incumbent.has_value()) return false;
    const std::int64_t d = circular_distance(tp, t, b.t_len);
    return inst.w[static_cast<std::size_t>(i)] * d >= *b.incumbent;
}

EffectiveBounds make_effective(const Instance& inst, const IterationBounds& b,
                               const Settings& cfg) {
    EffectiveBounds eff;
    const auto count = static_cast<std::size_t>(inst.n);
    eff.count_lb.resize(count);
    eff.count_ub.resize(count, b.t_len);
    eff.no_self_adjacent.assign(count, 0);

    for (int i = 0; i < inst.n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (cfg.rhs_lifting) {
            if (!b.k_star[idx].has_value()) {
                eff.provably_no_improvement = true;
                return eff;
            }
            eff.count_lb[idx] = *b.k_star[idx];
        } else {
            eff.count_lb[idx] = inst.f[idx];
        }
        if (cfg.count_upper_bounds)
            eff.count_ub[idx] = (cfg.lifted_count_bounds ? b.count_ub_lifted[idx]
                                                         : b.count_ub[idx]);
        if (eff.count_lb[idx] > eff.count_ub[idx]) {
            eff.provably_no_improvement = true;
            return eff;
        }
        // Self-adjacency stays allowed for symbols whose required count may
        // force it; with unit frequencies the exclusion is always safe.
        if (cfg.adjacency_fixings && inst.f[idx] == 1) eff.no_self_adjacent[idx] = 1;
    }

    if (cfg.improvement_cap && b.incumbent.has_value()) {
        if (b.no_improving_objective) {
            eff.provably_no_improvement = true;
            return eff;
        }
        eff.cap = *b.theta_cap + 1;
    }
    return eff;
}

} // namespace wfs
