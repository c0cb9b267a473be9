#include "bollobas/tuple_search.hpp"

namespace bollobas {

namespace {

// Condition over the current columns only: every index tuple must have a
// nonempty intersection exactly when it has >= t distinct entries. Partial
// families (fewer than t columns) therefore need all-empty intersections.
bool partial_valid(const std::vector<std::vector<uint32_t>>& cols, int k, int t) {
    const int q = static_cast<int>(cols.size());
    std::vector<int> idx(static_cast<size_t>(k), 0);
    for (;;) {
        uint32_t inter = ~uint32_t{0};
        int distinct = 0;
        for (int j = 0; j < k; ++j) {
            int c = idx[static_cast<size_t>(j)];
            inter &= cols[static_cast<size_t>(c)][static_cast<size_t>(j)];
            bool seen = false;
            for (int l = 0; l < j; ++l)
                if (idx[static_cast<size_t>(l)] == c) { seen = true; break; }
            if (!seen) ++distinct;
        }
        if ((inter != 0) != (distinct >= t)) return false;
        int p = k - 1;
        while (p >= 0 && idx[static_cast<size_t>(p)] == q - 1) idx[static_cast<size_t>(p--)] = 0;
        if (p < 0) break;
        ++idx[static_cast<size_t>(p)];
    }
    return true;
}

// For t = k, any cross-column pair of sets at distinct positions must meet:
// an all-distinct tuple through that pair exists once the family reaches k
// columns, so an empty pair intersection is a dead end worth pruning early.
bool injective_pairs_meet(const std::vector<std::vector<uint32_t>>& cols, int k) {
    const int q = static_cast<int>(cols.size());
    for (int c1 = 0; c1 < q; ++c1)
        for (int c2 = 0; c2 < q; ++c2) {
            if (c1 == c2) continue;
            for (int p1 = 0; p1 < k; ++p1)
                for (int p2 = p1 + 1; p2 < k; ++p2)
                    if ((cols[static_cast<size_t>(c1)][static_cast<size_t>(p1)] &
                         cols[static_cast<size_t>(c2)][static_cast<size_t>(p2)]) == 0)
                        return false;
        }
    return true;
}

// Random column for the t = k regime: each ground element joins one of the k
// sets or stays out, so the sets are pairwise disjoint by construction (any
// within-column overlap would break the all-diagonal-empty requirement).
std::vector<uint32_t> sample_disjoint_column(int k, int n, SplitMix64& rng) {
    std::vector<uint32_t> col(static_cast<size_t>(k), 0);
    for (;;) {
        for (auto& mask : col) mask = 0;
        for (int e = 0; e < n; ++e) {
            int pick = rng.below_int(k + 1);
            if (pick < k) col[static_cast<size_t>(pick)] |= uint32_t{1} << e;
        }
        bool ok = true;
        for (uint32_t mask : col) ok = ok && mask != 0;
        if (ok) return col;
    }
}

std::vector<uint32_t> sample_free_column(int k, int n, SplitMix64& rng) {
    const uint32_t full = (uint32_t{1} << n) - 1;
    std::vector<uint32_t> col(static_cast<size_t>(k));
    for (auto& mask : col) mask = 1 + static_cast<uint32_t>(rng.below(full));
    return col;
}

}  // namespace

std::optional<FamilySystem> random_valid_tuple(int k, int t, int m, int n, SplitMix64& rng,
                                               int restarts, int tries_per_column) {
    if (!(2 <= t && t <= k)) throw std::invalid_argument("random_valid_tuple: need 2 <= t <= k");
    if (m < t || n < 1 || n > 30)
        throw std::invalid_argument("random_valid_tuple: need m >= t and 1 <= n <= 30");

    const bool diagonal_regime = (t == k);
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::vector<std::vector<uint32_t>> cols;
        int stuck = 0;
        while (static_cast<int>(cols.size()) < m && stuck <= 2) {
            bool extended = false;
            for (int trial = 0; trial < tries_per_column; ++trial) {
                cols.push_back(diagonal_regime ? sample_disjoint_column(k, n, rng)
                                               : sample_free_column(k, n, rng));
                bool ok = partial_valid(cols, k, t);
                if (ok && diagonal_regime && m >= k) ok = injective_pairs_meet(cols, k);
                if (ok) { extended = true; break; }
                cols.pop_back();
            }
            if (extended) continue;
            // dead end: drop the most recent column and try a different branch
            if (cols.empty()) break;
            cols.pop_back();
            ++stuck;
        }
        if (static_cast<int>(cols.size()) != m) continue;

        FamilySystem sys = FamilySystem::create(n, k, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j)
                for (int e = 0; e < n; ++e)
                    if ((cols[static_cast<size_t>(i)][static_cast<size_t>(j)] >> e) & 1)
                        sys.set(j, i).set(e);
        if (is_bollobas_tuple(sys, t).valid()) return sys;
    }
    return std::nullopt;
}

RandomTupleBatch collect_random_tuples(int count, int max_m, int max_n, uint64_t seed) {
    static const int combos[][2] = {{2, 2}, {3, 2}, {3, 3}};
    RandomTupleBatch batch;
    SplitMix64 rng(seed);
    size_t combo = 0;
    while (static_cast<int>(batch.systems.size()) < count) {
        int k = combos[combo][0];
        int t = combos[combo][1];
        combo = (combo + 1) % 3;
        int m, n;
        if (t == 3) {
            // the only (3,3)-tuples in this box have m = 3 over 6 ground
            // elements (column sets are pairwise disjoint, so the family is a
            // cover of H_{3,3}(3) by 6 one-edge blocks)
            if (max_m < 3 || max_n < 6) continue;
            m = 3;
            n = 6;
        } else {
            m = t + rng.below_int(max_m - t + 1);
            n = 2 + rng.below_int(max_n - 1);
        }
        auto sys = random_valid_tuple(k, t, m, n, rng, 8);
        if (!sys) continue;
        batch.systems.push_back(std::move(*sys));
        batch.t_values.push_back(t);
    }
    return batch;
}

}  // namespace bollobas
