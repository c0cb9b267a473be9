#pragma once

#include <optional>

#include "bollobas/families.hpp"
#include "bollobas/rng.hpp"

namespace bollobas {

// Randomized backtracking generator for valid (k,t)-tuples at desk scale:
// columns are sampled as k random nonempty subsets of [n] and kept when the
// partial system still meets the intersection condition. Returns a system
// with exactly m columns, already verified, or nothing within the budget.
std::optional<FamilySystem> random_valid_tuple(int k, int t, int m, int n, SplitMix64& rng,
                                               int restarts = 60, int tries_per_column = 400);

struct RandomTupleBatch {
    std::vector<FamilySystem> systems;
    std::vector<int> t_values;  // parallel to systems
};

// Draws `count` valid tuples, cycling through (k,t) in {(2,2),(3,2),(3,3)}
// with random m <= max_m (m >= t) and n <= max_n. Deterministic in seed.
RandomTupleBatch collect_random_tuples(int count, int max_m, int max_n, uint64_t seed);

}  // namespace bollobas
