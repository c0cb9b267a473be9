#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bollobas/errors.hpp"

namespace bollobas {

// Partition of {0,...,k-1} into nonempty parts, canonically ordered by
// minimum element (the order restricted-growth strings produce).
struct SetPartition {
    std::vector<std::vector<int>> parts;

    int k() const;
    int size() const { return static_cast<int>(parts.size()); }
    std::vector<int> part_sizes() const;
    std::string to_string() const;  // e.g. "{0,1}|{2}"
};

inline constexpr int kMaxPartitionK = 12;

// All partitions of [k] with exactly s parts, via restricted-growth strings;
// count equals S(k,s).
std::vector<SetPartition> enumerate_partitions(int k, int s);

// Streams every partition of [k] (any number of parts).
void for_each_partition(int k, const std::function<void(const SetPartition&)>& fn);

uint64_t stirling2(int k, int s);
uint64_t bell_number(int k);

// f(pi,t): sum over t-subsets of parts of the product of part sizes, i.e.
// the elementary symmetric polynomial e_t of the part sizes. Zero when
// |pi| < t. Governs the per-edge coverage exponent of the random covering.
uint64_t f_pi(const SetPartition& pi, int t);

// Closed form for min{f(pi,t) : |pi| = s}: one part of size k-s+1 and s-1
// singletons, giving (k-s+1)*C(s-1,t-1) + C(s-1,t).
uint64_t min_f_value(int k, int s, int t);

struct PartitionPairViolation {
    SetPartition pi;
    SetPartition pi_prime;
    uint64_t f_pi_value = 0;
    uint64_t f_prime_value = 0;
};

struct MonotonicityReport {
    std::vector<PartitionPairViolation> refinement_violations;  // f(pi) > f(refinement)
    std::vector<PartitionPairViolation> merge_violations;       // f(merged) > f(pi)
    bool clean() const { return refinement_violations.empty() && merge_violations.empty(); }
};

// Exhaustive check of the two monotonicity claims behind min_f_value:
// (i) one-step refinements never decrease f, and (ii) merging all but one
// element of a smaller part (size >= 2) into a part at least as large never
// increases f. Violations are returned as data, not thrown.
MonotonicityReport check_f_monotonicity(int k, int t);

// Same, with the statistic injectable so the test harness can prove the
// checker actually fires.
MonotonicityReport check_f_monotonicity_with(
    int k, int t, const std::function<int64_t(const SetPartition&, int)>& stat);

}  // namespace bollobas
