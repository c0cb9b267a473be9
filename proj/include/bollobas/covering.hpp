#pragma once

#include <optional>
#include <span>

#include "bollobas/families.hpp"

namespace bollobas {

// One complete k-partite block: picking one vertex from each part yields an
// edge. Parts must be nonempty (an empty part means no edges at all).
struct PartiteBlock {
    std::vector<Bitset> parts;
};

// Claimed covering of H_{k,t}(n), the k-partite k-uniform hypergraph whose
// edges are the index tuples with at least t distinct entries.
struct PartiteCover {
    int k = 0;
    int t = 0;
    int n = 0;
    std::vector<PartiteBlock> blocks;

    void check_shape() const;
};

// Edge membership in H_{k,t}(n): at least t distinct indices.
bool hkt_contains(int k, int t, int n, std::span<const int> indices);

enum class CoverViolationKind {
    bad_block,   // a block contains an edge outside H_{k,t}(n)
    uncovered,   // an edge of H_{k,t}(n) lies in no block
};

struct CoverViolation {
    CoverViolationKind kind = CoverViolationKind::uncovered;
    int block = -1;  // offending block for bad_block
    std::vector<int> edge;
};

struct CoverVerdict {
    std::optional<CoverViolation> violation;
    bool valid() const { return !violation.has_value(); }
};

// Full n^k edge scan; reports the first failure in lexicographic edge order.
CoverVerdict verify_cover(const PartiteCover& cover, const VerifyOptions& opts = {});

// The two directions of the cover <-> tuple correspondence. Both verify
// their input and their output.
//   cover_to_tuple: ground set = blocks, column j of family i = the blocks
//   whose part i contains vertex j.
//   tuple_to_cover: block per ground element r with parts {j : r in A_{i,j}};
//   elements spanning an empty part yield edgeless blocks and are dropped.
FamilySystem cover_to_tuple(const PartiteCover& cover, const VerifyOptions& opts = {});
PartiteCover tuple_to_cover(const FamilySystem& sys, int t, const VerifyOptions& opts = {});

// Number of colorings drawn per t-subset in the randomized covering:
// floor((t+1) t^t log2(n) / ((k-t+1) log2 e)).
int default_copy_count(int k, int t, int n);

struct RandomCoverResult {
    std::optional<PartiteCover> cover;  // set on success
    int attempts = 0;
    int copies_per_subset = 0;          // the N actually used
    int blocks_requested = 0;           // C(k,t) * N
    uint64_t last_uncovered = 0;        // uncovered edges of the final attempt
    bool below_analytic_threshold = false; // n < k * S(k,t)
    bool success() const { return cover.has_value(); }
};

// Las Vegas realization of the random covering: each attempt draws, for
// every t-subset T of [k], N independent uniform colorings [n] -> T and keeps
// the induced complete k-partite blocks (color classes on T, full sides off
// T). Retries until the draw covers H_{k,t}(n). Each (T, copy) pair gets its
// own derived RNG stream, so the result is a function of (seed) alone.
RandomCoverResult random_cover(int k, int t, int n, uint64_t seed, int max_attempts = 1000,
                               const VerifyOptions& opts = {});

// Upper bound on the expected number of uncovered edges after one attempt
// with N copies per t-subset: sum over partitions pi of [k] with |pi| >= t of
// n^|pi| (1 - t^-t)^(N f(pi,t)). Extended precision, sums a few thousand
// terms at most.
long double expected_uncovered_bound(int k, int t, int n, long long copies);

struct BetaOptions {
    bool guard_override = false;
};

struct BetaResult {
    int beta = 0;
    std::optional<FamilySystem> witness;  // a maximum tuple, absent when beta == 0
};

// Maximum number of columns of any Bollobas (k,t)-tuple whose sets live in
// {0,...,ground-1}, by exhaustive backtracking over candidate columns
// (k-tuples of nonempty subsets with empty full intersection). Guarded:
// ground <= 5 for k = 2, <= 4 for k = 3, <= 3 beyond.
BetaResult exact_beta(int k, int t, int ground, const BetaOptions& opts = {});

struct MinCoverResult {
    int m = 0;
    PartiteCover certificate;
};

// Smallest m with exact_beta(k,t,m) >= n, plus a witness cover produced from
// the maximizing tuple. When H_{k,t}(n) has no edges (n < t) the minimum
// cover is empty.
MinCoverResult exact_min_cover(int k, int t, int n, const BetaOptions& opts = {});

}  // namespace bollobas
