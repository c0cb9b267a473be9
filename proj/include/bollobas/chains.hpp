#pragma once

#include <optional>
#include <span>

#include "bollobas/families.hpp"

namespace bollobas {

// Evaluation context for the permutation chain families of a (k,k)-tuple.
// Permutations are rank arrays over the effective ground set X (the union of
// all sets, sorted ascending): ranks[i] is the position assigned to
// ground[i], and every sigma defines the set of permutations that order the
// derived blocks of sigma strictly block-after-block.
struct ChainContext {
    FamilySystem sys;
    std::vector<int> ground;  // sorted elements of X
    int n = 0;                // |X|
    bool validated = false;
};

inline constexpr int kMaxChainGround = 9;  // n! enumeration guard

// validate=false admits invalid systems on purpose (negative controls);
// collisions are then expected, not a bug.
ChainContext make_chain_context(const FamilySystem& sys, bool validate = true,
                                bool guard_override = false);

struct ChainMembership {
    bool member = false;
    bool saw_empty_block = false;  // empty derived blocks impose no constraint
};

ChainMembership chain_membership(const ChainContext& ctx, const IndexSequence& sigma,
                                 std::span<const int> ranks);

struct ChainCount {
    BigUint formula;     // C(n,|U|) * prod |B_j|! * (n-|U|)!
    BigUint enumerated;  // brute count over all n! permutations
    bool match = false;
    bool has_empty_block = false;
    std::vector<int> block_sizes;
};

ChainCount chain_count(const ChainContext& ctx, const IndexSequence& sigma);

struct SigmaSummary {
    IndexSequence sigma;
    BigUint formula;
    BigUint enumerated;
    bool has_empty_block = false;
    std::vector<int> block_sizes;
};

struct ChainCollision {
    IndexSequence sigma1, sigma2;
    std::vector<int> ranks;  // a permutation in both families
};

struct DisjointnessReport {
    std::optional<ChainCollision> collision;
    BigUint total_enumerated;  // sum over sigma of the family sizes
    std::vector<SigmaSummary> per_sigma;
    bool disjoint() const { return !collision.has_value(); }
};

// Classifies every permutation of X against every sigma. For valid systems
// the families are pairwise disjoint, every per-sigma count matches the
// closed formula, and total / n! equals the inequality sum.
DisjointnessReport verify_disjointness(const ChainContext& ctx, bool guard_override = false);

}  // namespace bollobas
