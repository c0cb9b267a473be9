#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "bollobas/chains.hpp"
#include "bollobas/constructions.hpp"
#include "bollobas/tuple_search.hpp"

using namespace bollobas;

TEST_CASE("chain_membership: a two-element chain") {
    ChainContext ctx = make_chain_context(classical_pairs(1, 1));
    IndexSequence sigma = IndexSequence::of(2, {0});
    // blocks for sigma=(0): {0} then {1}; ranks are over ground (0,1)
    std::vector<int> forward{0, 1};
    std::vector<int> backward{1, 0};
    CHECK(chain_membership(ctx, sigma, forward).member);
    CHECK_FALSE(chain_membership(ctx, sigma, backward).member);
    CHECK_FALSE(chain_membership(ctx, sigma, forward).saw_empty_block);
}

TEST_CASE("chain_membership flags empty derived blocks and keeps the count formula") {
    // (3,3)-shaped system of 2 columns: all intersections must be empty, and
    // the third derived block vanishes. Too small to validate (m < t), so the
    // context is built unvalidated on purpose.
    FamilySystem sys = FamilySystem::create(2, 3, 2);
    sys.set(0, 0) = Bitset::of(2, {0});
    sys.set(1, 0) = Bitset::of(2, {1});
    sys.set(2, 0) = Bitset::of(2, {0, 1});
    sys.set(0, 1) = Bitset::of(2, {0});
    sys.set(1, 1) = Bitset::of(2, {1});
    sys.set(2, 1) = Bitset::of(2, {0});
    ChainContext ctx = make_chain_context(sys, false);
    IndexSequence sigma = IndexSequence::of(2, {0, 1});
    std::vector<int> ranks{0, 1};
    ChainMembership mem = chain_membership(ctx, sigma, ranks);
    CHECK(mem.saw_empty_block);  // block 3 reads column 0 again: {0,1} minus {0,1}
    CHECK(mem.member);
    ChainCount count = chain_count(ctx, sigma);
    CHECK(count.has_empty_block);
    CHECK(count.match);  // 0! = 1 keeps formula and enumeration aligned
    CHECK(count.formula.to_u64() == 1);
}

TEST_CASE("chain_count: formula equals enumeration on the smallest pair family") {
    ChainContext ctx = make_chain_context(classical_pairs(1, 1));
    for (int col = 0; col < 2; ++col) {
        ChainCount c = chain_count(ctx, IndexSequence::of(2, {col}));
        CHECK(c.match);
        CHECK(c.formula.to_u64() == 1);  // 2! / C(2;1,1)
    }
}

TEST_CASE("verify_disjointness: classical pairs") {
    ChainContext ctx = make_chain_context(classical_pairs(2, 1));  // k=2, m=3, n=3
    DisjointnessReport rep = verify_disjointness(ctx);
    CHECK(rep.disjoint());
    for (const SigmaSummary& s : rep.per_sigma) CHECK(s.formula == s.enumerated);
    // sum of chain sizes = n! * inequality sum = 6 * 1
    CHECK(rep.total_enumerated.to_u64() == 6);

    Rational sum = bollobas_sum_unchecked(ctx.sys, 2, Surjection::identity(2));
    CHECK((sum * factorial(3)) == Rational(rep.total_enumerated, BigUint(1)));
}

TEST_CASE("verify_disjointness on random (3,3) systems, identity-reduced") {
    SplitMix64 rng(777);
    int found = 0;
    for (int attempt = 0; attempt < 200 && found < 2; ++attempt) {
        auto sys = random_valid_tuple(3, 3, 3, 6, rng, 10);
        if (!sys) continue;
        ++found;
        FamilySystem red = reduce_via_surjection(*sys, 3, Surjection::identity(3));
        ChainContext ctx = make_chain_context(red);
        DisjointnessReport rep = verify_disjointness(ctx);
        CHECK(rep.disjoint());
        for (const SigmaSummary& s : rep.per_sigma) CHECK(s.formula == s.enumerated);
        Rational scaled = bollobas_sum_unchecked(red, 3, Surjection::identity(3)) *
                          factorial(static_cast<unsigned>(ctx.n));
        CHECK(scaled == Rational(rep.total_enumerated, BigUint(1)));
    }
    REQUIRE(found == 2);
}

TEST_CASE("a deliberately invalid system can collide (negative control)") {
    // both columns identical with nested sets: every permutation lies in both
    // sigma families
    FamilySystem sys = FamilySystem::create(2, 2, 2);
    for (int i = 0; i < 2; ++i) {
        sys.set(0, i) = Bitset::of(2, {0, 1});
        sys.set(1, i) = Bitset::of(2, {0});
    }
    CHECK_FALSE(is_bollobas_tuple(sys, 2).valid());
    ChainContext ctx = make_chain_context(sys, false);
    DisjointnessReport rep = verify_disjointness(ctx);
    CHECK_FALSE(rep.disjoint());
}

TEST_CASE("context guards") {
    CHECK_THROWS_AS((void)make_chain_context(sharpness_k2(2, 12)), GuardError);  // n = 12 > 9
    FamilySystem bad = FamilySystem::create(1, 2, 2);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) bad.set(j, i).set(0);
    CHECK_THROWS_AS((void)make_chain_context(bad), std::invalid_argument);
}

TEST_CASE("sharpness k=2, n=8: full chain accounting") {
    ChainContext ctx = make_chain_context(sharpness_k2(2, 8));
    DisjointnessReport rep = verify_disjointness(ctx);
    CHECK(rep.disjoint());
    // sum = 1 exactly, so the chains tile all of n!
    CHECK(rep.total_enumerated == factorial(8));
}
