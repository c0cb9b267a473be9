#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bollobas/constructions.hpp"

using namespace bollobas;

TEST_CASE("classical_pairs(1,1): the two ordered partitions of a 2-set") {
    FamilySystem sys = classical_pairs(1, 1);
    CHECK(sys.k == 2);
    CHECK(sys.m == 2);
    CHECK(sys.n == 2);
    CHECK(sys.set(0, 0) == Bitset::of(2, {0}));
    CHECK(sys.set(1, 0) == Bitset::of(2, {1}));
    CHECK(sys.set(0, 1) == Bitset::of(2, {1}));
    CHECK(sys.set(1, 1) == Bitset::of(2, {0}));
}

TEST_CASE("classical_pairs(2,1): three columns over a 3-set") {
    FamilySystem sys = classical_pairs(2, 1);
    CHECK(sys.m == 3);
    CHECK(sys.n == 3);
    // columns ordered by the first side's element list
    CHECK(sys.set(0, 0) == Bitset::of(3, {0, 1}));
    CHECK(sys.set(0, 1) == Bitset::of(3, {0, 2}));
    CHECK(sys.set(0, 2) == Bitset::of(3, {1, 2}));
}

TEST_CASE("classical_pairs(2,2) is tight") {
    FamilySystem sys = classical_pairs(2, 2);
    CHECK(sys.m == 6);
    CHECK(bollobas_sum(sys, 2, Surjection::identity(2)).is_one());
}

TEST_CASE("classical_pairs rejects bad parameters") {
    CHECK_THROWS_AS(classical_pairs(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(classical_pairs(1, 0), std::invalid_argument);
}

TEST_CASE("sharpness_k2(3,12): the defining sets, 0-based") {
    FamilySystem sys = sharpness_k2(3, 12);
    CHECK(sys.set(0, 0) == Bitset::of(12, {0}).complement());
    CHECK(sys.set(1, 0) == Bitset::of(12, {11, 1}).complement());
    CHECK(sys.set(2, 0) == Bitset::of(12, {11, 0, 1}));
}

TEST_CASE("sharpness_k2 sums to exactly 1") {
    CHECK(bollobas_sum(sharpness_k2(3, 12), 2, Surjection::canonical(3, 2)).is_one());
    CHECK(bollobas_sum(sharpness_k2(2, 8), 2, Surjection::canonical(2, 2)).is_one());
}

TEST_CASE("sharpness_k2(4,16) is a valid (4,2)-tuple") {
    CHECK(is_bollobas_tuple(sharpness_k2(4, 16), 2).valid());
}

TEST_CASE("sharpness_k2(2,n) degenerates to singleton second family") {
    FamilySystem sys = sharpness_k2(2, 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(sys.set(0, i) == Bitset::of(8, {i}).complement());
        CHECK(sys.set(1, i) == Bitset::of(8, {i}));
    }
    CHECK(is_bollobas_tuple(sys, 2).valid());
}

TEST_CASE("sharpness_k2 rejects n < 4k") {
    CHECK_THROWS_AS(sharpness_k2(3, 11), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_k2(1, 100), std::invalid_argument);
}

TEST_CASE("empty k-wise intersections of the sharpness system force equal indices") {
    FamilySystem sys = sharpness_k2(3, 12);
    for (int i1 = 0; i1 < 12; ++i1)
        for (int i2 = 0; i2 < 12; ++i2)
            for (int i3 = 0; i3 < 12; ++i3) {
                Bitset inter = sys.set(0, i1) & sys.set(1, i2) & sys.set(2, i3);
                if (inter.empty()) {
                    CHECK(i1 == i2);
                    CHECK(i2 == i3);
                }
            }
}

TEST_CASE("modular_k2(3,1): each family omits one element of the single block") {
    FamilySystem sys = modular_k2(3, 1);
    CHECK(sys.m == 2);
    CHECK(sys.n == 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) CHECK(sys.set(j, i).count() == 2);
    CHECK(sys.set(0, 0) == Bitset::of(3, {0}).complement());
    CHECK(sys.set(1, 0) == Bitset::of(3, {1}).complement());
    CHECK(sys.set(2, 0) == Bitset::of(3, {2}).complement());
    CHECK(sys.set(0, 1) == Bitset::of(3, {1}).complement());
}

TEST_CASE("modular_k2 validity and shape at the acceptance points") {
    for (auto [k, n] : {std::pair{3, 3}, {4, 3}}) {
        FamilySystem sys = modular_k2(k, n);
        CHECK(sys.m == (1 << n));
        CHECK(sys.n == k * n);
        for (int j = 0; j < sys.k; ++j)
            for (int i = 0; i < sys.m; ++i)
                CHECK(sys.set(j, i).count() == k * n - n);  // removes one point per block
        CHECK(is_bollobas_tuple(sys, 2).valid());
    }
}

TEST_CASE("modular_k2 rejects k < 3 and oversized n") {
    CHECK_THROWS_AS(modular_k2(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(modular_k2(3, 30), GuardError);
}

TEST_CASE("every construction satisfies the inequality under every surjection") {
    struct Instance {
        FamilySystem sys;
        const char* name;
    };
    std::vector<Instance> instances;
    instances.push_back({classical_pairs(2, 2), "classical(2,2)"});
    instances.push_back({classical_pairs(3, 1), "classical(3,1)"});
    instances.push_back({sharpness_k2(3, 12), "sharpness(3,12)"});
    instances.push_back({sharpness_k2(4, 16), "sharpness(4,16)"});
    instances.push_back({modular_k2(3, 3), "modular(3,3)"});
    instances.push_back({modular_k2(4, 3), "modular(4,3)"});
    for (const Instance& inst : instances) {
        for (const Surjection& phi : all_surjections(inst.sys.k, 2)) {
            Rational sum = bollobas_sum_unchecked(inst.sys, 2, phi);
            INFO(inst.name);
            CHECK(sum.leq_one());
        }
    }
    // a non-canonical surjection on the tight system is strictly below 1:
    // collapsing families 1,2 gives blocks of sizes (9,3), so 12/C(12,3)
    Rational off = bollobas_sum_unchecked(sharpness_k2(3, 12), 2, Surjection::of(2, {0, 0, 1}));
    CHECK(off == Rational(3, 55));
}

TEST_CASE("the ternary 3^n-column variant fails the (3,2) condition") {
    // empirical probe: with digits in {0,1,2}, the all-distinct column triple
    // removes a whole block, so an edge with 3 distinct indices has an empty
    // intersection already at n = 1
    for (int n : {1, 2}) {
        FamilySystem sys = modular_k2_ternary(n);
        CHECK(sys.m == (n == 1 ? 3 : 9));
        TupleVerdict v = is_bollobas_tuple(sys, 2);
        REQUIRE_FALSE(v.valid());
        CHECK(v.violation->kind == ViolationKind::missing_nonempty);
    }
}
