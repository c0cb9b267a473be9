#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bollobas/partitions.hpp"

using namespace bollobas;

namespace {

// test-side oracle: Stirling recurrence, independent of the enumerator
uint64_t stirling_oracle(int k, int s) {
    if (k == 0 && s == 0) return 1;
    if (k <= 0 || s <= 0 || s > k) return 0;
    return static_cast<uint64_t>(s) * stirling_oracle(k - 1, s) + stirling_oracle(k - 1, s - 1);
}

// test-side oracle: Bell triangle
uint64_t bell_oracle(int k) {
    std::vector<std::vector<uint64_t>> tri{{1}};
    for (int r = 1; r <= k; ++r) {
        std::vector<uint64_t> row{tri.back().back()};
        for (uint64_t v : tri.back()) row.push_back(row.back() + v);
        tri.push_back(std::move(row));
    }
    return tri[static_cast<size_t>(k)][0];
}

}  // namespace

TEST_CASE("enumerate_partitions: shapes and counts") {
    auto p22 = enumerate_partitions(2, 2);
    REQUIRE(p22.size() == 1);
    CHECK(p22[0].to_string() == "{0}|{1}");

    auto p31 = enumerate_partitions(3, 1);
    REQUIRE(p31.size() == 1);
    CHECK(p31[0].to_string() == "{0,1,2}");

    CHECK(enumerate_partitions(4, 2).size() == stirling_oracle(4, 2));  // 7

    for (int k = 1; k <= 8; ++k)
        for (int s = 1; s <= k; ++s)
            CHECK(enumerate_partitions(k, s).size() == stirling_oracle(k, s));
}

TEST_CASE("partitions are canonical, disjoint, and distinct") {
    std::set<std::string> seen;
    int total = 0;
    for_each_partition(6, [&](const SetPartition& pi) {
        ++total;
        CHECK(pi.k() == 6);
        std::vector<bool> used(6, false);
        int prev_min = -1;
        for (const auto& part : pi.parts) {
            REQUIRE_FALSE(part.empty());
            CHECK(part.front() > prev_min);  // parts ordered by minimum
            prev_min = part.front();
            for (size_t i = 0; i < part.size(); ++i) {
                CHECK_FALSE(used[static_cast<size_t>(part[i])]);
                used[static_cast<size_t>(part[i])] = true;
                if (i) CHECK(part[i] > part[i - 1]);
            }
        }
        CHECK(seen.insert(pi.to_string()).second);
    });
    CHECK(static_cast<uint64_t>(total) == bell_oracle(6));
}

TEST_CASE("stirling2 and bell_number against their recurrences") {
    for (int k = 1; k <= 12; ++k) {
        CHECK(bell_number(k) == bell_oracle(k));
        for (int s = 0; s <= k; ++s) CHECK(stirling2(k, s) == stirling_oracle(k, s));
    }
    CHECK(bell_number(12) == 4213597);
    CHECK_THROWS_AS(stirling2(13, 2), GuardError);
}

TEST_CASE("f_pi examples") {
    SetPartition singles;
    singles.parts = {{0}, {1}, {2}, {3}};
    CHECK(f_pi(singles, 2) == 6);  // C(4,2), all products 1

    SetPartition mixed;
    mixed.parts = {{0, 1}, {2}, {3}};
    CHECK(f_pi(mixed, 2) == 5);  // 2*1 + 2*1 + 1*1

    SetPartition one;
    one.parts = {{0, 1, 2}};
    CHECK(f_pi(one, 2) == 0);
    CHECK(f_pi(one, 5) == 0);
    CHECK_THROWS_AS((void)f_pi(one, 1), std::invalid_argument);
}

TEST_CASE("min_f_value matches brute force over all partitions") {
    CHECK(min_f_value(4, 3, 2) == 5);   // 2*C(2,1) + C(2,2)
    CHECK(min_f_value(5, 3, 3) == 3);   // 3*C(2,2) + C(2,3)
    for (int k = 2; k <= 8; ++k)
        for (int t = 2; t <= k; ++t) {
            for (int s = t; s <= k; ++s) {
                uint64_t brute = ~uint64_t{0};
                for (const SetPartition& pi : enumerate_partitions(k, s))
                    brute = std::min(brute, f_pi(pi, t));
                CHECK(brute == min_f_value(k, s, t));
            }
        }
}

TEST_CASE("min_f_value at s = k equals C(k,t)") {
    auto choose = [](uint64_t nn, uint64_t rr) {
        uint64_t v = 1;
        for (uint64_t i = 1; i <= rr; ++i) v = v * (nn - rr + i) / i;
        return v;
    };
    for (int k = 2; k <= 10; ++k)
        for (int t = 2; t <= k; ++t)
            CHECK(min_f_value(k, k, t) == choose(static_cast<uint64_t>(k), static_cast<uint64_t>(t)));
}

TEST_CASE("monotonicity checker is clean on the real statistic") {
    CHECK(check_f_monotonicity(4, 2).clean());
    CHECK(check_f_monotonicity(6, 3).clean());
}

TEST_CASE("monotonicity checker fires on a negated statistic") {
    MonotonicityReport rep = check_f_monotonicity_with(5, 2, [](const SetPartition& pi, int t) {
        return -static_cast<int64_t>(f_pi(pi, t));
    });
    CHECK_FALSE(rep.refinement_violations.empty());
    CHECK_FALSE(rep.merge_violations.empty());
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(enumerate_partitions(13, 2), GuardError);
    CHECK_THROWS_AS(check_f_monotonicity(10, 2), GuardError);
    CHECK_THROWS_AS(enumerate_partitions(4, 5), std::invalid_argument);
}
