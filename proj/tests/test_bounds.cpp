#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bollobas/bounds.hpp"
#include "bollobas/covering.hpp"

using namespace bollobas;

TEST_CASE("binary_entropy: values and domain") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(binary_entropy(0.25) == doctest::Approx(0.811278124459133).epsilon(1e-12));
    CHECK(binary_entropy(0.25) == binary_entropy(0.75));
    CHECK_THROWS_AS((void)binary_entropy(0.0), std::domain_error);
    CHECK_THROWS_AS((void)binary_entropy(1.5), std::domain_error);
    EntropyValue limit = binary_entropy_checked(0.0);
    CHECK(limit.at_boundary);
    CHECK(limit.value == 0.0);
    CHECK_FALSE(binary_entropy_checked(0.3).at_boundary);
}

TEST_CASE("entropy chain 1/k <= H(1/k) <= log2(ke)/k") {
    for (int k = 3; k <= 30; ++k) {
        double h = binary_entropy(1.0 / k);
        CHECK(1.0 / k <= h + 1e-12);
        CHECK(h <= std::log2(k * std::numbers::e) / k + 1e-12);
    }
}

TEST_CASE("threshold_min_m examples") {
    CHECK(threshold_min_m(3, 2) == 3);
    for (int k = 2; k <= 6; ++k) CHECK(threshold_min_m(1, k) == 1);
    CHECK(threshold_min_m(7, 3) == 5);  // C(4,2)=6 < 7 <= C(5,2)=10
    CHECK(threshold_min_m(4, 2) == 4);
}

TEST_CASE("threshold_min_m monotonicity") {
    for (int k : {2, 3, 4}) {
        int prev = 0;
        for (long long n = 1; n <= 300; ++n) {
            int v = threshold_min_m(n, k);
            CHECK(v >= prev);
            prev = v;
        }
    }
    // at fixed m, C(m, ceil(m/k)) shrinks as k grows (the pick moves away
    // from m/2), so the threshold m grows with k
    for (long long n : {5, 50, 500}) {
        int prev = threshold_min_m(n, 2);
        for (int k = 3; k <= 8; ++k) {
            int v = threshold_min_m(n, k);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("orlin_min_m examples and relation to the biclique threshold") {
    CHECK(orlin_min_m(2) == 2);
    CHECK(orlin_min_m(4) == 3);
    // pointer-walk over the strictly increasing test values, asserted as we go
    BigUint prev_v(0);
    int m = 2;
    auto orlin_value = [](int mm) {
        BigUint v = binomial(static_cast<unsigned>(mm - 1), static_cast<unsigned>(mm / 2));
        return v + v;
    };
    BigUint cur = orlin_value(m);
    // biclique threshold walked in parallel: C(mb, ceil(mb/2))
    int mb = 1;
    auto biclique_value = [](int mm) {
        return binomial(static_cast<unsigned>(mm), static_cast<unsigned>((mm + 1) / 2));
    };
    BigUint curb = biclique_value(mb);
    int prev_result = 0;
    for (long long n = 2; n <= 1'000'000; ++n) {
        BigUint target(static_cast<uint64_t>(n));
        while (cur < target) {
            ++m;
            BigUint next = orlin_value(m);
            REQUIRE(next > cur);  // the walk is only sound if values increase
            cur = next;
        }
        while (curb < target) {
            ++mb;
            BigUint next = biclique_value(mb);
            REQUIRE(next > curb);
            curb = next;
        }
        CHECK(m >= prev_result);
        prev_result = m;
        if (n <= 64) {
            CHECK(m == orlin_min_m(n));  // spot-check the walk against the direct search
            CHECK(mb == threshold_min_m(n, 2));
        }
        // adjacent threshold forms stay within one step of each other
        CHECK(m <= mb + 1);
    }
    (void)prev_v;
}

TEST_CASE("beta_bounds at (3,2): rates 1/3 and H(1/3)") {
    BoundReport r = beta_bounds(3, 2, 30);
    const NamedBound* lower = r.find("beta_log2_lower");
    const NamedBound* upper = r.find("beta_log2_upper_entropy");
    REQUIRE(lower);
    REQUIRE(upper);
    CHECK(lower->value == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(upper->value == doctest::Approx(30.0 * 0.9182958340544896).epsilon(1e-12));
    CHECK(lower->validity == "large n");
}

TEST_CASE("beta_bounds binomial upper bound carries an exact value for small n") {
    BoundReport r = beta_bounds(2, 2, 4);
    const NamedBound* b = r.find("beta_log2_upper_binomial");
    REQUIRE(b);
    CHECK(b->exact == "6");  // C(4,2), the tight k=2 value
    CHECK(static_cast<uint64_t>(exact_beta(2, 2, 4).beta) == 6);
}

TEST_CASE("beta_bounds at (4,3): the general-t rates") {
    BoundReport r = beta_bounds(4, 3, 216);
    const NamedBound* lower = r.find("beta_log2_lower");
    const NamedBound* upper = r.find("beta_log2_upper");
    REQUIRE(lower);
    REQUIRE(upper);
    // lower rate log2(e)/216, upper rate 2/(C(4,2)*(t-1)^(t-3)) = 1/3
    CHECK(lower->value == doctest::Approx(216.0 * std::numbers::log2e / 216.0).epsilon(1e-12));
    CHECK(upper->value == doctest::Approx(216.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("f_bounds at (3,2)") {
    BoundReport r = f_bounds(3, 2, 1024);
    const NamedBound* upper = r.find("f_upper");
    const NamedBound* entropy = r.find("f_lower_entropy");
    const NamedBound* weak = r.find("f_lower_weak");
    const NamedBound* threshold = r.find("f_lower_threshold");
    REQUIRE(upper);
    REQUIRE(entropy);
    REQUIRE(weak);
    REQUIRE(threshold);
    CHECK(upper->value == doctest::Approx(30.0).epsilon(1e-12));  // 3 log2(1024)
    CHECK(entropy->value == doctest::Approx(10.0 / binary_entropy(1.0 / 3)).epsilon(1e-12));
    CHECK(weak->value <= entropy->value + 1e-12);  // the chain ordering
    CHECK(threshold->value == threshold_min_m(1024, 3));
}

TEST_CASE("f_bounds at (4,4): general and shadow lower bounds") {
    BoundReport r = f_bounds(4, 4, 256);
    const NamedBound* general = r.find("f_lower_general");
    const NamedBound* shadow = r.find("f_lower_shadow");
    REQUIRE(general);
    REQUIRE(shadow);
    CHECK(general->value == doctest::Approx(6.0 * 8.0).epsilon(1e-12));  // C(4,3)*3/2 * log2 n
    CHECK(shadow->value == doctest::Approx(8.0 * 8.0).epsilon(1e-12));   // 4^2/2 * log2 n
}

TEST_CASE("f_bounds upper matches the randomized-cover coefficient") {
    // (t+1) t^(t-1) / log2(e) * C(k,t-1) * log2 n, cross-checked against the
    // equivalent C(k,t) (t+1) t^t / ((k-t+1) log2 e) * log2 n form
    const int k = 5, t = 3;
    const double log2n = 10.0;                        // n = 1024
    const double c_k_tm1 = 10.0, c_k_t = 10.0;        // C(5,2), C(5,3)
    BoundReport r = f_bounds(k, t, 1024);
    const NamedBound* upper = r.find("f_upper_randomized");
    REQUIRE(upper);
    double a = (t + 1) * std::pow(t, t - 1) / std::numbers::log2e * c_k_tm1 * log2n;
    double b = c_k_t * (t + 1) * std::pow(t, t) / ((k - t + 1) * std::numbers::log2e) * log2n;
    CHECK(upper->value == doctest::Approx(a).epsilon(1e-12));
    CHECK(upper->value == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("clique cover formulas") {
    CliqueCoverFormulas cc = clique_cover_formulas(59049, 3);  // n = 3^10
    CHECK(cc.orlin == orlin_min_m(59049));
    REQUIRE(cc.has_hypergraph_lb);
    // log2(n/k)/H(1/k) with n/k = 3^9
    double expect = 9.0 * std::log2(3.0) / binary_entropy(1.0 / 3);
    CHECK(cc.hypergraph_lb == doctest::Approx(expect).epsilon(1e-12));
    // corollary chain: >= k log2(n/k) / log2(ke)
    double weaker = 3.0 * std::log2(59049.0 / 3.0) / std::log2(3.0 * std::numbers::e);
    CHECK(cc.hypergraph_lb >= weaker - 1e-9);
    CHECK(clique_cover_formulas(2, 4).orlin == 2);
}

TEST_CASE("paired bounds respect lower <= upper where both apply") {
    for (int k : {3, 4, 5}) {
        BoundReport beta = beta_bounds(k, 2, 1000);
        const NamedBound* lo = beta.find("beta_log2_lower");
        const NamedBound* hi = beta.find("beta_log2_upper_entropy");
        REQUIRE(lo);
        REQUIRE(hi);
        CHECK(lo->value <= hi->value);
        BoundReport f = f_bounds(k, 2, 1000);
        CHECK(f.find("f_lower_entropy")->value <= f.find("f_upper")->value);
    }
    for (int t : {3, 4}) {
        BoundReport beta = beta_bounds(5, t, 1000);
        CHECK(beta.find("beta_log2_lower")->value <= beta.find("beta_log2_upper")->value);
        BoundReport f = f_bounds(5, t, 1000);
        CHECK(f.find("f_lower_general")->value <= f.find("f_upper_randomized")->value);
    }
}

TEST_CASE("exact small covers sit inside the reported bounds") {
    // the t=2 threshold is a true lower bound on the exact value
    MinCoverResult mc = exact_min_cover(2, 2, 4);
    CHECK(mc.m >= threshold_min_m(4, 2));
    CHECK(mc.m == threshold_min_m(4, 2));  // tight here
}
