#include "bollobas/constructions.hpp"

#include <numeric>

namespace bollobas {

namespace {

// Next a-combination of {0,...,n-1} in lexicographic order of element lists.
bool next_combination(std::vector<int>& c, int n) {
    int a = static_cast<int>(c.size());
    for (int i = a - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - a + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < a; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + 1;
            return true;
        }
    }
    return false;
}

int mod(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

FamilySystem classical_pairs(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("classical_pairs: need a, b >= 1");
    const int n = a + b;
    const BigUint count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(a));
    const int m = static_cast<int>(count.to_u64());

    FamilySystem sys = FamilySystem::create(n, 2, m);
    std::vector<int> comb(static_cast<size_t>(a));
    std::iota(comb.begin(), comb.end(), 0);
    int col = 0;
    do {
        Bitset first = Bitset::of(n, comb);
        sys.set(1, col) = first.complement();
        sys.set(0, col) = std::move(first);
        ++col;
    } while (next_combination(comb, n));
    return sys;
}

FamilySystem sharpness_k2(int k, int n) {
    if (k < 2) throw std::invalid_argument("sharpness_k2: need k >= 2");
    if (n < 4 * k)
        throw std::invalid_argument("sharpness_k2: need n >= 4k (got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
    FamilySystem sys = FamilySystem::create(n, k, n);
    for (int i = 0; i < n; ++i) {
        sys.set(0, i) = Bitset::of(n, {i}).complement();
        for (int j = 1; j < k - 1; ++j)
            sys.set(j, i) = Bitset::of(n, {mod(i - j, n), mod(i + j, n)}).complement();
        Bitset last(n);
        for (int d = -(k - 2); d <= k - 2; ++d) last.set(mod(i + d, n));
        sys.set(k - 1, i) = std::move(last);
    }
    return sys;
}

namespace {

FamilySystem modular_columns(int k, int n, int radix, const VerifyOptions& opts) {
    uint64_t m64 = 1;
    for (int b = 0; b < n; ++b) {
        m64 *= static_cast<uint64_t>(radix);
        if (m64 > (opts.guard_override ? (uint64_t{1} << 24) : uint64_t{4096}))
            throw GuardError("modular construction: 2^n columns exceed the size guard");
    }
    const int m = static_cast<int>(m64);
    const int ground = k * n;

    FamilySystem sys = FamilySystem::create(ground, k, m);
    for (int col = 0; col < m; ++col) {
        // digit b of col in base `radix` is the color of block b
        for (int j = 0; j < k; ++j) {
            Bitset removed(ground);
            int rest = col;
            for (int b = 0; b < n; ++b) {
                int digit = rest % radix;
                rest /= radix;
                removed.set(b * k + mod(digit + j, k));
            }
            sys.set(j, col) = removed.complement();
        }
    }
    return sys;
}

}  // namespace

FamilySystem modular_k2(int k, int n, const VerifyOptions& opts) {
    if (k < 3) throw std::invalid_argument("modular_k2: need k >= 3");
    if (n < 1) throw std::invalid_argument("modular_k2: need n >= 1");
    return modular_columns(k, n, 2, opts);
}

FamilySystem modular_k2_ternary(int n, const VerifyOptions& opts) {
    if (n < 1) throw std::invalid_argument("modular_k2_ternary: need n >= 1");
    return modular_columns(3, n, 3, opts);
}

}  // namespace bollobas
