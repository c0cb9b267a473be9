#include "bollobas/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace bollobas {

int SetPartition::k() const {
    int total = 0;
    for (const auto& p : parts) total += static_cast<int>(p.size());
    return total;
}

std::vector<int> SetPartition::part_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(parts.size());
    for (const auto& p : parts) sizes.push_back(static_cast<int>(p.size()));
    return sizes;
}

std::string SetPartition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '|';
        s += '{';
        for (size_t j = 0; j < parts[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(parts[i][j]);
        }
        s += '}';
    }
    return s;
}

namespace {

void check_partition_guard(int k) {
    if (k < 1 || k > kMaxPartitionK)
        throw GuardError("set partitions: k must be in [1," + std::to_string(kMaxPartitionK) + "]");
}

SetPartition from_rgs(const std::vector<int>& a, int nparts) {
    SetPartition pi;
    pi.parts.assign(static_cast<size_t>(nparts), {});
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        pi.parts[static_cast<size_t>(a[static_cast<size_t>(i)])].push_back(i);
    return pi;
}

}  // namespace

// Restricted-growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
// Blocks indexed by first occurrence, so parts come out ordered by minimum.
void for_each_partition(int k, const std::function<void(const SetPartition&)>& fn) {
    check_partition_guard(k);
    std::vector<int> a(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int nparts) {
        if (i == k) {
            fn(from_rgs(a, nparts));
            return;
        }
        for (int v = 0; v <= nparts; ++v) {
            a[static_cast<size_t>(i)] = v;
            rec(i + 1, std::max(nparts, v + 1));
        }
    };
    rec(0, 0);
}

std::vector<SetPartition> enumerate_partitions(int k, int s) {
    check_partition_guard(k);
    if (s < 1 || s > k) throw std::invalid_argument("enumerate_partitions: need 1 <= s <= k");
    std::vector<SetPartition> out;
    for_each_partition(k, [&](const SetPartition& pi) {
        if (pi.size() == s) out.push_back(pi);
    });
    return out;
}

uint64_t stirling2(int k, int s) {
    check_partition_guard(k);
    if (s < 0 || s > k) return 0;
    // S(i,j) = j*S(i-1,j) + S(i-1,j-1)
    std::vector<std::vector<uint64_t>> table(static_cast<size_t>(k) + 1,
                                             std::vector<uint64_t>(static_cast<size_t>(k) + 1, 0));
    table[0][0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= i; ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<uint64_t>(j) * table[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
                table[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return table[static_cast<size_t>(k)][static_cast<size_t>(s)];
}

uint64_t bell_number(int k) {
    check_partition_guard(k);
    uint64_t total = 0;
    for (int s = 1; s <= k; ++s) total += stirling2(k, s);
    return total;
}

uint64_t f_pi(const SetPartition& pi, int t) {
    if (t < 2) throw std::invalid_argument("f_pi: need t >= 2");
    // e_t of the part sizes by the usual one-pass DP.
    std::vector<uint64_t> e(static_cast<size_t>(t) + 1, 0);
    e[0] = 1;
    for (const auto& part : pi.parts) {
        uint64_t size = part.size();
        for (int j = std::min<int>(t, pi.size()); j >= 1; --j)
            e[static_cast<size_t>(j)] += size * e[static_cast<size_t>(j) - 1];
    }
    return e[static_cast<size_t>(t)];
}

uint64_t min_f_value(int k, int s, int t) {
    if (!(2 <= t && t <= s && s <= k))
        throw std::invalid_argument("min_f_value: need 2 <= t <= s <= k");
    auto choose = [](int n, int r) -> uint64_t {
        if (r < 0 || r > n) return 0;
        uint64_t v = 1;
        for (int i = 1; i <= r; ++i) v = v * static_cast<uint64_t>(n - r + i) / static_cast<uint64_t>(i);
        return v;
    };
    return static_cast<uint64_t>(k - s + 1) * choose(s - 1, t - 1) + choose(s - 1, t);
}

namespace {

constexpr int kMaxMonotonicityK = 9;

}  // namespace

MonotonicityReport check_f_monotonicity_with(
    int k, int t, const std::function<int64_t(const SetPartition&, int)>& stat) {
    if (k < 2 || k > kMaxMonotonicityK)
        throw GuardError("check_f_monotonicity: k must be in [2," +
                         std::to_string(kMaxMonotonicityK) + "]");
    if (t < 2 || t > k) throw std::invalid_argument("check_f_monotonicity: need 2 <= t <= k");

    MonotonicityReport report;
    auto canonicalize = [](std::vector<std::vector<int>> parts) {
        for (auto& p : parts) std::sort(p.begin(), p.end());
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        SetPartition pi;
        pi.parts = std::move(parts);
        return pi;
    };

    for_each_partition(k, [&](const SetPartition& pi) {
        int64_t base = stat(pi, t);

        // (i) split one part into two nonempty halves: f may only grow.
        for (size_t pidx = 0; pidx < pi.parts.size(); ++pidx) {
            const auto& part = pi.parts[pidx];
            int p = static_cast<int>(part.size());
            if (p < 2) continue;
            // proper nonempty subsets containing part.front(), to see each
            // unordered split once
            for (uint32_t mask = 1; mask < (1u << (p - 1)); ++mask) {
                std::vector<int> half_a = {part[0]}, half_b;
                for (int b = 1; b < p; ++b)
                    ((mask >> (b - 1)) & 1 ? half_a : half_b).push_back(part[static_cast<size_t>(b)]);
                if (half_b.empty()) continue;
                std::vector<std::vector<int>> parts;
                for (size_t q = 0; q < pi.parts.size(); ++q)
                    if (q != pidx) parts.push_back(pi.parts[q]);
                parts.push_back(half_a);
                parts.push_back(half_b);
                SetPartition refined = canonicalize(std::move(parts));
                int64_t fr = stat(refined, t);
                if (base > fr)
                    report.refinement_violations.push_back(
                        {pi, refined, static_cast<uint64_t>(base), static_cast<uint64_t>(fr)});
            }
        }

        // (ii) |P| >= |Q| >= 2, a in Q: P' = P u Q \ {a}, Q' = {a}: f may only drop.
        for (size_t pidx = 0; pidx < pi.parts.size(); ++pidx) {
            for (size_t qidx = 0; qidx < pi.parts.size(); ++qidx) {
                if (pidx == qidx) continue;
                const auto& big = pi.parts[pidx];
                const auto& small = pi.parts[qidx];
                if (big.size() < small.size() || small.size() < 2) continue;
                for (int a : small) {
                    std::vector<std::vector<int>> parts;
                    std::vector<int> merged = big;
                    for (int x : small)
                        if (x != a) merged.push_back(x);
                    parts.push_back(std::move(merged));
                    parts.push_back({a});
                    for (size_t q = 0; q < pi.parts.size(); ++q)
                        if (q != pidx && q != qidx) parts.push_back(pi.parts[q]);
                    SetPartition merged_pi = canonicalize(std::move(parts));
                    int64_t fm = stat(merged_pi, t);
                    if (fm > base)
                        report.merge_violations.push_back(
                            {pi, merged_pi, static_cast<uint64_t>(base), static_cast<uint64_t>(fm)});
                }
            }
        }
    });
    return report;
}

MonotonicityReport check_f_monotonicity(int k, int t) {
    return check_f_monotonicity_with(k, t, [](const SetPartition& pi, int tt) {
        return static_cast<int64_t>(f_pi(pi, tt));
    });
}

}  // namespace bollobas
