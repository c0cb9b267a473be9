#include "bollobas/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bollobas/partitions.hpp"
#include "bollobas/rng.hpp"

namespace bollobas {

void PartiteCover::check_shape() const {
    if (k < 2) throw std::invalid_argument("PartiteCover: need k >= 2");
    if (t < 2 || t > k) throw std::invalid_argument("PartiteCover: need 2 <= t <= k");
    if (n < 1) throw std::invalid_argument("PartiteCover: need n >= 1");
    for (size_t r = 0; r < blocks.size(); ++r) {
        const PartiteBlock& b = blocks[r];
        if (static_cast<int>(b.parts.size()) != k)
            throw std::invalid_argument("PartiteCover: block " + std::to_string(r) +
                                        " does not have k parts");
        for (int i = 0; i < k; ++i) {
            if (b.parts[static_cast<size_t>(i)].universe() != n)
                throw std::invalid_argument("PartiteCover: block " + std::to_string(r) +
                                            " part universe mismatch");
            if (b.parts[static_cast<size_t>(i)].empty())
                throw std::invalid_argument("PartiteCover: block " + std::to_string(r) +
                                            " has an empty part " + std::to_string(i));
        }
    }
}

bool hkt_contains(int k, int t, int n, std::span<const int> indices) {
    if (k < 2 || t < 2 || t > k || n < 1)
        throw std::invalid_argument("hkt_contains: parameters out of range");
    if (static_cast<int>(indices.size()) != k)
        throw std::invalid_argument("hkt_contains: index tuple must have k entries");
    int distinct = 0;
    for (size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= n)
            throw std::invalid_argument("hkt_contains: index out of range");
        bool seen = false;
        for (size_t j = 0; j < i; ++j)
            if (indices[j] == indices[i]) { seen = true; break; }
        if (!seen) ++distinct;
    }
    return distinct >= t;
}

namespace {

void check_edge_guard(int k, int n, const VerifyOptions& opts) {
    uint64_t total = 1;
    for (int j = 0; j < k; ++j) {
        if (total > opts.guard_limit / static_cast<uint64_t>(n)) {
            if (!opts.guard_override)
                throw GuardError("cover scan: n^k exceeds the enumeration guard (" +
                                 std::to_string(opts.guard_limit) + ")");
            return;
        }
        total *= static_cast<uint64_t>(n);
    }
}

// blocks-in-common masks per (side, vertex); AND over the edge's vertices
// gives the blocks containing the edge.
struct BlockIndex {
    int words = 0;
    int n = 0;
    std::vector<uint64_t> at;  // (i*n + v) * words

    BlockIndex(const PartiteCover& cover) : n(cover.n) {
        words = static_cast<int>((cover.blocks.size() + 63) / 64);
        if (words == 0) words = 1;
        at.assign(static_cast<size_t>(cover.k) * static_cast<size_t>(n) * static_cast<size_t>(words), 0);
        for (size_t r = 0; r < cover.blocks.size(); ++r)
            for (int i = 0; i < cover.k; ++i)
                cover.blocks[r].parts[static_cast<size_t>(i)].for_each([&](int v) {
                    slot(i, v)[r / 64] |= uint64_t{1} << (r % 64);
                });
    }

    uint64_t* slot(int i, int v) {
        return &at[(static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(v)) *
                   static_cast<size_t>(words)];
    }
    const uint64_t* slot(int i, int v) const {
        return &at[(static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(v)) *
                   static_cast<size_t>(words)];
    }
};

int distinct_count(std::span<const int> idx) {
    int d = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        bool seen = false;
        for (size_t j = 0; j < i; ++j)
            if (idx[j] == idx[i]) { seen = true; break; }
        if (!seen) ++d;
    }
    return d;
}

// Lexicographic scan over [n]^k. on_edge(idx, covering_mask_words) returns
// false to abort.
template <typename Fn>
void scan_edges(int k, int n, const BlockIndex& index, Fn&& on_edge) {
    std::vector<int> idx(static_cast<size_t>(k), 0);
    const int words = index.words;
    std::vector<uint64_t> prefix(static_cast<size_t>((k + 1) * words), 0);
    // prefix row 0 = all ones: blocks containing the empty prefix
    for (int w = 0; w < words; ++w) prefix[static_cast<size_t>(w)] = ~uint64_t{0};
    int level = 0;
    for (;;) {
        for (int j = level; j < k; ++j) {
            const uint64_t* mask = index.slot(j, idx[static_cast<size_t>(j)]);
            uint64_t* dst = &prefix[static_cast<size_t>((j + 1) * words)];
            const uint64_t* src = &prefix[static_cast<size_t>(j * words)];
            for (int w = 0; w < words; ++w) dst[w] = src[w] & mask[w];
        }
        if (!on_edge(std::span<const int>(idx), &prefix[static_cast<size_t>(k * words)])) return;
        int p = k - 1;
        while (p >= 0 && idx[static_cast<size_t>(p)] == n - 1) idx[static_cast<size_t>(p--)] = 0;
        if (p < 0) break;
        ++idx[static_cast<size_t>(p)];
        level = p;
    }
}

bool mask_any(const uint64_t* mask, int words, size_t block_count) {
    // ignore bits beyond block_count
    for (int w = 0; w < words; ++w) {
        uint64_t m = mask[w];
        if (static_cast<size_t>(w + 1) * 64 > block_count && block_count > static_cast<size_t>(w) * 64)
            m &= (block_count % 64) ? ((uint64_t{1} << (block_count % 64)) - 1) : ~uint64_t{0};
        else if (static_cast<size_t>(w) * 64 >= block_count)
            m = 0;
        if (m) return true;
    }
    return false;
}

int mask_first(const uint64_t* mask, int words, size_t block_count) {
    for (int w = 0; w < words; ++w) {
        uint64_t m = mask[w];
        if (static_cast<size_t>(w + 1) * 64 > block_count && block_count > static_cast<size_t>(w) * 64)
            m &= (block_count % 64) ? ((uint64_t{1} << (block_count % 64)) - 1) : ~uint64_t{0};
        else if (static_cast<size_t>(w) * 64 >= block_count)
            m = 0;
        if (m) return w * 64 + std::countr_zero(m);
    }
    return -1;
}

}  // namespace

CoverVerdict verify_cover(const PartiteCover& cover, const VerifyOptions& opts) {
    cover.check_shape();
    check_edge_guard(cover.k, cover.n, opts);
    BlockIndex index(cover);
    const size_t bcount = cover.blocks.size();

    CoverVerdict verdict;
    scan_edges(cover.k, cover.n, index, [&](std::span<const int> idx, const uint64_t* mask) {
        bool in_h = distinct_count(idx) >= cover.t;
        bool covered = mask_any(mask, index.words, bcount);
        if (in_h && !covered) {
            verdict.violation = CoverViolation{CoverViolationKind::uncovered, -1,
                                               std::vector<int>(idx.begin(), idx.end())};
            return false;
        }
        if (!in_h && covered) {
            verdict.violation = CoverViolation{CoverViolationKind::bad_block,
                                               mask_first(mask, index.words, bcount),
                                               std::vector<int>(idx.begin(), idx.end())};
            return false;
        }
        return true;
    });
    return verdict;
}

FamilySystem cover_to_tuple(const PartiteCover& cover, const VerifyOptions& opts) {
    CoverVerdict v = verify_cover(cover, opts);
    if (!v.valid()) throw std::invalid_argument("cover_to_tuple: cover is not valid");
    if (cover.blocks.empty())
        throw std::invalid_argument(
            "cover_to_tuple: cover has no blocks (empty hypergraph); the corresponding tuple "
            "would have an empty ground set");

    const int ground = static_cast<int>(cover.blocks.size());
    FamilySystem sys = FamilySystem::create(ground, cover.k, cover.n);
    for (int r = 0; r < ground; ++r)
        for (int i = 0; i < cover.k; ++i)
            cover.blocks[static_cast<size_t>(r)].parts[static_cast<size_t>(i)].for_each(
                [&](int j) { sys.set(i, j).set(r); });

    TupleVerdict tv = is_bollobas_tuple(sys, cover.t, opts);
    if (!tv.valid())
        throw std::logic_error("cover_to_tuple: correspondence produced an invalid tuple");
    return sys;
}

PartiteCover tuple_to_cover(const FamilySystem& sys, int t, const VerifyOptions& opts) {
    TupleVerdict tv = is_bollobas_tuple(sys, t, opts);
    if (!tv.valid()) throw std::invalid_argument("tuple_to_cover: system is not a valid (k,t)-tuple");

    PartiteCover cover;
    cover.k = sys.k;
    cover.t = t;
    cover.n = sys.m;
    for (int r = 0; r < sys.n; ++r) {
        PartiteBlock block;
        block.parts.assign(static_cast<size_t>(sys.k), Bitset(sys.m));
        bool nonempty = true;
        for (int i = 0; i < sys.k && nonempty; ++i) {
            for (int j = 0; j < sys.m; ++j)
                if (sys.set(i, j).test(r)) block.parts[static_cast<size_t>(i)].set(j);
            nonempty = block.parts[static_cast<size_t>(i)].any();
        }
        if (nonempty) cover.blocks.push_back(std::move(block));
    }

    CoverVerdict cv = verify_cover(cover, opts);
    if (!cv.valid())
        throw std::logic_error("tuple_to_cover: correspondence produced an invalid cover");
    return cover;
}

int default_copy_count(int k, int t, int n) {
    if (!(2 <= t && t <= k && k <= n))
        throw std::invalid_argument("default_copy_count: need 2 <= t <= k <= n");
    double value = (t + 1) * std::pow(static_cast<double>(t), t) * std::log2(static_cast<double>(n)) /
                   ((k - t + 1) * std::numbers::log2e);
    int copies = static_cast<int>(std::floor(value));
    if (copies < 1)
        throw std::invalid_argument("default_copy_count: copy count formula gives N < 1 at these parameters");
    return copies;
}

namespace {

std::vector<std::vector<int>> t_subsets(int k, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) c[static_cast<size_t>(i)] = i;
    for (;;) {
        out.push_back(c);
        int i = t - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == k - t + i) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < t; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + 1;
    }
    return out;
}

}  // namespace

RandomCoverResult random_cover(int k, int t, int n, uint64_t seed, int max_attempts,
                               const VerifyOptions& opts) {
    if (!(2 <= t && t <= k && k <= n))
        throw std::invalid_argument("random_cover: need 2 <= t <= k <= n");
    if (max_attempts < 1) throw std::invalid_argument("random_cover: need max_attempts >= 1");
    check_edge_guard(k, n, opts);

    RandomCoverResult result;
    result.copies_per_subset = default_copy_count(k, t, n);
    const auto subsets = t_subsets(k, t);
    result.blocks_requested = static_cast<int>(subsets.size()) * result.copies_per_subset;
    result.below_analytic_threshold =
        static_cast<uint64_t>(n) < static_cast<uint64_t>(k) * stirling2(k, t);

    const Bitset full_side = Bitset::full(n);
    std::vector<int> coloring(static_cast<size_t>(n));

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        PartiteCover cover;
        cover.k = k;
        cover.t = t;
        cover.n = n;
        uint64_t attempt_base =
            (static_cast<uint64_t>(attempt) - 1) * static_cast<uint64_t>(result.blocks_requested);
        for (size_t ti = 0; ti < subsets.size(); ++ti) {
            for (int copy = 0; copy < result.copies_per_subset; ++copy) {
                SplitMix64 stream = derive_stream(
                    seed, attempt_base + ti * static_cast<uint64_t>(result.copies_per_subset) +
                              static_cast<uint64_t>(copy));
                for (int j = 0; j < n; ++j) coloring[static_cast<size_t>(j)] = stream.below_int(t);

                PartiteBlock block;
                block.parts.assign(static_cast<size_t>(k), Bitset(n));
                std::vector<bool> on_t(static_cast<size_t>(k), false);
                for (int pos = 0; pos < t; ++pos)
                    on_t[static_cast<size_t>(subsets[ti][static_cast<size_t>(pos)])] = true;
                for (int i = 0; i < k; ++i)
                    if (!on_t[static_cast<size_t>(i)]) block.parts[static_cast<size_t>(i)] = full_side;
                for (int j = 0; j < n; ++j) {
                    int side = subsets[ti][static_cast<size_t>(coloring[static_cast<size_t>(j)])];
                    block.parts[static_cast<size_t>(side)].set(j);
                }
                // a coloring that misses a color yields an edgeless block
                bool degenerate = false;
                for (int i = 0; i < k; ++i)
                    if (block.parts[static_cast<size_t>(i)].empty()) degenerate = true;
                if (!degenerate) cover.blocks.push_back(std::move(block));
            }
        }

        BlockIndex index(cover);
        uint64_t uncovered = 0;
        scan_edges(k, n, index, [&](std::span<const int> idx, const uint64_t* mask) {
            if (distinct_count(idx) >= t && !mask_any(mask, index.words, cover.blocks.size()))
                ++uncovered;
            return true;
        });
        result.attempts = attempt;
        result.last_uncovered = uncovered;
        if (uncovered == 0) {
            result.cover = std::move(cover);
            return result;
        }
    }
    return result;
}

// the analytic bound is quoted at >= 80-bit effective precision
static_assert(std::numeric_limits<long double>::digits >= 64,
              "expected_uncovered_bound needs extended-precision long double");

long double expected_uncovered_bound(int k, int t, int n, long long copies) {
    if (!(2 <= t && t <= k)) throw std::invalid_argument("expected_uncovered_bound: need 2 <= t <= k");
    if (n < 1 || copies < 0) throw std::invalid_argument("expected_uncovered_bound: bad n or copy count");
    const long double miss = 1.0L - powl(static_cast<long double>(t), -static_cast<long double>(t));
    long double total = 0.0L;
    for_each_partition(k, [&](const SetPartition& pi) {
        if (pi.size() < t) return;
        long double exponent = static_cast<long double>(copies) * static_cast<long double>(f_pi(pi, t));
        total += powl(static_cast<long double>(n), static_cast<long double>(pi.size())) *
                 powl(miss, exponent);
    });
    return total;
}

// ---------------------------------------------------------------------------
// Exact maximum-tuple search.

namespace {

using Column = std::vector<uint32_t>;  // one mask per family, ground <= 31 bits here

struct BetaSearch {
    int k, t, ground;
    std::vector<Column> cands;  // sorted by encoding

    bool tuple_condition_ok(const std::vector<const Column*>& cols, int must_a, int must_b) const {
        // checks every index tuple over cols that uses column must_a (and
        // must_b when >= 0) at least once
        const int q = static_cast<int>(cols.size());
        std::vector<int> idx(static_cast<size_t>(k), 0);
        for (;;) {
            bool uses_a = false, uses_b = must_b < 0;
            for (int j = 0; j < k; ++j) {
                uses_a |= idx[static_cast<size_t>(j)] == must_a;
                uses_b |= idx[static_cast<size_t>(j)] == must_b;
            }
            if (uses_a && uses_b) {
                uint32_t inter = ~uint32_t{0};
                for (int j = 0; j < k; ++j)
                    inter &= (*cols[static_cast<size_t>(idx[static_cast<size_t>(j)])])[static_cast<size_t>(j)];
                if ((inter != 0) != (distinct_count(idx) >= t)) return false;
            }
            int p = k - 1;
            while (p >= 0 && idx[static_cast<size_t>(p)] == q - 1) idx[static_cast<size_t>(p--)] = 0;
            if (p < 0) break;
            ++idx[static_cast<size_t>(p)];
        }
        return true;
    }
};

uint32_t apply_perm(uint32_t mask, const std::vector<int>& perm) {
    uint32_t out = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        if ((mask >> i) & 1) out |= uint32_t{1} << perm[i];
    return out;
}

}  // namespace

BetaResult exact_beta(int k, int t, int ground, const BetaOptions& opts) {
    if (k < 2 || t < 2 || t > k) throw std::invalid_argument("exact_beta: need 2 <= t <= k");
    if (ground < 0) throw std::invalid_argument("exact_beta: negative ground size");
    int limit = k == 2 ? 5 : (k == 3 ? 4 : 3);
    if (ground > limit && !opts.guard_override)
        throw GuardError("exact_beta: ground size " + std::to_string(ground) +
                         " exceeds the default search guard (" + std::to_string(limit) +
                         " for k=" + std::to_string(k) + ")");
    // even with the override, the candidate pool is (2^g - 1)^k and the
    // symmetry cut enumerates g! relabelings
    double pool = std::pow(std::pow(2.0, ground) - 1.0, k);
    if (ground > 8 || pool > 2e7)
        throw GuardError("exact_beta: ground size " + std::to_string(ground) +
                         " is beyond what the column search can enumerate");

    BetaResult result;
    if (ground == 0) return result;

    BetaSearch search{k, t, ground, {}};
    const uint32_t full = (uint32_t{1} << ground) - 1;
    // candidate columns: nonempty sets, empty full intersection
    {
        Column col(static_cast<size_t>(k));
        std::function<void(int, uint32_t)> build = [&](int j, uint32_t inter) {
            if (j == k) {
                if (inter == 0) search.cands.push_back(col);
                return;
            }
            for (uint32_t mask = 1; mask <= full; ++mask) {
                col[static_cast<size_t>(j)] = mask;
                build(j + 1, inter & mask);
            }
        };
        build(0, full);
    }
    std::sort(search.cands.begin(), search.cands.end());

    // ground relabelings, for the first-column symmetry cut
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<size_t>(ground));
        for (int i = 0; i < ground; ++i) p[static_cast<size_t>(i)] = i;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    auto is_orbit_minimal = [&](const Column& col) {
        for (const auto& perm : perms) {
            Column mapped(col.size());
            for (size_t j = 0; j < col.size(); ++j) mapped[j] = apply_perm(col[j], perm);
            if (mapped < col) return false;
        }
        return true;
    };

    int best = 0;
    std::vector<int> best_cols;
    std::vector<int> chosen;
    std::vector<const Column*> chosen_ptrs;

    std::function<void(const std::vector<int>&)> dfs = [&](const std::vector<int>& feasible) {
        if (static_cast<int>(chosen.size()) > best) {
            best = static_cast<int>(chosen.size());
            best_cols = chosen;
        }
        if (static_cast<int>(chosen.size() + feasible.size()) <= best) return;
        for (size_t fi = 0; fi < feasible.size(); ++fi) {
            if (static_cast<int>(chosen.size() + (feasible.size() - fi)) <= best) break;
            int c = feasible[fi];
            chosen.push_back(c);
            chosen_ptrs.push_back(&search.cands[static_cast<size_t>(c)]);
            int a_pos = static_cast<int>(chosen.size()) - 1;
            std::vector<int> child;
            child.reserve(feasible.size() - fi);
            for (size_t gi = fi + 1; gi < feasible.size(); ++gi) {
                int c2 = feasible[gi];
                chosen_ptrs.push_back(&search.cands[static_cast<size_t>(c2)]);
                bool ok = search.tuple_condition_ok(chosen_ptrs, a_pos, a_pos + 1);
                chosen_ptrs.pop_back();
                if (ok) child.push_back(c2);
            }
            dfs(child);
            chosen.pop_back();
            chosen_ptrs.pop_back();
        }
    };

    for (size_t ci = 0; ci < search.cands.size(); ++ci) {
        if (!is_orbit_minimal(search.cands[ci])) continue;
        chosen.assign(1, static_cast<int>(ci));
        chosen_ptrs.assign(1, &search.cands[ci]);
        // single-column validity: only the diagonal tuple matters and the
        // candidate filter already forces it empty
        std::vector<int> feasible;
        for (size_t gi = ci + 1; gi < search.cands.size(); ++gi) {
            chosen_ptrs.push_back(&search.cands[gi]);
            bool ok = search.tuple_condition_ok(chosen_ptrs, 1, -1);
            chosen_ptrs.pop_back();
            if (ok) feasible.push_back(static_cast<int>(gi));
        }
        dfs(feasible);
        chosen.clear();
        chosen_ptrs.clear();
    }

    // tuples of size < t only need all intersections empty, so a single
    // valid column duplicated t-1 times is always available
    bool dup_base = !search.cands.empty();
    if (best < t - 1 && dup_base) {
        best = t - 1;
        best_cols.assign(static_cast<size_t>(t - 1), 0);
    }

    result.beta = best;
    if (best > 0) {
        FamilySystem sys = FamilySystem::create(ground, k, best);
        for (int i = 0; i < best; ++i) {
            const Column& col = search.cands[static_cast<size_t>(best_cols[static_cast<size_t>(i)])];
            for (int j = 0; j < k; ++j)
                for (int e = 0; e < ground; ++e)
                    if ((col[static_cast<size_t>(j)] >> e) & 1) sys.set(j, i).set(e);
        }
        result.witness = std::move(sys);
    }
    return result;
}

MinCoverResult exact_min_cover(int k, int t, int n, const BetaOptions& opts) {
    if (k < 2 || t < 2 || t > k) throw std::invalid_argument("exact_min_cover: need 2 <= t <= k");
    if (n < 1) throw std::invalid_argument("exact_min_cover: need n >= 1");

    MinCoverResult result;
    result.certificate.k = k;
    result.certificate.t = t;
    result.certificate.n = n;
    if (n < t) return result;  // H_{k,t}(n) has no edges: zero blocks suffice

    for (int m = 1;; ++m) {
        BetaResult beta = exact_beta(k, t, m, opts);  // throws GuardError past the guard
        if (beta.beta < n) continue;

        FamilySystem witness = *beta.witness;
        FamilySystem truncated = FamilySystem::create(m, k, n);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) truncated.set(j, i) = witness.set(j, i);
        result.m = m;
        result.certificate = tuple_to_cover(truncated, t);
        if (static_cast<int>(result.certificate.blocks.size()) != m)
            throw std::logic_error("exact_min_cover: certificate size disagrees with the minimum");
        return result;
    }
}

}  // namespace bollobas
