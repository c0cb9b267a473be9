#include "bollobas/chains.hpp"

#include <algorithm>
#include <numeric>

namespace bollobas {

namespace {

// Derived blocks of sigma (identity surjection), as index lists into
// ctx.ground. Empty blocks stay in place so callers can flag them.
std::vector<std::vector<int>> blocks_as_positions(const ChainContext& ctx,
                                                  const IndexSequence& sigma) {
    std::vector<Bitset> blocks =
        derived_sets(ctx.sys, ctx.sys.k, Surjection::identity(ctx.sys.k), sigma);
    std::vector<int> pos_of(static_cast<size_t>(ctx.sys.n), -1);
    for (size_t i = 0; i < ctx.ground.size(); ++i)
        pos_of[static_cast<size_t>(ctx.ground[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    out.reserve(blocks.size());
    for (const Bitset& b : blocks) {
        std::vector<int> positions;
        b.for_each([&](int e) { positions.push_back(pos_of[static_cast<size_t>(e)]); });
        out.push_back(std::move(positions));
    }
    return out;
}

bool ordered_by_blocks(const std::vector<std::vector<int>>& blocks, std::span<const int> ranks) {
    int prev_max = -1;
    for (const auto& block : blocks) {
        if (block.empty()) continue;  // vacuous comparison joins its neighbors
        int lo = ranks[static_cast<size_t>(block[0])];
        int hi = lo;
        for (int p : block) {
            lo = std::min(lo, ranks[static_cast<size_t>(p)]);
            hi = std::max(hi, ranks[static_cast<size_t>(p)]);
        }
        if (lo <= prev_max) return false;
        prev_max = hi;
    }
    return true;
}

void check_sigma(const ChainContext& ctx, const IndexSequence& sigma) {
    if (sigma.length() != ctx.sys.k - 1)
        throw std::invalid_argument("chains: sigma must have k-1 entries");
    for (int e : sigma.entries)
        if (e < 0 || e >= ctx.sys.m)
            throw std::invalid_argument("chains: sigma entry out of range");
}

BigUint formula_count(int n, const std::vector<int>& sizes) {
    int union_size = std::accumulate(sizes.begin(), sizes.end(), 0);
    BigUint value = binomial(static_cast<unsigned>(n), static_cast<unsigned>(union_size));
    for (int s : sizes) value *= factorial(static_cast<unsigned>(s));
    value *= factorial(static_cast<unsigned>(n - union_size));
    return value;
}

}  // namespace

ChainContext make_chain_context(const FamilySystem& sys, bool validate, bool guard_override) {
    sys.check_shape();
    ChainContext ctx;
    ctx.sys = sys;
    if (validate) {
        TupleVerdict v = is_bollobas_tuple(sys, sys.k);
        if (!v.valid())
            throw std::invalid_argument("make_chain_context: system is not a valid (k,k)-tuple");
        ctx.validated = true;
    }
    ctx.ground = sys.used_elements().elements();
    ctx.n = static_cast<int>(ctx.ground.size());
    if (ctx.n > kMaxChainGround && !guard_override)
        throw GuardError("make_chain_context: effective ground size " + std::to_string(ctx.n) +
                         " exceeds the n! guard (" + std::to_string(kMaxChainGround) + ")");
    return ctx;
}

ChainMembership chain_membership(const ChainContext& ctx, const IndexSequence& sigma,
                                 std::span<const int> ranks) {
    check_sigma(ctx, sigma);
    if (static_cast<int>(ranks.size()) != ctx.n)
        throw std::invalid_argument("chain_membership: rank array size mismatch");
    auto blocks = blocks_as_positions(ctx, sigma);
    ChainMembership result;
    for (const auto& b : blocks)
        if (b.empty()) result.saw_empty_block = true;
    result.member = ordered_by_blocks(blocks, ranks);
    return result;
}

ChainCount chain_count(const ChainContext& ctx, const IndexSequence& sigma) {
    check_sigma(ctx, sigma);
    auto blocks = blocks_as_positions(ctx, sigma);

    ChainCount result;
    for (const auto& b : blocks) {
        result.block_sizes.push_back(static_cast<int>(b.size()));
        if (b.empty()) result.has_empty_block = true;
    }
    result.formula = formula_count(ctx.n, result.block_sizes);

    std::vector<int> ranks(static_cast<size_t>(ctx.n));
    std::iota(ranks.begin(), ranks.end(), 0);
    uint64_t hits = 0;
    do {
        if (ordered_by_blocks(blocks, ranks)) ++hits;
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    result.enumerated = BigUint(hits);
    result.match = result.formula == result.enumerated;
    return result;
}

DisjointnessReport verify_disjointness(const ChainContext& ctx, bool guard_override) {
    const int k = ctx.sys.k;
    const int m = ctx.sys.m;

    uint64_t sigma_count = 1;
    for (int i = 0; i < k - 1; ++i) sigma_count *= static_cast<uint64_t>(std::max(0, m - i));
    uint64_t perm_count = 1;
    for (int i = 2; i <= ctx.n; ++i) perm_count *= static_cast<uint64_t>(i);
    if (sigma_count * perm_count > 1'000'000'000ull && !guard_override)
        throw GuardError("verify_disjointness: m^(k-1) * n! exceeds the enumeration guard");

    DisjointnessReport report;
    std::vector<std::vector<std::vector<int>>> sigma_blocks;
    for_each_index_sequence(m, k - 1, [&](const IndexSequence& sigma) {
        SigmaSummary s;
        s.sigma = sigma;
        auto blocks = blocks_as_positions(ctx, sigma);
        for (const auto& b : blocks) {
            s.block_sizes.push_back(static_cast<int>(b.size()));
            if (b.empty()) s.has_empty_block = true;
        }
        s.formula = formula_count(ctx.n, s.block_sizes);
        s.enumerated = BigUint(0);
        report.per_sigma.push_back(std::move(s));
        sigma_blocks.push_back(std::move(blocks));
    });

    std::vector<uint64_t> hits(report.per_sigma.size(), 0);
    std::vector<int> ranks(static_cast<size_t>(ctx.n));
    std::iota(ranks.begin(), ranks.end(), 0);
    do {
        int first_hit = -1;
        for (size_t si = 0; si < sigma_blocks.size(); ++si) {
            if (!ordered_by_blocks(sigma_blocks[si], ranks)) continue;
            ++hits[si];
            if (first_hit >= 0 && !report.collision) {
                report.collision = ChainCollision{report.per_sigma[static_cast<size_t>(first_hit)].sigma,
                                                  report.per_sigma[si].sigma, ranks};
            }
            if (first_hit < 0) first_hit = static_cast<int>(si);
        }
    } while (std::next_permutation(ranks.begin(), ranks.end()));

    report.total_enumerated = BigUint(0);
    for (size_t si = 0; si < hits.size(); ++si) {
        report.per_sigma[si].enumerated = BigUint(hits[si]);
        report.total_enumerated += report.per_sigma[si].enumerated;
    }
    return report;
}

}  // namespace bollobas
