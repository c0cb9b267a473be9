#include "bollobas/families.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace bollobas {

FamilySystem FamilySystem::create(int n, int k, int m) {
    if (n < 1 || k < 2 || m < 1)
        throw std::invalid_argument("FamilySystem: need n >= 1, k >= 2, m >= 1");
    FamilySystem sys;
    sys.n = n;
    sys.k = k;
    sys.m = m;
    sys.sets.assign(static_cast<size_t>(k) * static_cast<size_t>(m), Bitset(n));
    return sys;
}

void FamilySystem::check_shape() const {
    if (n < 1 || k < 2 || m < 1)
        throw std::invalid_argument("FamilySystem: need n >= 1, k >= 2, m >= 1");
    if (sets.size() != static_cast<size_t>(k) * static_cast<size_t>(m))
        throw std::invalid_argument("FamilySystem: wrong number of sets");
    for (const Bitset& s : sets)
        if (s.universe() != n)
            throw std::invalid_argument("FamilySystem: set universe mismatch");
}

Bitset FamilySystem::used_elements() const {
    Bitset u(n);
    for (const Bitset& s : sets) u |= s;
    return u;
}

Surjection Surjection::of(int t, std::vector<int> image) {
    Surjection phi;
    phi.k = static_cast<int>(image.size());
    phi.t = t;
    phi.image = std::move(image);
    phi.validate();
    return phi;
}

Surjection Surjection::canonical(int k, int t) {
    std::vector<int> image(static_cast<size_t>(k));
    for (int h = 0; h < k; ++h) image[static_cast<size_t>(h)] = std::min(h, t - 1);
    return of(t, std::move(image));
}

void Surjection::validate() const {
    if (t < 1 || k < t) throw std::invalid_argument("Surjection: need 1 <= t <= k");
    if (static_cast<int>(image.size()) != k)
        throw std::invalid_argument("Surjection: image size != k");
    std::vector<bool> hit(static_cast<size_t>(t), false);
    for (int v : image) {
        if (v < 0 || v >= t) throw std::invalid_argument("Surjection: value out of range");
        hit[static_cast<size_t>(v)] = true;
    }
    for (bool h : hit)
        if (!h) throw std::invalid_argument("Surjection: not onto");
}

std::vector<Surjection> all_surjections(int k, int t) {
    std::vector<Surjection> out;
    std::vector<int> image(static_cast<size_t>(k), 0);
    for (;;) {
        std::vector<bool> hit(static_cast<size_t>(t), false);
        for (int v : image) hit[static_cast<size_t>(v)] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
            out.push_back(Surjection::of(t, image));
        int p = k - 1;
        while (p >= 0 && image[static_cast<size_t>(p)] == t - 1) image[static_cast<size_t>(p--)] = 0;
        if (p < 0) break;
        ++image[static_cast<size_t>(p)];
    }
    return out;
}

IndexSequence IndexSequence::of(int m, std::vector<int> entries) {
    if (entries.empty()) throw std::invalid_argument("IndexSequence: empty");
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] >= m)
            throw std::invalid_argument("IndexSequence: entry out of range");
        for (size_t j = 0; j < i; ++j)
            if (entries[i] == entries[j])
                throw std::invalid_argument("IndexSequence: entries not distinct");
    }
    IndexSequence s;
    s.entries = std::move(entries);
    return s;
}

void for_each_index_sequence(int m, int len, const std::function<void(const IndexSequence&)>& fn) {
    if (len < 1 || len > m) return;
    IndexSequence seq;
    seq.entries.assign(static_cast<size_t>(len), 0);
    std::vector<bool> used(static_cast<size_t>(m), false);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == len) {
            fn(seq);
            return;
        }
        for (int v = 0; v < m; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            seq.entries[static_cast<size_t>(depth)] = v;
            rec(depth + 1);
            used[static_cast<size_t>(v)] = false;
        }
    };
    rec(0);
    return;
}

namespace {

int distinct_count(const std::vector<int>& idx) {
    int d = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        bool seen = false;
        for (size_t j = 0; j < i; ++j)
            if (idx[j] == idx[i]) { seen = true; break; }
        if (!seen) ++d;
    }
    return d;
}

// Scans tuples with first index in [lo, hi), lexicographically, and returns
// the first violation in that stripe.
std::optional<TupleViolation> scan_stripe(const FamilySystem& sys, int t, int lo, int hi,
                                          const std::atomic<int>* stop_before) {
    const int k = sys.k;
    const int m = sys.m;
    std::vector<int> idx(static_cast<size_t>(k), 0);
    idx[0] = lo;
    std::vector<Bitset> prefix(static_cast<size_t>(k) + 1);
    prefix[0] = Bitset::full(sys.n);
    int level = 0;
    uint64_t ticks = 0;
    for (;;) {
        for (int j = level; j < k; ++j)
            prefix[static_cast<size_t>(j) + 1] =
                prefix[static_cast<size_t>(j)] & sys.set(j, idx[static_cast<size_t>(j)]);
        bool nonempty = prefix[static_cast<size_t>(k)].any();
        bool expected = distinct_count(idx) >= t;
        if (nonempty != expected) {
            TupleViolation v;
            v.indices = idx;
            v.kind = nonempty ? ViolationKind::forbidden_nonempty : ViolationKind::missing_nonempty;
            return v;
        }
        if (stop_before && (++ticks & 0xFFF) == 0 && stop_before->load(std::memory_order_relaxed) <= lo)
            return std::nullopt;  // an earlier stripe already has a violation
        int p = k - 1;
        while (p > 0 && idx[static_cast<size_t>(p)] == m - 1) idx[static_cast<size_t>(p--)] = 0;
        if (p == 0) {
            if (idx[0] + 1 >= hi) break;
            ++idx[0];
        } else {
            ++idx[static_cast<size_t>(p)];
        }
        level = p;
    }
    return std::nullopt;
}

void check_tuple_guard(const FamilySystem& sys, const VerifyOptions& opts) {
    uint64_t total = 1;
    bool over = false;
    for (int j = 0; j < sys.k; ++j) {
        if (total > opts.guard_limit / static_cast<uint64_t>(sys.m)) { over = true; break; }
        total *= static_cast<uint64_t>(sys.m);
    }
    if (over && !opts.guard_override)
        throw GuardError("is_bollobas_tuple: m^k exceeds the enumeration guard (" +
                         std::to_string(opts.guard_limit) + "); pass the override to force");
}

}  // namespace

TupleVerdict is_bollobas_tuple(const FamilySystem& sys, int t, const VerifyOptions& opts) {
    sys.check_shape();
    if (t < 2 || t > sys.k)
        throw std::invalid_argument("is_bollobas_tuple: need 2 <= t <= k");
    if (sys.m < t)
        throw std::invalid_argument("is_bollobas_tuple: need m >= t (got m=" +
                                    std::to_string(sys.m) + ", t=" + std::to_string(t) + ")");
    check_tuple_guard(sys, opts);

    TupleVerdict verdict;
    int jobs = std::max(1, std::min(opts.jobs, sys.m));
    if (jobs == 1) {
        verdict.violation = scan_stripe(sys, t, 0, sys.m, nullptr);
        return verdict;
    }

    // Stripe the first index; the winning violation is the one from the
    // lowest stripe, which is also the global lexicographic minimum.
    std::vector<std::optional<TupleViolation>> found(static_cast<size_t>(jobs));
    std::vector<int> starts(static_cast<size_t>(jobs) + 1);
    for (int s = 0; s <= jobs; ++s)
        starts[static_cast<size_t>(s)] = static_cast<int>(static_cast<int64_t>(sys.m) * s / jobs);
    std::atomic<int> stop_before{sys.m};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int s = 0; s < jobs; ++s) {
        workers.emplace_back([&, s] {
            int lo = starts[static_cast<size_t>(s)];
            int hi = starts[static_cast<size_t>(s) + 1];
            if (lo >= hi) return;
            auto v = scan_stripe(sys, t, lo, hi, &stop_before);
            if (v) {
                found[static_cast<size_t>(s)] = std::move(v);
                int cur = stop_before.load();
                while (lo < cur && !stop_before.compare_exchange_weak(cur, lo)) {}
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& v : found)
        if (v) { verdict.violation = std::move(v); break; }
    return verdict;
}

FamilySystem reduce_via_surjection(const FamilySystem& sys, int t, const Surjection& phi,
                                   const VerifyOptions& opts) {
    phi.validate();
    if (phi.k != sys.k || phi.t != t)
        throw std::invalid_argument("reduce_via_surjection: surjection shape mismatch");
    TupleVerdict v = is_bollobas_tuple(sys, t, opts);
    if (!v.valid())
        throw std::invalid_argument("reduce_via_surjection: input is not a valid (k,t)-tuple");

    FamilySystem out = FamilySystem::create(sys.n, t, sys.m);
    for (int l = 0; l < t; ++l) {
        for (int i = 0; i < sys.m; ++i) {
            Bitset inter = Bitset::full(sys.n);
            for (int h = 0; h < sys.k; ++h)
                if (phi.image[static_cast<size_t>(h)] == l) inter &= sys.set(h, i);
            out.set(l, i) = std::move(inter);
        }
    }
    return out;
}

std::vector<Bitset> derived_sets(const FamilySystem& sys, int t, const Surjection& phi,
                                 const IndexSequence& sigma) {
    phi.validate();
    if (phi.k != sys.k || phi.t != t)
        throw std::invalid_argument("derived_sets: surjection shape mismatch");
    if (sigma.length() != t - 1)
        throw std::invalid_argument("derived_sets: sigma must have t-1 entries");
    for (int e : sigma.entries)
        if (e < 0 || e >= sys.m) throw std::invalid_argument("derived_sets: sigma entry out of range");

    std::vector<Bitset> out;
    out.reserve(static_cast<size_t>(t));
    Bitset earlier(sys.n);
    for (int j = 0; j < t; ++j) {
        int col = sigma.wrapped(j);
        Bitset block = Bitset::full(sys.n);
        for (int h = 0; h < sys.k; ++h)
            if (phi.image[static_cast<size_t>(h)] == j) block &= sys.set(h, col);
        block -= earlier;
        earlier |= block;
        out.push_back(std::move(block));
    }
    return out;
}

Rational bollobas_sum(const FamilySystem& sys, int t, const Surjection& phi,
                      const VerifyOptions& opts) {
    TupleVerdict v = is_bollobas_tuple(sys, t, opts);
    if (!v.valid())
        throw std::invalid_argument(
            "bollobas_sum: system is not a valid (k,t)-tuple; the inequality only applies to valid systems");
    return bollobas_sum_unchecked(sys, t, phi);
}

Rational bollobas_sum_unchecked(const FamilySystem& sys, int t, const Surjection& phi) {
    Rational total;
    for_each_index_sequence(sys.m, t - 1, [&](const IndexSequence& sigma) {
        std::vector<Bitset> blocks = derived_sets(sys, t, phi, sigma);
        std::vector<int> sizes(blocks.size());
        int union_size = 0;
        for (size_t j = 0; j < blocks.size(); ++j) {
            sizes[j] = blocks[j].count();
            union_size += sizes[j];
        }
        total += Rational(BigUint(1), multinomial(static_cast<unsigned>(union_size), sizes));
    });
    return total;
}

}  // namespace bollobas
