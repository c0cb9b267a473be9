#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bollobas/bignum.hpp"
#include "bollobas/bitset.hpp"
#include "bollobas/errors.hpp"

namespace bollobas {

// k families of m subsets of {0,...,n-1}. Family j, column i holds the set
// A_{j,i}; a system is a Bollobas (k,t)-tuple when the k-wise intersection
// over columns (i_1,...,i_k) is nonempty exactly when at least t of the
// column indices are distinct.
struct FamilySystem {
    int n = 0;  // ground-set size, elements 0..n-1
    int k = 0;  // number of families
    int m = 0;  // columns per family
    std::vector<Bitset> sets;  // k*m entries, family-major

    static FamilySystem create(int n, int k, int m);

    const Bitset& set(int family, int col) const {
        return sets[static_cast<size_t>(family) * static_cast<size_t>(m) + static_cast<size_t>(col)];
    }
    Bitset& set(int family, int col) {
        return sets[static_cast<size_t>(family) * static_cast<size_t>(m) + static_cast<size_t>(col)];
    }

    // Structural invariants (k >= 2, m >= 1, n >= 1, right universe sizes).
    void check_shape() const;

    // Union of every set in the system.
    Bitset used_elements() const;
};

// phi : [k] -> [t], onto. Values are 0-based internally.
struct Surjection {
    int k = 0;
    int t = 0;
    std::vector<int> image;  // size k, values in [0,t)

    static Surjection of(int t, std::vector<int> image);
    // phi(h) = min(h, t-1): the identity when t == k, and for t = 2 the map
    // separating family 0 from the rest (the default everywhere).
    static Surjection canonical(int k, int t);
    static Surjection identity(int k) { return canonical(k, k); }

    void validate() const;
};

std::vector<Surjection> all_surjections(int k, int t);

// sigma: a sequence of pairwise-distinct column indices. The derived-set
// definition closes the cycle, so position len() reads entry 0 again.
struct IndexSequence {
    std::vector<int> entries;

    static IndexSequence of(int m, std::vector<int> entries);

    int length() const { return static_cast<int>(entries.size()); }
    int wrapped(int j) const { return entries[j < length() ? static_cast<size_t>(j) : 0]; }
};

// Visits all ordered sequences of `len` distinct values in [0,m), in
// lexicographic order.
void for_each_index_sequence(int m, int len, const std::function<void(const IndexSequence&)>& fn);

enum class ViolationKind {
    forbidden_nonempty,  // fewer than t distinct indices, intersection nonempty
    missing_nonempty,    // at least t distinct indices, intersection empty
};

struct TupleViolation {
    std::vector<int> indices;  // the lexicographically first offending tuple
    ViolationKind kind = ViolationKind::forbidden_nonempty;
};

struct TupleVerdict {
    std::optional<TupleViolation> violation;
    bool valid() const { return !violation.has_value(); }
};

struct VerifyOptions {
    bool guard_override = false;
    uint64_t guard_limit = 1'000'000'000;  // max enumerated index tuples
    int jobs = 1;
};

// Full m^k scan. The verdict is deterministic: the lexicographically first
// violating tuple, regardless of the job count.
TupleVerdict is_bollobas_tuple(const FamilySystem& sys, int t, const VerifyOptions& opts = {});

// Collapses a (k,t)-tuple to a (t,t)-tuple: family l, column i of the result
// is the intersection of A_{h,i} over all h with phi(h) = l. The input is
// re-verified first.
FamilySystem reduce_via_surjection(const FamilySystem& sys, int t, const Surjection& phi,
                                   const VerifyOptions& opts = {});

// The t pairwise-disjoint derived sets of (phi, sigma): block j intersects
// the families mapped to j at column sigma(j), minus all earlier blocks.
std::vector<Bitset> derived_sets(const FamilySystem& sys, int t, const Surjection& phi,
                                 const IndexSequence& sigma);

// Sum over all sigma of the inverse multinomial of the derived-set sizes.
// Exactly <= 1 for every valid (k,t)-tuple; the checked variant refuses
// systems that fail is_bollobas_tuple.
Rational bollobas_sum(const FamilySystem& sys, int t, const Surjection& phi,
                      const VerifyOptions& opts = {});
Rational bollobas_sum_unchecked(const FamilySystem& sys, int t, const Surjection& phi);

}  // namespace bollobas
