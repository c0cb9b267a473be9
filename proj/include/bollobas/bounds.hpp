#pragma once

#include <string>
#include <vector>

#include "bollobas/bignum.hpp"

namespace bollobas {

struct EntropyValue {
    double value = 0.0;
    bool at_boundary = false;  // q was exactly 0 or 1; value is the limit 0
};

// H(q) = -q log2 q - (1-q) log2 (1-q). The plain form insists on 0 < q < 1;
// the checked form returns the limit with a flag at the endpoints.
double binary_entropy(double q);
EntropyValue binary_entropy_checked(double q);

// min{m : C(m, ceil(m/k)) >= n}, by incremental search with exact binomials.
int threshold_min_m(long long n, int k);

// Orlin's clique-cover threshold min{m : 2 C(m-1, floor(m/2)) >= n}, searched
// from m = 2 (a one-clique cover of a two-vertex edgeless graph is
// degenerate, and m = 2 keeps the published value at n = 2).
int orlin_min_m(long long n);

enum class BoundDirection { lower, upper };

struct NamedBound {
    std::string name;
    BoundDirection direction = BoundDirection::lower;
    double value = 0.0;
    std::string validity;  // empty = unconditional, else e.g. "large n"
    std::string exact;     // exact decimal when available
};

struct BoundReport {
    int k = 0;
    int t = 0;
    long long n = 0;
    std::vector<NamedBound> bounds;

    const NamedBound* find(const std::string& name) const;
};

// Bounds on log2 of the maximum tuple size over ground [n]: the rate bounds
// n/k <= log2 beta <= n H(1/k) at t = 2 (k >= 3), the binomial bound
// C(n, floor(n/k)), and the general-t rate window for k >= t >= 3.
BoundReport beta_bounds(int k, int t, long long n);

// Bounds on the minimum cover size of H_{k,t}(n): entropy and log window at
// t = 2 plus the exact binomial threshold, randomized-cover upper bound, the
// general lower bound for t >= 3, and the shadow bound at t = k.
BoundReport f_bounds(int k, int t, long long n);

struct CliqueCoverFormulas {
    int orlin = 0;                  // clique cover threshold for K_n minus a matching
    double hypergraph_lb = 0.0;     // log2(n/k) / H(1/k), k-uniform analogue
    bool has_hypergraph_lb = false; // requires k >= 3
};

CliqueCoverFormulas clique_cover_formulas(long long n, int k);

}  // namespace bollobas
