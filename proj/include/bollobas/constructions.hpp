#pragma once

#include "bollobas/families.hpp"

namespace bollobas {

// Generators for the explicit tuple families. Each returns a FamilySystem
// meant to be verified downstream; none of them is trusted by construction.

// k = 2, t = 2: all C(a+b,a) ordered partitions (A_i, B_i) of {0,...,a+b-1}
// with |A_i| = a. Columns are ordered lexicographically by A_i's element list.
// The classical tight family for the two-family inequality.
FamilySystem classical_pairs(int a, int b);

// t = 2, m = n, ground {0,...,n-1} with arithmetic mod n:
//   A_{1,i} = {i}^c,  A_{j,i} = {i-(j-1), i+(j-1)}^c for 1 < j < k,
//   A_{k,i} = {i-k+2, ..., i+k-2}.
// Requires n >= 4k. Achieves inequality sum exactly 1 at t = 2.
// For k = 2 this degenerates to A_{1,i} = {i}^c, A_{2,i} = {i}.
FamilySystem sharpness_k2(int k, int n);

// t = 2, m = 2^n, ground = n blocks of size k. Column f (one bit per block,
// bit b = block b, LSB first) removes from family j the element at position
// (f(b) + j) mod k of every block b. Requires k >= 3; certifies
// log2 beta_{k,2}(kn) >= n.
FamilySystem modular_k2(int k, int n, const VerifyOptions& opts = {});

// The 3^n-column variant of the k = 3 modular construction, with column
// digits in {0,1,2} instead of bits. Provided for empirical probing only:
// it is NOT a valid (3,2)-tuple in general (see the construction tests).
FamilySystem modular_k2_ternary(int n, const VerifyOptions& opts = {});

}  // namespace bollobas
