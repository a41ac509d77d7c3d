#pragma once

#include <optional>
#include <vector>

#include "pdalift/pda.hpp"
#include "pdalift/validate.hpp"

namespace pdalift {

// Cyclic rotation of the main-diagonal entries, moved down by `power`
// positions (negative powers move up). Off-diagonal cells are untouched.
PdaArray rotate_diag(const PdaArray& p, long long power = 1);

// Cyclic rotation of the anti-diagonal: each anti-diagonal entry at (i, j)
// moves to ((i-1) mod n, (j+1) mod n) per application.
PdaArray rotate_antidiag(const PdaArray& p, long long power = 1);

// Block-split variants on a 2n x 2n array: the first n diagonal
// (anti-diagonal) entries rotate one way within their half, the second n the
// opposite way.
PdaArray rotate_diag_blocks(const PdaArray& p, long long power = 1);
PdaArray rotate_antidiag_blocks(const PdaArray& p, long long power = 1);

// A family of equal-size PDAs pairwise compatible w.r.t. a reference array.
// stars_per_column is the members' uniform e; total_occurrences the number
// of times each member symbol occurs summed across all members, when that
// count is uniform (it is the lifted gain).
struct BlackburnSet {
    std::vector<PdaArray> members;
    PdaArray pstar;
    int stars_per_column = 0;
    std::optional<long long> total_occurrences;
};

// g rotated copies of the dense g x g array, compatible w.r.t. an identity
// reference; lifting an identity base gives a g-regular
// (g^2, g^2, g^2-2g+1, g(2g-1)) array.
BlackburnSet rotation_family(int g);

// g block-rotated copies of the 2g x 2g anti-diagonal 2-PDA, compatible
// w.r.t. a 2g x 2g identity reference; lifting an identity base gives a
// 2g-regular (2g^2, 2g^2, 2g^2-3g+2, g(3g-2)) array.
BlackburnSet block_rotation_family(int g);

// {P, P^T} for a 1-PDA P, compatible w.r.t. any reference with stars on the
// main diagonal (the reference used is the symmetric 2-PDA).
BlackburnSet transpose_pair(const PdaArray& p);

// {P, rotate_antidiag^i(P^T)}, compatible w.r.t. a reference with stars on
// the main and i-th diagonals.
BlackburnSet shifted_transpose_pair(const PdaArray& p, int i);

// Block-wise families built from the symmetric 2-PDA on 2g (bw1, bw2) or g
// (bw3) columns, d members each.
BlackburnSet bw1_family(int g, int d);
BlackburnSet bw2_family(int g, int d);
BlackburnSet bw3_family(int g, int d);

// 2n members of size 2n^2 (dense 1-PDAs with permuted blocks).
BlackburnSet bw4_family(int n);

// d members of size g made of identity blocks (g/d-regular), reference
// identity; the replicated variant returns b members for d = gcd(g, b).
BlackburnSet tiling_family(int g, int d);
BlackburnSet replicated_tiling_family(int g, int b);

// The recursive pair of 2^r x 2^r arrays over symbols x..x+2r+1, compatible
// w.r.t. a 2^r identity reference. Lifting a 2x2 identity base gives a
// 2^r-regular (2^{r+1}, 2^{r+1}, 2^{r+1}-r-2, 2r+4) array.
BlackburnSet power_of_two_pair(int r, Symbol x);

// One level of the recursive expansion: g members of size ng whose diagonal
// slot k holds member (k+1+i) mod g and whose off-diagonal slots hold fixed
// symbol-disjoint copies of the reference.
BlackburnSet expand_family(const BlackburnSet& in);

// Built-in constituent pairs used by the chain steps pair10x5 / pair12x3:
// two 10x5 members whose identity-stack lift of a 2-regular base is
// 5-regular, and two 12x3 members giving 3-regular lifts.
BlackburnSet pair_10x5();
BlackburnSet pair_12x3();

}  // namespace pdalift
