#pragma once

#include <set>
#include <vector>

#include "pdalift/pda.hpp"

namespace pdalift {

// I_n(t): t on the main diagonal, stars elsewhere; (n,n,n-1,1), gain n.
PdaArray identity_pda(int n, Symbol t);
// The anti-diagonal variant.
PdaArray anti_identity_pda(int n, Symbol t);

// J_n: all n^2 cells filled row-major with the given distinct symbols.
PdaArray dense_pda(int n, const std::vector<Symbol>& symbols);

// 2-regular (n,n,1,n(n-1)/2) arrays: stars on the diagonal (H) or the
// anti-diagonal (G), the given n(n-1)/2 symbols written row-wise into the
// free half and mirrored symmetrically.
PdaArray diag_two_pda(int n, const std::vector<Symbol>& symbols);      // H_n
PdaArray antidiag_two_pda(int n, const std::vector<Symbol>& symbols);  // G_n

PdaArray diag_two_pda(int n);      // H_n([n(n-1)/2])
PdaArray antidiag_two_pda(int n);  // G_n([n(n-1)/2])

// 1-regular (n,n,z,n(n-z)): first z rows all-star, the rest distinct symbols.
PdaArray one_pda(int n, int z);

struct LabeledEdge {
    int u = 0;
    int v = 0;
    Symbol label = 0;
};

// Vertices are the columns of a 2-regular PDA; each symbol becomes one edge
// joining its two occurrence columns.
struct EdgeLabeledGraph {
    int vertex_count = 0;
    std::vector<LabeledEdge> edges;
};

EdgeLabeledGraph associated_graph(const PdaArray& p);

// Round-robin (circle method) 1-factorization of K_n, n even: n-1 perfect
// matchings of n/2 vertex pairs each.
using VertexPair = std::pair<int, int>;
std::vector<std::vector<VertexPair>> one_factorization(int n);

// Walecki-style decomposition of K_n, n odd, into (n-1)/2 Hamiltonian
// cycles, each returned as its n edges.
std::vector<std::vector<VertexPair>> hamiltonian_decomposition(int n);

// Replace the given symbols by stars. The symbols' edges must form an
// r-regular spanning subgraph of the associated graph (equivalently, every
// column loses the same number of integers).
PdaArray star_substitute(const PdaArray& p, const std::set<Symbol>& remove);

// 2-regular (n,n,Z,n(n-Z)/2): H_n with Z-1 1-factors removed (n even) or
// (Z-1)/2 Hamiltonian cycles removed (n odd).
PdaArray two_pda(int n, int z);

bool two_pda_supported(long long n, long long z);

}  // namespace pdalift
