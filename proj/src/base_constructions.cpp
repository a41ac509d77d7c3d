#include "pdalift/base_constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pdalift/validate.hpp"

namespace pdalift {

PdaArray identity_pda(int n, Symbol t) {
    if (n < 1) throw Error(Errc::bad_grid, "identity_pda: n must be positive");
    std::vector<Symbol> cells(static_cast<size_t>(n) * n, kStar);
    for (int i = 0; i < n; ++i) cells[static_cast<size_t>(i) * n + i] = t;
    return PdaArray(n, n, std::move(cells));
}

PdaArray anti_identity_pda(int n, Symbol t) {
    if (n < 1) throw Error(Errc::bad_grid, "anti_identity_pda: n must be positive");
    std::vector<Symbol> cells(static_cast<size_t>(n) * n, kStar);
    for (int i = 0; i < n; ++i) cells[static_cast<size_t>(i) * n + (n - 1 - i)] = t;
    return PdaArray(n, n, std::move(cells));
}

PdaArray dense_pda(int n, const std::vector<Symbol>& symbols) {
    if (static_cast<int>(symbols.size()) != n * n)
        throw Error(Errc::wrong_symbol_count, "dense_pda: need n^2 symbols");
    std::set<Symbol> uniq(symbols.begin(), symbols.end());
    if (static_cast<int>(uniq.size()) != n * n)
        throw Error(Errc::duplicate_symbols, "dense_pda: symbols must be distinct");
    return PdaArray(n, n, symbols);
}

namespace {

std::vector<Symbol> iota_symbols(int count) {
    std::vector<Symbol> s(count);
    std::iota(s.begin(), s.end(), Symbol{0});
    return s;
}

}  // namespace

PdaArray diag_two_pda(int n, const std::vector<Symbol>& symbols) {
    if (n < 2) throw Error(Errc::bad_grid, "diag_two_pda: n must be at least 2");
    if (static_cast<int>(symbols.size()) != n * (n - 1) / 2)
        throw Error(Errc::wrong_symbol_count, "diag_two_pda: need n(n-1)/2 symbols");
    std::vector<Symbol> cells(static_cast<size_t>(n) * n, kStar);
    size_t k = 0;
    // Row-wise above the diagonal, mirrored across it.
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
            cells[static_cast<size_t>(r) * n + c] = symbols[k];
            cells[static_cast<size_t>(c) * n + r] = symbols[k];
            ++k;
        }
    return PdaArray(n, n, std::move(cells));
}

PdaArray antidiag_two_pda(int n, const std::vector<Symbol>& symbols) {
    if (n < 2) throw Error(Errc::bad_grid, "antidiag_two_pda: n must be at least 2");
    if (static_cast<int>(symbols.size()) != n * (n - 1) / 2)
        throw Error(Errc::wrong_symbol_count, "antidiag_two_pda: need n(n-1)/2 symbols");
    std::vector<Symbol> cells(static_cast<size_t>(n) * n, kStar);
    size_t k = 0;
    // Cells above the anti-diagonal row-wise, mirrored across it:
    // (r,c) <-> (n-1-c, n-1-r).
    for (int r = 0; r < n; ++r)
        for (int c = 0; r + c < n - 1; ++c) {
            cells[static_cast<size_t>(r) * n + c] = symbols[k];
            cells[static_cast<size_t>(n - 1 - c) * n + (n - 1 - r)] = symbols[k];
            ++k;
        }
    return PdaArray(n, n, std::move(cells));
}

PdaArray diag_two_pda(int n) { return diag_two_pda(n, iota_symbols(n * (n - 1) / 2)); }
PdaArray antidiag_two_pda(int n) { return antidiag_two_pda(n, iota_symbols(n * (n - 1) / 2)); }

PdaArray one_pda(int n, int z) {
    if (n < 1 || z < 0 || z > n)
        throw Error(Errc::unsupported_z, "one_pda: need 0 <= z <= n");
    std::vector<Symbol> cells(static_cast<size_t>(n) * n, kStar);
    Symbol next = 0;
    for (int r = z; r < n; ++r)
        for (int c = 0; c < n; ++c) cells[static_cast<size_t>(r) * n + c] = next++;
    return PdaArray(n, n, std::move(cells));
}

EdgeLabeledGraph associated_graph(const PdaArray& p) {
    const auto occ = occurrences(p);
    EdgeLabeledGraph g;
    g.vertex_count = p.cols();
    for (const auto& [s, cells] : occ) {
        if (cells.size() != 2)
            throw Error(Errc::not_two_regular,
                        "associated_graph: symbol " + std::to_string(s) +
                            " occurs " + std::to_string(cells.size()) + " times");
        const int c1 = cells[0].second;
        const int c2 = cells[1].second;
        if (c1 == c2)
            throw Error(Errc::not_two_regular,
                        "associated_graph: symbol occurs twice in one column");
        g.edges.push_back({std::max(c1, c2), std::min(c1, c2), s});
    }
    return g;
}

std::vector<std::vector<VertexPair>> one_factorization(int n) {
    if (n < 2 || n % 2 != 0)
        throw Error(Errc::odd_n, "one_factorization: n must be even and >= 2");
    // Circle method: vertex n-1 fixed; the others rotate.
    std::vector<std::vector<VertexPair>> factors;
    const int m = n - 1;
    for (int round = 0; round < m; ++round) {
        std::vector<VertexPair> f;
        f.emplace_back(n - 1, round);
        for (int i = 1; i <= (n - 2) / 2; ++i) {
            int a = (round + i) % m;
            int b = (round - i % m + m) % m;
            f.emplace_back(a, b);
        }
        factors.push_back(std::move(f));
    }
    return factors;
}

std::vector<std::vector<VertexPair>> hamiltonian_decomposition(int n) {
    if (n < 3 || n % 2 == 0)
        throw Error(Errc::even_n, "hamiltonian_decomposition: n must be odd and >= 3");
    // Zigzag cycles through the hub n-1: i, i+1, i-1, i+2, ..., i+m.
    const int m = (n - 1) / 2;
    const int ring = n - 1;
    std::vector<std::vector<VertexPair>> cycles;
    for (int i = 0; i < m; ++i) {
        std::vector<int> path;
        path.push_back(n - 1);
        path.push_back(i);
        for (int step = 1; step < ring; ++step) {
            const int off = (step + 1) / 2;
            const int sign = (step % 2 == 1) ? 1 : -1;
            path.push_back(((i + sign * off) % ring + ring) % ring);
        }
        std::vector<VertexPair> edges;
        for (size_t k = 0; k < path.size(); ++k)
            edges.emplace_back(path[k], path[(k + 1) % path.size()]);
        cycles.push_back(std::move(edges));
    }
    return cycles;
}

PdaArray star_substitute(const PdaArray& p, const std::set<Symbol>& remove) {
    const auto occ = occurrences(p);
    std::vector<int> degree(p.cols(), 0);
    for (Symbol s : remove) {
        const auto it = occ.find(s);
        if (it == occ.end())
            throw Error(Errc::not_regular_subgraph,
                        "star_substitute: symbol " + std::to_string(s) + " not present");
        for (const auto& [r, c] : it->second) ++degree[c];
    }
    if (!remove.empty())
        for (int c = 1; c < p.cols(); ++c)
            if (degree[c] != degree[0])
                throw Error(Errc::not_regular_subgraph,
                            "star_substitute: removal set is not column-regular");
    std::vector<Symbol> cells = p.cells();
    for (Symbol& v : cells)
        if (v != kStar && remove.count(v)) v = kStar;
    return PdaArray(p.rows(), p.cols(), std::move(cells));
}

bool two_pda_supported(long long n, long long z) {
    if (n < 2 || z < 1 || z > n - 1) return false;
    if (n % 2 == 0) return true;
    return z % 2 == 1 && z <= n - 2;
}

PdaArray two_pda(int n, int z) {
    if (!two_pda_supported(n, z))
        throw Error(Errc::unsupported_z,
                    "two_pda: no 2-regular (" + std::to_string(n) + "," +
                        std::to_string(n) + "," + std::to_string(z) + ",.) array");
    PdaArray p = diag_two_pda(n);
    if (z == 1) return p;

    // Map vertex pairs back to the symbols of H_n.
    std::map<VertexPair, Symbol> edge_symbol;
    for (const auto& e : associated_graph(p).edges)
        edge_symbol[{e.u, e.v}] = e.label;
    auto symbol_of = [&](VertexPair uv) {
        if (uv.first < uv.second) std::swap(uv.first, uv.second);
        return edge_symbol.at(uv);
    };

    std::set<Symbol> remove;
    if (n % 2 == 0) {
        const auto factors = one_factorization(n);
        for (int i = 0; i < z - 1; ++i)
            for (const auto& uv : factors[i]) remove.insert(symbol_of(uv));
    } else {
        const auto cycles = hamiltonian_decomposition(n);
        for (int i = 0; i < (z - 1) / 2; ++i)
            for (const auto& uv : cycles[i]) remove.insert(symbol_of(uv));
    }
    return star_substitute(p, remove);
}

}  // namespace pdalift
