#include "pdalift/blackburn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pdalift/base_constructions.hpp"
#include "pdalift/lifting.hpp"

namespace pdalift {

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

void require_square(const PdaArray& p, const char* op) {
    if (p.rows() != p.cols()) throw Error(Errc::dimension_mismatch, std::string(op) + ": square array required");
}

// Extract / write back the b-th size x size block of a square array.
PdaArray block_of(const PdaArray& p, int block_size, int bj, int bk) {
    std::vector<Symbol> cells;
    cells.reserve(static_cast<size_t>(block_size) * block_size);
    for (int r = 0; r < block_size; ++r)
        for (int c = 0; c < block_size; ++c)
            cells.push_back(p.at(bj * block_size + r, bk * block_size + c));
    return PdaArray(block_size, block_size, std::move(cells));
}

void place_block(std::vector<Symbol>& cells, int side, int block_size, int bj, int bk,
                 const PdaArray& b) {
    for (int r = 0; r < block_size; ++r)
        for (int c = 0; c < block_size; ++c)
            cells[static_cast<size_t>(bj * block_size + r) * side + bk * block_size + c] =
                b.at(r, c);
}

PdaArray assemble(int blocks, const std::vector<PdaArray>& grid) {
    const int bs = grid.front().rows();
    const int side = blocks * bs;
    std::vector<Symbol> cells(static_cast<size_t>(side) * side, kStar);
    for (int j = 0; j < blocks; ++j)
        for (int k = 0; k < blocks; ++k)
            place_block(cells, side, bs, j, k, grid[static_cast<size_t>(j) * blocks + k]);
    return PdaArray(side, side, std::move(cells));
}

}  // namespace

PdaArray rotate_diag(const PdaArray& p, long long power) {
    require_square(p, "rotate_diag");
    const int n = p.rows();
    std::vector<Symbol> cells = p.cells();
    for (int i = 0; i < n; ++i)
        cells[static_cast<size_t>(i) * n + i] = p.at(static_cast<int>(mod(i - power, n)),
                                                     static_cast<int>(mod(i - power, n)));
    return PdaArray(n, n, std::move(cells));
}

PdaArray rotate_antidiag(const PdaArray& p, long long power) {
    require_square(p, "rotate_antidiag");
    const int n = p.rows();
    std::vector<Symbol> cells = p.cells();
    for (int i = 0; i < n; ++i) {
        const int src = static_cast<int>(mod(i + power, n));
        cells[static_cast<size_t>(i) * n + (n - 1 - i)] = p.at(src, n - 1 - src);
    }
    return PdaArray(n, n, std::move(cells));
}

PdaArray rotate_diag_blocks(const PdaArray& p, long long power) {
    require_square(p, "rotate_diag_blocks");
    if (p.rows() % 2 != 0)
        throw Error(Errc::odd_side_for_block_op, "rotate_diag_blocks: side must be even");
    const int n = p.rows() / 2;
    std::vector<Symbol> cells = p.cells();
    const int side = 2 * n;
    for (int i = 0; i < n; ++i) {
        const int down = static_cast<int>(mod(i - power, n));
        cells[static_cast<size_t>(i) * side + i] = p.at(down, down);
        const int up = n + static_cast<int>(mod(i + power, n));
        cells[static_cast<size_t>(n + i) * side + (n + i)] = p.at(up, up);
    }
    return PdaArray(side, side, std::move(cells));
}

PdaArray rotate_antidiag_blocks(const PdaArray& p, long long power) {
    require_square(p, "rotate_antidiag_blocks");
    if (p.rows() % 2 != 0)
        throw Error(Errc::odd_side_for_block_op, "rotate_antidiag_blocks: side must be even");
    const int n = p.rows() / 2;
    const int side = 2 * n;
    std::vector<Symbol> cells = p.cells();
    for (int i = 0; i < n; ++i) {
        const int up = static_cast<int>(mod(i + power, n));
        cells[static_cast<size_t>(i) * side + (side - 1 - i)] = p.at(up, side - 1 - up);
        const int down = n + static_cast<int>(mod(i - power, n));
        cells[static_cast<size_t>(n + i) * side + (side - 1 - (n + i))] =
            p.at(down, side - 1 - down);
    }
    return PdaArray(side, side, std::move(cells));
}

BlackburnSet rotation_family(int g) {
    if (g < 2) throw Error(Errc::bad_grid, "rotation_family: g must be at least 2");
    std::vector<Symbol> syms(static_cast<size_t>(g) * g);
    std::iota(syms.begin(), syms.end(), Symbol{0});
    const PdaArray base = dense_pda(g, syms);
    BlackburnSet set{{}, identity_pda(g, static_cast<Symbol>(g) * g), 0, g};
    for (int i = 0; i < g; ++i) set.members.push_back(rotate_diag(base, i));
    return set;
}

BlackburnSet block_rotation_family(int g) {
    if (g < 1) throw Error(Errc::bad_grid, "block_rotation_family: g must be positive");
    const PdaArray base = antidiag_two_pda(2 * g);
    const Symbol fresh = static_cast<Symbol>(g) * (2 * g - 1);
    BlackburnSet set{{}, identity_pda(2 * g, fresh), 1, 2LL * g};
    for (int i = 0; i < g; ++i) set.members.push_back(rotate_diag_blocks(base, i));
    return set;
}

namespace {

void require_one_pda(const PdaArray& p, const char* op) {
    const auto reg = regularity(p);
    if (!reg.uniform_gain || *reg.uniform_gain != 1)
        throw Error(Errc::not_one_pda, std::string(op) + ": every symbol must occur exactly once");
}

}  // namespace

BlackburnSet transpose_pair(const PdaArray& p) {
    require_square(p, "transpose_pair");
    require_one_pda(p, "transpose_pair");
    const int g = p.rows();
    const Symbol fresh = p.max_symbol() + 1;
    std::vector<Symbol> ref_syms(static_cast<size_t>(g) * (g - 1) / 2);
    std::iota(ref_syms.begin(), ref_syms.end(), fresh);
    BlackburnSet set{{p, transpose(p)}, diag_two_pda(g, ref_syms),
                     p.star_count_in_column(0), 2};
    return set;
}

BlackburnSet shifted_transpose_pair(const PdaArray& p, int i) {
    require_square(p, "shifted_transpose_pair");
    require_one_pda(p, "shifted_transpose_pair");
    const int g = p.rows();
    if (i < 0 || i >= g)
        throw Error(Errc::bad_grid, "shifted_transpose_pair: shift must be in [0, g)");
    Symbol next = p.max_symbol() + 1;
    std::vector<Symbol> cells(static_cast<size_t>(g) * g, kStar);
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) {
            if (c == r || c == (r + i) % g) continue;
            cells[static_cast<size_t>(r) * g + c] = next++;
        }
    BlackburnSet set{{p, rotate_antidiag(transpose(p), i)},
                     PdaArray(g, g, std::move(cells)), p.star_count_in_column(0), 2};
    return set;
}

namespace {

// Shared scaffolding for the block-wise families over the symmetric 2-PDA:
// the member partition always matches the reference's block grid.
struct BlockPlan {
    int grid;        // blocks per side
    int block_size;  // cells per block side
    PdaArray seed;
};

std::vector<PdaArray> blockwise_members(
    const BlockPlan& plan, int count,
    const std::function<PdaArray(int i, int j, int k, const PdaArray& seed_block)>& lower) {
    std::vector<PdaArray> members;
    for (int i = 0; i < count; ++i) {
        std::vector<PdaArray> grid(static_cast<size_t>(plan.grid) * plan.grid,
                                   PdaArray::all_star(plan.block_size, plan.block_size));
        for (int j = 0; j < plan.grid; ++j)
            for (int k = 0; k <= j; ++k) {
                PdaArray b = lower(i, j, k, block_of(plan.seed, plan.block_size, j, k));
                if (k < j) grid[static_cast<size_t>(k) * plan.grid + j] = transpose(b);
                grid[static_cast<size_t>(j) * plan.grid + k] = std::move(b);
            }
        members.push_back(assemble(plan.grid, grid));
    }
    return members;
}

}  // namespace

BlackburnSet bw1_family(int g, int d) {
    if (d < 1 || g % d != 0) throw Error(Errc::not_divisor, "bw1_family: d must divide g");
    const BlockPlan plan{g / d, 2 * d, diag_two_pda(2 * g)};
    auto members = blockwise_members(plan, d, [&](int i, int j, int k, const PdaArray& b) {
        if (j == k) return rotate_antidiag_blocks(b, i);
        return rotate_antidiag(b, 2LL * i);
    });
    // Reference: the (g/d)-fold grid of anti-identity blocks.
    const Symbol fresh = static_cast<Symbol>(g) * (2 * g - 1);
    std::map<Symbol, PdaArray> blocks;
    std::vector<Symbol> jsyms(static_cast<size_t>(g / d) * (g / d));
    std::iota(jsyms.begin(), jsyms.end(), Symbol{0});
    for (Symbol s : jsyms) blocks.emplace(s, anti_identity_pda(2 * d, fresh + s));
    BlackburnSet set{std::move(members), basic_lift(dense_pda(g / d, jsyms), blocks), 1,
                     2LL * d};
    return set;
}

BlackburnSet bw2_family(int g, int d) {
    if (d < 1 || g % (d * d) != 0)
        throw Error(Errc::not_divisor, "bw2_family: d^2 must divide g");
    const BlockPlan plan{g / d, 2 * d, diag_two_pda(2 * g)};
    auto members = blockwise_members(plan, d, [&](int i, int j, int k, const PdaArray&) {
        if (j == k) {
            const int jt = static_cast<int>(mod(j - i, plan.grid));
            return rotate_antidiag_blocks(block_of(plan.seed, plan.block_size, jt, jt), i);
        }
        return rotate_antidiag(block_of(plan.seed, plan.block_size, j, k), 2LL * i);
    });

    // Reference: lift of the (g/d)-wide diagonal identity-block base by the
    // rotated 2d x 2d anti-identity tilings.
    std::vector<Symbol> jsyms(static_cast<size_t>(d) * d);
    std::iota(jsyms.begin(), jsyms.end(), Symbol{0});
    std::map<Symbol, PdaArray> tiles;
    for (Symbol s : jsyms) tiles.emplace(s, anti_identity_pda(2, s));
    const PdaArray t_base = basic_lift(dense_pda(d, jsyms), tiles);
    BlackburnSet tile_family{{}, anti_identity_pda(2 * d, static_cast<Symbol>(d) * d),
                             d, 2LL * d};
    for (int i = 0; i < d; ++i)
        tile_family.members.push_back(rotate_antidiag(t_base, 2LL * i));

    const int side = g / d;  // base side, g/d^2 diagonal identity blocks
    std::vector<Symbol> cells(static_cast<size_t>(side) * side, kStar);
    for (int b = 0; b < side / d; ++b)
        for (int l = 0; l < d; ++l)
            cells[static_cast<size_t>(b * d + l) * side + b * d + l] = b;
    const PdaArray diag_base(side, side, std::move(cells));

    PdaArray pstar = regular_lift(diag_base, tile_family);
    const Symbol fresh = static_cast<Symbol>(g) * (2 * g - 1);
    BlackburnSet set{std::move(members), relabel_offset(normalize_alphabet(pstar), fresh), 1,
                     2LL * d};
    return set;
}

BlackburnSet bw3_family(int g, int d) {
    if (d < 1 || g % d != 0) throw Error(Errc::not_divisor, "bw3_family: d must divide g");
    const BlockPlan plan{d, g / d, diag_two_pda(g)};
    auto members = blockwise_members(plan, d, [&](int i, int j, int k, const PdaArray& b) {
        if (j == k) {
            const int jt = static_cast<int>(mod(j - i, d));
            return block_of(plan.seed, plan.block_size, jt, jt);
        }
        return b;
    });
    const Symbol fresh = static_cast<Symbol>(g) * (g - 1) / 2;
    std::vector<Symbol> hsyms(static_cast<size_t>(g / d) * (g / d - 1) / 2);
    std::iota(hsyms.begin(), hsyms.end(), fresh);
    std::map<Symbol, PdaArray> blocks{{0, g / d >= 2 ? diag_two_pda(g / d, hsyms)
                                                     : PdaArray::all_star(1, 1)}};
    BlackburnSet set{std::move(members), basic_lift(identity_pda(d, 0), blocks), 1, 2LL * d};
    return set;
}

BlackburnSet bw4_family(int n) {
    if (n < 1) throw Error(Errc::bad_grid, "bw4_family: n must be positive");
    const int bs = 2 * n;
    const long long span = 4LL * n * n;

    std::vector<PdaArray> p(n, PdaArray::all_star(1, 1));
    {
        std::vector<PdaArray> grid;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::vector<Symbol> syms(static_cast<size_t>(bs) * bs);
                std::iota(syms.begin(), syms.end(), span * (static_cast<long long>(n) * j + k));
                grid.push_back(dense_pda(bs, syms));
            }
        p[0] = assemble(n, grid);
    }
    for (int i = 1; i < n; ++i) {
        std::vector<PdaArray> grid;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const int sj = (j == k) ? static_cast<int>(mod(j - 1, n)) : j;
                const int sk = (j == k) ? sj : k;
                grid.push_back(rotate_antidiag(block_of(p[i - 1], bs, sj, sk), 2));
            }
        p[i] = assemble(n, grid);
    }
    std::vector<PdaArray> members = p;
    for (int i = 0; i < n; ++i) {
        std::vector<PdaArray> grid;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const PdaArray b = block_of(p[i], bs, j, k);
                grid.push_back(j == k ? transpose(b) : rotate_antidiag(b, 1));
            }
        members.push_back(assemble(n, grid));
    }

    // Reference: rotated symmetric blocks on the diagonal, anti-identity
    // blocks elsewhere.
    Symbol next = static_cast<Symbol>(4) * n * n * n * n;
    std::vector<std::vector<Symbol>> offdiag(n, std::vector<Symbol>(n, kStar));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (j != k) offdiag[j][k] = next++;
    std::vector<Symbol> hsyms(static_cast<size_t>(n) * (2 * n - 1));
    std::iota(hsyms.begin(), hsyms.end(), next);
    const PdaArray t = diag_two_pda(bs, hsyms);
    std::vector<PdaArray> grid;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            grid.push_back(j == k ? rotate_antidiag_blocks(t, j)
                                  : anti_identity_pda(bs, offdiag[j][k]));
    BlackburnSet set{std::move(members), assemble(n, grid), 0, 2LL * n};
    return set;
}

BlackburnSet tiling_family(int g, int d) {
    if (d < 1 || g % d != 0) throw Error(Errc::not_divisor, "tiling_family: d must divide g");
    const int q = g / d;
    std::vector<Symbol> syms(static_cast<size_t>(d) * d);
    std::iota(syms.begin(), syms.end(), Symbol{0});
    const PdaArray seed = dense_pda(d, syms);
    BlackburnSet set{{}, identity_pda(g, static_cast<Symbol>(d) * d), g - d, g};
    for (int i = 0; i < d; ++i) {
        const PdaArray rotated = rotate_diag(seed, i);
        std::vector<PdaArray> grid;
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) grid.push_back(identity_pda(q, rotated.at(j, k)));
        set.members.push_back(assemble(d, grid));
    }
    return set;
}

BlackburnSet replicated_tiling_family(int g, int b) {
    if (g < 1 || b < 1) throw Error(Errc::bad_grid, "replicated_tiling_family: bad parameters");
    const int d = static_cast<int>(std::gcd(g, b));
    const BlackburnSet base = tiling_family(g, d);
    BlackburnSet set{{}, identity_pda(g, static_cast<Symbol>(b / d) * d * d),
                     base.stars_per_column, base.total_occurrences};
    for (int group = 0; group < b / d; ++group)
        for (const auto& m : base.members)
            set.members.push_back(relabel_offset(m, static_cast<Symbol>(group) * d * d));
    return set;
}

BlackburnSet power_of_two_pair(int r, Symbol x) {
    if (r < 1) throw Error(Errc::bad_grid, "power_of_two_pair: r must be positive");
    // Innermost 2x2 pair sits at the deepest level and uses the highest of
    // the 2r+2 symbols; each outer level adds its two diagonal symbols below.
    const Symbol b0 = x + 2 * (r - 1);
    PdaArray a = PdaArray(2, 2, {b0, b0 + 1, b0 + 2, b0 + 3});
    PdaArray ap = PdaArray(2, 2, {b0 + 3, b0 + 1, b0 + 2, b0});
    for (int level = 2; level <= r; ++level) {
        const Symbol base = x + 2 * (r - level);
        const int h = 1 << (level - 1);
        std::vector<Symbol> cells(static_cast<size_t>(2 * h) * (2 * h), kStar);
        auto put = [&](int roff, int coff, const PdaArray& b) {
            for (int rr = 0; rr < h; ++rr)
                for (int cc = 0; cc < h; ++cc)
                    cells[static_cast<size_t>(roff + rr) * (2 * h) + coff + cc] = b.at(rr, cc);
        };
        put(0, h, a);
        put(h, 0, ap);
        PdaArray next_a = [&] {
            auto c = cells;
            for (int i = 0; i < h; ++i) {
                c[static_cast<size_t>(i) * (2 * h) + i] = base;
                c[static_cast<size_t>(h + i) * (2 * h) + h + i] = base + 1;
            }
            return PdaArray(2 * h, 2 * h, std::move(c));
        }();
        PdaArray next_ap = [&] {
            auto c = cells;
            for (int i = 0; i < h; ++i) {
                c[static_cast<size_t>(i) * (2 * h) + i] = base + 1;
                c[static_cast<size_t>(h + i) * (2 * h) + h + i] = base;
            }
            return PdaArray(2 * h, 2 * h, std::move(c));
        }();
        a = std::move(next_a);
        ap = std::move(next_ap);
    }
    // Levels consume x..x+2r+1; the reference symbol sits just above.
    BlackburnSet set{{a, ap}, identity_pda(1 << r, x + 2 * r + 2),
                     (1 << r) - r - 1, 1LL << r};
    return set;
}

BlackburnSet expand_family(const BlackburnSet& in) {
    const int g = static_cast<int>(in.members.size());
    if (g < 1) throw Error(Errc::size_mismatch, "expand_family: empty family");
    const int n = in.members.front().rows();
    for (const auto& m : in.members)
        if (m.rows() != n || m.cols() != n)
            throw Error(Errc::size_mismatch, "expand_family: members must be equal squares");
    if (in.pstar.rows() != n || in.pstar.cols() != n)
        throw Error(Errc::size_mismatch, "expand_family: reference size mismatch");

    Symbol next = in.pstar.max_symbol();
    for (const auto& m : in.members) next = std::max(next, m.max_symbol());
    ++next;
    const PdaArray ref_norm = normalize_alphabet(in.pstar);
    const long long ref_width = static_cast<long long>(ref_norm.alphabet().size());
    auto ref_copy = [&](long long index) {
        return relabel_offset(ref_norm, next + index * ref_width);
    };

    BlackburnSet out{{}, PdaArray::all_star(1, 1), 0, std::nullopt};
    long long copy_index = 0;
    std::vector<PdaArray> offdiag;  // fixed across members, row-major
    for (int j = 0; j < g; ++j)
        for (int k = 0; k < g; ++k)
            if (j != k) offdiag.push_back(ref_copy(copy_index++));
    const PdaArray shared = ref_copy(copy_index);  // the diagonal copy of the new reference

    for (int i = 0; i < g; ++i) {
        std::vector<PdaArray> grid;
        size_t off = 0;
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k) {
                if (j == k)
                    grid.push_back(in.members[static_cast<size_t>(mod(j + 1 + i, g))]);
                else
                    grid.push_back(offdiag[off++]);
            }
        out.members.push_back(assemble(g, grid));
    }
    {
        std::vector<PdaArray> grid;
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k)
                grid.push_back(j == k ? shared : PdaArray::all_star(n, n));
        out.pstar = assemble(g, grid);
    }
    out.stars_per_column =
        in.stars_per_column + (g - 1) * in.pstar.star_count_in_column(0);
    const auto ref_reg = regularity(in.pstar);
    if (in.total_occurrences && ref_reg.uniform_gain &&
        *ref_reg.uniform_gain == *in.total_occurrences)
        out.total_occurrences = static_cast<long long>(g) * *in.total_occurrences;
    return out;
}

BlackburnSet pair_10x5() {
    const PdaArray a = parse_grid(
        "0 * * 1 6;"
        "2 1 * * 7;"
        "* 5 2 * 3;"
        "* 4 9 3 *;"
        "* * 0 5 4;"
        "* * 1 * 8;"
        "9 * * 7 *;"
        "3 8 * * *;"
        "4 * 6 * *;"
        "* 0 * 2 *");
    const PdaArray b = parse_grid(
        "* * * 1 6;"
        "2 * * * 7;"
        "* 5 * * 3;"
        "* 4 9 * *;"
        "* * 0 5 *;"
        "5 * 1 * 8;"
        "9 6 * 7 *;"
        "3 8 7 * *;"
        "4 * 6 8 *;"
        "* 0 * 2 9");
    std::vector<Symbol> cells(50, kStar);
    for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 5; ++l) cells[static_cast<size_t>(j * 5 + l) * 5 + l] = 10 + j;
    BlackburnSet set{{a, b}, PdaArray(10, 5, std::move(cells)), 5, 5};
    return set;
}

BlackburnSet pair_12x3() {
    // Two members: one dense 3x3 block of its own symbols plus, for the other
    // member's block symbols v = 3a+b, a pair of cells in band (b-a) mod 3
    // chosen so that every mirror lands off the reference's identity
    // diagonals. The placement is forced: v sits in rows {0,1,2}\{b} of its
    // band, columns {0,1,2}\{a}.
    auto member = [](Symbol dense_base, Symbol band_base) {
        std::vector<Symbol> cells(36, kStar);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) cells[static_cast<size_t>(a) * 3 + b] = dense_base + 3 * a + b;
        for (int m = 0; m < 9; ++m) {
            const int a = m / 3, b = m % 3;
            const int band = static_cast<int>(mod(b - a, 3));
            int x1 = -1, x2 = -1;
            for (int x = 0; x < 3; ++x)
                if (x != b) (x1 < 0 ? x1 : x2) = x;
            const int r1 = 3 * (1 + band) + x1;
            const int r2 = 3 * (1 + band) + x2;
            cells[static_cast<size_t>(r1) * 3 + mod(x2 - band, 3)] = band_base + m;
            cells[static_cast<size_t>(r2) * 3 + mod(x1 - band, 3)] = band_base + m;
        }
        return PdaArray(12, 3, std::move(cells));
    };
    std::vector<Symbol> cells(36, kStar);
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 3; ++l) cells[static_cast<size_t>(j * 3 + l) * 3 + l] = 18 + j;
    BlackburnSet set{{member(0, 9), member(9, 0)}, PdaArray(12, 3, std::move(cells)), 3, 3};
    return set;
}

}  // namespace pdalift
