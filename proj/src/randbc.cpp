#include "pdalift/randbc.hpp"

#include <algorithm>
#include <random>

namespace pdalift {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Grid {
    int rows, cols;
    std::vector<Symbol> cells;
    Symbol at(int r, int c) const { return cells[static_cast<size_t>(r) * cols + c]; }
    void set(int r, int c, Symbol v) { cells[static_cast<size_t>(r) * cols + c] = v; }
};

struct Search {
    const RandBcSpec& spec;
    int rows, cols, r;
    std::vector<Grid> members;
    std::vector<std::vector<int>> col_fill;            // integers per column
    std::vector<std::vector<std::pair<int, int>>> v_occ;  // current symbol's cells

    explicit Search(const RandBcSpec& s)
        : spec(s),
          rows(static_cast<int>(s.member_rows())),
          cols(static_cast<int>(s.member_cols())),
          r(static_cast<int>(s.occurrences)) {
        members.assign(static_cast<size_t>(s.members),
                       Grid{rows, cols,
                            std::vector<Symbol>(static_cast<size_t>(rows) * cols, kStar)});
        col_fill.assign(static_cast<size_t>(s.members), std::vector<int>(cols, 0));
        v_occ.assign(static_cast<size_t>(s.members), {});
    }

    // Reference star pattern: an integer sits exactly where row == col mod r.
    bool ref_star(int row, int col) const { return row % r != col % r; }

    // Placement legality for the current symbol (whose occurrences sit in
    // v_occ): free cell, column star budget, the member's own Blackburn
    // property, and reference mirrors against the other members.
    bool check(int i, int x, int y) const {
        const Grid& g = members[static_cast<size_t>(i)];
        if (g.at(x, y) != kStar) return false;
        if (col_fill[static_cast<size_t>(i)][y] >= rows - spec.stars) return false;
        // Column-y symbols, for the mirror-of-existing-pair test.
        for (int y2 = 0; y2 < cols; ++y2) {
            const Symbol u = g.at(x, y2);
            if (y2 == y || u == kStar) continue;
            for (int x2 = 0; x2 < rows; ++x2)
                if (x2 != x && g.at(x2, y) == u) return false;
        }
        for (const auto& [x2, y2] : v_occ[static_cast<size_t>(i)]) {
            if (x2 == x || y2 == y) return false;
            if (g.at(x, y2) != kStar || g.at(x2, y) != kStar) return false;
        }
        for (size_t j = 0; j < members.size(); ++j) {
            if (static_cast<int>(j) == i) continue;
            for (const auto& [x2, y2] : v_occ[j])
                if (!ref_star(x, y2) || !ref_star(x2, y)) return false;
        }
        return true;
    }

    std::vector<std::pair<int, int>> free_cells(int i) const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < rows; ++x)
            for (int y = 0; y < cols; ++y)
                if (check(i, x, y)) out.emplace_back(x, y);
        return out;
    }

    // Per-member digest of a free set, keyed by the mod-r classes the
    // reference kills.
    struct FreeDigest {
        std::vector<int> row_free;                // per row
        std::vector<int> col_free;                // per column
        std::vector<std::vector<int>> row_by_colmod;  // rows x r
        std::vector<std::vector<int>> col_by_rowmod;  // cols x r
    };

    FreeDigest digest(const std::vector<std::pair<int, int>>& free) const {
        FreeDigest d;
        d.row_free.assign(rows, 0);
        d.col_free.assign(cols, 0);
        d.row_by_colmod.assign(rows, std::vector<int>(r, 0));
        d.col_by_rowmod.assign(cols, std::vector<int>(r, 0));
        for (const auto& [x, y] : free) {
            ++d.row_free[x];
            ++d.col_free[y];
            ++d.row_by_colmod[x][y % r];
            ++d.col_by_rowmod[y][x % r];
        }
        return d;
    }

    // PENALTY(x, y) = N_r + N_c + w_r + w_c. N_r (N_c) counts rows (columns)
    // holding at least one cell that was free for v and is forbidden once v
    // lands at (x, y): the reference forbids the whole row class
    // row == y mod r and column class col == x mod r. Only members still
    // scheduled to receive v are counted; a cell in a member the round-robin
    // has finished with for v is not a wasted placement option.
    long long penalty(int i, int x, int y, const std::vector<FreeDigest>& digests,
                      const std::vector<char>& pending) const {
        long long w_r = 0, w_c = 0;
        const Grid& g = members[static_cast<size_t>(i)];
        for (int y2 = 0; y2 < cols; ++y2)
            if (g.at(x, y2) != kStar) ++w_r;
        for (int x2 = 0; x2 < rows; ++x2)
            if (g.at(x2, y) != kStar) ++w_c;
        long long n_r = 0, n_c = 0;
        for (size_t j = 0; j < members.size(); ++j) {
            if (static_cast<int>(j) == i || !pending[j]) continue;
            const FreeDigest& d = digests[j];
            for (int x2 = 0; x2 < rows; ++x2)
                if ((x2 % r == y % r && d.row_free[x2] > 0) || d.row_by_colmod[x2][x % r] > 0)
                    ++n_r;
            for (int y2 = 0; y2 < cols; ++y2)
                if ((y2 % r == x % r && d.col_free[y2] > 0) || d.col_by_rowmod[y2][y % r] > 0)
                    ++n_c;
        }
        return n_r + n_c + w_r + w_c;
    }
};

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, int attempt) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
}

RandBcOutcome rand_bc(const RandBcSpec& spec, const PlacementObserver& observer) {
    if (spec.members < 1 || spec.occurrences < 1 || spec.block_cols < 1 ||
        spec.block_rows < 1 || spec.stars < 0 || spec.stars >= spec.member_rows())
        throw Error(Errc::bad_grid, "rand_bc: need positive sizes and e < eta*r");

    RandBcOutcome out;
    const long long s = spec.symbol_budget();
    for (int attempt = 0; attempt < std::max(1, spec.max_attempts); ++attempt) {
        const std::uint64_t attempt_seed = derive_seed(spec.seed, attempt);
        std::mt19937_64 rng(attempt_seed);
        Search search(spec);
        int i = 0;
        bool failed = false;
        for (Symbol v = 1; v <= s && !failed; ++v) {
            for (auto& occ : search.v_occ) occ.clear();
            for (int round = 0; round < search.r; ++round) {
                std::vector<char> pending(static_cast<size_t>(spec.members), 0);
                for (int k = 1; k <= search.r - 1 - round; ++k)
                    pending[static_cast<size_t>((i + k) % spec.members)] = 1;
                std::vector<Search::FreeDigest> digests(static_cast<size_t>(spec.members));
                for (size_t j = 0; j < digests.size(); ++j)
                    if (static_cast<int>(j) != i && pending[j])
                        digests[j] = search.digest(search.free_cells(static_cast<int>(j)));
                const auto free = search.free_cells(i);
                if (free.empty()) {
                    out.failed_symbol = v;
                    failed = true;
                    break;
                }
                std::vector<std::tuple<int, int, long long>> scored;
                long long best = -1;
                for (const auto& [x, y] : free) {
                    const long long pen = search.penalty(i, x, y, digests, pending);
                    scored.emplace_back(x, y, pen);
                    if (best < 0 || pen < best) best = pen;
                }
                std::vector<size_t> argmin;
                for (size_t t = 0; t < scored.size(); ++t)
                    if (std::get<2>(scored[t]) == best) argmin.push_back(t);
                const size_t pick = argmin[rng() % argmin.size()];
                const int x = std::get<0>(scored[pick]);
                const int y = std::get<1>(scored[pick]);
                if (observer) {
                    std::vector<PdaArray> snapshot;
                    for (const auto& g : search.members)
                        snapshot.emplace_back(g.rows, g.cols, g.cells);
                    observer(snapshot, v, i, scored, {x, y});
                }
                search.members[static_cast<size_t>(i)].set(x, y, v);
                search.v_occ[static_cast<size_t>(i)].emplace_back(x, y);
                ++search.col_fill[static_cast<size_t>(i)][y];
                i = (i + 1) % static_cast<int>(spec.members);
            }
        }
        out.attempts_used = attempt + 1;
        out.seed_used = attempt_seed;
        if (!failed) {
            out.success = true;
            out.member_arrays.clear();
            for (const auto& g : search.members)
                out.member_arrays.emplace_back(g.rows, g.cols, g.cells);
            // eta x alpha identity blocks with fresh symbols above 1..s.
            std::vector<Symbol> cells(static_cast<size_t>(search.rows) * search.cols, kStar);
            Symbol t = s + 1;
            for (long long br = 0; br < spec.block_rows; ++br)
                for (long long bc = 0; bc < spec.block_cols; ++bc) {
                    for (int l = 0; l < search.r; ++l)
                        cells[static_cast<size_t>(br * search.r + l) * search.cols +
                              bc * search.r + l] = t;
                    ++t;
                }
            out.pstar = PdaArray(search.rows, search.cols, std::move(cells));
            return out;
        }
    }
    return out;
}

BlackburnSet outcome_family(const RandBcOutcome& outcome, const RandBcSpec& spec) {
    if (!outcome.success)
        throw Error(Errc::exhausted_attempts, "outcome_family: search failed");
    return BlackburnSet{outcome.member_arrays, outcome.pstar,
                        static_cast<int>(spec.stars), spec.occurrences};
}

}  // namespace pdalift
