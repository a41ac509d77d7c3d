// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "../fixtures.hpp"
#include "pdalift/base_constructions.hpp"
#include "pdalift/blackburn.hpp"
#include "pdalift/caching_sim.hpp"
#include "pdalift/chain.hpp"
#include "pdalift/lifting.hpp"
#include "pdalift/randbc.hpp"
#include "pdalift/sweep.hpp"
#include "pdalift/validate.hpp"

using namespace pdalift;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

// Arrays accumulated by criteria 1-4 and replayed end-to-end by criterion 5.
std::vector<std::pair<std::string, PdaArray>> g_registry;
std::set<std::vector<Symbol>> g_registry_seen;

void remember(const std::string& origin, const PdaArray& p) {
    if (p.cols() > 64) return;
    if (!g_registry_seen.insert(p.cells()).second) return;
    g_registry.emplace_back(origin, p);
}

struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
};

void note(const std::string& s) { g_notes.push_back(s); }

bool expect(bool ok, const std::string& what, std::string& detail) {
    if (!ok && detail.empty()) detail = what;
    return ok;
}

// ---------------------------------------------------------------------------
// 1. Golden fixtures validate and match their declared parameters.
bool criterion_fixtures(std::string& detail) {
    bool ok = true;
    for (const auto& f : fixtures::golden_set()) {
        const auto p = parse_grid(f.grid);
        const auto rep = validate(p);
        ok &= expect(rep.valid, f.name + ": validator rejected the array", detail);
        if (!rep.valid) continue;
        const auto pr = params(p);
        ok &= expect(pr.matches(f.users, f.rows, f.stars, f.symbols) && pr.gain == f.gain,
                     f.name + ": parameters differ from the declaration", detail);
        remember("fixture " + f.name, p);
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Closed-form lifted parameters, exactly, across the small ranges.
bool criterion_formulas(std::string& detail) {
    bool ok = true;
    auto check_lift = [&](const std::string& what, const PdaArray& base,
                          const BlackburnSet& fam, long long K, long long f, long long Z,
                          long long S, long long g) {
        // g == 0 skips the gain check (references with once-only symbols
        // produce valid but irregular lifts).
        const auto lifted = regular_lift(base, fam);
        const auto p = params(lifted);
        const bool good = p.matches(K, f, Z, S) && (g == 0 || (p.gain && *p.gain == g));
        if (!good) {
            std::ostringstream d;
            d << what << ": got (" << p.users << "," << p.rows << "," << p.stars << ","
              << p.symbol_count << ")^" << (p.gain ? *p.gain : -1) << ", expected (" << K
              << "," << f << "," << Z << "," << S << ")^" << g;
            expect(false, d.str(), detail);
        }
        remember(what, lifted);
        return good;
    };

    for (long long g = 2; g <= 8; ++g)
        ok &= check_lift("rotation(" + std::to_string(g) + ")", identity_pda(g, 0),
                         rotation_family(g), g * g, g * g, g * g - 2 * g + 1, g * (2 * g - 1),
                         g);
    for (long long g = 1; g <= 8; ++g)
        ok &= check_lift("block_rotation(" + std::to_string(g) + ")", identity_pda(g, 0),
                         block_rotation_family(g), 2 * g * g, 2 * g * g,
                         2 * g * g - 3 * g + 2, g * (3 * g - 2), 2 * g);
    for (long long g = 2; g <= 8; ++g) {
        std::vector<Symbol> syms(static_cast<size_t>(g) * g);
        std::iota(syms.begin(), syms.end(), 0);
        ok &= check_lift("transpose(" + std::to_string(g) + ")", identity_pda(2, 0),
                         transpose_pair(dense_pda(g, syms)), 2 * g, 2 * g, 1,
                         2 * g * g - g, 2);
        for (int i : {0, 1})
            ok &= check_lift("shifted_transpose(" + std::to_string(g) + "," +
                                 std::to_string(i) + ")",
                             identity_pda(2, 0),
                             shifted_transpose_pair(dense_pda(g, syms), i), 2 * g, 2 * g,
                             i == 0 ? 1 : 2,
                             i == 0 ? 3 * g * g - 2 * g : 3 * g * g - 4 * g, 0);
    }
    for (long long g = 1; g <= 8; ++g)
        for (long long d = 1; d <= g; ++d) {
            if (g % d != 0) continue;
            const std::string suffix =
                "(" + std::to_string(g) + "," + std::to_string(d) + ")";
            ok &= check_lift("bw1" + suffix, identity_pda(d, 0), bw1_family(g, d), 2 * g * d,
                             2 * g * d, 2 * g * d - 3 * g + g / d + 1,
                             g * (3 * g - g / d - 1), 2 * d);
            if (g % (d * d) == 0)
                ok &= check_lift("bw2" + suffix, identity_pda(d, 0), bw2_family(g, d),
                                 2 * g * d, 2 * g * d,
                                 2 * g * d - 3 * g + g / d + 2 * d - d * d,
                                 g * (3 * g - g / d - 2 * d + d * d), 2 * d);
            if (g >= 2)
                ok &= check_lift("bw3" + suffix, identity_pda(d, 0), bw3_family(g, d), g * d,
                                 g * d, g * d + d - 2 * g + g / d,
                                 g * (2 * g - d - g / d) / 2, 2 * d);
            ok &= check_lift("tiling" + suffix, identity_pda(d, 0), tiling_family(g, d),
                             d * g, d * g, d * g - 2 * d + 1, d * (2 * d - 1), g);
        }
    for (long long n = 1; n <= 8; ++n)
        ok &= check_lift("bw4(" + std::to_string(n) + ")", identity_pda(2 * n, 0),
                         bw4_family(n), 4 * n * n * n, 4 * n * n * n,
                         4 * n * n * n - 8 * n * n + 7 * n - 2,
                         2 * n * n * (8 * n * n - 7 * n + 2), 2 * n);
    for (long long g = 1; g <= 8; ++g)
        for (long long b = 1; b <= 8; ++b) {
            if (g < 2 || b < 2) continue;
            const long long d = std::gcd(g, b);
            ok &= check_lift("tilingx(" + std::to_string(g) + "," + std::to_string(b) + ")",
                             identity_pda(b, 0), replicated_tiling_family(g, b), b * g,
                             b * g, b * g - b - d + 1, b * (b + d - 1), g);
        }
    for (int r = 1; r <= 8; ++r) {
        const long long side = 1LL << (r + 1);
        ok &= check_lift("power_pair(" + std::to_string(r) + ")", identity_pda(2, 9999),
                         power_of_two_pair(r, 0), side, side, side - r - 2, 2LL * r + 4,
                         1LL << r);
    }
    // 2^r lifting of 2-regular bases.
    for (int n : {2, 3, 4, 5, 6, 8})
        for (int r = 1; r <= 5; ++r) {
            if ((1LL << r) * n > 300) continue;
            const auto base = two_pda(n, 1);
            const auto bp = params(base);
            const long long pw = 1LL << r;
            const auto lifted = lift_2r(base, r);
            const auto p2 = params(lifted);
            const bool good = p2.users == pw * bp.users && p2.rows == pw * bp.rows &&
                              p2.stars == (pw - r - 1) * bp.rows + r * bp.stars &&
                              p2.symbol_count ==
                                  (2 + 2 * r) * bp.symbol_count + bp.users * bp.stars &&
                              p2.gain && *p2.gain == pw;
            ok &= expect(good, "lift2r(n=" + std::to_string(n) + ",r=" + std::to_string(r) +
                                   "): closed form mismatch",
                         detail);
            remember("power-of-two lift", lifted);
        }
    // Nested tower traces.
    for (int q = 2; q <= 8; ++q)
        for (int r = 1; r <= 3; ++r) {
            if ((1LL << (r * (r + 1) / 2 - 1)) * q > 300) continue;
            const auto res = nested_power_lift(q, r);
            const auto p = params(res.pda);
            const bool good = p.stars == res.trace.back().first &&
                              p.symbol_count == res.trace.back().second && p.gain &&
                              *p.gain == (1LL << r);
            ok &= expect(good, "nested(q=" + std::to_string(q) + ",r=" + std::to_string(r) +
                                   "): trace mismatch",
                         detail);
            remember("nested tower", res.pda);
        }
    // Basic lifting closed form over mixed bases and constituents.
    {
        const std::vector<PdaArray> bases = {dense_pda(3, {0, 1, 2, 3, 4, 5, 6, 7, 8}),
                                             diag_two_pda(4), two_pda(5, 3),
                                             identity_pda(4, 0)};
        const std::vector<PdaArray> constituents = {identity_pda(3, 0), two_pda(4, 1),
                                                    two_pda(6, 3)};
        for (const auto& base : bases)
            for (const auto& c : constituents) {
                const auto bp = params(base);
                const auto cp = params(c);
                const auto lifted = regular_basic_lift(base, c);
                const auto p = params(lifted);
                const bool good =
                    p.users == bp.users * cp.users && p.rows == bp.rows * cp.rows &&
                    p.stars == bp.stars * cp.rows + (bp.rows - bp.stars) * cp.stars &&
                    p.symbol_count == bp.symbol_count * cp.symbol_count && p.gain &&
                    *p.gain == *bp.gain * *cp.gain;
                ok &= expect(good, "basic lifting closed form mismatch", detail);
                remember("basic lift", lifted);
            }
    }
    // Recursive basic lifting star recursion, three stages or fewer.
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<RecursiveStage> stages;
            const int len = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < len; ++i) {
                RecursiveStage st;
                st.size = 2 + static_cast<int>(rng() % 7);
                st.gain = 1 + static_cast<int>(rng() % 2);
                if (st.gain == 1)
                    st.stars = static_cast<int>(rng() % st.size);
                else {
                    st.stars = 1 + static_cast<int>(rng() % (st.size - 1));
                    if (st.size % 2 == 1 && st.stars % 2 == 0) st.stars -= 1;
                    if (st.stars < 1) st.stars = 1;
                }
                stages.push_back(st);
            }
            const auto res = recursive_basic_lift(stages);
            ok &= expect(params(res.pda).stars == res.star_trace.back(),
                         "recursive basic lifting trace mismatch", detail);
            remember("recursive basic lift", res.pda);
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 3. The table of construction chains reaches every declared endpoint.
const std::vector<std::string>& table_chains() {
    static const std::vector<std::string> chains = {
        "2pda(4,1) > bw3(6,2) @(24,24)_7^4",
        "2pda(3,1) > lift2r(3) @(24,24)_15^8",
        "2pda(3,1) > c2(2) @(12,12)_5^4 > basic(5,4,5) @(60,60)_53^20",
        "2pda(8,1) > bw2(4,2) @(64,64)_12^4",
        "2pda(2,1) > c2(2) @(8,8)_4^4 > c2(4) @(64,64)_32^8",
        "2pda(5,1) > bw3(6,2) @(30,30)_8^4 > c2(4) @(240,240)_78^8",
        "2pda(4,1) > pair12x3() @(12,48)_17^3 > basic(4,1) @(48,192)_99^6 > "
        "basic(5,1) @(240,960)_588^12",
        "2pda(5,1) > bw3(50,2) @(250,250)_30^4",
        "2pda(2,1) > pair10x5() @(10,20)_13^5 > tiling(25,5) @(250,500)_452^25",
        "2pda(4,1) > bw2(4,2) @(32,32)_8^4 > c2(4) @(256,256)_80^8",
        "2pda(2,1) > lift2r(7) @(256,256)_247^128",
    };
    return chains;
}

bool criterion_chains(std::string& detail) {
    bool ok = true;
    for (const auto& text : table_chains()) {
        try {
            const auto r = run_chain(text);
            remember("chain " + text, r.pda);
        } catch (const Error& e) {
            ok &= expect(false, text + " failed: " + e.what(), detail);
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Desk-scale figure reproduction via the sweep.
bool criterion_sweep(std::string& detail) {
    bool ok = true;
    struct Want {
        long long mem_num, mem_den, rate_num, rate_den;
    };
    const auto contains = [&](const std::vector<TradeoffPoint>& points, const Want& w) {
        for (const auto& p : points)
            if (p.parameters.memory_ratio == Rational::of(w.mem_num, w.mem_den) &&
                p.parameters.rate == Rational::of(w.rate_num, w.rate_den))
                return true;
        return false;
    };
    const auto p64 = sweep(64);
    for (const Want& w : std::vector<Want>{{1, 64, 63, 2},
                                           {12, 64, 13, 1},
                                           {32, 64, 4, 1},
                                           {48, 64, 1, 1},
                                           {57, 64, 7, 32},
                                           {63, 64, 1, 64}}) {
        std::ostringstream d;
        d << "64-user sweep misses (" << w.mem_num << "/" << w.mem_den << ", " << w.rate_num
          << "/" << w.rate_den << ")";
        ok &= expect(contains(p64, w), d.str(), detail);
    }
    const auto p24 = sweep(24);
    for (const Want& w : std::vector<Want>{{7, 24, 17, 4}, {15, 24, 9, 8}}) {
        std::ostringstream d;
        d << "24-user sweep misses (" << w.mem_num << "/" << w.mem_den << ", " << w.rate_num
          << "/" << w.rate_den << ")";
        ok &= expect(contains(p24, w), d.str(), detail);
    }
    note("sweep(64) points: " + std::to_string(p64.size()) +
         ", sweep(24) points: " + std::to_string(p24.size()));
    for (const auto& p : p64) remember("sweep64 " + p.chain, run_chain(p.chain).pda);
    for (const auto& p : p24) remember("sweep24 " + p.chain, run_chain(p.chain).pda);
    return ok;
}

// ---------------------------------------------------------------------------
// 5. End-to-end placement/delivery/decoding over every collected array.
bool criterion_roundtrip(std::string& detail) {
    bool ok = true;
    int verified = 0;
    for (const auto& [origin, p] : g_registry) {
        if (p.cols() > 64) continue;
        const auto pr = params(p);
        const auto rep = round_trip_verify(p, 3, 12LL * p.rows(), 20, 0xabcdefULL);
        const bool good = rep.decoded_ok && rep.measured_rate == pr.rate &&
                          rep.measured_memory_ratio == pr.memory_ratio;
        if (!good)
            ok &= expect(false, origin + ": round trip failed (" + rep.failure + ")", detail);
        ++verified;
    }
    note("round-trip verified arrays: " + std::to_string(verified));
    return ok && expect(verified > 250, "registry unexpectedly small", detail);
}

// ---------------------------------------------------------------------------
// 6. Randomized construction reproduction.
bool criterion_randbc(std::string& detail) {
    bool ok = true;
    struct Row {
        long long b, r, e;
        std::uint64_t seed;
    };
    // One demonstrating seed per table row (eta = alpha = 1, r <= 12), each
    // succeeding within the 100-attempt budget. The 50-member row is run
    // faithfully and expected to fail: under the fixed member rotation it
    // decomposes into ten independent five-member windows, putting its
    // per-attempt success probability near 1e-7.
    const std::vector<Row> rows = {
        {2, 3, 2, 1},  {2, 4, 1, 1},  {2, 5, 3, 1},  {2, 6, 4, 1},  {2, 8, 5, 1},
        {2, 10, 8, 1}, {2, 12, 9, 1}, {3, 4, 2, 1},  {3, 5, 3, 1},  {3, 8, 6, 1},
        {3, 10, 8, 1}, {5, 3, 0, 11}, {5, 4, 0, 24}, {5, 5, 0, 24}, {5, 6, 3, 2},
        {5, 10, 6, 6}, {5, 12, 9, 1}, {10, 3, 1, 1}, {10, 5, 1, 1}, {10, 6, 1, 1},
        {20, 3, 2, 1}, {50, 5, 1, 1},
    };
    int rows_passed = 0;
    for (const auto& row : rows) {
        RandBcSpec spec;
        spec.members = row.b;
        spec.occurrences = row.r;
        spec.stars = row.e;
        spec.seed = row.seed;
        spec.max_attempts = 100;
        const auto out = rand_bc(spec);
        std::ostringstream what;
        what << "randbc (r=" << row.r << ",e=" << row.e << ") b=" << row.b;
        if (!out.success) {
            ok &= expect(false, what.str() + ": no success within 100 attempts", detail);
            continue;
        }
        ++rows_passed;
        bool good = blackburn_set_check(out.member_arrays, out.pstar).compatible;
        std::map<Symbol, long long> totals;
        for (const auto& m : out.member_arrays) {
            for (int c = 0; c < m.cols(); ++c)
                good &= m.star_count_in_column(c) == spec.stars;
            for (const auto& [s, cells] : occurrences(m))
                totals[s] += static_cast<long long>(cells.size());
        }
        for (const auto& [s, n] : totals) good &= n == spec.occurrences;
        const auto lifted =
            regular_lift(identity_pda(static_cast<int>(spec.members), 0),
                         outcome_family(out, spec));
        const auto lp = params(lifted);
        good &= lp.gain && *lp.gain == spec.occurrences;
        ok &= expect(good, what.str() + ": outcome fails the family oracle", detail);
    }
    note("randomized rows passing their 100-attempt budget: " +
         std::to_string(rows_passed) + " of " + std::to_string(rows.size()));
    // Randomized chains with declared intermediates and exact final ratios.
    try {
        const auto r250 = run_chain(
            "2pda(2,1) > randbc(2,5,3,1,1,1,100) @(10,10)_7^5 > "
            "randbc(5,25,22,1,1,1,100) @(250,250)_234^25");
        ok &= expect(r250.parameters.memory_ratio == Rational::of(234, 250) &&
                         r250.parameters.rate == Rational::of(16, 25),
                     "randomized 250-user chain ratios differ", detail);
        const double mem = r250.parameters.memory_ratio.to_double();
        const double rate = r250.parameters.rate.to_double();
        ok &= expect(mem == 0.936 && rate == 0.64,
                     "randomized 250-user chain decimal ratios differ", detail);
    } catch (const Error& e) {
        ok &= expect(false, std::string("randomized 250-user chain failed: ") + e.what(),
                     detail);
    }
    try {
        const auto r60 = run_chain("2pda(5,1) > randbc(2,12,9,1,1,1,100) @(60,60)_47^12");
        ok &= expect(r60.parameters.gain && *r60.parameters.gain == 12,
                     "randomized 60-user chain gain differs", detail);
    } catch (const Error& e) {
        ok &= expect(false, std::string("randomized 60-user chain failed: ") + e.what(),
                     detail);
    }
    try {
        const auto r256 = run_chain("2pda(64,2) > randbc(2,4,1,1,1,1,100) @(256,256)_66^4");
        ok &= expect(r256.parameters.memory_ratio == Rational::of(66, 256) &&
                         r256.parameters.rate == Rational::of(95, 2),
                     "randomized 256-user chain ratios differ", detail);
    } catch (const Error& e) {
        ok &= expect(false, std::string("randomized 256-user chain failed: ") + e.what(),
                     detail);
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Oracle equivalence and mutation testing.
bool criterion_oracles(std::string& detail) {
    bool ok = true;
    std::mt19937_64 rng(0xfeedULL);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        auto random_array = [&] {
            std::vector<Symbol> cells(static_cast<size_t>(n) * n);
            for (auto& c : cells)
                c = (rng() % 100 < 45) ? kStar : static_cast<Symbol>(rng() % 7);
            return PdaArray(n, n, std::move(cells));
        };
        const auto a = random_array();
        const auto b = random_array();
        if (diagonal_compatible(a, b) !=
            blackburn_compatible(a, b, identity_pda(n, 10000)).compatible) {
            ok &= expect(false, "diagonal test disagrees with identity-reference test",
                         detail);
            break;
        }
    }
    // 100 single-cell mirror-violating mutations: all caught, all break
    // decoding.
    int made = 0;
    std::vector<PdaArray> pool;
    pool.push_back(two_pda(4, 1));
    pool.push_back(two_pda(6, 3));
    pool.push_back(two_pda(9, 5));
    pool.push_back(regular_lift(identity_pda(2, 0), block_rotation_family(2)));
    pool.push_back(fixtures::grid("basic_lift_gain4"));
    while (made < 100) {
        const auto& base = pool[rng() % pool.size()];
        const auto occ = occurrences(base);
        auto it = occ.begin();
        std::advance(it, rng() % occ.size());
        const auto [j1, k1] = it->second[rng() % it->second.size()];
        std::vector<std::pair<int, int>> targets;
        for (int j2 = 0; j2 < base.rows(); ++j2)
            for (int k2 = 0; k2 < base.cols(); ++k2)
                if (j2 != j1 && k2 != k1 &&
                    (!base.is_star(j1, k2) || !base.is_star(j2, k1)))
                    targets.emplace_back(j2, k2);
        if (targets.empty()) continue;
        const auto [j2, k2] = targets[rng() % targets.size()];
        auto cells = base.cells();
        cells[static_cast<size_t>(j2) * base.cols() + k2] = it->first;
        const PdaArray mutated(base.rows(), base.cols(), std::move(cells));
        ok &= expect(!validate(mutated).valid, "mutation escaped the validator", detail);
        const auto rep = round_trip_verify(mutated, 3, 12LL * mutated.rows(), 6, rng());
        ok &= expect(!rep.decoded_ok, "mutation decoded successfully", detail);
        ++made;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Parser round trips and malformed inputs.
bool criterion_parser(std::string& detail) {
    bool ok = true;
    std::vector<std::string> chains = table_chains();
    chains.push_back(
        "2pda(2,1) > randbc(2,5,3,1,1,1,100) @(10,10)_7^5 > "
        "randbc(5,25,22,1,1,1,100) @(250,250)_234^25");
    chains.push_back("2pda(64,2) > randbc(2,4,1,1,1,1,100) @(256,256)_66^4");
    chains.push_back("2pda(5,1) > randbc(2,12,9,1,1,1,100) @(60,60)_47^12");
    for (const auto& text : chains) {
        const auto parsed = parse_chain(text);
        ok &= expect(parse_chain(render_chain(parsed)) == parsed,
                     "round trip failed for: " + text, detail);
    }
    struct Bad {
        const char* text;
        long offset;
    };
    const Bad bad[] = {
        {"", 0},
        {"2pda", 4},
        {"2pda(", 5},
        {"2pda(4", 6},
        {"2pda(4,", 7},
        {"2pda(4,1", 8},
        {"2pda(4,1) >", 11},
        {"2pda(4,1) > 99(2)", 12},
        {"2pda(4,1) bw2(4,2)", 10},
        {"2pda(4,1) > bw2(4 2)", 18},
        {"2pda(4,1) > bw2(4,2) @", 22},
        {"2pda(4,1) > bw2(4,2) @(64", 25},
        {"2pda(4,1) > bw2(4,2) @(64,64)", 29},
        {"2pda(4,1) > bw2(4,2) @(64,64)_12", 32},
        {"2pda(4,1) > bw2(4,2) @(64,64)_12^", 33},
        {"nope(4,1)", 0},
        {"2pda(4,1) > warp(3)", 12},
        {"2pda(4,1,7)", 0},
        {"2pda(4,1) > bw2(4)", 12},
        {"2pda(4,1) > lift2r(2,3)", 12},
    };
    for (const auto& c : bad) {
        bool threw = false;
        try {
            parse_chain(c.text);
        } catch (const Error& e) {
            threw = true;
            if (e.offset != c.offset) {
                std::ostringstream d;
                d << "wrong offset for '" << c.text << "': got " << e.offset << ", expected "
                  << c.offset;
                ok &= expect(false, d.str(), detail);
            }
        }
        ok &= expect(threw, std::string("no error for '") + c.text + "'", detail);
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 validator golden set", criterion_fixtures},
        {"2 lifted-parameter identities", criterion_formulas},
        {"3 construction-chain table", criterion_chains},
        {"4 figure points at desk scale", criterion_sweep},
        {"5 end-to-end coded caching", criterion_roundtrip},
        {"6 randomized construction", criterion_randbc},
        {"7 oracle equivalence and mutation", criterion_oracles},
        {"8 chain parser", criterion_parser},
    };
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("%s criterion %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", c.name,
                    static_cast<long long>(ms), detail.empty() ? "" : " -- ",
                    detail.c_str());
        if (!ok) ++g_failures;
    }
    for (const auto& n : g_notes) std::printf("note: %s\n", n.c_str());
    return g_failures;
}
