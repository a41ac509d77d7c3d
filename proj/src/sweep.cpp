#include "pdalift/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <ostream>
#include <thread>
#include <tuple>

#include "pdalift/base_constructions.hpp"
#include "pdalift/chain.hpp"

namespace pdalift {

namespace {

using ParamKey = std::tuple<long long, long long, long long, long long, long long>;

ParamKey key_of(const PdaParams& p) {
    return {p.users, p.rows, p.stars, p.symbol_count, p.gain ? *p.gain : -1};
}

struct SweepState {
    PdaArray pda;
    PdaParams parameters;
    std::string chain;
    int steps = 0;
};

std::vector<long long> divisors(long long n) {
    std::vector<long long> d;
    for (long long i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

struct Candidate {
    std::string text;
    ChainStep step;
};

Candidate make_candidate(const std::string& name, std::vector<long long> args) {
    Candidate c;
    c.step.name = name;
    c.step.args = std::move(args);
    std::string t = name + "(";
    for (size_t i = 0; i < c.step.args.size(); ++i)
        t += (i ? "," : "") + std::to_string(c.step.args[i]);
    t += ")";
    c.text = std::move(t);
    return c;
}

// All steps whose user multiplier divides `remaining`, given the current
// parameters. t2 shifts beyond 1 give the same parameters as shift 1, so
// only shifts 0 and 1 are enumerated.
std::vector<Candidate> step_candidates(const PdaParams& p, long long remaining,
                                       const std::set<std::string>& families) {
    auto enabled = [&](const char* n) { return families.empty() || families.count(n); };
    std::vector<Candidate> out;
    const std::optional<long long> gain = p.gain;

    if (enabled("basic")) {
        for (long long n : divisors(remaining)) {
            if (n < 2) continue;
            for (long long z = 1; z < n; ++z)
                if (two_pda_supported(n, z))
                    out.push_back(make_candidate("basic", {n, z}));
            for (long long z = 0; z < n; ++z)
                out.push_back(make_candidate("basic", {n, z, 1}));
            out.push_back(make_candidate("basic", {n, n - 1, n}));
        }
    }
    if (!gain) return out;
    const long long g = *gain;

    if (enabled("c1") && g >= 2 && remaining % g == 0)
        out.push_back(make_candidate("c1", {g}));
    if (enabled("c2") && remaining % (2 * g) == 0)
        out.push_back(make_candidate("c2", {g}));
    if (g == 2) {
        for (long long n : divisors(remaining)) {
            if (n < 2) continue;
            if (enabled("t1")) out.push_back(make_candidate("t1", {n}));
            if (enabled("t2")) {
                out.push_back(make_candidate("t2", {n, 0}));
                out.push_back(make_candidate("t2", {n, 1}));
            }
        }
        if (enabled("lift2r"))
            for (int r = 1; (1LL << r) <= remaining; ++r)
                if (remaining % (1LL << r) == 0)
                    out.push_back(make_candidate("lift2r", {r}));
        if (enabled("pair10x5") && remaining % 5 == 0)
            out.push_back(make_candidate("pair10x5", {}));
        if (enabled("pair12x3") && remaining % 3 == 0)
            out.push_back(make_candidate("pair12x3", {}));
    }
    // Block-wise families need exactly `gain` members.
    for (long long m : divisors(remaining)) {
        if (m % 2 == 0) {
            const long long bg = m / 2;  // members are 2*bg wide
            if (bg >= 1 && bg % g == 0) {
                if (enabled("bw1")) out.push_back(make_candidate("bw1", {bg, g}));
                if (enabled("bw2") && bg % (g * g) == 0)
                    out.push_back(make_candidate("bw2", {bg, g}));
            }
        }
        if (m >= 2 && m % g == 0) {
            if (enabled("bw3")) out.push_back(make_candidate("bw3", {m, g}));
            if (enabled("tiling")) out.push_back(make_candidate("tiling", {m, g}));
        }
        // When g divides m the replicated family collapses to plain tiling.
        if (m >= 2 && m % g != 0 && enabled("tilingx"))
            out.push_back(make_candidate("tilingx", {m, g}));
    }
    if (enabled("bw4") && g % 2 == 0) {
        const long long n = g / 2;
        if (n >= 1 && remaining % (2 * n * n) == 0)
            out.push_back(make_candidate("bw4", {n}));
    }
    return out;
}

}  // namespace

BaselinePoint mn_baseline(long long users, long long t) {
    if (t < 0 || t > users) throw Error(Errc::bad_demand, "mn_baseline: t out of [0, K]");
    BaselinePoint p;
    p.memory_ratio = Rational::of(t, users);
    p.rate = Rational::of(users - t, 1 + t);
    unsigned long long exact = 1;
    bool fits = true;
    long double approx = 0.0L;
    for (long long i = 1; i <= t; ++i) {
        approx += std::log(static_cast<long double>(users - t + i)) -
                  std::log(static_cast<long double>(i));
        if (fits) {
            const unsigned __int128 next =
                static_cast<unsigned __int128>(exact) * static_cast<unsigned long long>(users - t + i) /
                static_cast<unsigned long long>(i);
            if (next > 0x7fffffffffffffffULL)
                fits = false;
            else
                exact = static_cast<unsigned long long>(next);
        }
    }
    if (fits) {
        p.exact_subpacketization = exact;
        p.subpacketization = static_cast<double>(exact);
    } else {
        p.subpacketization = static_cast<double>(std::exp(approx));
    }
    return p;
}

std::vector<TradeoffPoint> sweep(long long users, const SweepOptions& options) {
    if (users < 2) throw Error(Errc::bad_grid, "sweep: users must be at least 2");

    std::map<ParamKey, TradeoffPoint> points;
    std::map<ParamKey, int> visited;

    auto record = [&](const SweepState& st) {
        if (st.parameters.users != users) return;
        const ParamKey k = key_of(st.parameters);
        if (!points.count(k)) points[k] = TradeoffPoint{st.parameters, st.chain};
    };

    // Bases, 2-regular first so the canonical chains name shared points.
    std::vector<SweepState> level;
    auto push_base = [&](const std::string& text) {
        try {
            ChainResult r = run_chain(text);
            SweepState st{std::move(r.pda), r.parameters, text, 0};
            record(st);
            if (st.parameters.users < users) level.push_back(std::move(st));
        } catch (const Error&) {
        }
    };
    for (long long n : divisors(users)) {
        if (n < 2) continue;
        for (long long z = 1; z < n; ++z)
            if (two_pda_supported(n, z))
                push_base("2pda(" + std::to_string(n) + "," + std::to_string(z) + ")");
    }
    for (long long n : divisors(users)) {
        if (n < 2) continue;
        for (long long z = 0; z < n; ++z)
            push_base("1pda(" + std::to_string(n) + "," + std::to_string(z) + ")");
        push_base("i(" + std::to_string(n) + ")");
    }

    const unsigned threads =
        options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());

    for (int depth = 0; depth < options.step_budget && !level.empty(); ++depth) {
        // Expansion is pure per state; merging in state order keeps the
        // result independent of the thread count.
        std::vector<std::vector<SweepState>> expansions(level.size());
        std::vector<std::future<void>> futures;
        const size_t chunk = (level.size() + threads - 1) / threads;
        for (size_t begin = 0; begin < level.size(); begin += chunk) {
            const size_t end = std::min(level.size(), begin + chunk);
            futures.push_back(std::async(std::launch::async, [&, begin, end] {
                for (size_t i = begin; i < end; ++i) {
                    const SweepState& st = level[i];
                    const long long remaining = users / st.parameters.users;
                    std::vector<SweepState> local;
                    for (const auto& cand :
                         step_candidates(st.parameters, remaining, options.families)) {
                        try {
                            PdaArray lifted = apply_chain_step(st.pda, cand.step);
                            PdaParams p = params(lifted);
                            local.push_back(SweepState{std::move(lifted), std::move(p),
                                                       st.chain + " > " + cand.text,
                                                       st.steps + 1});
                        } catch (const Error&) {
                            // combination not applicable
                        }
                    }
                    expansions[i] = std::move(local);
                }
            }));
        }
        for (auto& f : futures) f.get();

        std::vector<SweepState> next_level;
        for (auto& group : expansions)
            for (auto& st : group) {
                record(st);
                if (st.parameters.users >= users) continue;
                const ParamKey k = key_of(st.parameters);
                const auto it = visited.find(k);
                if (it != visited.end() && it->second <= st.steps) continue;
                visited[k] = st.steps;
                next_level.push_back(std::move(st));
            }
        level = std::move(next_level);
    }

    std::vector<TradeoffPoint> out;
    out.reserve(points.size());
    for (auto& [k, p] : points) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), [](const TradeoffPoint& a, const TradeoffPoint& b) {
        if (a.parameters.memory_ratio != b.parameters.memory_ratio)
            return a.parameters.memory_ratio < b.parameters.memory_ratio;
        if (a.parameters.rate != b.parameters.rate) return a.parameters.rate < b.parameters.rate;
        return a.chain < b.chain;
    });

    std::map<long long, Rational> min_mem;
    for (const auto& p : out)
        if (p.parameters.gain) {
            const auto it = min_mem.find(*p.parameters.gain);
            if (it == min_mem.end() || p.parameters.memory_ratio < it->second)
                min_mem[*p.parameters.gain] = p.parameters.memory_ratio;
        }
    for (auto& p : out)
        if (p.parameters.gain && p.parameters.memory_ratio == min_mem.at(*p.parameters.gain))
            p.min_for_gain = true;
    return out;
}

void mark_hull(std::vector<TradeoffPoint>& points) {
    // Monotone chain over (memory, rate); input is sorted by memory.
    std::vector<size_t> hull;
    auto cross = [&](size_t o, size_t a, size_t b) {
        const double ox = points[o].parameters.memory_ratio.to_double();
        const double oy = points[o].parameters.rate.to_double();
        const double ax = points[a].parameters.memory_ratio.to_double();
        const double ay = points[a].parameters.rate.to_double();
        const double bx = points[b].parameters.memory_ratio.to_double();
        const double by = points[b].parameters.rate.to_double();
        return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
    };
    for (size_t i = 0; i < points.size(); ++i) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0)
            hull.pop_back();
        hull.push_back(i);
    }
    for (size_t i : hull) points[i].on_hull = true;
}

void write_csv(std::ostream& out, long long users, const std::vector<TradeoffPoint>& points,
               bool with_baseline, bool with_hull_column) {
    out << "K,f,Z,S,g,mem_num,mem_den,rate_num,rate_den,mem,rate,chain";
    if (with_hull_column) out << ",derived";
    out << "\n";
    auto row = [&](const PdaParams& p, const std::string& chain, bool derived) {
        out << p.users << ',' << p.rows << ',' << p.stars << ',' << p.symbol_count << ',';
        if (p.gain) out << *p.gain;
        out << ',' << p.memory_ratio.num << ',' << p.memory_ratio.den << ',' << p.rate.num
            << ',' << p.rate.den << ',' << p.memory_ratio.decimal() << ','
            << p.rate.decimal() << ',' << chain;
        if (with_hull_column) out << ',' << (derived ? "true" : "false");
        out << "\n";
    };
    for (const auto& p : points) row(p.parameters, p.chain, p.on_hull);
    if (with_baseline) {
        for (long long t = 0; t <= users; ++t) {
            const BaselinePoint b = mn_baseline(users, t);
            if (!b.exact_subpacketization) continue;  // too large to state exactly
            PdaParams p;
            p.users = users;
            p.memory_ratio = b.memory_ratio;
            p.rate = b.rate;
            const unsigned long long f = *b.exact_subpacketization;
            p.rows = static_cast<long long>(f);
            p.stars = static_cast<long long>(static_cast<unsigned __int128>(f) * t / users);
            p.symbol_count =
                t < users ? static_cast<long long>(static_cast<unsigned __int128>(f) *
                                                   (users - t) / (t + 1))
                          : 0;
            if (p.symbol_count > 0) p.gain = t + 1;
            row(p, "mn(" + std::to_string(t) + ")", false);
        }
    }
}

}  // namespace pdalift
