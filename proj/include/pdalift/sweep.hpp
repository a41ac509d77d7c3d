#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdalift/validate.hpp"

namespace pdalift {

struct TradeoffPoint {
    PdaParams parameters;
    std::string chain;
    bool min_for_gain = false;  // least memory ratio among points of this gain
    bool on_hull = false;       // vertex of the lower convex hull
};

struct SweepOptions {
    int step_budget = 4;  // lifting steps after the base
    // Enabled step families; empty means all deterministic families.
    std::set<std::string> families;
    unsigned threads = 0;  // 0: hardware concurrency
};

// Enumerates construction chains over the divisor structure of `users`,
// executes and validates each, and returns the deduplicated points sorted by
// memory ratio then rate. Every point comes from a constructed array.
std::vector<TradeoffPoint> sweep(long long users, const SweepOptions& options = {});

// Marks the lower-convex-hull vertices of the (memory, rate) cloud.
void mark_hull(std::vector<TradeoffPoint>& points);

struct BaselinePoint {
    Rational memory_ratio;
    Rational rate;
    double subpacketization = 0.0;
    std::optional<unsigned long long> exact_subpacketization;
};

// The binomial-coefficient caching scheme at cache parameter t in [0, K]:
// memory t/K, rate (K-t)/(1+t), subpacketization C(K, t).
BaselinePoint mn_baseline(long long users, long long t);

// CSV schema: K,f,Z,S,g,mem_num,mem_den,rate_num,rate_den,mem,rate,chain
// (a trailing `derived` column is appended when with_hull_column is set).
void write_csv(std::ostream& out, long long users, const std::vector<TradeoffPoint>& points,
               bool with_baseline = false, bool with_hull_column = false);

}  // namespace pdalift
