#pragma once

#include <map>
#include <vector>

#include "pdalift/blackburn.hpp"
#include "pdalift/pda.hpp"
#include "pdalift/validate.hpp"

namespace pdalift {

// Replace every occurrence of base symbol s by constituents.at(s) and every
// star by an all-star block. Constituents must share dimensions and
// per-column star count and have pairwise disjoint alphabets. Result is a
// (K*m, f*n, Z*n + (f-Z)*e, union of alphabets) array.
PdaArray basic_lift(const PdaArray& base, const std::map<Symbol, PdaArray>& constituents);

// basic_lift with symbol-disjoint copies of one regular constituent.
PdaArray regular_basic_lift(const PdaArray& base, const PdaArray& constituent);

// A recursive-basic-lift stage: size x size constituent of the given gain
// (1 or 2) with `stars` per column.
struct RecursiveStage {
    int size = 0;
    int gain = 2;
    int stars = 1;
};

struct RecursiveLiftResult {
    PdaArray pda;
    std::vector<long long> star_trace;  // stars per column after each stage
};

RecursiveLiftResult recursive_basic_lift(const std::vector<RecursiveStage>& stages);

// The t-th occurrence (row-major) of base symbol s is replaced by
// constituents.at(s)[t]; stars become fresh symbol-disjoint copies of the
// reference. Each symbol's constituent list must pass blackburn_set_check
// against the reference; lists for distinct symbols must be symbol-disjoint.
PdaArray general_lift(const PdaArray& base,
                      const std::map<Symbol, std::vector<PdaArray>>& constituents,
                      const PdaArray& reference);

// general_lift driven by one compatible family: every base symbol gets its
// own symbol-disjoint copy of the family, occurrence t using member t. The
// base must be regular with gain equal to the member count.
PdaArray regular_lift(const PdaArray& base, const BlackburnSet& family);

// Lift a 2-regular base with the power-of-two pair; result is 2^r-regular
// (2^r K, 2^r f, (2^r - r - 1) f + r Z, (2 + 2r)|S| + K Z).
PdaArray lift_2r(const PdaArray& base, int r);

struct NestedLiftResult {
    PdaArray pda;
    // (stars, symbols) after each level, level 1 = the base.
    std::vector<std::pair<long long, long long>> trace;
};

// Tower of block-rotation lifts over a 2-regular (q,q,1,.) base: level i
// multiplies the side by 2^i and the gain by 2, ending 2^r-regular on
// n = 2^{r(r+1)/2 - 1} q columns.
NestedLiftResult nested_power_lift(int q, int r);

}  // namespace pdalift
