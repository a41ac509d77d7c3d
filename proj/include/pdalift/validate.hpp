#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pdalift/pda.hpp"

namespace pdalift {

// The validity oracle: C1 (uniform star count per column) and C3 (equal
// integers in two distinct cells force stars at the mirrored cells). C2 is
// structural since the alphabet is defined as the symbols present.
struct ValidationReport {
    enum class Kind { C1, C3 };
    struct Violation {
        Kind kind;
        std::vector<std::pair<int, int>> cells;
        std::string detail;
    };
    bool valid = true;
    int stars_per_column = 0;  // column 0's count; meaningful when valid
    std::vector<Violation> violations;
};

ValidationReport validate(const PdaArray& p);

struct PdaParams {
    long long users = 0;         // K
    long long rows = 0;          // f
    long long stars = 0;         // Z
    long long symbol_count = 0;  // |S|
    std::optional<long long> gain;  // g, present iff every symbol occurs g times
    Rational memory_ratio;       // Z/f
    Rational rate;               // |S|/f

    bool matches(long long k, long long f, long long z, long long s) const {
        return users == k && rows == f && stars == z && symbol_count == s;
    }
};

// Throws Error(not_a_pda) when validate(p) fails.
PdaParams params(const PdaArray& p);

struct RegularityReport {
    std::map<Symbol, long long> counts;
    std::optional<long long> uniform_gain;
};

RegularityReport regularity(const PdaArray& p);

struct CompatibilityWitness {
    bool compatible = true;
    Symbol symbol = kStar;
    std::pair<int, int> cell_a{-1, -1};  // in the first array
    std::pair<int, int> cell_b{-1, -1};  // in the second array
    std::pair<int, int> mirrored{-1, -1};  // offending cell of the reference
    std::string detail;
};

// Shared symbol at (i1,j1)/(i2,j2) requires reference stars at (i1,j2) and
// (i2,j1). The two arrays are treated as distinct, so a shared symbol at the
// same position is checked too. Symmetric in (a, b).
CompatibilityWitness blackburn_compatible(const PdaArray& a, const PdaArray& b,
                                          const PdaArray& reference);

// A family is accepted when every member is itself a valid PDA (the (i,i)
// self-consistency required by the lifting hypotheses) and every unordered
// pair of distinct members is Blackburn-compatible w.r.t. the reference.
CompatibilityWitness blackburn_set_check(const std::vector<PdaArray>& members,
                                         const PdaArray& reference);

// Equivalent to compatibility against an identity reference with a fresh
// diagonal symbol: shared-symbol mirrors must be off-diagonal.
bool diagonal_compatible(const PdaArray& a, const PdaArray& b);

}  // namespace pdalift
