#pragma once

#include <cstdint>
#include <functional>
#include <tuple>
#include <vector>

#include "pdalift/blackburn.hpp"
#include "pdalift/pda.hpp"

namespace pdalift {

// Randomized search for b compatible eta*r x alpha*r members with e stars
// per column, each symbol occurring r times across all members, reference an
// eta x alpha grid of identity blocks.
struct RandBcSpec {
    long long members = 2;        // b
    long long occurrences = 4;    // r
    long long stars = 1;          // e
    long long block_cols = 1;     // alpha
    long long block_rows = 1;     // eta
    std::uint64_t seed = 0;
    int max_attempts = 1;

    long long member_rows() const { return block_rows * occurrences; }
    long long member_cols() const { return block_cols * occurrences; }
    long long symbol_budget() const {
        return members * block_cols * (block_rows * occurrences - stars);
    }
};

struct RandBcOutcome {
    bool success = false;
    std::vector<PdaArray> member_arrays;
    PdaArray pstar = PdaArray::all_star(1, 1);
    int attempts_used = 0;
    std::uint64_t seed_used = 0;
    long long failed_symbol = -1;  // first symbol with no free cell, last attempt
};

// Observer for tests: state before a placement, the symbol, the member
// index, every free cell with its penalty, and the chosen cell.
using PlacementObserver = std::function<void(
    const std::vector<PdaArray>& members_before, long long symbol, int member_index,
    const std::vector<std::tuple<int, int, long long>>& free_penalties,
    std::pair<int, int> chosen)>;

RandBcOutcome rand_bc(const RandBcSpec& spec, const PlacementObserver& observer = nullptr);

BlackburnSet outcome_family(const RandBcOutcome& outcome, const RandBcSpec& spec);

std::uint64_t derive_seed(std::uint64_t seed, int attempt);

}  // namespace pdalift
