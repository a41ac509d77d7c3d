#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdalift/rational.hpp"

namespace pdalift {

// Symbols are non-negative integers; kStar marks a cached ("*") cell.
using Symbol = long long;
inline constexpr Symbol kStar = -1;

enum class Errc {
    bad_grid,
    not_a_pda,
    dimension_mismatch,
    non_injective_map,
    duplicate_symbols,
    wrong_symbol_count,
    not_two_regular,
    not_one_pda,
    not_regular,
    odd_n,
    even_n,
    not_regular_subgraph,
    unsupported_z,
    odd_side_for_block_op,
    not_divisor,
    size_mismatch,
    missing_constituent,
    alphabet_overlap,
    inadmissible_step,
    incompatible_constituents,
    wrong_member_count,
    step_mismatch,
    syntax_error,
    unknown_step,
    arity_error,
    exhausted_attempts,
    subpacketization_mismatch,
    bad_demand,
    decode_failure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

    // Byte offset into the input for parser errors; -1 elsewhere.
    long offset = -1;

private:
    Errc code_;
};

// f x K grid over {*} + integers. Rows index subfiles, columns index users;
// immutable after construction.
class PdaArray {
public:
    PdaArray(int rows, int cols, std::vector<Symbol> cells);

    static PdaArray all_star(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Symbol at(int r, int c) const { return cells_[static_cast<size_t>(r) * cols_ + c]; }
    bool is_star(int r, int c) const { return at(r, c) == kStar; }
    const std::vector<Symbol>& cells() const { return cells_; }

    // Symbols present, sorted ascending. The alphabet is by definition the
    // set of integers that occur (condition C2 is structural).
    std::vector<Symbol> alphabet() const;
    Symbol max_symbol() const;  // -1 when all-star

    int star_count_in_column(int c) const;

    friend bool operator==(const PdaArray& a, const PdaArray& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }
    friend bool operator!=(const PdaArray& a, const PdaArray& b) { return !(a == b); }

private:
    int rows_;
    int cols_;
    std::vector<Symbol> cells_;
};

// Occurrences of every symbol in row-major scan order.
std::map<Symbol, std::vector<std::pair<int, int>>> occurrences(const PdaArray& p);

// Symbol renaming. Stars are untouched; the map must be injective on the
// alphabet (missing entries keep the symbol).
PdaArray relabel(const PdaArray& p, const std::map<Symbol, Symbol>& bijection);
PdaArray relabel_offset(const PdaArray& p, Symbol offset);

// Renumber symbols to 0..S-1 by first appearance in row-major order.
PdaArray normalize_alphabet(const PdaArray& p);

PdaArray transpose(const PdaArray& p);

// True when b equals a up to a consistent renaming of symbols (star pattern
// identical, symbol pattern isomorphic).
bool equal_up_to_relabeling(const PdaArray& a, const PdaArray& b);

// JSON format: {"f":int,"K":int,"grid":[[cell,...],...]} with cell either the
// string "*" or an integer, row-major.
std::string to_json(const PdaArray& p);
PdaArray from_json(const std::string& text);
PdaArray load_json_file(const std::string& path);
void save_json_file(const PdaArray& p, const std::string& path);

// Parse a whitespace grid: rows separated by ';' or newlines, cells by
// spaces, '*' for stars. Convenience for tests and fixtures.
PdaArray parse_grid(const std::string& text);
std::string format_grid(const PdaArray& p);

}  // namespace pdalift
