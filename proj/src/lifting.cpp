#include "pdalift/lifting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "pdalift/base_constructions.hpp"

namespace pdalift {

namespace {

struct BlockShape {
    int rows;  // n
    int cols;  // m
};

// Common assembler: every base cell becomes an n x m block.
PdaArray assemble_lift(const PdaArray& base, BlockShape shape,
                       const std::function<PdaArray(int r, int c)>& block_at) {
    const int out_rows = base.rows() * shape.rows;
    const int out_cols = base.cols() * shape.cols;
    std::vector<Symbol> cells(static_cast<size_t>(out_rows) * out_cols, kStar);
    for (int r = 0; r < base.rows(); ++r)
        for (int c = 0; c < base.cols(); ++c) {
            if (base.is_star(r, c)) continue;  // caller pre-fills stars if needed
            const PdaArray b = block_at(r, c);
            for (int rr = 0; rr < shape.rows; ++rr)
                for (int cc = 0; cc < shape.cols; ++cc)
                    cells[static_cast<size_t>(r * shape.rows + rr) * out_cols +
                          c * shape.cols + cc] = b.at(rr, cc);
        }
    return PdaArray(out_rows, out_cols, std::move(cells));
}

PdaArray assemble_lift_with_stars(const PdaArray& base, BlockShape shape,
                                  const std::function<PdaArray(int r, int c)>& block_at,
                                  const std::function<PdaArray(int star_index)>& star_at) {
    const int out_rows = base.rows() * shape.rows;
    const int out_cols = base.cols() * shape.cols;
    std::vector<Symbol> cells(static_cast<size_t>(out_rows) * out_cols, kStar);
    int star_index = 0;
    for (int r = 0; r < base.rows(); ++r)
        for (int c = 0; c < base.cols(); ++c) {
            const PdaArray b = base.is_star(r, c) ? star_at(star_index++) : block_at(r, c);
            for (int rr = 0; rr < shape.rows; ++rr)
                for (int cc = 0; cc < shape.cols; ++cc)
                    cells[static_cast<size_t>(r * shape.rows + rr) * out_cols +
                          c * shape.cols + cc] = b.at(rr, cc);
        }
    return PdaArray(out_rows, out_cols, std::move(cells));
}

void require_uniform_constituents(const std::vector<const PdaArray*>& blocks) {
    const PdaArray* first = blocks.front();
    for (const PdaArray* b : blocks) {
        if (b->rows() != first->rows() || b->cols() != first->cols())
            throw Error(Errc::dimension_mismatch, "lift: constituent dimensions differ");
        const auto rep = validate(*b);
        if (!rep.valid)
            throw Error(Errc::not_a_pda, "lift: constituent is not a valid PDA");
        if (rep.stars_per_column != validate(*first).stars_per_column)
            throw Error(Errc::dimension_mismatch,
                        "lift: constituent star counts per column differ");
    }
}

void require_disjoint_alphabets(const std::vector<const PdaArray*>& blocks) {
    std::set<Symbol> seen;
    for (const PdaArray* b : blocks)
        for (Symbol s : b->alphabet())
            if (!seen.insert(s).second)
                throw Error(Errc::alphabet_overlap,
                            "lift: constituent alphabets overlap on symbol " +
                                std::to_string(s));
}

}  // namespace

PdaArray basic_lift(const PdaArray& base, const std::map<Symbol, PdaArray>& constituents) {
    const auto alpha = base.alphabet();
    if (alpha.empty())
        throw Error(Errc::missing_constituent,
                    "basic_lift: all-star base has no block shape to infer");
    std::vector<const PdaArray*> blocks;
    for (Symbol s : alpha) {
        const auto it = constituents.find(s);
        if (it == constituents.end())
            throw Error(Errc::missing_constituent,
                        "basic_lift: no constituent for symbol " + std::to_string(s));
        blocks.push_back(&it->second);
    }
    require_uniform_constituents(blocks);
    require_disjoint_alphabets(blocks);
    const BlockShape shape{blocks.front()->rows(), blocks.front()->cols()};
    return assemble_lift(base, shape,
                         [&](int r, int c) { return constituents.at(base.at(r, c)); });
}

PdaArray regular_basic_lift(const PdaArray& base, const PdaArray& constituent) {
    const auto bp = params(base);
    if (!bp.gain) throw Error(Errc::not_regular, "regular_basic_lift: base is not regular");
    const auto cp = params(constituent);
    if (!cp.gain)
        throw Error(Errc::not_regular, "regular_basic_lift: constituent is not regular");
    const PdaArray norm = normalize_alphabet(constituent);
    const long long width = cp.symbol_count;
    std::map<Symbol, PdaArray> blocks;
    long long i = 0;
    for (Symbol s : base.alphabet()) blocks.emplace(s, relabel_offset(norm, width * i++));
    return basic_lift(base, blocks);
}

RecursiveLiftResult recursive_basic_lift(const std::vector<RecursiveStage>& stages) {
    if (stages.empty())
        throw Error(Errc::inadmissible_step, "recursive_basic_lift: no stages");
    auto make = [](const RecursiveStage& st) {
        if (st.gain == 1) {
            if (st.stars < 0 || st.stars >= st.size)
                throw Error(Errc::inadmissible_step,
                            "recursive_basic_lift: 1-regular stage needs 0 <= z < n");
            return one_pda(st.size, st.stars);
        }
        if (st.gain == 2) {
            if (!two_pda_supported(st.size, st.stars))
                throw Error(Errc::inadmissible_step,
                            "recursive_basic_lift: no such 2-regular stage");
            return two_pda(st.size, st.stars);
        }
        throw Error(Errc::inadmissible_step, "recursive_basic_lift: stage gain must be 1 or 2");
    };
    PdaArray p = make(stages.front());
    std::vector<long long> trace{stages.front().stars};
    long long user_product = stages.front().size;
    for (size_t i = 1; i < stages.size(); ++i) {
        p = regular_basic_lift(p, make(stages[i]));
        trace.push_back(trace.back() * stages[i].size +
                        (user_product - trace.back()) * stages[i].stars);
        user_product *= stages[i].size;
    }
    return {std::move(p), std::move(trace)};
}

namespace {

// Core of general lifting; `verified` families skip the compatibility check.
PdaArray general_lift_impl(const PdaArray& base,
                           const std::map<Symbol, std::vector<PdaArray>>& constituents,
                           const PdaArray& reference, bool check_compatibility) {
    const auto occ = occurrences(base);
    const BlockShape shape{reference.rows(), reference.cols()};
    Symbol max_used = kStar;
    for (const auto& [s, cells] : occ) {
        const auto it = constituents.find(s);
        if (it == constituents.end())
            throw Error(Errc::missing_constituent,
                        "general_lift: no constituents for symbol " + std::to_string(s));
        if (it->second.size() != cells.size())
            throw Error(Errc::wrong_member_count,
                        "general_lift: symbol " + std::to_string(s) + " occurs " +
                            std::to_string(cells.size()) + " times but has " +
                            std::to_string(it->second.size()) + " constituents");
        for (const auto& m : it->second) {
            if (m.rows() != shape.rows || m.cols() != shape.cols)
                throw Error(Errc::dimension_mismatch,
                            "general_lift: constituent size differs from reference");
            max_used = std::max(max_used, m.max_symbol());
        }
        if (check_compatibility) {
            const auto w = blackburn_set_check(it->second, reference);
            if (!w.compatible)
                throw Error(Errc::incompatible_constituents,
                            "general_lift: constituents of symbol " + std::to_string(s) +
                                " incompatible: " + w.detail);
        }
    }
    if (check_compatibility) {
        std::set<Symbol> seen;
        for (const auto& [s, list] : constituents)
            if (occ.count(s))
                for (const auto& m : list)
                    for (Symbol v : m.alphabet())
                        if (!seen.insert(v).second)
                            throw Error(Errc::alphabet_overlap,
                                        "general_lift: constituents of distinct symbols share "
                                        "symbol " + std::to_string(v));
    }

    // Occurrence index per base symbol in row-major order.
    std::map<Symbol, int> next_occurrence;
    const PdaArray ref_norm = normalize_alphabet(reference);
    const long long ref_width = static_cast<long long>(ref_norm.alphabet().size());
    const Symbol fresh = max_used + 1;
    return assemble_lift_with_stars(
        base, shape,
        [&](int r, int c) {
            const Symbol s = base.at(r, c);
            return constituents.at(s)[next_occurrence[s]++];
        },
        [&](int star_index) {
            return relabel_offset(ref_norm, fresh + ref_width * star_index);
        });
}

}  // namespace

PdaArray general_lift(const PdaArray& base,
                      const std::map<Symbol, std::vector<PdaArray>>& constituents,
                      const PdaArray& reference) {
    return general_lift_impl(base, constituents, reference, true);
}

PdaArray regular_lift(const PdaArray& base, const BlackburnSet& family) {
    const auto bp = params(base);
    if (!bp.gain) throw Error(Errc::not_regular, "regular_lift: base is not regular");
    if (static_cast<long long>(family.members.size()) != *bp.gain)
        throw Error(Errc::wrong_member_count,
                    "regular_lift: base gain " + std::to_string(*bp.gain) + " needs " +
                        std::to_string(*bp.gain) + " members, got " +
                        std::to_string(family.members.size()));
    const auto w = blackburn_set_check(family.members, family.pstar);
    if (!w.compatible)
        throw Error(Errc::incompatible_constituents, "regular_lift: " + w.detail);

    // One symbol-disjoint copy of the whole family per base symbol.
    std::set<Symbol> family_alphabet;
    for (const auto& m : family.members)
        for (Symbol s : m.alphabet()) family_alphabet.insert(s);
    std::map<Symbol, Symbol> to_compact;
    Symbol id = 0;
    for (Symbol s : family_alphabet) to_compact[s] = id++;
    const long long width = static_cast<long long>(family_alphabet.size());

    std::map<Symbol, std::vector<PdaArray>> constituents;
    long long copy = 0;
    for (Symbol s : base.alphabet()) {
        std::vector<PdaArray> list;
        for (const auto& m : family.members) {
            std::map<Symbol, Symbol> shift;
            for (const auto& [from, compact] : to_compact)
                shift[from] = compact + width * copy;
            list.push_back(relabel(m, shift));
        }
        constituents.emplace(s, std::move(list));
        ++copy;
    }
    return general_lift_impl(base, constituents, family.pstar, false);
}

PdaArray lift_2r(const PdaArray& base, int r) {
    const auto bp = params(base);
    if (!bp.gain || *bp.gain != 2)
        throw Error(Errc::not_two_regular, "lift_2r: base must be 2-regular");
    return regular_lift(base, power_of_two_pair(r, 0));
}

NestedLiftResult nested_power_lift(int q, int r) {
    if (q < 2 || r < 1)
        throw Error(Errc::inadmissible_step, "nested_power_lift: need q >= 2 and r >= 1");
    NestedLiftResult out{two_pda(q, 1), {}};
    long long z = 1;
    long long s = static_cast<long long>(q) * (q - 1) / 2;
    long long n = q;
    out.trace.emplace_back(z, s);
    for (int i = 2; i <= r; ++i) {
        out.pda = regular_lift(out.pda, block_rotation_family(1 << (i - 1)));
        const long long pow_i = 1LL << i;
        s = pow_i * (pow_i - 1) / 2 * s + n * z;
        z = (pow_i - 2) * z + n;
        n *= pow_i;
        out.trace.emplace_back(z, s);
    }
    return out;
}

}  // namespace pdalift
