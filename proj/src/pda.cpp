#include "pdalift/pda.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pdalift {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::bad_grid: return "BadGrid";
        case Errc::not_a_pda: return "NotAPda";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::non_injective_map: return "NonInjectiveMap";
        case Errc::duplicate_symbols: return "DuplicateSymbols";
        case Errc::wrong_symbol_count: return "WrongSymbolCount";
        case Errc::not_two_regular: return "NotTwoRegular";
        case Errc::not_one_pda: return "NotOnePda";
        case Errc::not_regular: return "NotRegular";
        case Errc::odd_n: return "OddN";
        case Errc::even_n: return "EvenN";
        case Errc::not_regular_subgraph: return "NotRegularSubgraph";
        case Errc::unsupported_z: return "UnsupportedZ";
        case Errc::odd_side_for_block_op: return "OddSideForBlockOp";
        case Errc::not_divisor: return "NotDivisor";
        case Errc::size_mismatch: return "SizeMismatch";
        case Errc::missing_constituent: return "MissingConstituent";
        case Errc::alphabet_overlap: return "AlphabetOverlap";
        case Errc::inadmissible_step: return "InadmissibleStep";
        case Errc::incompatible_constituents: return "IncompatibleConstituents";
        case Errc::wrong_member_count: return "WrongMemberCount";
        case Errc::step_mismatch: return "StepMismatch";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::unknown_step: return "UnknownStep";
        case Errc::arity_error: return "ArityError";
        case Errc::exhausted_attempts: return "ExhaustedAttempts";
        case Errc::subpacketization_mismatch: return "SubpacketizationMismatch";
        case Errc::bad_demand: return "BadDemand";
        case Errc::decode_failure: return "DecodeFailure";
    }
    return "Error";
}

PdaArray::PdaArray(int rows, int cols, std::vector<Symbol> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ <= 0 || cols_ <= 0)
        throw Error(Errc::bad_grid, "PdaArray: dimensions must be positive");
    if (cells_.size() != static_cast<size_t>(rows_) * cols_)
        throw Error(Errc::bad_grid, "PdaArray: cell count does not match dimensions");
    for (Symbol v : cells_)
        if (v < kStar) throw Error(Errc::bad_grid, "PdaArray: negative symbol id");
}

PdaArray PdaArray::all_star(int rows, int cols) {
    return PdaArray(rows, cols, std::vector<Symbol>(static_cast<size_t>(rows) * cols, kStar));
}

std::vector<Symbol> PdaArray::alphabet() const {
    std::set<Symbol> s;
    for (Symbol v : cells_)
        if (v != kStar) s.insert(v);
    return {s.begin(), s.end()};
}

Symbol PdaArray::max_symbol() const {
    Symbol m = kStar;
    for (Symbol v : cells_) m = std::max(m, v);
    return m;
}

int PdaArray::star_count_in_column(int c) const {
    int n = 0;
    for (int r = 0; r < rows_; ++r)
        if (is_star(r, c)) ++n;
    return n;
}

std::map<Symbol, std::vector<std::pair<int, int>>> occurrences(const PdaArray& p) {
    std::map<Symbol, std::vector<std::pair<int, int>>> occ;
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c)
            if (!p.is_star(r, c)) occ[p.at(r, c)].emplace_back(r, c);
    return occ;
}

PdaArray relabel(const PdaArray& p, const std::map<Symbol, Symbol>& bijection) {
    std::set<Symbol> images;
    for (const auto& [from, to] : bijection) {
        if (to < 0) throw Error(Errc::non_injective_map, "relabel: negative image");
        if (!images.insert(to).second)
            throw Error(Errc::non_injective_map, "relabel: map is not injective");
    }
    std::vector<Symbol> cells = p.cells();
    for (Symbol& v : cells) {
        if (v == kStar) continue;
        auto it = bijection.find(v);
        if (it != bijection.end()) v = it->second;
    }
    // Distinct symbols must stay distinct once partial maps are applied.
    std::set<Symbol> before, after;
    for (Symbol v : p.cells())
        if (v != kStar) before.insert(v);
    for (Symbol v : cells)
        if (v != kStar) after.insert(v);
    if (before.size() != after.size())
        throw Error(Errc::non_injective_map, "relabel: images collide with unmapped symbols");
    return PdaArray(p.rows(), p.cols(), std::move(cells));
}

PdaArray relabel_offset(const PdaArray& p, Symbol offset) {
    std::vector<Symbol> cells = p.cells();
    for (Symbol& v : cells)
        if (v != kStar) {
            if (v + offset < 0) throw Error(Errc::non_injective_map, "relabel: negative image");
            v += offset;
        }
    return PdaArray(p.rows(), p.cols(), std::move(cells));
}

PdaArray normalize_alphabet(const PdaArray& p) {
    std::map<Symbol, Symbol> next;
    Symbol id = 0;
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c) {
            Symbol v = p.at(r, c);
            if (v != kStar && !next.count(v)) next[v] = id++;
        }
    return relabel(p, next);
}

PdaArray transpose(const PdaArray& p) {
    std::vector<Symbol> cells(static_cast<size_t>(p.rows()) * p.cols());
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c)
            cells[static_cast<size_t>(c) * p.rows() + r] = p.at(r, c);
    return PdaArray(p.cols(), p.rows(), std::move(cells));
}

bool equal_up_to_relabeling(const PdaArray& a, const PdaArray& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    std::map<Symbol, Symbol> fwd, bwd;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            Symbol x = a.at(r, c), y = b.at(r, c);
            if ((x == kStar) != (y == kStar)) return false;
            if (x == kStar) continue;
            auto [fit, fnew] = fwd.emplace(x, y);
            if (!fnew && fit->second != y) return false;
            auto [bit, bnew] = bwd.emplace(y, x);
            if (!bnew && bit->second != x) return false;
        }
    return true;
}

std::string to_json(const PdaArray& p) {
    nlohmann::ordered_json j;
    j["f"] = p.rows();
    j["K"] = p.cols();
    nlohmann::ordered_json grid = nlohmann::ordered_json::array();
    for (int r = 0; r < p.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < p.cols(); ++c) {
            if (p.is_star(r, c))
                row.push_back("*");
            else
                row.push_back(p.at(r, c));
        }
        grid.push_back(std::move(row));
    }
    j["grid"] = std::move(grid);
    return j.dump();
}

PdaArray from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Errc::bad_grid, std::string("PDA JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("f") || !j.contains("K") || !j.contains("grid"))
        throw Error(Errc::bad_grid, "PDA JSON: expected object with f, K, grid");
    const int rows = j["f"].get<int>();
    const int cols = j["K"].get<int>();
    const auto& grid = j["grid"];
    if (!grid.is_array() || static_cast<int>(grid.size()) != rows)
        throw Error(Errc::bad_grid, "PDA JSON: grid row count does not match f");
    std::vector<Symbol> cells;
    cells.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : grid) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw Error(Errc::bad_grid, "PDA JSON: grid column count does not match K");
        for (const auto& cell : row) {
            if (cell.is_string()) {
                if (cell.get<std::string>() != "*")
                    throw Error(Errc::bad_grid, "PDA JSON: cell string must be \"*\"");
                cells.push_back(kStar);
            } else if (cell.is_number_integer()) {
                const long long v = cell.get<long long>();
                if (v < 0) throw Error(Errc::bad_grid, "PDA JSON: negative symbol");
                cells.push_back(v);
            } else {
                throw Error(Errc::bad_grid, "PDA JSON: cell must be \"*\" or an integer");
            }
        }
    }
    return PdaArray(rows, cols, std::move(cells));
}

PdaArray load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::bad_grid, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void save_json_file(const PdaArray& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::bad_grid, "cannot write " + path);
    out << to_json(p) << "\n";
}

PdaArray parse_grid(const std::string& text) {
    std::vector<std::vector<Symbol>> rows;
    std::string line;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ';', '\n');
    std::istringstream in(normalized);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Symbol> row;
        std::string tok;
        while (ls >> tok) {
            if (tok == "*")
                row.push_back(kStar);
            else
                row.push_back(std::stoll(tok));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error(Errc::bad_grid, "parse_grid: empty grid");
    const size_t cols = rows.front().size();
    std::vector<Symbol> cells;
    for (const auto& row : rows) {
        if (row.size() != cols) throw Error(Errc::bad_grid, "parse_grid: ragged rows");
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return PdaArray(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(cells));
}

std::string format_grid(const PdaArray& p) {
    std::ostringstream out;
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p.cols(); ++c) {
            if (c) out << ' ';
            if (p.is_star(r, c))
                out << '*';
            else
                out << p.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pdalift
