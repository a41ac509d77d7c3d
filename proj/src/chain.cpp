#include "pdalift/chain.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "pdalift/base_constructions.hpp"
#include "pdalift/blackburn.hpp"
#include "pdalift/lifting.hpp"
#include "pdalift/randbc.hpp"

namespace pdalift {

bool operator==(const LiftChain& a, const LiftChain& b) {
    if (a.base.name != b.base.name || a.base.args != b.base.args) return false;
    if (a.steps.size() != b.steps.size()) return false;
    for (size_t i = 0; i < a.steps.size(); ++i) {
        const auto& x = a.steps[i];
        const auto& y = b.steps[i];
        if (x.name != y.name || x.args != y.args) return false;
        if (x.check.has_value() != y.check.has_value()) return false;
        if (x.check &&
            (x.check->users != y.check->users || x.check->rows != y.check->rows ||
             x.check->stars != y.check->stars || x.check->gain != y.check->gain))
            return false;
    }
    return true;
}

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    [[noreturn]] void fail(size_t at, const std::string& msg) {
        Error e(Errc::syntax_error, msg + " at byte " + std::to_string(at));
        e.offset = static_cast<long>(at);
        throw e;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(pos, std::string("expected '") + c + "'");
        ++pos;
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // A word is a run of letters and digits containing at least one letter.
    std::string word() {
        skip_ws();
        const size_t start = pos;
        while (pos < text.size() &&
               std::isalnum(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail(start, "expected a name");
        const std::string w = text.substr(start, pos - start);
        if (std::all_of(w.begin(), w.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail(start, "expected a name, found a number");
        return w;
    }
    long long number() {
        skip_ws();
        const size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(start, "expected an integer");
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::exception&) {
            fail(start, "integer out of range");
        }
    }
    std::vector<long long> arg_list() {
        expect('(');
        std::vector<long long> args;
        if (accept(')')) return args;
        args.push_back(number());
        while (accept(',')) args.push_back(number());
        expect(')');
        return args;
    }
};

const std::map<std::string, std::pair<int, int>>& step_arities() {
    // name -> {min args, max args}
    static const std::map<std::string, std::pair<int, int>> table = {
        {"basic", {2, 3}},  {"c1", {1, 1}},      {"c2", {1, 1}},
        {"t1", {1, 1}},     {"t2", {2, 2}},      {"bw1", {2, 2}},
        {"bw2", {2, 2}},    {"bw3", {2, 2}},     {"bw4", {1, 1}},
        {"tiling", {2, 2}}, {"tilingx", {2, 2}}, {"lift2r", {1, 1}},
        {"nested2g", {1, 1}}, {"randbc", {7, 7}}, {"pair10x5", {0, 0}},
        {"pair12x3", {0, 0}},
    };
    return table;
}

}  // namespace

LiftChain parse_chain(const std::string& text) {
    Lexer lex{text};
    LiftChain chain;

    const size_t base_at = (lex.skip_ws(), lex.pos);
    chain.base.name = lex.word();
    static const std::map<std::string, int> base_arity = {
        {"2pda", 2}, {"1pda", 2}, {"i", 1}, {"j", 1}, {"g", 1}, {"h", 1}};
    const auto bit = base_arity.find(chain.base.name);
    if (bit == base_arity.end()) {
        Error e(Errc::unknown_step, "unknown base '" + chain.base.name + "'");
        e.offset = static_cast<long>(base_at);
        throw e;
    }
    chain.base.args = lex.arg_list();
    if (static_cast<int>(chain.base.args.size()) != bit->second) {
        Error e(Errc::arity_error, "base " + chain.base.name + " takes " +
                                       std::to_string(bit->second) + " arguments");
        e.offset = static_cast<long>(base_at);
        throw e;
    }

    while (!lex.eof()) {
        lex.expect('>');
        const size_t step_at = (lex.skip_ws(), lex.pos);
        ChainStep step;
        step.name = lex.word();
        const auto it = step_arities().find(step.name);
        if (it == step_arities().end()) {
            Error e(Errc::unknown_step, "unknown step '" + step.name + "'");
            e.offset = static_cast<long>(step_at);
            throw e;
        }
        step.args = lex.arg_list();
        const auto [lo, hi] = it->second;
        if (static_cast<int>(step.args.size()) < lo ||
            static_cast<int>(step.args.size()) > hi) {
            Error e(Errc::arity_error,
                    "step " + step.name + " takes " + std::to_string(lo) +
                        (lo == hi ? "" : ".." + std::to_string(hi)) + " arguments");
            e.offset = static_cast<long>(step_at);
            throw e;
        }
        if (lex.accept('@')) {
            ChainAnnotation anno;
            lex.expect('(');
            anno.users = lex.number();
            lex.expect(',');
            anno.rows = lex.number();
            lex.expect(')');
            lex.expect('_');
            anno.stars = lex.number();
            lex.expect('^');
            anno.gain = lex.number();
            step.check = anno;
        }
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

std::string render_chain(const LiftChain& chain) {
    std::ostringstream out;
    auto args = [&](const std::vector<long long>& a) {
        out << '(';
        for (size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
        out << ')';
    };
    out << chain.base.name;
    args(chain.base.args);
    for (const auto& step : chain.steps) {
        out << " > " << step.name;
        args(step.args);
        if (step.check)
            out << " @(" << step.check->users << ',' << step.check->rows << ")_"
                << step.check->stars << '^' << step.check->gain;
    }
    return out.str();
}

namespace {

PdaArray build_base(const ChainBase& base) {
    const auto n = base.args.at(0);
    if (base.name == "2pda") return two_pda(static_cast<int>(n), static_cast<int>(base.args.at(1)));
    if (base.name == "1pda") return one_pda(static_cast<int>(n), static_cast<int>(base.args.at(1)));
    if (base.name == "i") return identity_pda(static_cast<int>(n), 0);
    if (base.name == "j") {
        std::vector<Symbol> syms(static_cast<size_t>(n) * n);
        std::iota(syms.begin(), syms.end(), Symbol{0});
        return dense_pda(static_cast<int>(n), syms);
    }
    if (base.name == "g") return antidiag_two_pda(static_cast<int>(n));
    if (base.name == "h") return diag_two_pda(static_cast<int>(n));
    throw Error(Errc::unknown_step, "unknown base " + base.name);
}

}  // namespace

PdaArray apply_chain_step(const PdaArray& current_in, const ChainStep& step) {
    PdaArray current = current_in;
    const auto& a = step.args;
    if (step.name == "basic") {
        const int n = static_cast<int>(a[0]);
        const int z = static_cast<int>(a[1]);
        const long long gc = a.size() > 2 ? a[2] : 2;
        PdaArray constituent = PdaArray::all_star(1, 1);
        if (gc == 2)
            constituent = two_pda(n, z);
        else if (gc == 1)
            constituent = one_pda(n, z);
        else if (gc == n) {
            if (z != n - 1)
                throw Error(Errc::inadmissible_step,
                            "basic: identity constituent requires z = n-1");
            constituent = identity_pda(n, 0);
        } else
            throw Error(Errc::inadmissible_step, "basic: constituent gain must be 1, 2 or n");
        return regular_basic_lift(current, constituent);
    }
    if (step.name == "c1") return regular_lift(current, rotation_family(static_cast<int>(a[0])));
    if (step.name == "c2")
        return regular_lift(current, block_rotation_family(static_cast<int>(a[0])));
    if (step.name == "t1") {
        const int g = static_cast<int>(a[0]);
        std::vector<Symbol> syms(static_cast<size_t>(g) * g);
        std::iota(syms.begin(), syms.end(), Symbol{0});
        return regular_lift(current, transpose_pair(dense_pda(g, syms)));
    }
    if (step.name == "t2") {
        const int g = static_cast<int>(a[0]);
        std::vector<Symbol> syms(static_cast<size_t>(g) * g);
        std::iota(syms.begin(), syms.end(), Symbol{0});
        return regular_lift(current,
                            shifted_transpose_pair(dense_pda(g, syms), static_cast<int>(a[1])));
    }
    if (step.name == "bw1")
        return regular_lift(current, bw1_family(static_cast<int>(a[0]), static_cast<int>(a[1])));
    if (step.name == "bw2")
        return regular_lift(current, bw2_family(static_cast<int>(a[0]), static_cast<int>(a[1])));
    if (step.name == "bw3")
        return regular_lift(current, bw3_family(static_cast<int>(a[0]), static_cast<int>(a[1])));
    if (step.name == "bw4") return regular_lift(current, bw4_family(static_cast<int>(a[0])));
    if (step.name == "tiling")
        return regular_lift(current,
                            tiling_family(static_cast<int>(a[0]), static_cast<int>(a[1])));
    if (step.name == "tilingx")
        return regular_lift(
            current, replicated_tiling_family(static_cast<int>(a[0]), static_cast<int>(a[1])));
    if (step.name == "lift2r") return lift_2r(current, static_cast<int>(a[0]));
    if (step.name == "nested2g") {
        const int r = static_cast<int>(a[0]);
        if (r < 1) throw Error(Errc::inadmissible_step, "nested2g: r must be positive");
        const auto p = params(current);
        if (!p.gain || *p.gain != 2)
            throw Error(Errc::not_two_regular, "nested2g: base must be 2-regular");
        for (int i = 2; i <= r; ++i)
            current = regular_lift(current, block_rotation_family(1 << (i - 1)));
        return current;
    }
    if (step.name == "randbc") {
        RandBcSpec spec;
        spec.members = a[0];
        spec.occurrences = a[1];
        spec.stars = a[2];
        spec.block_cols = a[3];
        spec.block_rows = a[4];
        spec.seed = static_cast<std::uint64_t>(a[5]);
        spec.max_attempts = static_cast<int>(a[6]);
        const auto outcome = rand_bc(spec);
        if (!outcome.success) {
            throw Error(Errc::exhausted_attempts,
                        "randbc: no success in " + std::to_string(outcome.attempts_used) +
                            " attempts (stuck at symbol " +
                            std::to_string(outcome.failed_symbol) + ")");
        }
        return regular_lift(current, outcome_family(outcome, spec));
    }
    if (step.name == "pair10x5") return regular_lift(current, pair_10x5());
    if (step.name == "pair12x3") return regular_lift(current, pair_12x3());
    throw Error(Errc::unknown_step, "unknown step " + step.name);
}

ChainResult run_chain(const LiftChain& chain) {
    PdaArray current = build_base(chain.base);
    for (const auto& step : chain.steps) {
        current = apply_chain_step(current, step);
        if (step.check) {
            const auto p = params(current);
            const bool gain_ok = p.gain && *p.gain == step.check->gain;
            if (p.users != step.check->users || p.rows != step.check->rows ||
                p.stars != step.check->stars || !gain_ok) {
                std::ostringstream d;
                d << "step " << step.name << " produced (" << p.users << "," << p.rows
                  << ")_" << p.stars << "^" << (p.gain ? std::to_string(*p.gain) : "-")
                  << " but the chain declares (" << step.check->users << ","
                  << step.check->rows << ")_" << step.check->stars << "^"
                  << step.check->gain;
                throw Error(Errc::step_mismatch, d.str());
            }
        }
    }
    ChainResult result{current, params(current)};
    return result;
}

ChainResult run_chain(const std::string& text) { return run_chain(parse_chain(text)); }

}  // namespace pdalift
