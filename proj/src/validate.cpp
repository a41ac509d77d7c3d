#include "pdalift/validate.hpp"

#include <sstream>

namespace pdalift {

ValidationReport validate(const PdaArray& p) {
    ValidationReport rep;
    rep.stars_per_column = p.star_count_in_column(0);
    for (int c = 1; c < p.cols(); ++c) {
        const int z = p.star_count_in_column(c);
        if (z != rep.stars_per_column) {
            std::ostringstream d;
            d << "column " << c << " has " << z << " stars, column 0 has "
              << rep.stars_per_column;
            rep.violations.push_back(
                {ValidationReport::Kind::C1, {{0, c}}, d.str()});
        }
    }
    const auto occ = occurrences(p);
    for (const auto& [s, cells] : occ) {
        for (size_t a = 0; a + 1 < cells.size(); ++a) {
            for (size_t b = a + 1; b < cells.size(); ++b) {
                const auto [r1, c1] = cells[a];
                const auto [r2, c2] = cells[b];
                if (!p.is_star(r1, c2) || !p.is_star(r2, c1)) {
                    std::ostringstream d;
                    d << "symbol " << s << " at (" << r1 << "," << c1 << ") and ("
                      << r2 << "," << c2 << ") lacks mirrored stars";
                    rep.violations.push_back(
                        {ValidationReport::Kind::C3, {cells[a], cells[b]}, d.str()});
                }
            }
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

PdaParams params(const PdaArray& p) {
    const auto rep = validate(p);
    if (!rep.valid)
        throw Error(Errc::not_a_pda,
                    "params: array fails validation (" +
                        std::to_string(rep.violations.size()) + " violations)");
    PdaParams out;
    out.users = p.cols();
    out.rows = p.rows();
    out.stars = rep.stars_per_column;
    const auto reg = regularity(p);
    out.symbol_count = static_cast<long long>(reg.counts.size());
    out.gain = reg.uniform_gain;
    out.memory_ratio = Rational::of(out.stars, out.rows);
    out.rate = Rational::of(out.symbol_count, out.rows);
    return out;
}

RegularityReport regularity(const PdaArray& p) {
    RegularityReport rep;
    for (const auto& [s, cells] : occurrences(p))
        rep.counts[s] = static_cast<long long>(cells.size());
    if (!rep.counts.empty()) {
        const long long first = rep.counts.begin()->second;
        bool uniform = true;
        for (const auto& [s, n] : rep.counts)
            if (n != first) {
                uniform = false;
                break;
            }
        if (uniform) rep.uniform_gain = first;
    }
    return rep;
}

namespace {

using Occurrences = std::map<Symbol, std::vector<std::pair<int, int>>>;

CompatibilityWitness compatible_with_occurrences(const Occurrences& occ_a,
                                                 const Occurrences& occ_b,
                                                 const PdaArray& reference) {
    for (const auto& [s, cells_a] : occ_a) {
        const auto it = occ_b.find(s);
        if (it == occ_b.end()) continue;
        for (const auto& [r1, c1] : cells_a) {
            for (const auto& [r2, c2] : it->second) {
                if (!reference.is_star(r1, c2) || !reference.is_star(r2, c1)) {
                    CompatibilityWitness w;
                    w.compatible = false;
                    w.symbol = s;
                    w.cell_a = {r1, c1};
                    w.cell_b = {r2, c2};
                    w.mirrored = reference.is_star(r1, c2) ? std::pair{r2, c1}
                                                           : std::pair{r1, c2};
                    std::ostringstream d;
                    d << "symbol " << s << " at (" << r1 << "," << c1 << ")/(" << r2
                      << "," << c2 << ") mirrors onto non-star (" << w.mirrored.first
                      << "," << w.mirrored.second << ")";
                    w.detail = d.str();
                    return w;
                }
            }
        }
    }
    return {};
}

CompatibilityWitness blackburn_set_check(const std::vector<PdaArray>& members,
                                         const PdaArray& reference) {
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i].rows() != reference.rows() || members[i].cols() != reference.cols())
            throw Error(Errc::dimension_mismatch, "blackburn_set_check: unequal dimensions");
        const auto rep = validate(members[i]);
        if (!rep.valid) {
            CompatibilityWitness w;
            w.compatible = false;
            w.detail = "member " + std::to_string(i) + " is not a valid PDA: " +
                       rep.violations.front().detail;
            if (!rep.violations.front().cells.empty())
                w.cell_a = rep.violations.front().cells.front();
            return w;
        }
    }
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            auto w = blackburn_compatible(members[i], members[j], reference);
            if (!w.compatible) return w;
        }
    return {};
}

bool diagonal_compatible(const PdaArray& a, const PdaArray& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw Error(Errc::dimension_mismatch, "diagonal_compatible: need equal square arrays");
    const auto occ_a = occurrences(a);
    const auto occ_b = occurrences(b);
    for (const auto& [s, cells_a] : occ_a) {
        const auto it = occ_b.find(s);
        if (it == occ_b.end()) continue;
        for (const auto& [r1, c1] : cells_a)
            for (const auto& [r2, c2] : it->second)
                if (r1 == c2 || r2 == c1) return false;
    }
    return true;
}

}  // namespace pdalift
