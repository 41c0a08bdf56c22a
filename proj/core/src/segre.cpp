#include "monadforge/segre.hpp"

#include "monadforge/errors.hpp"

namespace monadforge {

std::string to_string(TableConvention c) { return c == TableConvention::clean ? "clean" : "paper"; }

TableConvention parse_table_convention(const std::string& text) {
    if (text == "clean") return TableConvention::clean;
    if (text == "paper") return TableConvention::paper;
    throw ParseError("unknown table convention '" + text + "' (expected clean|paper)");
}

std::vector<int> monomial_digits(const SpaceSpec& space, std::size_t index) {
    std::vector<int> digits(space.factor_count());
    for (std::size_t f = space.factor_count(); f-- > 0;) {
        const auto base = static_cast<std::size_t>(space.dim(f)) + 1;
        digits[f] = static_cast<int>(index % base);
        index /= base;
    }
    if (index != 0) throw StructuralError("monomial index out of range");
    return digits;
}

std::vector<MultiPoly> enumerate_monomials(const SpaceSpec& space) {
    std::size_t count = 1;
    for (int a : space.dims()) count *= static_cast<std::size_t>(a) + 1;
    std::vector<MultiPoly> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto digits = monomial_digits(space, idx);
        Exponents e(space.variable_count(), 0);
        for (std::size_t f = 0; f < digits.size(); ++f) {
            e[space.variable_offset(f) + static_cast<std::size_t>(digits[f])] = 1;
        }
        out.push_back(MultiPoly::monomial(space, std::move(e)));
    }
    return out;
}

SegreTable segre_table(const SpaceSpec& space, TableConvention convention) {
    bool has_odd = false;
    for (int a : space.dims()) has_odd = has_odd || (a % 2 == 1);
    if (!has_odd) {
        throw DomainError("ambient projective dimension N is even; banded construction undefined (" +
                          space.to_string() + ")");
    }
    auto monomials = enumerate_monomials(space);
    const std::size_t total = monomials.size();
    const std::size_t mu = total / 2 - 1;

    SegreTable t(space);
    t.mu_ = mu;
    t.convention_ = convention;
    t.lex_of_pn_.resize(total);
    for (std::size_t i = 0; i <= mu; ++i) {
        if (convention == TableConvention::clean) {
            t.lex_of_pn_[i] = i;
            t.lex_of_pn_[mu + 1 + i] = mu + 1 + i;
        } else {
            t.lex_of_pn_[i] = i < mu ? i : total - 1;
            t.lex_of_pn_[mu + 1 + i] = mu + i;
        }
    }
    for (std::size_t i = 0; i <= mu; ++i) {
        t.x_block_.push_back(monomials[t.lex_of_pn_[i]]);
        t.y_block_.push_back(monomials[t.lex_of_pn_[mu + 1 + i]]);
    }
    return t;
}

const MultiPoly& SegreTable::image(std::size_t pn) const {
    if (pn > 2 * mu_ + 1) throw StructuralError("P^N coordinate index " + std::to_string(pn) + " out of range");
    return pn <= mu_ ? x_block_[pn] : y_block_[pn - mu_ - 1];
}

std::string pn_coordinate_name(std::size_t pn, std::size_t mu) {
    return pn <= mu ? "x_" + std::to_string(pn) : "y_" + std::to_string(pn - mu - 1);
}

MultiPoly substitute(const MultiPoly& p, const SegreTable& table) {
    const auto& src = p.space();
    if (src.factor_count() != 1) throw StructuralError("substitution expects a polynomial on a single P^N");
    if (src.variable_count() > table.size()) {
        throw StructuralError("variable index out of range: P^" + std::to_string(src.dim(0)) +
                              " coordinates against a table for P^" + std::to_string(table.size() - 1));
    }
    if (src.variable_count() < table.size()) {
        throw StructuralError("polynomial lives on P^" + std::to_string(src.dim(0)) + ", table expects P^" +
                              std::to_string(table.size() - 1));
    }
    MultiPoly out(table.space());
    for (const auto& [exps, coef] : p.terms()) {
        MultiPoly term = MultiPoly::constant(table.space(), coef);
        for (std::size_t v = 0; v < exps.size(); ++v) {
            for (std::uint32_t e = 0; e < exps[v]; ++e) term = term * table.image(v);
        }
        out += term;
    }
    return out;
}

PolyMatrix substitute(const PolyMatrix& m, const SegreTable& table) {
    PolyMatrix out(table.space(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = substitute(m.at(i, j), table);
    }
    return out;
}

LinearMatrix substitute(const LinearMatrix& m, const SegreTable& table) {
    const auto d = m.entry_degree().size() == 1 ? m.entry_degree()[0] : 0;
    if (m.entry_degree().size() != 1) throw StructuralError("substitution expects a matrix on a single P^N");
    return LinearMatrix(substitute(m.entries(), table), MultiDegree::uniform(table.space().factor_count(), d));
}

} // namespace monadforge
