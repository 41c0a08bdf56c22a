#include "monadforge/poly.hpp"

#include <cctype>

#include "monadforge/errors.hpp"

namespace monadforge {

MultiPoly::MultiPoly(SpaceSpec space) : space_(std::move(space)) {}

MultiPoly MultiPoly::constant(SpaceSpec space, const Integer& c) {
    Exponents zero(space.variable_count(), 0);
    return monomial(std::move(space), std::move(zero), c);
}

MultiPoly MultiPoly::variable(SpaceSpec space, Variable v) {
    Exponents e(space.variable_count(), 0);
    e[space.flat_index(v)] = 1;
    return monomial(std::move(space), std::move(e), 1);
}

MultiPoly MultiPoly::monomial(SpaceSpec space, Exponents exps, const Integer& c) {
    if (exps.size() != space.variable_count()) throw StructuralError("exponent vector has wrong length");
    MultiPoly p(std::move(space));
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    p.refresh();
    return p;
}

MultiPoly MultiPoly::from_terms(SpaceSpec space, TermMap terms) {
    MultiPoly p(std::move(space));
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != p.space_.variable_count()) throw StructuralError("exponent vector has wrong length");
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
    p.terms_ = std::move(terms);
    p.refresh();
    return p;
}

MultiDegree multidegree_of(const SpaceSpec& space, const Exponents& exps) {
    MultiDegree d = MultiDegree::uniform(space.factor_count(), 0);
    for (std::size_t f = 0; f < space.factor_count(); ++f) {
        const auto off = space.variable_offset(f);
        for (int c = 0; c <= space.dim(f); ++c) d[f] += exps[off + static_cast<std::size_t>(c)];
    }
    return d;
}

void MultiPoly::refresh() {
    degree_.reset();
    homogeneous_ = true;
    for (const auto& [exps, coef] : terms_) {
        auto d = multidegree_of(space_, exps);
        if (!degree_) {
            degree_ = std::move(d);
        } else if (*degree_ != d) {
            homogeneous_ = false;
            degree_.reset();
            return;
        }
    }
}

namespace {

void require_same_space(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.space() == b.space())) {
        throw StructuralError("polynomials over " + a.space().to_string() + " and " + b.space().to_string());
    }
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    require_same_space(*this, other);
    for (const auto& [exps, coef] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(exps, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }
    refresh();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [exps, coef] : out.terms_) coef = -coef;
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_space(a, b);
    MultiPoly out(a.space_);
    const std::size_t n = a.space_.variable_count();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    out.refresh();
    return out;
}

MultiPoly MultiPoly::scaled(const Integer& c) const {
    if (c == 0) return MultiPoly(space_);
    MultiPoly out = *this;
    for (auto& [exps, coef] : out.terms_) coef *= c;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.space_ == b.space_ && a.terms_ == b.terms_; }

Integer MultiPoly::evaluate(const std::vector<Integer>& flat_coords) const {
    if (flat_coords.size() != space_.variable_count()) throw StructuralError("wrong coordinate arity");
    Integer acc = 0;
    for (const auto& [exps, coef] : terms_) {
        Integer t = coef;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i]) t *= boost::multiprecision::pow(flat_coords[i], exps[i]);
        }
        acc += t;
    }
    return acc;
}

std::string variable_name(Variable v) { return "x" + std::to_string(v.factor) + "_" + std::to_string(v.coord); }

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    const auto& space = p.space();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exps, coef] = *it;
        const bool negative = coef < 0;
        if (first) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        const Integer mag = negative ? Integer(-coef) : coef;
        std::string vars;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (!exps[i]) continue;
            if (!vars.empty()) vars += '*';
            vars += variable_name(space.variable_at(i));
            if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
        }
        if (vars.empty()) {
            s += mag.str();
        } else {
            if (mag != 1) s += mag.str() + "*";
            s += vars;
        }
    }
    return s;
}

namespace {

class PolyParser {
public:
    PolyParser(const SpaceSpec& space, std::string_view text) : space_(space), text_(text) {}

    MultiPoly parse() {
        MultiPoly::TermMap terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [exps, coef] = parse_term();
            if (negative) coef = -coef;
            auto [it, inserted] = terms.try_emplace(std::move(exps), coef);
            if (!inserted) it->second += coef;
            skip_ws();
        }
        return MultiPoly::from_terms(space_, std::move(terms));
    }

private:
    std::pair<Exponents, Integer> parse_term() {
        Exponents exps(space_.variable_count(), 0);
        Integer coef = 1;
        while (true) {
            skip_ws();
            if (at_end()) fail("expected a factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef *= parse_integer();
            } else if (peek() == 'x') {
                ++pos_;
                const auto factor = parse_index();
                if (at_end() || peek() != '_') fail("expected '_' in variable name");
                ++pos_;
                const auto coord = parse_index();
                if (factor >= space_.factor_count() || coord > static_cast<std::size_t>(space_.dim(factor))) {
                    fail("variable x" + std::to_string(factor) + "_" + std::to_string(coord) + " is outside " +
                         space_.to_string());
                }
                std::uint32_t e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = static_cast<std::uint32_t>(parse_index());
                }
                exps[space_.flat_index(Variable{factor, coord})] += e;
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            return {std::move(exps), coef};
        }
    }

    Integer parse_integer() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::size_t parse_index() {
        const auto start = pos_;
        std::size_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::size_t>(peek() - '0');
            if (v > 1'000'000) fail("index too large");
            ++pos_;
        }
        if (start == pos_) fail("expected an index");
        return v;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    const SpaceSpec& space_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(const SpaceSpec& space, std::string_view text) { return PolyParser(space, text).parse(); }

} // namespace monadforge
