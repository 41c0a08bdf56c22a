#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monadforge/integer.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

/// One exponent per homogeneous coordinate, in flat (factor, coord) order.
using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial in the multigraded coordinate ring of a SpaceSpec, with
/// unbounded integer coefficients.
///
/// Terms are kept in a map keyed by exponent vector, so two polynomials are
/// equal iff their term maps are equal. Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Integer>;

    explicit MultiPoly(SpaceSpec space);

    static MultiPoly constant(SpaceSpec space, const Integer& c);
    static MultiPoly variable(SpaceSpec space, Variable v);
    static MultiPoly monomial(SpaceSpec space, Exponents exps, const Integer& c = 1);
    static MultiPoly from_terms(SpaceSpec space, TermMap terms);

    const SpaceSpec& space() const noexcept { return space_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// True for zero and for polynomials whose terms share one multidegree.
    bool is_homogeneous() const noexcept { return homogeneous_; }
    /// Multidegree of a nonzero homogeneous polynomial.
    const std::optional<MultiDegree>& multidegree() const noexcept { return degree_; }

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Integer& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Evaluates at integer coordinates given in flat order.
    Integer evaluate(const std::vector<Integer>& flat_coords) const;

private:
    void refresh();

    SpaceSpec space_;
    TermMap terms_;
    bool homogeneous_ = true;
    std::optional<MultiDegree> degree_;
};

/// Per-factor degree of a single exponent vector.
MultiDegree multidegree_of(const SpaceSpec& space, const Exponents& exps);

/// Canonical text form, e.g. "x0_0^2*x1_1^2 - x0_1^2*x1_0^2"; terms are printed
/// in decreasing lexicographic order of exponent vectors. The zero polynomial
/// prints as "0".
std::string to_string(const MultiPoly& p);

/// Inverse of to_string. Accepts arbitrary whitespace, explicit "1*" and "^1",
/// and repeated variables; rejects variables outside the ambient space.
MultiPoly parse_poly(const SpaceSpec& space, std::string_view text);

/// Name of a coordinate in the text syntax: "x<factor>_<coord>".
std::string variable_name(Variable v);

} // namespace monadforge
