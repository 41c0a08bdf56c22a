#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monadforge/poly.hpp"
#include "monadforge/poly_matrix.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

/// How the lexicographic list of multidegree-(1,...,1) monomials is split into
/// the x- and y-coordinates of P^{2mu+1}.
enum class TableConvention {
    /// x_i = monomial i, y_i = monomial mu+1+i.
    clean,
    /// y-block starts one position early: y_i = monomial mu+i, x_i = monomial i
    /// for i < mu, and x_mu takes the remaining last monomial.
    paper,
};

std::string to_string(TableConvention c);
TableConvention parse_table_convention(const std::string& text);

/// All multidegree-(1,...,1) monomials on X in mixed-radix order (bases
/// a_i + 1, first factor most significant). Element d_1...d_r is the product of
/// coordinate d_i of each factor i.
std::vector<MultiPoly> enumerate_monomials(const SpaceSpec& space);

/// Mixed-radix digits of monomial `index`, first factor first.
std::vector<int> monomial_digits(const SpaceSpec& space, std::size_t index);

/// Correspondence between the homogeneous coordinates x_0..x_mu, y_0..y_mu of
/// P^{2mu+1} and the Segre monomials on X.
class SegreTable {
public:
    const SpaceSpec& space() const noexcept { return space_; }
    std::size_t mu() const noexcept { return mu_; }
    TableConvention convention() const noexcept { return convention_; }
    const std::vector<MultiPoly>& x_block() const noexcept { return x_block_; }
    const std::vector<MultiPoly>& y_block() const noexcept { return y_block_; }

    /// P^N coordinate `pn` in flat order (x_0..x_mu then y_0..y_mu).
    const MultiPoly& image(std::size_t pn) const;
    /// Lexicographic monomial index assigned to P^N coordinate `pn`.
    std::size_t lex_index(std::size_t pn) const { return lex_of_pn_.at(pn); }
    std::size_t size() const noexcept { return lex_of_pn_.size(); }

    /// The ambient P^{2mu+1} as a one-factor SpaceSpec; its coordinate
    /// x0_i is x_i for i <= mu and y_{i-mu-1} otherwise.
    SpaceSpec ambient() const { return SpaceSpec({static_cast<int>(2 * mu_ + 1)}); }

    friend SegreTable segre_table(const SpaceSpec& space, TableConvention convention);

private:
    SegreTable(SpaceSpec space) : space_(std::move(space)) {}

    SpaceSpec space_;
    std::size_t mu_ = 0;
    TableConvention convention_ = TableConvention::clean;
    std::vector<MultiPoly> x_block_;
    std::vector<MultiPoly> y_block_;
    std::vector<std::size_t> lex_of_pn_;
};

/// Splits the monomial list into halves. Throws DomainError when every a_i is
/// even (N = prod(a_i + 1) - 1 is then even).
SegreTable segre_table(const SpaceSpec& space, TableConvention convention = TableConvention::clean);

/// "x_5" / "y_11" for flat P^N coordinate `pn`.
std::string pn_coordinate_name(std::size_t pn, std::size_t mu);

/// Replaces each P^N coordinate by its Segre monomial. This is a ring
/// homomorphism from the coordinate ring of P^{2mu+1} to that of X.
/// Throws StructuralError when `p` is not over table.ambient().
MultiPoly substitute(const MultiPoly& p, const SegreTable& table);
PolyMatrix substitute(const PolyMatrix& m, const SegreTable& table);
LinearMatrix substitute(const LinearMatrix& m, const SegreTable& table);

} // namespace monadforge
