#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monadforge/errors.hpp"
#include "monadforge/integer.hpp"
#include "monadforge/poly_matrix.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

bool is_prime(std::uint64_t n);

/// The prime field F_q, elements stored as residues in [0, q).
class PrimeField {
public:
    using value_type = std::uint64_t;
    /// Largest accepted modulus; products of two residues must fit in 64 bits.
    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 31) - 1;

    /// Throws DomainError unless q is a prime <= max_modulus.
    explicit PrimeField(std::uint64_t q);

    std::uint64_t modulus() const noexcept { return q_; }
    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_integer(const Integer& v) const;
    value_type add(value_type a, value_type b) const noexcept { return (a + b) % q_; }
    value_type sub(value_type a, value_type b) const noexcept { return (a + q_ - b) % q_; }
    value_type mul(value_type a, value_type b) const noexcept { return (a * b) % q_; }
    value_type neg(value_type a) const noexcept { return (q_ - a) % q_; }
    value_type inv(value_type a) const;
    bool is_zero(value_type a) const noexcept { return a == 0; }
    std::string name() const { return "F_" + std::to_string(q_); }
    std::string format(value_type a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t q_;
};

/// The rationals, with exact arithmetic.
class RationalField {
public:
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const Integer& v) const { return Rational(v); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const;
    bool is_zero(const value_type& a) const { return a == 0; }
    std::string name() const { return "QQ"; }
    std::string format(const value_type& a) const { return to_string(a); }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Dense row-major matrix over a field.
template <class Field>
class ScalarMatrix {
public:
    using value_type = typename Field::value_type;

    ScalarMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const value_type& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
    value_type& at(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }

    bool is_zero() const {
        for (const auto& v : data_) {
            if (!field_.is_zero(v)) return false;
        }
        return true;
    }

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

/// Rank by Gaussian elimination over F_q.
std::size_t rank_exact(const ScalarMatrix<PrimeField>& m);
/// Rank over Q: rows are cleared of denominators, then Bareiss fraction-free
/// elimination runs on the integer matrix.
std::size_t rank_exact(const ScalarMatrix<RationalField>& m);
/// Bareiss fraction-free elimination on an integer matrix (row-major).
std::size_t rank_bareiss(std::vector<std::vector<Integer>> rows);

template <class Field>
ScalarMatrix<Field> multiply(const ScalarMatrix<Field>& a, const ScalarMatrix<Field>& b) {
    if (a.cols() != b.rows()) throw StructuralError("scalar matrix extents do not chain");
    const Field& f = a.field();
    ScalarMatrix<Field> out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto acc = f.zero();
            for (std::size_t t = 0; t < a.cols(); ++t) acc = f.add(acc, f.mul(a.at(i, t), b.at(t, j)));
            out.at(i, j) = acc;
        }
    }
    return out;
}

/// A point of X over Q or F_q, one homogeneous tuple per factor, each tuple in
/// canonical form (first nonzero coordinate equal to one).
template <class Field>
class ProjectivePoint {
public:
    using value_type = typename Field::value_type;

    /// Normalizes each tuple; throws StructuralError on arity mismatch and
    /// DomainError on an all-zero tuple.
    static ProjectivePoint make(Field field, const SpaceSpec& space,
                                std::vector<std::vector<value_type>> coords) {
        if (coords.size() != space.factor_count()) {
            throw StructuralError("point has " + std::to_string(coords.size()) + " factors, space " +
                                  space.to_string() + " has " + std::to_string(space.factor_count()));
        }
        for (std::size_t i = 0; i < coords.size(); ++i) {
            auto& tuple = coords[i];
            if (tuple.size() != static_cast<std::size_t>(space.dim(i)) + 1) {
                throw StructuralError("factor " + std::to_string(i) + " expects " +
                                      std::to_string(space.dim(i) + 1) + " coordinates");
            }
            std::size_t lead = 0;
            while (lead < tuple.size() && field.is_zero(tuple[lead])) ++lead;
            if (lead == tuple.size()) throw DomainError("factor " + std::to_string(i) + " tuple is identically zero");
            const auto scale = field.inv(tuple[lead]);
            for (auto& c : tuple) c = field.mul(c, scale);
        }
        return ProjectivePoint(std::move(field), space, std::move(coords));
    }

    const Field& field() const noexcept { return field_; }
    const SpaceSpec& space() const noexcept { return space_; }
    const std::vector<std::vector<value_type>>& coords() const noexcept { return coords_; }

    std::vector<value_type> flat() const {
        std::vector<value_type> out;
        out.reserve(space_.variable_count());
        for (const auto& tuple : coords_) out.insert(out.end(), tuple.begin(), tuple.end());
        return out;
    }

    /// "[1:0][1:2:0:0]"
    std::string to_string() const {
        std::string s;
        for (const auto& tuple : coords_) {
            s += '[';
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (i) s += ':';
                s += field_.format(tuple[i]);
            }
            s += ']';
        }
        return s;
    }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ == b.coords_ && a.space_ == b.space_;
    }

private:
    ProjectivePoint(Field field, SpaceSpec space, std::vector<std::vector<value_type>> coords)
        : field_(std::move(field)), space_(std::move(space)), coords_(std::move(coords)) {}

    Field field_;
    SpaceSpec space_;
    std::vector<std::vector<value_type>> coords_;
};

/// A PolyMatrix with coefficients pre-reduced into a field, for repeated
/// evaluation during point sweeps.
template <class Field>
class CompiledMatrix {
public:
    using value_type = typename Field::value_type;

    CompiledMatrix(Field field, const PolyMatrix& m)
        : field_(std::move(field)), space_(m.space()), rows_(m.rows()), cols_(m.cols()) {
        entries_.resize(rows_ * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                auto& terms = entries_[i * cols_ + j];
                for (const auto& [exps, coef] : m.at(i, j).terms()) {
                    Term t{field_.from_integer(coef), {}};
                    for (std::size_t v = 0; v < exps.size(); ++v) {
                        if (exps[v] != 0) t.powers.emplace_back(v, exps[v]);
                    }
                    if (!field_.is_zero(t.coef)) terms.push_back(std::move(t));
                }
            }
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    ScalarMatrix<Field> evaluate(const ProjectivePoint<Field>& pt) const {
        if (!(pt.space() == space_)) throw StructuralError("point and matrix live in different spaces");
        return evaluate_flat(pt.flat());
    }

    /// Evaluates at coordinates in flat (factor, coord) order.
    ScalarMatrix<Field> evaluate_flat(const std::vector<value_type>& flat) const {
        if (flat.size() != space_.variable_count()) throw StructuralError("wrong coordinate arity");
        ScalarMatrix<Field> out(field_, rows_, cols_);
        for (std::size_t e = 0; e < entries_.size(); ++e) {
            auto acc = field_.zero();
            for (const auto& t : entries_[e]) {
                auto term = t.coef;
                for (const auto& [var, exp] : t.powers) {
                    for (std::uint32_t k = 0; k < exp; ++k) term = field_.mul(term, flat[var]);
                }
                acc = field_.add(acc, term);
            }
            out.at(e / cols_, e % cols_) = acc;
        }
        return out;
    }

private:
    struct Term {
        value_type coef;
        std::vector<std::pair<std::size_t, std::uint32_t>> powers;
    };

    Field field_;
    SpaceSpec space_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Term>> entries_;
};

/// Entry-wise evaluation of a polynomial matrix at a point.
template <class Field>
ScalarMatrix<Field> evaluate(const PolyMatrix& m, const ProjectivePoint<Field>& pt) {
    return CompiledMatrix<Field>(pt.field(), m).evaluate(pt);
}

template <class Field>
ScalarMatrix<Field> evaluate(const LinearMatrix& m, const ProjectivePoint<Field>& pt) {
    return evaluate(m.entries(), pt);
}

} // namespace monadforge
