#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monadforge/poly.hpp"

namespace monadforge {

/// Dense row-major matrix of MultiPoly entries over one ambient space.
class PolyMatrix {
public:
    PolyMatrix() : PolyMatrix(SpaceSpec({1}), 0, 0) {}
    PolyMatrix(SpaceSpec space, std::size_t rows, std::size_t cols);

    const SpaceSpec& space() const noexcept { return space_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    const MultiPoly& at(std::size_t i, std::size_t j) const;
    MultiPoly& at(std::size_t i, std::size_t j);

    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& m, const PolyMatrix& n);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    SpaceSpec space_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<MultiPoly> entries_;
};

/// A PolyMatrix whose nonzero entries are all homogeneous of one multidegree.
class LinearMatrix {
public:
    LinearMatrix() = default;
    /// Throws StructuralError if some nonzero entry is not homogeneous of `degree`.
    LinearMatrix(PolyMatrix entries, MultiDegree degree);

    const PolyMatrix& entries() const noexcept { return entries_; }
    const MultiDegree& entry_degree() const noexcept { return degree_; }
    const SpaceSpec& space() const noexcept { return entries_.space(); }
    std::size_t rows() const noexcept { return entries_.rows(); }
    std::size_t cols() const noexcept { return entries_.cols(); }
    bool empty() const noexcept { return entries_.empty(); }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }

    /// Copy with column `col` replaced by zeros.
    LinearMatrix with_zeroed_column(std::size_t col) const;

private:
    PolyMatrix entries_;
    MultiDegree degree_;
};

/// Exact symbolic product M * N; entries of the result are homogeneous of the
/// summed degree wherever nonzero.
PolyMatrix mat_mul(const LinearMatrix& m, const LinearMatrix& n);

/// One row per line, entries separated by " | ".
std::string to_string(const PolyMatrix& m);

} // namespace monadforge
