#include "monadforge/poly_matrix.hpp"

#include "monadforge/errors.hpp"

namespace monadforge {

PolyMatrix::PolyMatrix(SpaceSpec space, std::size_t rows, std::size_t cols)
    : space_(space), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(space)) {}

const MultiPoly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
    return entries_[i * cols_ + j];
}

MultiPoly& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
    return entries_[i * cols_ + j];
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

PolyMatrix operator*(const PolyMatrix& m, const PolyMatrix& n) {
    if (m.cols_ != n.rows_) {
        throw StructuralError("cannot multiply " + std::to_string(m.rows_) + "x" + std::to_string(m.cols_) + " by " +
                              std::to_string(n.rows_) + "x" + std::to_string(n.cols_));
    }
    if (!(m.space_ == n.space_)) throw StructuralError("matrices live over different spaces");
    PolyMatrix out(m.space_, m.rows_, n.cols_);
    for (std::size_t i = 0; i < m.rows_; ++i) {
        for (std::size_t j = 0; j < n.cols_; ++j) {
            MultiPoly acc(m.space_);
            for (std::size_t t = 0; t < m.cols_; ++t) {
                const auto& u = m.entries_[i * m.cols_ + t];
                const auto& v = n.entries_[t * n.cols_ + j];
                if (u.is_zero() || v.is_zero()) continue;
                acc += u * v;
            }
            out.entries_[i * out.cols_ + j] = std::move(acc);
        }
    }
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.space_ == b.space_ && a.entries_ == b.entries_;
}

LinearMatrix::LinearMatrix(PolyMatrix entries, MultiDegree degree)
    : entries_(std::move(entries)), degree_(std::move(degree)) {
    if (degree_.size() != entries_.space().factor_count()) {
        throw StructuralError("entry degree has the wrong number of factors");
    }
    for (std::size_t i = 0; i < entries_.rows(); ++i) {
        for (std::size_t j = 0; j < entries_.cols(); ++j) {
            const auto& e = entries_.at(i, j);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous() || *e.multidegree() != degree_) {
                throw StructuralError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not homogeneous of degree " + degree_.to_string());
            }
        }
    }
}

LinearMatrix LinearMatrix::with_zeroed_column(std::size_t col) const {
    if (col >= cols()) throw StructuralError("column out of range");
    PolyMatrix m = entries_;
    for (std::size_t i = 0; i < rows(); ++i) m.at(i, col) = MultiPoly(space());
    return LinearMatrix(std::move(m), degree_);
}

PolyMatrix mat_mul(const LinearMatrix& m, const LinearMatrix& n) { return m.entries() * n.entries(); }

std::string to_string(const PolyMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += " | ";
            s += to_string(m.at(i, j));
        }
        s += '\n';
    }
    return s;
}

} // namespace monadforge
