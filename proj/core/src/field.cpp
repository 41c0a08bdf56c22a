#include "monadforge/field.hpp"

#include <utility>

namespace monadforge {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (q > max_modulus) throw DomainError("modulus " + std::to_string(q) + " exceeds the supported bound");
    if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
}

PrimeField::value_type PrimeField::from_integer(const Integer& v) const {
    Integer r = v % q_;
    if (r < 0) r += q_;
    return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a % q_ == 0) throw DomainError("division by zero in " + name());
    value_type result = 1;
    value_type base = a % q_;
    for (std::uint64_t e = q_ - 2; e; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

RationalField::value_type RationalField::inv(const value_type& a) const {
    if (a == 0) throw DomainError("division by zero in QQ");
    return 1 / a;
}

std::size_t rank_exact(const ScalarMatrix<PrimeField>& m) {
    const auto& f = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.at(i, j);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[rank * cols + j]);
        }
        const auto inv = f.inv(a[rank * cols + c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const auto factor = f.mul(a[i * cols + c], inv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[rank * cols + j]));
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_bareiss(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a.front().size();
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        const Integer& pivot = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (pivot * a[i][j] - a[i][c] * a[rank][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(const ScalarMatrix<RationalField>& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer lcm_den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& v = m.at(i, j);
            rows[i][j] = numerator(v) * (lcm_den / denominator(v));
        }
    }
    return rank_bareiss(std::move(rows));
}

} // namespace monadforge
