#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monadforge/integer.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

/// Dimensions h^0 .. h^{dim X} of the cohomology of a line bundle.
class CohomTable {
public:
    CohomTable() = default;
    explicit CohomTable(std::vector<Integer> h) : h_(std::move(h)) {}
    static CohomTable zeros(std::size_t top_degree) { return CohomTable(std::vector<Integer>(top_degree + 1)); }

    std::size_t size() const noexcept { return h_.size(); }
    /// Zero outside 0..size()-1.
    Integer operator[](std::size_t t) const { return t < h_.size() ? h_[t] : Integer(0); }
    const std::vector<Integer>& values() const noexcept { return h_; }

    /// sum (-1)^t h^t
    Integer euler() const;
    bool all_zero() const;

    friend bool operator==(const CohomTable&, const CohomTable&) = default;

private:
    std::vector<Integer> h_;
};

/// Cohomology of O(d) on P^n: h^0 = C(n+d, n), h^n = C(-d-1, n), zero between.
/// Results are memoized; the cache is safe for concurrent readers.
CohomTable bott_vector(int n, std::int64_t d);

/// Cohomology of O_X(twist) by Kuenneth: convolution of the factor tables.
CohomTable kunneth_table(const SpaceSpec& space, const MultiDegree& twist);

/// Alternating sum of kunneth_table(space, twist).
Integer euler_characteristic(const SpaceSpec& space, const MultiDegree& twist);

struct VanishingReport {
    /// The twist examined, -positive_data.
    MultiDegree twist;
    CohomTable table;
    /// vanishes[p] iff h^p = 0
    std::vector<bool> vanishes;
    /// Degrees p < dim X - 1 with h^p != 0.
    std::vector<std::size_t> counterexamples;
};

/// Tests the claim that h^p(O_X(-data)) = 0 for 0 <= p < dim X - 1 whenever
/// every group of `positive_data` has a positive sum. Groups come from the
/// space's labels. Throws DomainError when some group sum is not positive.
VanishingReport check_vanishing(const SpaceSpec& space, const MultiDegree& positive_data);

/// Sum of the entries of `v` over each factor group.
std::vector<std::int64_t> group_sums(const SpaceSpec& space, const MultiDegree& v);

/// h^0 of Lambda^q(O_X(D)^{+b}) = O_X(qD)^{+C(b,q)}, i.e. C(b,q) h^0(O_X(qD)).
/// Throws DomainError unless 1 <= q <= b.
Integer h0_wedge_linebundle_sum(const SpaceSpec& space, const MultiDegree& twist, std::int64_t b,
                                std::int64_t q);

} // namespace monadforge
