#pragma once

#include <cstdint>
#include <vector>

#include "monadforge/integer.hpp"
#include "monadforge/space.hpp"

namespace monadforge {

/// The Chow ring Z[H_1..H_r] / (H_i^{a_i+1}) of X, with the top class
/// prod H_i^{a_i} of degree one. Elements are dense coefficient arrays indexed
/// by mixed radix over exponents.
class ChowTruncation {
public:
    using Element = std::vector<Integer>;

    explicit ChowTruncation(SpaceSpec space);

    const SpaceSpec& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return size_; }

    Element one() const;
    /// sum d_i H_i
    Element divisor(const MultiDegree& d) const;
    Element multiply(const Element& u, const Element& v) const;
    Element power(const Element& u, unsigned e) const;
    /// Coefficient of the top class.
    Integer top_coefficient(const Element& u) const;

    /// L^{dim X} for L = H_1 + ... + H_r.
    Integer polarization_volume() const;
    /// (sum d_i H_i) * L^{dim X - 1}
    Integer degree_against_polarization(const MultiDegree& d) const;

private:
    std::size_t index_of(const std::vector<unsigned>& exps) const;

    SpaceSpec space_;
    std::size_t size_ = 1;
    std::vector<std::size_t> stride_;
    Element l_power_;  // L^{dim X - 1}
};

/// deg_L O_X(divisor) for L = O(1,...,1).
Integer delta_L(const SpaceSpec& space, const MultiDegree& divisor);

struct BundleSummary {
    std::int64_t rank = 1;
    MultiDegree c1;
};

Integer degree_L(const SpaceSpec& space, const BundleSummary& bundle);
/// deg_L / rank, exact. Throws DomainError when rank < 1.
Rational slope_L(const SpaceSpec& space, const BundleSummary& bundle);

struct Normalization {
    /// delta_L(1,0,...,0)
    Integer d;
    /// ceil(slope / d)
    Integer k;
    /// c1 of bundle(-k, 0, ..., 0)
    MultiDegree normalized_c1;
    Integer normalized_degree;
};

/// L-normalization by a first-factor twist. Throws ConsistencyError if the
/// result leaves the window 1 - d*rank <= deg <= 0.
Normalization normalize_L(const SpaceSpec& space, const BundleSummary& bundle);

struct HoppeThreshold {
    Integer delta;
    /// -s * slope
    Rational bound;
    /// delta < bound: the twist carries a stability obligation
    bool strict = false;
    /// delta <= bound: the twist carries a semistability obligation
    bool weak = false;
};

/// Compares delta_L(twist) with -s * slope_L(bundle). Throws DomainError unless
/// 1 <= s <= rank - 1.
HoppeThreshold hoppe_threshold(const SpaceSpec& space, const BundleSummary& bundle, std::int64_t s,
                               const MultiDegree& twist);

} // namespace monadforge
