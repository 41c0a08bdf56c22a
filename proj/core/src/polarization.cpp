#include "monadforge/polarization.hpp"

#include "monadforge/errors.hpp"

namespace monadforge {

ChowTruncation::ChowTruncation(SpaceSpec space) : space_(std::move(space)) {
    stride_.resize(space_.factor_count());
    for (std::size_t f = space_.factor_count(); f-- > 0;) {
        stride_[f] = size_;
        size_ *= static_cast<std::size_t>(space_.dim(f)) + 1;
    }
    const auto l = divisor(MultiDegree::uniform(space_.factor_count(), 1));
    l_power_ = power(l, static_cast<unsigned>(space_.dimension() - 1));
}

std::size_t ChowTruncation::index_of(const std::vector<unsigned>& exps) const {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < exps.size(); ++f) idx += exps[f] * stride_[f];
    return idx;
}

ChowTruncation::Element ChowTruncation::one() const {
    Element e(size_);
    e[0] = 1;
    return e;
}

ChowTruncation::Element ChowTruncation::divisor(const MultiDegree& d) const {
    if (d.size() != space_.factor_count()) throw StructuralError("divisor has the wrong number of factors");
    Element e(size_);
    for (std::size_t f = 0; f < d.size(); ++f) e[stride_[f]] = d[f];
    return e;
}

ChowTruncation::Element ChowTruncation::multiply(const Element& u, const Element& v) const {
    Element out(size_);
    const std::size_t r = space_.factor_count();
    std::vector<unsigned> eu(r), ev(r), ew(r);
    auto decode = [&](std::size_t idx, std::vector<unsigned>& e) {
        for (std::size_t f = 0; f < r; ++f) {
            e[f] = static_cast<unsigned>(idx / stride_[f]);
            idx %= stride_[f];
        }
    };
    for (std::size_t i = 0; i < size_; ++i) {
        if (u[i] == 0) continue;
        decode(i, eu);
        for (std::size_t j = 0; j < size_; ++j) {
            if (v[j] == 0) continue;
            decode(j, ev);
            bool alive = true;
            for (std::size_t f = 0; f < r && alive; ++f) {
                ew[f] = eu[f] + ev[f];
                alive = ew[f] <= static_cast<unsigned>(space_.dim(f));
            }
            if (alive) out[index_of(ew)] += u[i] * v[j];
        }
    }
    return out;
}

ChowTruncation::Element ChowTruncation::power(const Element& u, unsigned e) const {
    Element acc = one();
    for (unsigned i = 0; i < e; ++i) acc = multiply(acc, u);
    return acc;
}

Integer ChowTruncation::top_coefficient(const Element& u) const { return u[size_ - 1]; }

Integer ChowTruncation::degree_against_polarization(const MultiDegree& d) const {
    return top_coefficient(multiply(divisor(d), l_power_));
}

Integer ChowTruncation::polarization_volume() const {
    return degree_against_polarization(MultiDegree::uniform(space_.factor_count(), 1));
}

Integer delta_L(const SpaceSpec& space, const MultiDegree& divisor) {
    return ChowTruncation(space).degree_against_polarization(divisor);
}

Integer degree_L(const SpaceSpec& space, const BundleSummary& bundle) { return delta_L(space, bundle.c1); }

Rational slope_L(const SpaceSpec& space, const BundleSummary& bundle) {
    if (bundle.rank < 1) throw DomainError("slope needs rank >= 1");
    return Rational(degree_L(space, bundle), Integer(bundle.rank));
}

Normalization normalize_L(const SpaceSpec& space, const BundleSummary& bundle) {
    const ChowTruncation chow(space);
    auto first = MultiDegree::uniform(space.factor_count(), 0);
    first[0] = 1;
    Normalization n;
    n.d = chow.degree_against_polarization(first);
    if (n.d <= 0) throw DomainError("delta_L(1,0,...,0) must be positive");
    if (bundle.rank < 1) throw DomainError("normalization needs rank >= 1");
    const Integer deg = chow.degree_against_polarization(bundle.c1);
    n.k = ceil(Rational(deg, n.d * bundle.rank));
    n.normalized_c1 = bundle.c1;
    n.normalized_c1[0] -= static_cast<std::int64_t>(n.k * bundle.rank);
    n.normalized_degree = chow.degree_against_polarization(n.normalized_c1);
    if (n.normalized_degree > 0 || n.normalized_degree < 1 - n.d * bundle.rank) {
        throw ConsistencyError("normalized degree " + to_string(n.normalized_degree) + " leaves the window [" +
                               to_string(Integer(1 - n.d * bundle.rank)) + ", 0]");
    }
    return n;
}

HoppeThreshold hoppe_threshold(const SpaceSpec& space, const BundleSummary& bundle, std::int64_t s,
                               const MultiDegree& twist) {
    if (s < 1 || s > bundle.rank - 1) {
        throw DomainError("s = " + std::to_string(s) + " outside 1.." + std::to_string(bundle.rank - 1));
    }
    HoppeThreshold h;
    h.delta = delta_L(space, twist);
    h.bound = -Rational(s) * slope_L(space, bundle);
    h.strict = Rational(h.delta) < h.bound;
    h.weak = Rational(h.delta) <= h.bound;
    return h;
}

} // namespace monadforge
