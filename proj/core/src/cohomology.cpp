#include "monadforge/cohomology.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "monadforge/errors.hpp"

namespace monadforge {

Integer CohomTable::euler() const {
    Integer chi = 0;
    for (std::size_t t = 0; t < h_.size(); ++t) chi += (t % 2 == 0) ? h_[t] : Integer(-h_[t]);
    return chi;
}

bool CohomTable::all_zero() const {
    for (const auto& v : h_) {
        if (v != 0) return false;
    }
    return true;
}

namespace {

CohomTable compute_bott(int n, std::int64_t d) {
    std::vector<Integer> h(static_cast<std::size_t>(n) + 1);
    if (d >= 0) h[0] = binomial(n + d, n);
    if (-d - n - 1 >= 0) h[static_cast<std::size_t>(n)] = binomial(-d - 1, n);
    return CohomTable(std::move(h));
}

class BottCache {
public:
    CohomTable get(int n, std::int64_t d) {
        const auto key = std::make_pair(n, d);
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        auto value = compute_bott(n, d);
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<int, std::int64_t>, CohomTable> cache_;
};

BottCache& bott_cache() {
    static BottCache cache;
    return cache;
}

void require_twist(const SpaceSpec& space, const MultiDegree& twist) {
    if (twist.size() != space.factor_count()) {
        throw StructuralError("twist " + twist.to_string() + " has " + std::to_string(twist.size()) +
                              " entries, space " + space.to_string() + " has " +
                              std::to_string(space.factor_count()) + " factors");
    }
}

} // namespace

CohomTable bott_vector(int n, std::int64_t d) {
    if (n < 1) throw DomainError("bott_vector needs n >= 1");
    return bott_cache().get(n, d);
}

CohomTable kunneth_table(const SpaceSpec& space, const MultiDegree& twist) {
    require_twist(space, twist);
    std::vector<Integer> acc{1};
    for (std::size_t f = 0; f < space.factor_count(); ++f) {
        const auto factor = bott_vector(space.dim(f), twist[f]);
        std::vector<Integer> next(acc.size() + factor.size() - 1);
        for (std::size_t p = 0; p < acc.size(); ++p) {
            if (acc[p] == 0) continue;
            for (std::size_t q = 0; q < factor.size(); ++q) {
                if (factor[q] != 0) next[p + q] += acc[p] * factor[q];
            }
        }
        acc = std::move(next);
    }
    return CohomTable(std::move(acc));
}

Integer euler_characteristic(const SpaceSpec& space, const MultiDegree& twist) {
    return kunneth_table(space, twist).euler();
}

std::vector<std::int64_t> group_sums(const SpaceSpec& space, const MultiDegree& v) {
    require_twist(space, v);
    std::vector<std::int64_t> sums;
    for (const auto& group : space.groups()) {
        std::int64_t s = 0;
        for (auto f : group) s += v[f];
        sums.push_back(s);
    }
    return sums;
}

VanishingReport check_vanishing(const SpaceSpec& space, const MultiDegree& positive_data) {
    const auto sums = group_sums(space, positive_data);
    for (std::size_t g = 0; g < sums.size(); ++g) {
        if (sums[g] <= 0) {
            throw DomainError("group " + std::to_string(g) + " of " + positive_data.to_string() +
                              " has non-positive sum " + std::to_string(sums[g]));
        }
    }
    VanishingReport r;
    r.twist = -positive_data;
    r.table = kunneth_table(space, r.twist);
    const auto top = static_cast<std::size_t>(space.dimension());
    for (std::size_t p = 0; p <= top; ++p) {
        const bool zero = r.table[p] == 0;
        r.vanishes.push_back(zero);
        if (!zero && p + 1 < top) r.counterexamples.push_back(p);
    }
    return r;
}

Integer h0_wedge_linebundle_sum(const SpaceSpec& space, const MultiDegree& twist, std::int64_t b, std::int64_t q) {
    require_twist(space, twist);
    if (q < 1 || q > b) {
        throw DomainError("exterior power " + std::to_string(q) + " out of range 1.." + std::to_string(b));
    }
    Integer h0 = 1;
    for (std::size_t f = 0; f < space.factor_count(); ++f) {
        const std::int64_t d = checked_mul(q, twist[f]);
        if (d < 0) return 0;
        h0 *= binomial(space.dim(f) + d, space.dim(f));
    }
    return binomial(b, q) * h0;
}

} // namespace monadforge
