#include "monadforge/certificates.hpp"

#include <algorithm>
#include <map>

#include "monadforge/errors.hpp"
#include "monadforge/field.hpp"

namespace monadforge {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::steps_verified: return "proof steps verified";
    case Verdict::counterexample: return "counterexample to a step";
    case Verdict::not_covered: return "not covered";
    case Verdict::needs_review: return "needs review";
    }
    return "needs review";
}

std::vector<std::string> verdict_vocabulary() {
    return {to_string(Verdict::steps_verified), to_string(Verdict::counterexample), to_string(Verdict::not_covered),
            to_string(Verdict::needs_review)};
}

std::string to_string(Coverage c) {
    switch (c) {
    case Coverage::positive_sum_bound: return "positive-sum bound";
    case Coverage::direct_sections: return "direct section count";
    case Coverage::none: return "not covered";
    }
    return "not covered";
}

namespace {

// Calls fn on every vector in [-radius, radius]^r in increasing lexicographic order.
template <class Fn>
void for_each_in_box(std::size_t r, std::int64_t radius, Fn fn) {
    MultiDegree v = MultiDegree::uniform(r, -radius);
    while (true) {
        fn(static_cast<const MultiDegree&>(v));
        std::size_t pos = r;
        while (pos > 0) {
            --pos;
            if (v[pos] < radius) {
                ++v[pos];
                break;
            }
            v[pos] = -radius;
            if (pos == 0) return;
        }
        if (r == 0) return;
    }
}

bool all_group_sums_positive(const SpaceSpec& space, const MultiDegree& v) {
    const auto sums = group_sums(space, v);
    return std::all_of(sums.begin(), sums.end(), [](std::int64_t s) { return s > 0; });
}

} // namespace

BundleSummary kernel_bundle(const MonadParams& p) {
    return {p.beta - p.gamma, MultiDegree::uniform(p.space.factor_count(), -p.gamma)};
}

BundleSummary cohomology_bundle(const MonadParams& p) {
    return {p.beta - p.alpha - p.gamma, MultiDegree::uniform(p.space.factor_count(), p.alpha - p.gamma)};
}

StabilityCertificate stability_certificate(const MonadParams& params, std::int64_t radius, std::int64_t q_cap) {
    if (radius < 1) throw DomainError("box radius must be >= 1");
    if (q_cap < 1) throw DomainError("q cap must be >= 1");
    const auto& space = params.space;
    StabilityCertificate c;
    c.params = params;
    c.radius = radius;
    c.q_cap = q_cap;
    const auto kernel = kernel_bundle(params);
    c.q_max = std::min(kernel.rank - 1, q_cap);
    c.degree_kernel = degree_L(space, kernel);
    c.degree_negative = c.degree_kernel < 0;
    c.cross_check = true;

    for_each_in_box(space.factor_count(), radius, [&](const MultiDegree& f) {
        if (all_group_sums_positive(space, f)) {
            for (std::int64_t q = 1; q <= c.q_max; ++q) {
                StabilityBound b;
                b.q = q;
                b.twist = f;
                b.line_twist = -q * f;
                b.bound = h0_wedge_linebundle_sum(space, -f, params.beta, q);
                b.kunneth_bound = binomial(params.beta, q) * kunneth_table(space, b.line_twist)[0];
                c.cross_check = c.cross_check && b.bound == b.kunneth_bound;
                c.bounds.push_back(std::move(b));
            }
        }
        const auto sums = group_sums(space, f);
        const bool covered = std::all_of(sums.begin(), sums.end(), [](std::int64_t s) { return s < 0; });
        if (!covered && delta_L(space, f) <= 0) c.not_covered.push_back(f);
    });

    const bool all_zero =
        std::all_of(c.bounds.begin(), c.bounds.end(), [](const StabilityBound& b) { return b.bound == 0; });
    if (!all_zero) {
        c.verdict = Verdict::counterexample;
    } else if (c.bounds.empty() || !c.cross_check || !c.degree_negative) {
        c.verdict = Verdict::needs_review;
    } else {
        c.verdict = Verdict::steps_verified;
    }
    return c;
}

SimplicityCertificate simplicity_certificate(const MonadParams& params) {
    const auto& space = params.space;
    const auto r = space.factor_count();
    SimplicityCertificate c;
    c.space = space;
    c.k = params.k;
    const auto minus1 = MultiDegree::uniform(r, -1);
    const auto minus2 = MultiDegree::uniform(r, -2);
    c.facts.push_back({"h0(O_X(-1,...,-1)) = 0", minus1, 0, kunneth_table(space, minus1)[0]});
    c.facts.push_back({"h0(O_X(-2,...,-2)) = 0", minus2, 0, kunneth_table(space, minus2)[0]});
    c.facts.push_back({"h1(O_X(-2,...,-2)) = 0", minus2, 1, kunneth_table(space, minus2)[1]});
    c.chain = "h0(T*(-1,...,-1)) = h1(T*(-1,...,-1)) = 0 gives "
              "1 <= h0(T (x) T*) <= h0(E (x) E*) <= h0(E (x) T*) <= 1";

    bool any_failure = false;
    bool only_top_degree = true;
    for (const auto& f : c.facts) {
        if (f.holds()) continue;
        any_failure = true;
        only_top_degree = only_top_degree && f.degree == static_cast<std::size_t>(space.dimension());
    }
    if (!any_failure) c.verdict = Verdict::steps_verified;
    else c.verdict = only_top_degree ? Verdict::needs_review : Verdict::counterexample;
    return c;
}

std::vector<HoppeObligation> hoppe_obligations(const SpaceSpec& space, const BundleSummary& bundle,
                                               std::int64_t radius, const HoppeOptions& options) {
    if (bundle.rank < 2) throw DomainError("Hoppe obligations need rank >= 2");
    if (radius < 0) throw DomainError("box radius must be >= 0");
    const auto s_max = std::min(bundle.rank - 1, options.s_cap);
    std::vector<HoppeObligation> out;
    for (std::int64_t s = 1; s <= s_max; ++s) {
        for_each_in_box(space.factor_count(), radius, [&](const MultiDegree& b) {
            const auto th = hoppe_threshold(space, bundle, s, b);
            if (!th.weak) return;
            HoppeObligation o;
            o.s = s;
            o.twist = b;
            o.delta = th.delta;
            o.bound = th.bound;
            o.strict = th.strict;
            o.weak = th.weak;
            const auto sums = group_sums(space, b);
            const bool zero = std::all_of(b.begin(), b.end(), [](std::int64_t v) { return v == 0; });
            if (std::all_of(sums.begin(), sums.end(), [](std::int64_t v) { return v < 0; })) {
                o.coverage = Coverage::positive_sum_bound;
            } else if (s == 1 && zero && options.sections_vanish) {
                o.coverage = Coverage::direct_sections;
            }
            out.push_back(std::move(o));
        });
    }
    return out;
}

Integer kernel_sections(const Monad& monad) {
    const auto& b = monad.map_b;
    std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            for (const auto& term : b.at(i, j).terms()) row_of.try_emplace({i, term.first}, row_of.size());
        }
    }
    std::vector<std::vector<Integer>> coeffs(row_of.size(), std::vector<Integer>(b.cols()));
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            for (const auto& [exps, coef] : b.at(i, j).terms()) coeffs[row_of.at({i, exps})][j] = coef;
        }
    }
    return Integer(b.cols()) - Integer(rank_bareiss(std::move(coeffs)));
}

Integer cohomology_euler_characteristic(const MonadParams& p) {
    const auto r = p.space.factor_count();
    return Integer(p.beta) * euler_characteristic(p.space, MultiDegree::uniform(r, 0)) -
           Integer(p.alpha) * euler_characteristic(p.space, MultiDegree::uniform(r, -1)) -
           Integer(p.gamma) * euler_characteristic(p.space, MultiDegree::uniform(r, 1));
}

} // namespace monadforge
