#include "monadforge/monad.hpp"

#include "monadforge/errors.hpp"

namespace monadforge {

std::int64_t mu_param(int l, int m, int n) {
    if (l < 0 || m < 0 || n < 0) throw DomainError("group counts must be nonnegative");
    if (l + m + n == 0) throw DomainError("mu is undefined for l = m = n = 0");
    std::int64_t v = 1;
    for (int i = 0; i < l + 2 * m + n - 1; ++i) v = checked_mul(v, 2);
    for (int i = 0; i < n; ++i) v = checked_mul(v, 3);
    return v - 1;
}

std::int64_t ambient_N(const SpaceSpec& space) {
    std::int64_t v = 1;
    for (int a : space.dims()) v = checked_mul(v, a + 1);
    return v - 1;
}

std::vector<std::string> FloystadVerdict::via() const {
    std::vector<std::string> out;
    if (condition1) out.emplace_back("condition-1");
    if (condition2) out.emplace_back("condition-2");
    if (out.empty()) out.emplace_back("none");
    return out;
}

FloystadVerdict floystad_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t nu) {
    FloystadVerdict v;
    v.condition1 = b >= 2 * c + nu - 1 && b >= a + c;
    v.condition2 = b >= a + c + nu;
    return v;
}

std::string to_string(BandConvention c) { return c == BandConvention::reversed ? "reversed" : "paper"; }

BandConvention parse_band_convention(const std::string& text) {
    if (text == "reversed") return BandConvention::reversed;
    if (text == "paper" || text == "paper-literal") return BandConvention::paper_literal;
    throw ParseError("unknown band convention '" + text + "' (expected reversed|paper)");
}

BandedPair build_banded(std::size_t n, std::size_t k, BandConvention convention) {
    if (k < 1) throw DomainError("k must be >= 1");
    const SpaceSpec pn({static_cast<int>(2 * n + 1)});
    const auto x = [&](std::size_t s) { return MultiPoly::variable(pn, Variable{0, s}); };
    const auto y = [&](std::size_t s) { return MultiPoly::variable(pn, Variable{0, n + 1 + s}); };
    const std::size_t width = n + k;

    PolyMatrix b(pn, k, 2 * width);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t s = 0; s <= n; ++s) {
            b.at(i, i + s) = x(s);
            b.at(i, width + i + s) = y(s);
        }
    }

    PolyMatrix a(pn, 2 * width, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t s = 0; s <= n; ++s) {
            const std::size_t idx = convention == BandConvention::reversed ? n - s : s;
            a.at(j + s, j) = -y(idx);
            a.at(width + j + s, j) = x(idx);
        }
    }
    const MultiDegree linear{1};
    return BandedPair{LinearMatrix(std::move(a), linear), LinearMatrix(std::move(b), linear)};
}

MonadParams monad_params(const SpaceSpec& space, std::int64_t k) {
    if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
    MonadParams p;
    p.space = space;
    p.big_n = ambient_N(space);
    if (p.big_n % 2 == 0) {
        throw DomainError("ambient projective dimension N = " + std::to_string(p.big_n) +
                          " is even; banded construction undefined");
    }
    p.k = k;
    p.mu = (p.big_n - 1) / 2;
    p.alpha = k;
    p.gamma = k;
    p.beta = checked_add(checked_mul(2, p.mu), checked_mul(2, k));
    p.floystad_on_x = floystad_check(p.alpha, p.beta, p.gamma, space.dimension());
    p.floystad_on_pn = floystad_check(p.alpha, p.beta, p.gamma, p.big_n);
    return p;
}

Monad build_monad(const SpaceSpec& space, std::int64_t k, BandConvention band, TableConvention table) {
    Monad m;
    m.params = monad_params(space, k);
    if (!m.params.floystad_on_x.satisfied()) {
        throw DomainError("existence conditions fail on " + space.to_string() + " for k = " + std::to_string(k));
    }
    if (!m.params.floystad_on_pn.satisfied()) {
        m.warnings.push_back("existence conditions fail on P^" + std::to_string(m.params.big_n));
    }
    m.band = band;
    m.table = table;
    const auto tbl = segre_table(space, table);
    m.ambient = build_banded(static_cast<std::size_t>(m.params.mu), static_cast<std::size_t>(k), band);
    m.map_a = substitute(m.ambient.a, tbl);
    m.map_b = substitute(m.ambient.b, tbl);
    return m;
}

DisplaySummary display_summary(const MonadParams& p) {
    const auto one = MultiDegree::uniform(p.space.factor_count(), 1);
    DisplaySummary d;
    d.m0 = {p.alpha, -p.alpha * one};
    d.m1 = {p.beta, MultiDegree::uniform(one.size(), 0)};
    d.m2 = {p.gamma, p.gamma * one};
    d.kernel = {p.beta - p.gamma, d.m1.c1 - d.m2.c1};
    d.cokernel = {p.beta - p.alpha, d.m1.c1 - d.m0.c1};
    d.cohomology = {p.beta - p.alpha - p.gamma, d.kernel.c1 - d.m0.c1};
    d.degenerate = d.cohomology.rank <= 0;
    return d;
}

} // namespace monadforge
