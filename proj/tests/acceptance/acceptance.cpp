// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// the allowed budget. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monadforge/certificates.hpp"
#include "monadforge/cohomology.hpp"
#include "monadforge/monad.hpp"
#include "monadforge/polarization.hpp"
#include "monadforge/runner.hpp"
#include "monadforge/segre.hpp"
#include "monadforge/verify.hpp"
#include "oracles.hpp"

using namespace monadforge;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
};

const std::vector<std::vector<int>> kShipped{{1, 3}, {1, 2, 3}, {1, 3, 5}};

std::string name(const std::vector<int>& dims) { return SpaceSpec(dims).to_string(); }

MultiPoly from_word(const SpaceSpec& x, const std::string& word) {
    auto p = MultiPoly::constant(x, 1);
    for (std::size_t i = 0; i + 1 < word.size(); i += 2)
        p = p * MultiPoly::variable(x, {static_cast<std::size_t>(word[i] - 'a'), static_cast<std::size_t>(word[i + 1] - '0')});
    return p;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer chi_oracle(const std::vector<int>& dims, std::int64_t d) {
    const auto h = oracle::kunneth(dims, std::vector<std::int64_t>(dims.size(), d));
    Integer e = 0;
    for (std::size_t p = 0; p < h.size(); ++p) e += p % 2 ? -h[p] : h[p];
    return e;
}

// 1
void parameter_identities(Check& c) {
    for (int l = 0; l <= 3; ++l) {
        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; n <= 3; ++n) {
                if (l + m + n == 0) continue;
                Integer prod = 1;
                for (int i = 0; i < l; ++i) prod *= 2;
                for (int i = 0; i < m; ++i) prod *= 4;
                for (int i = 0; i < n; ++i) prod *= 6;
                const auto mu = mu_param(l, m, n);
                const auto tag = "(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
                c.expect(Integer(mu) == prod / 2 - 1, "mu " + tag);
                const auto p = monad_params(SpaceSpec::from_groups(l, m, n), 1);
                c.expect(p.big_n == 2 * mu + 1 && ambient_N(p.space) == 2 * mu + 1, "N " + tag);
            }
        }
    }
}

// 2
void segre_fidelity(Check& c) {
    const char* const printed[24] = {
        "a0b0c0", "a0b0c1", "a0b0c2", "a0b0c3", "a0b1c0", "a0b1c1", "a0b1c2", "a0b1c3",
        "a0b2c0", "a0b2c1", "a0b2c2", "a0b2c3", "a1b0c0", "a1b0c1", "a1b0c2", "a1b0c3",
        "a1b1c0", "a1b1c1", "a1b1c2", "a1b1c3", "a1b2c0", "a1b2c1", "a1b2c2", "a1b2c3",
    };
    const SpaceSpec x({1, 2, 3});
    const auto t = segre_table(x, TableConvention::clean);
    c.expect(t.size() == 24, "(1,2,3) table has 24 rows");
    for (std::size_t pn = 0; pn < 24 && pn < t.size(); ++pn)
        c.expect(t.image(pn) == from_word(x, printed[pn]), "row " + pn_coordinate_name(pn, t.mu()));
    c.expect(pn_coordinate_name(5, t.mu()) == "x_5" && t.image(5) == from_word(x, "a0b1c1"), "x_5 -> a0b1c1");
    c.expect(pn_coordinate_name(23, t.mu()) == "y_11" && t.image(23) == from_word(x, "a1b2c3"), "y_11 -> a1b2c3");

    const SpaceSpec y({1, 3, 5});
    const auto u = segre_table(y, TableConvention::clean);
    c.expect(u.image(0) == from_word(y, "a0b0c0"), "(1,3,5) first row x_0 -> a0b0c0");
    c.expect(u.image(u.size() - 1) == from_word(y, "a1b3c5"), "(1,3,5) last row y_mu -> a1b3c5");
}

// 3
void composition_zero(Check& c) {
    for (const auto& dims : kShipped) {
        for (std::int64_t k = 1; k <= 3; ++k) {
            for (const auto band : {BandConvention::reversed, BandConvention::paper_literal}) {
                const auto m = build_monad(SpaceSpec(dims), k, band);
                c.expect(check_composition_zero(m), name(dims) + " k=" + std::to_string(k) + " " + to_string(band));
                if (band == BandConvention::paper_literal && k >= 2) {
                    const auto& pair = m.ambient;
                    c.expect(!check_composition_zero(pair), "literal bands vanish on P^N for " + name(dims));
                    // Oracle for entry (0,1): sum_s x_s y_{s+1} - x_{s+1} y_s.
                    const auto n = static_cast<std::size_t>(m.params.mu);
                    const SpaceSpec pn({static_cast<int>(2 * n + 1)});
                    MultiPoly expect(pn);
                    for (std::size_t s = 0; s < n; ++s) {
                        const auto xv = [&](std::size_t i) { return MultiPoly::variable(pn, {0, i}); };
                        const auto yv = [&](std::size_t i) { return MultiPoly::variable(pn, {0, n + 1 + i}); };
                        expect += xv(s) * yv(s + 1) - xv(s + 1) * yv(s);
                    }
                    const auto w = composition_witness(pair.b, pair.a);
                    c.expect(w && w->row == 0 && w->col == 1 && w->entry == to_string(expect),
                             "P^N witness entry for " + name(dims));
                }
            }
        }
    }
    // The P^3 display: x0 y1 - x1 y0 literally.
    const auto p3 = build_banded(1, 2, BandConvention::paper_literal);
    const auto w = composition_witness(p3.b, p3.a);
    c.expect(w && w->entry == "x0_0*x0_3 - x0_1*x0_2", "P^3 witness is x_0 y_1 - x_1 y_0");
}

// 4
void fiberwise_rank(Check& c) {
    for (const auto& dims : {std::vector<int>{1, 3}, std::vector<int>{1, 2, 3}}) {
        for (std::int64_t k = 1; k <= 2; ++k) {
            const auto m = build_monad(SpaceSpec(dims), k);
            std::vector<VerificationReport> reports;
            for (const std::uint64_t q : {2u, 3u}) {
                const auto r = exhaustive_fiber_check(m, q);
                c.expect(r.valid() && r.points_checked == *point_count(SpaceSpec(dims), q),
                         name(dims) + " k=" + std::to_string(k) + " over " + r.field);
                reports.push_back(r);
            }
            c.expect(evidence_label(reports) == "verified at desk scale", "evidence label " + name(dims));

            auto broken = m;
            broken.map_b = broken.map_b.with_zeroed_column(0);
            const auto r = exhaustive_fiber_check(broken, 2);
            c.expect(!r.valid() && r.failure_count > 0 && !r.failures.empty() && !r.failures.front().point.empty(),
                     "fault injection caught on " + name(dims));
        }
    }
    c.expect(*point_count(SpaceSpec({1, 3}), 2) == 45, "45 points on P1xP3 over F_2");
    c.expect(*point_count(SpaceSpec({1, 3, 5}), 3) == 58240, "58240 points on P1xP3xP5 over F_3");
}

// 5
void cohomology_engine(Check& c) {
    for (int n = 1; n <= 5; ++n)
        for (std::int64_t d = 0; d <= 6; ++d)
            for (int t = 0; t <= n; ++t)
                c.expect(bott_vector(n, d)[t] == oracle::bott(n, d, t), "bott n=" + std::to_string(n) + " d=" + std::to_string(d));
    const SpaceSpec x({1, 3});
    for (std::int64_t a = -7; a <= 7; ++a) {
        for (std::int64_t b = -7; b <= 7; ++b) {
            const auto h = kunneth_table(x, MultiDegree{a, b});
            const auto dual = kunneth_table(x, MultiDegree{-a - 2, -b - 4});
            for (std::size_t p = 0; p <= 4; ++p)
                c.expect(h[p] == dual[4 - p], "Serre duality at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    const auto h = kunneth_table(SpaceSpec({1, 3, 5}), MultiDegree{-2, -4, -6});
    bool shape = h.size() == 10 && h[9] == 1;
    for (std::size_t p = 0; p < 9; ++p) shape = shape && h[p] == 0;
    c.expect(shape, "kunneth((1,3,5), (-2,-4,-6)) = (0,...,0,1)");
}

// 6
void vanishing_audit(Check& c) {
    std::mt19937_64 rng(6);
    const SpaceSpec x({1, 3, 5});
    for (int i = 0; i < 100; ++i) {
        const MultiDegree pos{1 + static_cast<std::int64_t>(rng() % 7), 1 + static_cast<std::int64_t>(rng() % 7),
                              1 + static_cast<std::int64_t>(rng() % 7)};
        const auto r = check_vanishing(x, pos);
        const auto expect = oracle::kunneth(x.dims(), {-pos[0], -pos[1], -pos[2]});
        c.expect(r.table[0] == 0 && r.table[1] == 0 && expect[0] == 0 && expect[1] == 0,
                 "h0 = h1 = 0 at " + r.twist.to_string());
    }
    const auto y = SpaceSpec::from_groups(3, 1, 1);
    const auto r = check_vanishing(y, MultiDegree{2, 0, 0, 4, 6});
    c.expect(r.table[9] == 1 && r.counterexamples == std::vector<std::size_t>{9} && 9 < y.dimension() - 1,
             "h9 != 0 with 9 < dim X - 1 on (1,1,1,3,5)");
}

// 7
void degree_slope(Check& c) {
    std::vector<std::vector<int>> spaces;
    for (int a = 1; a <= 5; ++a) spaces.push_back({a});
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 5; ++b) spaces.push_back({a, b});
    for (int a = 1; a <= 1; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int d = b; d <= 5; ++d) spaces.push_back({a, b, d});
    for (const auto& dims : spaces) {
        const SpaceSpec x(dims);
        const auto counts = oracle::top_word_counts(dims);
        std::vector<std::int64_t> v(dims.size(), -3);
        while (true) {
            Integer expect = 0;
            for (std::size_t j = 0; j < dims.size(); ++j) expect += counts[j] * v[j];
            c.expect(delta_L(x, MultiDegree(v)) == expect, "delta_L on " + x.to_string() + " at " + MultiDegree(v).to_string());
            std::size_t i = 0;
            while (i < v.size() && v[i] == 3) v[i++] = -3;
            if (i == v.size()) break;
            ++v[i];
        }
    }
    for (const auto& dims : kShipped) {
        const SpaceSpec x(dims);
        Integer closed = factorial(x.dimension());
        for (const int a : dims) closed /= factorial(a);
        for (std::int64_t k = 1; k <= 3; ++k) {
            const auto deg = degree_L(x, kernel_bundle(monad_params(x, k)));
            c.expect(deg == -k * closed && deg < 0, "deg_L T on " + x.to_string() + " k=" + std::to_string(k));
        }
    }
    c.expect(ChowTruncation(SpaceSpec({1, 3, 5})).polarization_volume() == 504, "L^9 = 504");
}

// 8
void certificates(Check& c) {
    for (const auto& dims : kShipped) {
        for (std::int64_t k = 1; k <= 2; ++k) {
            const auto p = monad_params(SpaceSpec(dims), k);
            const auto s = stability_certificate(p, 2);
            bool bounds = s.cross_check;
            for (const auto& b : s.bounds)
                bounds = bounds && b.bound == b.kunneth_bound &&
                         b.kunneth_bound == binomial(p.beta, b.q) * kunneth_table(p.space, b.line_twist)[0];
            c.expect(s.ok(), "stability " + name(dims) + " k=" + std::to_string(k));
            c.expect(bounds, "bound cross-check " + name(dims));
            c.expect(simplicity_certificate(p).ok(), "simplicity " + name(dims) + " k=" + std::to_string(k));

            for (const auto* what : {"stability", "simplicity"}) {
                RunConfig cfg;
                cfg.command = "certify";
                cfg.dims = dims;
                cfg.k = k;
                cfg.what = what;
                cfg.format = OutputFormat::json;
                const auto a = run(cfg);
                const auto b = run(cfg);
                c.expect(a.exit_code == 0 && a.outputs[0].content == b.outputs[0].content,
                         std::string("byte-identical ") + what + " certificate " + name(dims));
            }
        }
    }
}

// 9
void display_bookkeeping(Check& c) {
    for (int l = 0; l <= 3; ++l) {
        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; n <= 3; ++n) {
                if (l + m + n == 0) continue;
                const auto p = monad_params(SpaceSpec::from_groups(l, m, n), 1 + (l + m + n) % 3);
                const auto d = display_summary(p);
                c.expect(d.cohomology.rank == 2 * p.mu, "rank E = 2 mu for " + p.space.to_string());
                bool c1_zero = true;
                for (const auto v : d.cohomology.c1) c1_zero = c1_zero && v == 0;
                c.expect(c1_zero, "c1(E) = 0 for " + p.space.to_string());
            }
        }
    }
    const std::vector<int> dims{1, 3};
    const auto p = monad_params(SpaceSpec(dims), 1);
    const Integer expect = Integer(p.beta) * chi_oracle(dims, 0) - Integer(p.k) * chi_oracle(dims, -1) -
                           Integer(p.k) * chi_oracle(dims, 1);
    c.expect(chi_oracle(dims, 0) == 1 && chi_oracle(dims, -1) == 0 && chi_oracle(dims, 1) == 8, "chi(O), chi(O(-1)), chi(O(1))");
    c.expect(expect == 0 && cohomology_euler_characteristic(p) == expect, "chi(E) = 8 - 0 - 8 = 0 on (1,3)");
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "parameter identities", 1, parameter_identities},
        {2, "Segre fidelity", 1, segre_fidelity},
        {3, "composition zero", 60, composition_zero},
        {4, "fiberwise rank", 120, fiberwise_rank},
        {5, "cohomology engine", 30, cohomology_engine},
        {6, "vanishing lemma audit", 10, vanishing_audit},
        {7, "degree and slope", 10, degree_slope},
        {8, "certificates", 60, certificates},
        {9, "display bookkeeping", 1, display_bookkeeping},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < cr.limit_seconds;
        const bool pass = check.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("criterion %d %-22s %s  %.3fs (limit %.0fs)\n", cr.id, cr.title, pass ? "PASS" : "FAIL", secs,
                    cr.limit_seconds);
        if (!in_time) std::printf("    over time budget\n");
        for (const auto& n : check.notes) std::printf("    failed: %s\n", n.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
