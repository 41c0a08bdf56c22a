#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "monadforge/errors.hpp"
#include "monadforge/verify.hpp"
#include "oracles.hpp"

using namespace monadforge;

TEST(Points, CountsMatchVectorCounting) {
    for (const auto& dims : {std::vector<int>{1}, std::vector<int>{1, 3}, std::vector<int>{1, 2, 3}, std::vector<int>{2, 2}}) {
        for (const std::uint64_t q : {2u, 3u, 5u}) {
            std::uint64_t expected = 1;
            for (const int a : dims) expected *= oracle::projective_points(a, q);
            EXPECT_EQ(point_count(SpaceSpec(dims), q), expected);
            EXPECT_EQ(PointEnumerator(SpaceSpec(dims), q).count(), expected);
        }
    }
    EXPECT_EQ(point_count(SpaceSpec({1, 3}), 2), 45u);
    EXPECT_EQ(point_count(SpaceSpec({1, 2, 3}), 2), 315u);
    EXPECT_EQ(point_count(SpaceSpec({1, 2, 3}), 3), 2080u);
    EXPECT_EQ(point_count(SpaceSpec({1, 3, 5}), 3), 58240u);
    EXPECT_FALSE(point_count(SpaceSpec({1000, 1000}), 3).has_value());
}

TEST(Points, EnumerationIsCanonicalAndComplete) {
    const SpaceSpec x({1, 2});
    for (const std::uint64_t q : {2u, 3u, 5u}) {
        const auto pts = enumerate_points(x, q);
        std::set<std::string> seen;
        for (const auto& p : pts) {
            for (const auto& tuple : p.coords()) {
                std::size_t lead = 0;
                while (tuple[lead] == 0) ++lead;
                EXPECT_EQ(tuple[lead], 1u);
            }
            seen.insert(p.to_string());
        }
        EXPECT_EQ(seen.size(), pts.size());
        EXPECT_EQ(pts.size(), oracle::projective_points(1, q) * oracle::projective_points(2, q));
        // every nonzero vector pair normalizes to a listed point
        const PrimeField f(q);
        for (std::uint64_t a = 1; a < q * q; ++a) {
            for (std::uint64_t b = 1; b < q * q * q; ++b) {
                const auto p = ProjectivePoint<PrimeField>::make(
                    f, x, {{a % q, a / q}, {b % q, b / q % q, b / (q * q)}});
                EXPECT_TRUE(seen.count(p.to_string()));
            }
        }
    }
    EXPECT_THROW(PointEnumerator(x, 4), DomainError);
}

TEST(Points, EnumeratorIndexesAgree) {
    const PointEnumerator e(SpaceSpec({1, 3}), 3);
    std::vector<std::uint64_t> flat;
    for (std::uint64_t i = 0; i < e.count(); ++i) {
        e.flat_at(i, flat);
        EXPECT_EQ(flat, e.at(i).flat());
    }
    EXPECT_EQ(e.at(0).to_string(), "[1:0][1:0:0:0]");
}

TEST(Fibers, ExhaustivePasses) {
    for (const auto& dims : {std::vector<int>{1, 3}, std::vector<int>{1, 2, 3}}) {
        for (std::int64_t k = 1; k <= 2; ++k) {
            const auto m = build_monad(SpaceSpec(dims), k);
            for (const std::uint64_t q : {2u, 3u}) {
                const auto r = exhaustive_fiber_check(m, q);
                EXPECT_TRUE(r.valid()) << SpaceSpec(dims).to_string() << " k=" << k << " q=" << q;
                EXPECT_EQ(r.points_checked, *point_count(SpaceSpec(dims), q));
                EXPECT_EQ(r.generic_rank_a, static_cast<std::size_t>(k));
                EXPECT_EQ(r.generic_rank_b, static_cast<std::size_t>(k));
            }
        }
    }
}

TEST(Fibers, FaultInjectionIsCaught) {
    auto m = build_monad(SpaceSpec({1, 3}), 1);
    m.map_b = m.map_b.with_zeroed_column(0);
    const auto r = exhaustive_fiber_check(m, 2);
    EXPECT_FALSE(r.valid());
    EXPECT_TRUE(r.composition_zero == false || r.failure_count > 0);
    ASSERT_FALSE(r.failures.empty());
    EXPECT_FALSE(r.failures.front().point.empty());

    // Point [1:0][1:0:0:0]: B has a single nonzero entry from column 0.
    auto m2 = build_monad(SpaceSpec({1, 3}), 1);
    m2.map_b = m2.map_b.with_zeroed_column(m2.map_b.cols() - 1);
    m2.map_a = m2.map_a.with_zeroed_column(0);
    const auto r2 = exhaustive_fiber_check(m2, 3);
    EXPECT_EQ(r2.failure_count, r2.points_checked);
    EXPECT_EQ(r2.failures.size(), VerifierOptions{}.max_witnesses);
    EXPECT_EQ(r2.failures.front().index, 0u);
}

TEST(Fibers, BudgetEnforced) {
    const auto m = build_monad(SpaceSpec({1, 3}), 1);
    VerifierOptions o;
    o.point_budget = 44;
    EXPECT_THROW(exhaustive_fiber_check(m, 2, o), BudgetExceeded);
    o.point_budget = 45;
    EXPECT_NO_THROW(exhaustive_fiber_check(m, 2, o));
}

TEST(Fibers, ThreadCountDoesNotChangeReport) {
    auto m = build_monad(SpaceSpec({1, 2, 3}), 2);
    m.map_b = m.map_b.with_zeroed_column(3);
    VerifierOptions one;
    one.threads = 1;
    VerifierOptions four;
    four.threads = 4;
    const auto a = exhaustive_fiber_check(m, 3, one);
    const auto b = exhaustive_fiber_check(m, 3, four);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.failure_count, b.failure_count);
    const auto ra = random_fiber_check(m, 25, 42, one);
    const auto rb = random_fiber_check(m, 25, 42, four);
    EXPECT_EQ(ra.failures, rb.failures);
    EXPECT_EQ(ra.generic_rank_b, rb.generic_rank_b);
}

TEST(Fibers, RandomIsSeeded) {
    const auto m = build_monad(SpaceSpec({1, 3}), 2);
    const auto a = random_fiber_check(m, 30, 9);
    EXPECT_TRUE(a.valid());
    EXPECT_EQ(a.field, "QQ");
    EXPECT_EQ(a.seed, std::optional<std::uint64_t>(9));
    EXPECT_EQ(a.points_checked, 30u);
}

TEST(Fibers, EvidenceLabel) {
    const auto m = build_monad(SpaceSpec({1, 3}), 1);
    const auto f2 = exhaustive_fiber_check(m, 2);
    const auto f3 = exhaustive_fiber_check(m, 3);
    EXPECT_EQ(evidence_label({f2, f3}), "verified at desk scale");
    EXPECT_NE(evidence_label({f2}), "verified at desk scale");
    EXPECT_NE(evidence_label({random_fiber_check(m, 5, 1)}), "verified at desk scale");
    auto bad = m;
    bad.map_b = bad.map_b.with_zeroed_column(0);
    EXPECT_NE(evidence_label({exhaustive_fiber_check(bad, 2), exhaustive_fiber_check(bad, 3)}), "verified at desk scale");
}

TEST(Fibers, ThreadEnv) {
    ::setenv("MONADFORGE_THREADS", "3", 1);
    EXPECT_EQ(default_thread_count(), 3u);
    ::unsetenv("MONADFORGE_THREADS");
    EXPECT_GE(default_thread_count(), 1u);
}
