#include <gtest/gtest.h>

#include <random>

#include "monadforge/errors.hpp"
#include "monadforge/poly.hpp"
#include "monadforge/poly_matrix.hpp"

using namespace monadforge;

namespace {

const SpaceSpec kSpace({1, 2});

MultiPoly var(std::size_t f, std::size_t c) { return MultiPoly::variable(kSpace, {f, c}); }

MultiPoly random_poly(std::mt19937_64& rng, int terms, bool homogeneous) {
    std::uniform_int_distribution<int> coef(-50, 50);
    std::uniform_int_distribution<int> expo(0, 3);
    MultiPoly p(kSpace);
    for (int t = 0; t < terms; ++t) {
        Exponents e(kSpace.variable_count());
        if (homogeneous) {
            // multidegree (2, 1)
            e[rng() % 2] += 1;
            e[rng() % 2] += 1;
            e[2 + rng() % 3] += 1;
        } else {
            for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
        }
        p += MultiPoly::monomial(kSpace, e, coef(rng));
    }
    return p;
}

} // namespace

TEST(MultiPoly, HandExpansion) {
    // (x0_0 + x0_1)^2 = x0_0^2 + 2 x0_0 x0_1 + x0_1^2
    const auto s = var(0, 0) + var(0, 1);
    EXPECT_EQ(to_string(s * s), "x0_0^2 + 2*x0_0*x0_1 + x0_1^2");
    // (x0_0 x1_1 - x0_1 x1_0)(x0_0 x1_1 + x0_1 x1_0)
    const auto a = var(0, 0) * var(1, 1);
    const auto b = var(0, 1) * var(1, 0);
    EXPECT_EQ(to_string((a - b) * (a + b)), "x0_0^2*x1_1^2 - x0_1^2*x1_0^2");
    EXPECT_EQ(to_string(a - a), "0");
    EXPECT_EQ(to_string(MultiPoly::constant(kSpace, -3)), "-3");
    EXPECT_EQ(to_string(-var(1, 2)), "-x1_2");
}

TEST(MultiPoly, ZeroIsNeverStored) {
    const auto p = var(0, 0) * var(1, 0);
    const auto z = p - p;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.term_count(), 0u);
    EXPECT_TRUE(z.is_homogeneous());
    EXPECT_FALSE(z.multidegree().has_value());
    EXPECT_TRUE(p.scaled(0).is_zero());
}

TEST(MultiPoly, Multidegree) {
    const auto p = var(0, 0) * var(0, 1) * var(1, 2) + var(0, 1) * var(0, 1) * var(1, 0);
    ASSERT_TRUE(p.is_homogeneous());
    EXPECT_EQ(*p.multidegree(), (MultiDegree{2, 1}));
    EXPECT_FALSE((var(0, 0) + var(1, 0)).is_homogeneous());
    EXPECT_FALSE((var(0, 0) + MultiPoly::constant(kSpace, 1)).is_homogeneous());
    EXPECT_EQ(multidegree_of(kSpace, {1, 2, 0, 0, 3}), (MultiDegree{3, 3}));
}

TEST(MultiPoly, RingLawsProperty) {
    std::mt19937_64 rng(20261014);
    for (int round = 0; round < 200; ++round) {
        const auto a = random_poly(rng, 4, false);
        const auto b = random_poly(rng, 4, false);
        const auto c = random_poly(rng, 3, false);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, MultiPoly(kSpace));
        EXPECT_EQ(a * MultiPoly::constant(kSpace, 1), a);
        EXPECT_EQ(a.scaled(-1), -a);
    }
}

TEST(MultiPoly, EvaluationIsHomomorphism) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(-9, 9);
    for (int round = 0; round < 100; ++round) {
        const auto a = random_poly(rng, 5, false);
        const auto b = random_poly(rng, 5, false);
        std::vector<Integer> pt(kSpace.variable_count());
        for (auto& v : pt) v = coord(rng);
        EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
        EXPECT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
    }
}

TEST(MultiPoly, ProductOfHomogeneousIsHomogeneous) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        const auto a = random_poly(rng, 4, true);
        const auto b = random_poly(rng, 4, true);
        const auto p = a * b;
        if (p.is_zero()) continue;
        ASSERT_TRUE(p.is_homogeneous());
        EXPECT_EQ(*p.multidegree(), (MultiDegree{4, 2}));
    }
}

TEST(MultiPoly, ParsePrintRoundTrip) {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 300; ++round) {
        const auto p = random_poly(rng, 1 + round % 6, round % 2 == 0);
        EXPECT_EQ(parse_poly(kSpace, to_string(p)), p) << to_string(p);
    }
}

TEST(MultiPoly, ParserAcceptsVariants) {
    EXPECT_EQ(parse_poly(kSpace, " 1*x0_0^1 * x0_0 +x1_2 "), var(0, 0) * var(0, 0) + var(1, 2));
    EXPECT_EQ(parse_poly(kSpace, "-x0_1 - 2*x1_0"), -var(0, 1) - var(1, 0).scaled(2));
    EXPECT_EQ(parse_poly(kSpace, "0"), MultiPoly(kSpace));
    EXPECT_EQ(parse_poly(kSpace, "123456789012345678901234567890*x0_0").terms().begin()->second,
              Integer("123456789012345678901234567890"));
}

TEST(MultiPoly, ParserRejects) {
    EXPECT_THROW(parse_poly(kSpace, "x2_0"), ParseError);
    EXPECT_THROW(parse_poly(kSpace, "x0_2"), ParseError);
    EXPECT_THROW(parse_poly(kSpace, "x0_0 +"), ParseError);
    EXPECT_THROW(parse_poly(kSpace, "y_1"), ParseError);
    EXPECT_THROW(parse_poly(kSpace, ""), ParseError);
}

TEST(MultiPoly, MixedSpacesRejected) {
    const SpaceSpec other({3});
    EXPECT_THROW(var(0, 0) + MultiPoly::variable(other, {0, 0}), StructuralError);
    EXPECT_THROW(var(0, 0) * MultiPoly::variable(other, {0, 0}), StructuralError);
}

TEST(PolyMatrix, ProductAndLinearValidation) {
    PolyMatrix m(kSpace, 1, 2);
    m.at(0, 0) = var(0, 0);
    m.at(0, 1) = var(0, 1);
    PolyMatrix n(kSpace, 2, 1);
    n.at(0, 0) = -var(0, 1);
    n.at(1, 0) = var(0, 0);
    EXPECT_TRUE((m * n).is_zero());
    const LinearMatrix lm(m, MultiDegree{1, 0});
    const LinearMatrix ln(n, MultiDegree{1, 0});
    EXPECT_TRUE(mat_mul(lm, ln).is_zero());
    EXPECT_THROW(LinearMatrix(m, MultiDegree{0, 1}), StructuralError);
    EXPECT_THROW(m * m, StructuralError);
    const auto z = lm.with_zeroed_column(1);
    EXPECT_TRUE(z.at(0, 1).is_zero());
    EXPECT_EQ(z.at(0, 0), var(0, 0));
    EXPECT_EQ(to_string(m), "x0_0 | x0_1\n");
}
