#include <gtest/gtest.h>

#include "monadforge/errors.hpp"
#include "monadforge/integer.hpp"
#include "monadforge/space.hpp"

using namespace monadforge;

TEST(Integer, BinomialEdges) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(-3, 2), 0);
    EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
}

TEST(Integer, BinomialPascal) {
    for (std::int64_t n = 1; n < 40; ++n)
        for (std::int64_t k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Integer, Ceil) {
    EXPECT_EQ(ceil(Rational(7, 2)), 4);
    EXPECT_EQ(ceil(Rational(-7, 2)), -3);
    EXPECT_EQ(ceil(Rational(4)), 4);
    EXPECT_EQ(ceil(Rational(-504, 47 * 9)), -1);
}

TEST(Integer, ToString) {
    EXPECT_EQ(to_string(Integer(-12)), "-12");
    EXPECT_EQ(to_string(Rational(-4, 7)), "-4/7");
    EXPECT_EQ(to_string(Rational(6, 3)), "2");
}

TEST(Integer, CheckedArithmetic) {
    EXPECT_EQ(checked_mul(3, -4), -12);
    EXPECT_THROW(checked_mul(INT64_MAX, 2), DomainError);
    EXPECT_THROW(checked_add(INT64_MAX, 1), DomainError);
}

TEST(MultiDegree, Arithmetic) {
    const MultiDegree a{1, -2, 3};
    const MultiDegree b{0, 5, -1};
    EXPECT_EQ(a + b, (MultiDegree{1, 3, 2}));
    EXPECT_EQ(a - b, (MultiDegree{1, -7, 4}));
    EXPECT_EQ(-a, (MultiDegree{-1, 2, -3}));
    EXPECT_EQ(3 * a, (MultiDegree{3, -6, 9}));
    EXPECT_EQ(a.to_string(), "(1,-2,3)");
    EXPECT_EQ(MultiDegree::uniform(2, -1), (MultiDegree{-1, -1}));
}

TEST(SpaceSpec, Basics) {
    const SpaceSpec x({1, 3, 5});
    EXPECT_EQ(x.dimension(), 9);
    EXPECT_EQ(x.factor_count(), 3u);
    EXPECT_EQ(x.picard_rank(), 3);
    EXPECT_EQ(x.variable_count(), 12u);
    EXPECT_EQ(x.variable_offset(2), 6u);
    EXPECT_EQ(x.to_string(), "P1xP3xP5");
    for (std::size_t i = 0; i < x.variable_count(); ++i) EXPECT_EQ(x.flat_index(x.variable_at(i)), i);
    EXPECT_EQ(x.variable_at(7).factor, 2u);
    EXPECT_EQ(x.variable_at(7).coord, 1u);
}

TEST(SpaceSpec, Groups) {
    const SpaceSpec x({1, 1, 3, 1});
    const auto g = x.groups();
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0], (std::vector<std::size_t>{0, 1, 3}));
    EXPECT_EQ(g[1], (std::vector<std::size_t>{2}));

    const auto y = SpaceSpec::from_groups(2, 1, 1);
    EXPECT_EQ(y.dims(), (std::vector<int>{1, 1, 3, 5}));
    EXPECT_EQ(y.groups().size(), 3u);
    const SpaceSpec z({1, 1}, {"f", "g"});
    EXPECT_EQ(z.groups().size(), 2u);
}

TEST(SpaceSpec, RejectsBadInput) {
    EXPECT_THROW(SpaceSpec(std::vector<int>{}), DomainError);
    EXPECT_THROW(SpaceSpec({0}), DomainError);
    EXPECT_THROW(SpaceSpec({1, 2}, {"f"}), DomainError);
}

TEST(SpaceSpec, Parsing) {
    EXPECT_EQ(parse_dims("1,3,5"), (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(parse_dims(" 2 , 4"), (std::vector<int>{2, 4}));
    EXPECT_EQ(parse_multidegree("-2,-4,-6"), (MultiDegree{-2, -4, -6}));
    EXPECT_THROW(parse_dims("1,,3"), ParseError);
    EXPECT_THROW(parse_dims("a"), ParseError);
    EXPECT_THROW(parse_multidegree("1.5"), ParseError);
}
