#include <gtest/gtest.h>

#include "doubling/hypergeometric.hpp"

using namespace doubling;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
    EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("+2/3"), Rational(2, 3));
}

TEST(Rational, ParseErrorsCarryPosition) {
    try {
        Rational::parse("3/x");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 2u);
    }
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
}

TEST(Rational, Arithmetic) {
    Rational a(1, 2), b(1, 3);
    EXPECT_EQ(a + b, Rational(5, 6));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 6));
    EXPECT_EQ(a / b, Rational(3, 2));
    EXPECT_LT(b, a);
    EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
    EXPECT_EQ(factorial(5), Rational(120));
    EXPECT_THROW(a / Rational(0), DivisionByZero);
}

TEST(Rational, Formatting) {
    EXPECT_EQ(Rational(4).str(), "4");
    EXPECT_EQ(Rational(4).fraction_str(), "4/1");
    EXPECT_EQ(Rational(-6, 4).str(), "-3/2");
}

TEST(Rational, IntegerQueries) {
    EXPECT_TRUE(Rational(-3).is_nonpositive_integer());
    EXPECT_FALSE(Rational(-3, 2).is_nonpositive_integer());
    EXPECT_EQ(Rational(12).to_long(), 12);
    EXPECT_FALSE(Rational(1, 2).to_long());
    EXPECT_TRUE(Rational(9, 4).is_perfect_square());
    EXPECT_EQ(Rational(9, 4).exact_sqrt(), Rational(3, 2));
    EXPECT_FALSE(Rational(2).is_perfect_square());
}

TEST(SqrtRational, ProductsAndComparison) {
    auto s2 = SqrtRational::sqrt(2), s8 = SqrtRational::sqrt(8);
    EXPECT_EQ((s2 * s8).to_rational(), Rational(4));
    EXPECT_FALSE(s2.is_rational());
    EXPECT_LT(-s8, s2);
    EXPECT_LT(s2, s8);
    EXPECT_EQ(SqrtRational::from_rational(Rational(-3, 2)).signed_square(), Rational(-9, 4));
    EXPECT_NEAR(s2.to_double(), 1.4142135623730951, 1e-16);
    EXPECT_THROW(SqrtRational(1, Rational(-1)), NegativeProduct);
}

TEST(SqrtRational, ExactSums) {
    // sqrt(2) + sqrt(8) = sqrt(18); sqrt(2) + sqrt(3) is not a single root.
    EXPECT_TRUE(sum_equals(SqrtRational::sqrt(2), SqrtRational::sqrt(8), SqrtRational::sqrt(18)));
    EXPECT_FALSE(sum_equals(SqrtRational::sqrt(2), SqrtRational::sqrt(3), SqrtRational::sqrt(5)));
    EXPECT_TRUE(sum_equals(SqrtRational::sqrt(2), -SqrtRational::sqrt(2), SqrtRational()));
    EXPECT_TRUE(sum_equals(-SqrtRational::sqrt(8), SqrtRational::sqrt(2), -SqrtRational::sqrt(2)));
}

TEST(Pochhammer, Values) {
    EXPECT_EQ(pochhammer(Rational(5, 7), 0), Rational(1));
    EXPECT_EQ(pochhammer(3, 2), Rational(12));
    EXPECT_EQ(pochhammer(-2, 3), Rational(0));
    EXPECT_EQ(pochhammer(Rational(-1, 2), 3), Rational(-3, 8));
    EXPECT_EQ(binomial(Rational(5, 2), 2), Rational(15, 8));
}

TEST(Hypergeometric, TerminatingSeries) {
    EXPECT_EQ(hypergeometric_terminating({0, 3, Rational(1, 2)}, {2, 5}), Rational(1));
    Rational b(2, 3), c(5), d(7, 2), e(-4);
    EXPECT_EQ(hypergeometric_terminating({-1, b, c}, {d, e}), 1 - b * c / (d * e));
    EXPECT_EQ(hypergeometric_terminating({-1, b, c}, {d, e}), Rational(26, 21));
    EXPECT_EQ(hypergeometric_terminating({-1, 1, 0}, {1, -5}), Rational(1));
}

TEST(Hypergeometric, Errors) {
    EXPECT_THROW(hypergeometric_terminating({Rational(1, 2), 3}, {2}), NonTerminating);
    EXPECT_THROW(hypergeometric_terminating({-3, 1}, {-1}), DenominatorPole);
    // The pole sits after termination: fine.
    EXPECT_EQ(hypergeometric_terminating({-1, 1}, {-2}), Rational(3, 2));
}
