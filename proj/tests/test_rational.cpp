#include <gtest/gtest.h>

#include <random>

#include "wturan/rational.hpp"

using wturan::Rational;

TEST(Rational, NormalizesOnConstruction)
{
    EXPECT_EQ(Rational(6, 8).str(), "3/4");
    EXPECT_EQ(Rational(-6, 8).str(), "-3/4");
    EXPECT_EQ(Rational(6, -8).str(), "-3/4");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational(6, -8).denominator(), 4);
    EXPECT_THROW(Rational(1, 0), wturan::InvalidArgument);
}

TEST(Rational, ParsesCanonicalAndNonCanonicalText)
{
    EXPECT_EQ(Rational::parse("1/2"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-3"), Rational(-3));
    EXPECT_EQ(Rational::parse("+3/9"), Rational(1, 3));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").str(), "41152263004115226300411522630");
    for (auto bad : {"", "/", "1/", "/2", "1/0", "1.5", "a", "1/-2", "1 /2", "--1"})
        EXPECT_THROW(Rational::parse(bad), wturan::ParseError) << bad;
}

TEST(Rational, DivisionByZeroThrows)
{
    EXPECT_THROW(Rational(1) / Rational(0), wturan::InvalidArgument);
}

TEST(Rational, FieldLawsHoldOnRandomValues)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int trial = 0; trial < 2000; ++trial) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
        // text round trip, always in lowest terms
        EXPECT_EQ(Rational::parse(a.str()), a);
        EXPECT_EQ(gcd(a.numerator(), a.denominator()), 1);
        EXPECT_GT(a.denominator(), 0);
        EXPECT_EQ(a < b, a.numerator() * b.denominator() < b.numerator() * a.denominator());
    }
}

TEST(Rational, OrderingIsTotalAndConsistent)
{
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(2, 6) <=> Rational(1, 3), std::strong_ordering::equal);
    EXPECT_EQ(abs(Rational(-5, 7)), Rational(5, 7));
}
