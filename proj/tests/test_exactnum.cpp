#include <gtest/gtest.h>

#include <random>

#include "gaeta/quad_surd.hpp"
#include "oracle.hpp"

using namespace gaeta;

TEST(Rational, ReducedAndExact) {
    Rational x = make_rational(6, -4);
    EXPECT_EQ(num(x), -3);
    EXPECT_EQ(den(x), 2);
    EXPECT_EQ(Rational(1, 6) + Rational(1, 3), Rational(1, 2));
    EXPECT_THROW(make_rational(1, 0), error);
}

TEST(Rational, FloorCeilNegative) {
    EXPECT_EQ(floor(Rational(-7, 2)), -4);
    EXPECT_EQ(ceil(Rational(-7, 2)), -3);
    EXPECT_EQ(floor(Rational(7, 2)), 3);
    EXPECT_EQ(floor(Rational(-4)), -4);
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("197/23"), Rational(197, 23));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("4/-6"), Rational(-2, 3));
    EXPECT_EQ(to_string(Rational(17, 2)), "17/2");
    EXPECT_EQ(to_string(Rational(6)), "6");
    EXPECT_THROW(parse_rational("1/2/3"), error);
    EXPECT_THROW(parse_rational("x"), error);
    EXPECT_THROW(parse_rational("1/0"), error);
}

TEST(Rational, DecimalRendering) {
    EXPECT_EQ(to_decimal(Rational(-5, 2), 12), "-2.5");
    EXPECT_EQ(to_decimal(Rational(1, 3), 12), "0.333333333333");
    EXPECT_EQ(to_decimal(Rational(2, 3), 12), "0.666666666667");
    EXPECT_EQ(to_decimal(Rational(7), 12), "7");
    EXPECT_EQ(to_decimal(Rational(-1, 1000000000000000LL), 12), "0");
}

TEST(SurdValue, PerfectSquareFolds) {
    QuadSurd z = surd_value(Rational(3, 2), Rational(-1, 2), 9);
    EXPECT_TRUE(z.is_rational());
    EXPECT_EQ(z.a(), 0);
    EXPECT_EQ(z.d(), 0);
}

TEST(SurdValue, Sqrt2Bracketed) {
    QuadSurd s = surd_value(0, 1, 2);
    EXPECT_LT(QuadSurd(1), s);
    EXPECT_LT(s, QuadSurd(2));
}

TEST(SurdValue, XAlphaForRankTwo) {
    // 3/2 - sqrt(8)/4 normalizes to 3/2 - sqrt(2)
    QuadSurd x = surd_value(Rational(3, 2), Rational(-1, 4), 32);
    EXPECT_TRUE(same_representation(x, surd_value(Rational(3, 2), -1, 2)));
    EXPECT_TRUE(same_representation(surd_value(Rational(3, 2), Rational(-1, 2), 8), x));
}

TEST(SurdCmp, SpecExamples) {
    EXPECT_EQ(surd_cmp(surd_value(0, 1, 2), QuadSurd(Rational(3, 2))), std::strong_ordering::less);
    // 14/9 < 3 - sqrt(2): the point lies inside I_{3/2}
    EXPECT_EQ(surd_cmp(QuadSurd(Rational(14, 9)), surd_value(3, -1, 2)), std::strong_ordering::less);
    QuadSurd xi = surd_value(Rational(-3, 2), Rational(1, 2), 405);
    // xi(50) sits between 17/2 and 17/2 + x_{17/2} = 10 - sqrt(2)
    EXPECT_EQ(surd_cmp(xi, surd_value(10, -1, 2)), std::strong_ordering::less);
    EXPECT_EQ(surd_cmp(xi, QuadSurd(Rational(17, 2))), std::strong_ordering::greater);
}

TEST(SurdCmp, CrossRadicandEquality) {
    QuadSurd a = surd_value(0, 1, 12); // 2 sqrt 3
    QuadSurd b = surd_value(0, 2, 3);
    EXPECT_TRUE(a == b);
    EXPECT_TRUE(same_representation(a, b));
    EXPECT_TRUE(surd_value(1, 1, 2) < surd_value(0, 1, 6));  // 2.414 < 2.449
    EXPECT_TRUE(surd_value(0, 1, 7) < surd_value(1, 1, 3));  // 2.6458 < 2.732
    EXPECT_TRUE(surd_value(Rational(1, 3), -1, 5) < surd_value(-1, Rational(1, 2), 3));
}

TEST(SurdArithmetic, SameRadicandOnly) {
    QuadSurd r2 = surd_value(0, 1, 2);
    EXPECT_EQ(r2 * r2, QuadSurd(2));
    EXPECT_EQ((QuadSurd(1) + r2) * (QuadSurd(-1) + r2), QuadSurd(1));
    EXPECT_EQ((QuadSurd(1) + r2).inverse(), QuadSurd(-1) + r2);
    EXPECT_THROW(r2 + surd_value(0, 1, 3), error);
    EXPECT_THROW(QuadSurd(0).inverse(), error);
}

TEST(SurdFloor, MatchesOracle) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Rational a = oracle::random_rational(rng, 1000, 97), b = oracle::random_rational(rng, 50, 13);
        std::uniform_int_distribution<long> d(0, 5000);
        QuadSurd x(a, b, d(rng));
        BigInt f = floor(x);
        EXPECT_LE(QuadSurd(Rational(f)), x);
        EXPECT_LT(x, QuadSurd(Rational(f + 1)));
        EXPECT_EQ(f, oracle::hp_floor(oracle::hp(x)));
    }
}

namespace {

QuadSurd random_surd(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(0, 40);
    std::uniform_int_distribution<int> kind(0, 3);
    Rational a = oracle::random_rational(rng, 20, 6);
    if (kind(rng) == 0)
        return QuadSurd(a);
    return QuadSurd(a, oracle::random_rational(rng, 5, 4), d(rng));
}

} // namespace

TEST(SurdCmp, TotalOrderTransitive) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3000; ++i) {
        QuadSurd x = random_surd(rng), y = random_surd(rng), z = random_surd(rng);
        int lt = x < y, eq = x == y, gt = x > y;
        EXPECT_EQ(lt + eq + gt, 1);
        EXPECT_EQ(x < y, y > x);
        if (x < y && y < z) {
            EXPECT_LT(x, z);
        }
        if (x <= y && y <= z) {
            EXPECT_LE(x, z);
        }
    }
}

TEST(SurdCmp, EqualityIffSameRepresentation) {
    // Radicands below 10^6 are fully square-free after normalization.
    std::mt19937_64 rng(12);
    for (int i = 0; i < 3000; ++i) {
        QuadSurd x = random_surd(rng), y = random_surd(rng);
        EXPECT_EQ(x == y, same_representation(x, y)) << x.str() << " vs " << y.str();
        // Scaling the radicand by a square must not change the value or the form.
        std::uniform_int_distribution<long> k(1, 30);
        long m = k(rng);
        QuadSurd x2(x.a(), x.b() / m, x.d() * m * m);
        EXPECT_TRUE(x2 == x);
        EXPECT_TRUE(same_representation(x2, x));
    }
}

TEST(SurdCmp, AgreesWithHighPrecisionOracle) {
    std::mt19937_64 rng(13);
    int decided = 0;
    for (int i = 0; i < 10000; ++i) {
        QuadSurd x = random_surd(rng), y = random_surd(rng);
        auto s = oracle::hp_sign(x, y);
        if (!s)
            continue;
        ++decided;
        EXPECT_EQ(*s < 0, x < y) << x.str() << " vs " << y.str();
        EXPECT_EQ(*s > 0, x > y) << x.str() << " vs " << y.str();
    }
    EXPECT_GT(decided, 9000);
}
