#include <gtest/gtest.h>

#include <atomic>
#include <random>
#include <thread>

#include "gaeta/exceptional.hpp"
#include "oracle.hpp"

using namespace gaeta;

namespace {

std::vector<Rational> values(const std::vector<const ExceptionalSlope*>& v) {
    std::vector<Rational> out;
    for (const auto* e : v)
        out.push_back(e->value);
    return out;
}

} // namespace

TEST(HilbertPoly, Values) {
    EXPECT_EQ(hilbert_poly(Rational(0)), 1);
    EXPECT_EQ(hilbert_poly(Rational(-1)), 0);
    EXPECT_EQ(hilbert_poly(Rational(17, 2)), Rational(399, 8));
}

TEST(Epsilon, SmallTable) {
    const std::vector<Rational> expect{0, {5, 13}, {2, 5}, {12, 29}, {1, 2}, {17, 29}, {3, 5}, {8, 13}, 1};
    for (int p = 0; p <= 8; ++p)
        EXPECT_EQ(epsilon(p, 3).value, expect[p]) << "p = " << p;
}

TEST(Epsilon, InvariantsOfOneHalf) {
    const ExceptionalSlope& e = epsilon(1, 1);
    EXPECT_EQ(e.value, Rational(1, 2));
    EXPECT_EQ(e.rank, 2);
    EXPECT_EQ(e.discriminant, Rational(3, 8));
    EXPECT_EQ(e.euler, 3);
}

TEST(Epsilon, FibonacciEdge) {
    // eps(1 - 2^-k) = F_2k / F_2k+1
    BigInt f0 = 0, f1 = 1;
    std::vector<BigInt> fib{f0, f1};
    for (int i = 0; i < 40; ++i)
        fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    for (unsigned k = 1; k <= 15; ++k) {
        BigInt p = (BigInt(1) << k) - 1;
        EXPECT_EQ(epsilon(p, k).value, Rational(fib[2 * k], fib[2 * k + 1])) << "k = " << k;
    }
}

TEST(Epsilon, AddressCanonicalization) {
    EXPECT_EQ(&epsilon(4, 3), &epsilon(1, 1));
    EXPECT_EQ(epsilon(-6, 2).value, Rational(-3, 2));
    EXPECT_EQ(DyadicAddress(12, 3).str(), "3/2^1");
    EXPECT_EQ(DyadicAddress(3, 0).str(), "3");
}

TEST(Dot, Examples) {
    EXPECT_EQ(dot(Rational(0), Rational(1)), Rational(1, 2));
    EXPECT_EQ(dot(Rational(2, 5), Rational(1, 2)), Rational(12, 29));
    EXPECT_EQ(dot(Rational(5), Rational(7)), Rational(6));
    EXPECT_THROW(dot(Rational(0), Rational(3)), error);
}

TEST(ParentPair, Examples) {
    auto [a, b] = parent_pair(epsilon(1, 1));
    EXPECT_EQ(a.value, 0);
    EXPECT_EQ(b.value, 1);
    auto [c, d] = parent_pair(epsilon(6, 0));
    EXPECT_EQ(c.value, 5);
    EXPECT_EQ(d.value, 7);
    auto [e, f] = parent_pair(exceptional_from_value(Rational(12, 29)));
    EXPECT_EQ(e.value, Rational(2, 5));
    EXPECT_EQ(f.value, Rational(1, 2));
}

TEST(Interval, Examples) {
    auto [lo0, hi0] = interval(epsilon(0, 0));
    QuadSurd x0 = surd_value(Rational(3, 2), Rational(-1, 2), 5);
    EXPECT_EQ(hi0, x0);
    EXPECT_EQ(lo0, -x0);
    auto [lo, hi] = interval(exceptional_from_value(Rational(3, 2)));
    EXPECT_TRUE(same_representation(lo, surd_value(0, 1, 2)));
    EXPECT_TRUE(same_representation(hi, surd_value(3, -1, 2)));
    const ExceptionalSlope& a = exceptional_from_value(Rational(17, 2));
    EXPECT_TRUE(a.contains(QuadSurd(Rational(197, 23))));
}

TEST(AssociatedSlope, Examples) {
    EXPECT_EQ(associated_slope(Rational(1)).value, 1);
    EXPECT_EQ(associated_slope(Rational(14, 9)).value, Rational(3, 2));
    EXPECT_EQ(associated_slope(surd_value(Rational(-3, 2), Rational(1, 2), 405)).value, Rational(17, 2));
    EXPECT_TRUE(is_exceptional_slope(Rational(12, 29)));
    EXPECT_FALSE(is_exceptional_slope(Rational(14, 9)));
    EXPECT_THROW(exceptional_from_value(Rational(14, 9)), error);
}

TEST(AssociatedSlope, IntervalEndpointIsCantorPoint) {
    QuadSurd edge = epsilon(0, 0).upper();
    try {
        associated_slope(edge, 20);
        FAIL() << "expected cantor_point";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::cantor_point);
    }
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(values(enumerate_slopes(1, 0, 1)), (std::vector<Rational>{0, {1, 2}, 1}));
    EXPECT_EQ(values(enumerate_slopes(3, 0, 1)),
              (std::vector<Rational>{0, {5, 13}, {2, 5}, {12, 29}, {1, 2}, {17, 29}, {3, 5}, {8, 13}, 1}));
    EXPECT_EQ(values(enumerate_slopes(0, 0, 3)), (std::vector<Rational>{0, 1, 2, 3}));
    EXPECT_THROW(enumerate_slopes(2, 1, 1), error);
}

TEST(Enumerate, StrictlyIncreasingToDepth10) {
    auto v = enumerate_slopes(10, 0, 3);
    ASSERT_EQ(v.size(), 3u * 1024 + 1);
    for (std::size_t i = 1; i < v.size(); ++i) {
        ASSERT_LT(v[i - 1]->value, v[i]->value);
        ASSERT_LT(v[i - 1]->address, v[i]->address);
    }
}

// Values rebuilt from the left-gap relation alone, not the mean + Delta form.
TEST(Epsilon, IndependentRecursionToDepth10) {
    std::vector<Rational> row{0, 1};
    for (unsigned q = 1; q <= 10; ++q) {
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            const Rational &a = row[i], &b = row[i + 1];
            next.push_back(a);
            next.push_back(a + 1 / (Rational(den(a) * den(a)) * (3 + a - b)));
        }
        next.push_back(row.back());
        row = std::move(next);
    }
    for (long p = 0; p <= 1024; ++p)
        ASSERT_EQ(epsilon(p, 10).value, row[p]) << p;
}

// Ranks of (a, a.b, b) form a Markov triple.
TEST(Epsilon, MarkovRanksAndGapsToDepth10) {
    for (unsigned q = 1; q <= 10; ++q) {
        long scale = 1L << q;
        for (long p = 0; p < 2 * scale; ++p) {
            const ExceptionalSlope& a = epsilon(p, q);
            const ExceptionalSlope& b = epsilon(p + 1, q);
            const ExceptionalSlope& c = epsilon(2 * p + 1, q + 1);
            BigInt x = a.rank, y = b.rank, z = c.rank;
            ASSERT_EQ(x * x + y * y + z * z, 3 * x * y * z) << p << "/2^" << q;
            Rational g = 3 + a.value - b.value;
            ASSERT_EQ(c.value - a.value, 1 / (Rational(x * x) * g));
            ASSERT_EQ(b.value - c.value, 1 / (Rational(y * y) * g));
        }
    }
}

TEST(Epsilon, CongruenceAndEulerIntegrality) {
    for (const ExceptionalSlope* e : enumerate_slopes(10, 0, 2)) {
        BigInt r = e->rank;
        BigInt c = num(e->value); // alpha * r
        BigInt m = (c * c + 1) % r;
        ASSERT_EQ(m, 0) << e->value.str();
        Rational chi = Rational(r) * (oracle::P(e->value) - (1 - Rational(1, r * r)) / 2);
        ASSERT_TRUE(is_integer(chi));
        ASSERT_EQ(Rational(e->euler), chi);
    }
}

TEST(Epsilon, ConcurrentMemo) {
    constexpr int kThreads = 8;
    std::vector<std::thread> pool;
    std::atomic<int> bad{0};
    std::vector<std::vector<const ExceptionalSlope*>> seen(kThreads);
    for (int t = 0; t < kThreads; ++t) {
        pool.emplace_back([t, &bad, &seen] {
            std::mt19937_64 rng(100 + t);
            std::uniform_int_distribution<long> pick(0, (1L << 14) - 1);
            for (int i = 0; i < 400; ++i) {
                long p = pick(rng) | 1;
                const ExceptionalSlope& e = epsilon(p, 14);
                auto [a, b] = parent_pair(e);
                if (e.value != dot(a, b))
                    ++bad;
            }
            for (long p = 0; p < 64; ++p)
                seen[t].push_back(&epsilon(p, 6));
        });
    }
    for (auto& th : pool)
        th.join();
    EXPECT_EQ(bad.load(), 0);
    for (int t = 1; t < kThreads; ++t)
        EXPECT_EQ(seen[t], seen[0]);
}
