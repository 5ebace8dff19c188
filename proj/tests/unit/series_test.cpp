#include <gtest/gtest.h>

#include <random>

#include <pstiefel/series.hpp>

using namespace pstiefel;

namespace {

TruncatedSeries random_unit(std::mt19937_64& rng, std::size_t t, long m) {
    std::uniform_int_distribution<long> dist(-20, 20);
    std::vector<Integer> c(t);
    for (auto& v : c) {
        v = dist(rng);
    }
    if (m == 0) {
        c[0] = (rng() & 1U) ? 1 : -1;
    } else {
        do {
            c[0] = dist(rng);
        } while (!Residue(c[0], m).is_unit());
    }
    return TruncatedSeries(c, t, m);
}

} // namespace

TEST(Series, MulExamples) {
    EXPECT_EQ(mul(TruncatedSeries({1, 1}, 4), TruncatedSeries({1, -1}, 4)),
              TruncatedSeries({1, 0, -1}, 4));
    EXPECT_EQ(mul(TruncatedSeries({1, 1, 1, 1}, 4), TruncatedSeries({1, -1}, 4)),
              TruncatedSeries::one(4));
    EXPECT_EQ(mul(TruncatedSeries({1, 2}, 3, 3), TruncatedSeries({1, 2}, 3, 3)),
              TruncatedSeries({1, 1, 1}, 3, 3));
}

TEST(Series, MismatchIsRejected) {
    EXPECT_THROW(mul(TruncatedSeries({1}, 3), TruncatedSeries({1}, 4)), InputError);
    EXPECT_THROW(mul(TruncatedSeries({1}, 3, 5), TruncatedSeries({1}, 3, 7)), InputError);
    EXPECT_THROW(TruncatedSeries({1}, 0), InputError);
}

TEST(Series, InvExamples) {
    EXPECT_EQ(inv(TruncatedSeries({1, -1}, 4)), TruncatedSeries({1, 1, 1, 1}, 4));
    EXPECT_EQ(inv(TruncatedSeries({1, 0, -1}, 6)), TruncatedSeries({1, 0, 1, 0, 1, 0}, 6));
    EXPECT_THROW(inv(TruncatedSeries({2, 1}, 2)), InputError);
    EXPECT_THROW(inv(TruncatedSeries({3, 1}, 2, 6)), InputError);
    // 2 is a unit mod 5: (2 + x)^{-1} = 3 + x + 2x^2 mod 5, checked by hand: 3*2=6=1.
    EXPECT_EQ(mul(inv(TruncatedSeries({2, 1}, 3, 5)), TruncatedSeries({2, 1}, 3, 5)),
              TruncatedSeries::one(3, 5));
}

TEST(Series, IntPowExamples) {
    EXPECT_EQ(int_pow(TruncatedSeries({1, 0, -1}, 6), -2), TruncatedSeries({1, 0, 2, 0, 3, 0}, 6));
    EXPECT_EQ(int_pow(TruncatedSeries({5, 3, 1}, 4), 0), TruncatedSeries::one(4));
    EXPECT_EQ(int_pow(TruncatedSeries({1, 0, -1}, 6, 7), -16),
              TruncatedSeries({1, 0, 2, 0, 3, 0}, 6, 7));
    EXPECT_THROW(int_pow(TruncatedSeries({2, 1}, 3), -1), InputError);
}

TEST(Series, IntPowMatchesBinomialCoefficients) {
    // (1 - x)^{-e} has coefficient C(e + i - 1, i); computed by GMP's binomial.
    for (unsigned long e = 1; e <= 25; ++e) {
        const auto s = int_pow(TruncatedSeries({1, -1}, 20), -static_cast<std::int64_t>(e));
        for (unsigned long i = 0; i < 20; ++i) {
            Integer want;
            mpz_bin_uiui(want.get_mpz_t(), e + i - 1, i);
            ASSERT_EQ(s.coeff(i).value(), want) << "e=" << e << " i=" << i;
        }
    }
}

TEST(Series, Coeff) {
    EXPECT_EQ(TruncatedSeries({1, 1, 1}, 3).coeff(1).value(), 1);
    EXPECT_EQ(inv(TruncatedSeries({1, 0, -1}, 8)).coeff(7).value(), 0);
    EXPECT_EQ(int_pow(TruncatedSeries({1, -1}, 5), -2).coeff(3).value(), 4);
    EXPECT_THROW(TruncatedSeries({1}, 3).coeff(3), InputError);
}

TEST(Series, ReduceMod) {
    EXPECT_EQ(reduce_mod(TruncatedSeries({1, 3, 9}, 3), 3), TruncatedSeries::one(3, 3));
    EXPECT_EQ(reduce_mod(TruncatedSeries({1, 0, -9}, 3), 7), TruncatedSeries({1, 0, 5}, 3, 7));
    EXPECT_EQ(reduce_mod(TruncatedSeries({1, 7}, 2), 7), TruncatedSeries::one(2, 7));
    EXPECT_THROW(reduce_mod(TruncatedSeries({1}, 2), 1), InputError);
    EXPECT_THROW(reduce_mod(TruncatedSeries({1}, 2, 5), 5), InputError);
}

TEST(SeriesProperty, InverseIsTwoSided) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        const long m = std::array<long, 4>{0, 3, 5, 7}[static_cast<std::size_t>(t % 4)];
        const std::size_t trunc = 1 + static_cast<std::size_t>(rng() % 64);
        const auto a = random_unit(rng, trunc, m);
        const auto b = inv(a);
        ASSERT_EQ(mul(a, b), TruncatedSeries::one(trunc, m)) << a.to_string();
        ASSERT_EQ(mul(b, a), TruncatedSeries::one(trunc, m));
    }
}

TEST(SeriesProperty, PowerLaw) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
        const long m = (t % 2) ? 0 : 5;
        const auto a = random_unit(rng, 10, m);
        const std::int64_t e1 = static_cast<std::int64_t>(rng() % 41) - 20;
        const std::int64_t e2 = static_cast<std::int64_t>(rng() % 41) - 20;
        ASSERT_EQ(int_pow(a, e1 + e2), mul(int_pow(a, e1), int_pow(a, e2)))
            << "e1=" << e1 << " e2=" << e2;
        ASSERT_EQ(int_pow(a, -e1), inv(int_pow(a, e1)));
    }
}

TEST(SeriesProperty, ReductionCommutes) {
    std::mt19937_64 rng(5);
    for (long p : {3L, 5L, 7L, 11L}) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t trunc = 1 + static_cast<std::size_t>(rng() % 16);
            const auto a = random_unit(rng, trunc, 0);
            const auto b = random_unit(rng, trunc, 0);
            const auto e = static_cast<std::int64_t>(rng() % 13) - 6;
            ASSERT_EQ(reduce_mod(mul(a, b), p), mul(reduce_mod(a, p), reduce_mod(b, p)));
            ASSERT_EQ(reduce_mod(inv(a), p), inv(reduce_mod(a, p)));
            ASSERT_EQ(reduce_mod(int_pow(a, e), p), int_pow(reduce_mod(a, p), e));
        }
    }
}

TEST(Series, ToString) {
    EXPECT_EQ(TruncatedSeries({1, 0, -1}, 4).to_string(), "1 - x^2 + O(x^4)");
    EXPECT_EQ(TruncatedSeries({1, 2}, 3, 5).to_string(), "1 + 2x + O(x^3) mod 5");
}
