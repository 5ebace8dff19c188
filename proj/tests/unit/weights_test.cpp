#include <gtest/gtest.h>

#include <numeric>

#include <pstiefel/weights.hpp>

using namespace pstiefel;

namespace {

std::vector<WeightTuple> small_tuples(std::size_t k, long lo, long hi) {
    std::vector<WeightTuple> out;
    std::vector<Integer> cur(k, lo);
    while (true) {
        if (gcd_all(cur) == 1) {
            out.push_back(WeightTuple::validate(cur));
        }
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == hi) {
            cur[i - 1] = lo;
            --i;
        }
        if (i == 0) {
            return out;
        }
        cur[i - 1] += 1;
    }
}

} // namespace

TEST(Weights, Validate) {
    EXPECT_EQ(WeightTuple::validate({2, 1}).to_string(), "(2,1)");
    EXPECT_THROW(WeightTuple::validate({2, 4}), InputError);
    EXPECT_EQ(WeightTuple::validate({1, -1}).to_string(), "(1,-1)");
    EXPECT_THROW(WeightTuple::validate(std::initializer_list<long>{}), InputError);
    EXPECT_THROW(WeightTuple::validate({0, 0}), InputError);
    EXPECT_NO_THROW(WeightTuple::validate({0, 1, 5}));
}

TEST(Weights, HExamples) {
    EXPECT_EQ(h(WeightTuple::validate({1, 2}), 2), 7);
    EXPECT_EQ(h(WeightTuple::validate({3, -7}), 0), 1);
    const auto pm = WeightTuple::validate({1, -1});
    for (std::int64_t r = 0; r < 12; ++r) {
        EXPECT_EQ(h(pm, r), r % 2 == 0 ? 1 : 0);
    }
}

TEST(Weights, BruteForceExamples) {
    EXPECT_EQ(h_bruteforce(WeightTuple::validate({1, 1}), 3), 4);
    EXPECT_EQ(h_bruteforce(WeightTuple::validate({2, 1}), 3), 15);
    for (std::size_t k = 1; k <= 6; ++k) {
        std::vector<Integer> ones(k, 1);
        for (std::int64_t r = 0; r <= 12; ++r) {
            Integer want;
            mpz_bin_uiui(want.get_mpz_t(), static_cast<unsigned long>(r + k - 1),
                         static_cast<unsigned long>(k - 1));
            EXPECT_EQ(h_bruteforce(WeightTuple::validate(ones), r), want);
        }
    }
    EXPECT_THROW(h_bruteforce(WeightTuple::validate({1, 2}), 13), InputError);
    EXPECT_THROW(h_bruteforce(WeightTuple::validate({1, 1, 1, 1, 1, 1, 1}), 2), InputError);
}

TEST(Weights, HMatchesBruteForce) {
    for (std::size_t k = 1; k <= 4; ++k) {
        for (const auto& ell : small_tuples(k, -3, 3)) {
            for (std::int64_t r = 0; r <= 8; ++r) {
                ASSERT_EQ(h(ell, r), h_bruteforce(ell, r)) << ell.to_string() << " r=" << r;
            }
        }
    }
}

TEST(Weights, HSymmetries) {
    for (const auto& ell : small_tuples(3, -3, 3)) {
        auto v = ell.values();
        std::vector<Integer> rev(v.rbegin(), v.rend());
        std::vector<Integer> neg;
        for (const auto& x : v) {
            neg.push_back(-x);
        }
        const auto ell_rev = WeightTuple::validate(rev);
        const auto ell_neg = WeightTuple::validate(neg);
        for (std::int64_t r = 0; r <= 10; ++r) {
            EXPECT_EQ(h(ell_rev, r), h(ell, r));
            EXPECT_EQ(h(ell_neg, r), (r % 2 ? -1 : 1) * h(ell, r));
        }
    }
}

TEST(Weights, Phi) {
    EXPECT_EQ(phi(1, -1, 2), 1);
    for (std::int64_t d = 0; d < 10; ++d) {
        EXPECT_EQ(phi(1, 1, d), d + 1);
    }
    EXPECT_EQ(phi(1, 2, 3), 15);
    EXPECT_EQ(phi(-3, -3, 2), 27);
    for (long a = -5; a <= 5; ++a) {
        for (long b = -5; b <= 5; ++b) {
            for (std::int64_t d = 0; d <= 9; ++d) {
                if (a != b) {
                    Integer pa;
                    Integer pb;
                    mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(std::labs(a)),
                                  static_cast<unsigned long>(d + 1));
                    mpz_ui_pow_ui(pb.get_mpz_t(), static_cast<unsigned long>(std::labs(b)),
                                  static_cast<unsigned long>(d + 1));
                    if (a < 0 && (d + 1) % 2 == 1) {
                        pa = -pa;
                    }
                    if (b < 0 && (d + 1) % 2 == 1) {
                        pb = -pb;
                    }
                    EXPECT_EQ(phi(a, b, d) * (a - b), pa - pb);
                }
                if (std::gcd(a, b) == 1) {
                    EXPECT_EQ(phi(a, b, d), h(WeightTuple::validate({a, b}), d));
                }
            }
        }
    }
}

TEST(Weights, TotalChern) {
    EXPECT_EQ(total_chern(WeightTuple::validate({1, -1}), 4), TruncatedSeries({1, 0, -1}, 4));
    EXPECT_EQ(total_chern(WeightTuple::validate({1, 2}), 3), TruncatedSeries({1, 3, 2}, 3));
    EXPECT_EQ(total_chern(WeightTuple::validate({1}), 3), TruncatedSeries({1, 1}, 3));
}

TEST(Weights, ComplementChern) {
    EXPECT_EQ(complement_chern(WeightTuple::validate({1, -1}), 6),
              TruncatedSeries({1, 0, 1, 0, 1, 0}, 6));
    EXPECT_EQ(complement_chern(WeightTuple::validate({1}), 4), TruncatedSeries({1, -1, 1, -1}, 4));
    // signed coefficients: (-1)^j phi_j, not the unsigned display
    const auto c = complement_chern(WeightTuple::validate({1, 2}), 5);
    EXPECT_EQ(c, TruncatedSeries({1, -3, 7, -15, 31}, 5));
}

TEST(WeightsProperty, ChernPairAndSignedH) {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& ell : small_tuples(k, -3, 3)) {
            for (std::size_t t : {1U, 5U, 12U}) {
                const auto c = complement_chern(ell, t);
                EXPECT_EQ(mul(total_chern(ell, t), c), TruncatedSeries::one(t));
                for (std::size_t r = 0; r < t; ++r) {
                    const Integer hr = h(ell, static_cast<std::int64_t>(r));
                    EXPECT_EQ(c.coeff(r).value(), r % 2 ? Integer(-hr) : hr);
                }
            }
        }
    }
}
