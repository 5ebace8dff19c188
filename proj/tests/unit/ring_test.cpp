#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <pstiefel/ring.hpp>

using namespace pstiefel;

namespace {

// Pascal's triangle mod p, no factorials and no digit tricks.
std::vector<std::vector<long>> pascal_mod(long rows, long p) {
    std::vector<std::vector<long>> t(static_cast<std::size_t>(rows) + 1);
    for (long n = 0; n <= rows; ++n) {
        auto& row = t[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        for (long r = 1; r < n; ++r) {
            const auto& prev = t[static_cast<std::size_t>(n - 1)];
            row[static_cast<std::size_t>(r)] =
                (prev[static_cast<std::size_t>(r - 1)] + prev[static_cast<std::size_t>(r)]) % p;
        }
    }
    return t;
}

} // namespace

TEST(Ring, GcdAll) {
    std::vector<Integer> a{6, -10, 15};
    EXPECT_EQ(gcd_all(a), 1);
    std::vector<Integer> zeros{0, 0};
    EXPECT_EQ(gcd_all(zeros), 0);
    std::vector<Integer> single{7};
    EXPECT_EQ(gcd_all(single), 7);
    std::vector<Integer> neg{-12, 18};
    EXPECT_EQ(gcd_all(neg), 6);
    std::vector<Integer> empty;
    EXPECT_THROW(gcd_all(empty), InputError);
}

TEST(Ring, GcdAllPermutationAndSignInvariant) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(-60, 60);
    for (int t = 0; t < 200; ++t) {
        std::vector<Integer> v(static_cast<std::size_t>(1 + t % 5));
        for (auto& x : v) {
            x = dist(rng);
        }
        const Integer g = gcd_all(v);
        auto w = v;
        std::shuffle(w.begin(), w.end(), rng);
        for (auto& x : w) {
            if (rng() & 1U) {
                x = -x;
            }
        }
        EXPECT_EQ(gcd_all(w), g);
    }
}

TEST(Ring, Valuation) {
    EXPECT_EQ(nu(2, 40), 3);
    EXPECT_EQ(nu(3, 7), 0);
    EXPECT_EQ(nu(5, -250), 3);
    EXPECT_THROW(nu(2, 0), InputError);
    EXPECT_THROW(nu(4, 8), InputError);
}

TEST(Ring, ValuationIsAdditive) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> dist(-500, 500);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int t = 0; t < 200; ++t) {
            long a = dist(rng);
            long b = dist(rng);
            if (a == 0 || b == 0) {
                continue;
            }
            EXPECT_EQ(nu(p, Integer(a) * b), nu(p, a) + nu(p, b));
        }
    }
}

TEST(Ring, LucasExamples) {
    EXPECT_EQ(lucas_binom(10, 4, 3), Residue(0, 3));
    EXPECT_EQ(lucas_binom(17, 0, 5), Residue(1, 5));
    EXPECT_EQ(lucas_binom(5, 4, 5), Residue(0, 5));
    EXPECT_EQ(lucas_binom(3, 5, 7), Residue(0, 7));
    EXPECT_THROW(lucas_binom(3, 1, 6), InputError);
}

TEST(Ring, LucasMatchesPascal) {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        const auto table = pascal_mod(64, p);
        for (long n = 0; n <= 64; ++n) {
            for (long r = 0; r <= n; ++r) {
                ASSERT_EQ(lucas_binom(n, r, p).value(),
                          table[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)])
                    << "n=" << n << " r=" << r << " p=" << p;
            }
        }
    }
}

TEST(Ring, LucasHandlesHugeArguments) {
    // C(p^2, p) = p mod p^2 route: C(p^2, p) == 0 mod p.
    Integer big("1000000000000000000000");
    EXPECT_EQ(lucas_binom(big, 0, 7).value(), 1);
    EXPECT_EQ(lucas_binom(big, big, 7).value(), 1);
    EXPECT_EQ(lucas_binom(49, 7, 7).value(), 0);
}

TEST(Ring, Primes) {
    EXPECT_EQ(primes_upto(10), (std::vector<std::int64_t>{2, 3, 5, 7}));
    EXPECT_TRUE(primes_upto(1).empty());
    EXPECT_TRUE(primes_upto(0).empty());
    EXPECT_EQ(primes_upto(30),
              (std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
    for (auto p : primes_upto(2000)) {
        EXPECT_TRUE(is_prime(p));
    }
    EXPECT_EQ(primes_upto(2000).size(), 303U);
}

TEST(Ring, ResidueArithmetic) {
    Residue a(-9, 7);
    EXPECT_EQ(a.value(), 5);
    EXPECT_EQ((a * Residue(3, 7)).value(), 1);
    EXPECT_EQ(a.inverse(), Residue(3, 7));
    EXPECT_THROW(Residue(2, 4).inverse(), InputError);
    EXPECT_THROW(Residue(1, 3) + Residue(1, 5), InputError);
    EXPECT_TRUE(Residue(-1, 0).is_unit());
    EXPECT_FALSE(Residue(2, 0).is_unit());
    Integer huge("123456789012345678901234567890");
    EXPECT_EQ((Residue(huge) * Residue(huge)).value(), huge * huge);
}
