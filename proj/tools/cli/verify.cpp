#include "verify.hpp"

#include <random>

#include <pstiefel/cohomology.hpp>
#include <pstiefel/geometry.hpp>
#include <pstiefel/series.hpp>

namespace pstiefel::cli {

std::vector<WeightTuple> primitive_tuples(std::size_t k, long lo, long hi) {
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
            break;
        }
        cur[i - 1] += 1;
    }
    return out;
}

namespace {

void fail(SuiteResult& res, const std::string& what) {
    if (!res.counterexample) {
        res.counterexample = what;
    }
    ++res.failures;
}

} // namespace

SuiteResult verify_symmetric_sums(const VerifyOptions& opts) {
    SuiteResult res{"symmetric-sums (h vs brute force)"};
    const std::size_t max_k = opts.quick ? 3 : 4;
    for (std::size_t k = 1; k <= max_k; ++k) {
        for (const auto& ell : primitive_tuples(k, -3, 3)) {
            for (std::int64_t r = 0; r <= 8; ++r) {
                ++res.checks;
                const Integer got = opts.h_impl(ell, r);
                const Integer want = h_bruteforce(ell, r);
                if (got != want) {
                    fail(res, "weights " + ell.to_string() + ", r=" + std::to_string(r) +
                                  ": h=" + got.get_str() + ", brute force=" + want.get_str());
                }
            }
        }
    }
    return res;
}

SuiteResult verify_series_inversion(const VerifyOptions& opts) {
    SuiteResult res{"series-inversion (a * inv(a) = 1)"};
    std::mt19937_64 rng(0x5eed);
    const int count = opts.quick ? 200 : 1000;
    const long moduli[] = {0, 3, 5, 7};
    for (int t = 0; t < count; ++t) {
        const long m = moduli[static_cast<std::size_t>(t) % 4];
        const std::size_t trunc = std::uniform_int_distribution<std::size_t>(1, 32)(rng);
        std::vector<Integer> c(trunc);
        std::uniform_int_distribution<long> coeff(-9, 9);
        for (auto& v : c) {
            v = coeff(rng);
        }
        if (m == 0) {
            c[0] = (rng() & 1U) ? 1 : -1;
        } else {
            c[0] = std::uniform_int_distribution<long>(1, m - 1)(rng);
        }
        const TruncatedSeries a(c, trunc, m);
        ++res.checks;
        if (!(mul(a, inv(a)) == TruncatedSeries::one(trunc, m))) {
            fail(res, "series " + a.to_string());
        }
    }
    return res;
}

SuiteResult verify_lucas_vs_N(const VerifyOptions& opts) {
    SuiteResult res{"lucas-vs-N (all-ones weights)"};
    const std::int64_t max_n = opts.quick ? 12 : 30;
    for (std::int64_t n = 2; n <= max_n; ++n) {
        for (std::int64_t k = 2; k <= std::min<std::int64_t>(5, n); ++k) {
            std::vector<Integer> ones(static_cast<std::size_t>(k), 1);
            const auto params = StiefelParams::make(n, k, WeightTuple::validate(ones));
            for (long p : {3L, 5L, 7L, 11L}) {
                ++res.checks;
                std::int64_t lucas_N = -1;
                for (std::int64_t r = n - k + 1; r <= n; ++r) {
                    if (!lucas_binom(n, r, p).is_zero()) {
                        lucas_N = r;
                        break;
                    }
                }
                const std::int64_t N = min_nonvanishing_N(params, p);
                if (N != lucas_N) {
                    fail(res, "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                  ", p=" + std::to_string(p) + ": N=" + std::to_string(N) +
                                  ", Lucas rule=" + std::to_string(lucas_N));
                }
            }
        }
    }
    return res;
}

SuiteResult verify_presentations(const VerifyOptions& opts) {
    SuiteResult res{"presentation-invariants"};
    const std::int64_t max_n = opts.quick ? 12 : 20;
    for (std::int64_t k = 2; k <= 5; ++k) {
        // wider weight ranges for short tuples; the grid grows as 4^k-7^k
        const long lo = k == 2 ? -3 : (k == 3 ? -2 : -1);
        const long hi = k == 2 ? 3 : 2;
        const auto tuples = primitive_tuples(static_cast<std::size_t>(k), lo, hi);
        for (std::int64_t n = k; n <= max_n; ++n) {
            for (const auto& ell : tuples) {
                const auto params = StiefelParams::make(n, k, ell);
                for (long p : {3L, 5L, 7L, 11L, 13L}) {
                    ++res.checks;
                    const auto check =
                        check_presentation_invariants(presentation_odd(params, p), params);
                    if (!check.pass) {
                        fail(res, "n=" + std::to_string(n) + ", weights " + ell.to_string() +
                                      ", p=" + std::to_string(p) + ": " + check.failures.front());
                    }
                }
            }
        }
    }
    for (auto ell : {WeightTuple::validate({1, 1}), WeightTuple::validate({1, 2}),
                     WeightTuple::validate({1, -1}), WeightTuple::validate({2, 3})}) {
        for (std::int64_t n = 2; n <= max_n; ++n) {
            ++res.checks;
            const auto params = StiefelParams::make(n, 2, ell);
            const auto pres = presentation_mod2_k2(n, ell);
            const auto check = check_presentation_invariants(pres, params);
            if (!check.pass) {
                fail(res, "mod 2, n=" + std::to_string(n) + ", weights " + ell.to_string() + ": " +
                              check.failures.front());
            } else if (pres.N != min_nonvanishing_N(params, 2)) {
                fail(res, "mod 2, n=" + std::to_string(n) + ", weights " + ell.to_string() +
                              ": relation exponent disagrees with N at p=2");
            }
        }
    }
    return res;
}

SuiteResult verify_pontrjagin_product(const VerifyOptions& opts) {
    SuiteResult res{"pontrjagin-product (tangent * normal = 1)"};
    const std::int64_t max_n = opts.quick ? 12 : 20;
    const auto tuples = primitive_tuples(2, -5, 5);
    for (std::int64_t n = 2; n <= max_n; ++n) {
        const auto trunc = static_cast<std::size_t>(2 * n);
        for (const auto& ell : tuples) {
            ++res.checks;
            const auto prod =
                mul(tangent_pontrjagin(n, ell, 0, trunc), normal_pontrjagin(n, ell, 0, trunc));
            if (!(prod == TruncatedSeries::one(trunc))) {
                fail(res, "n=" + std::to_string(n) + ", weights " + ell.to_string());
            }
        }
    }
    return res;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
    return {verify_symmetric_sums(opts), verify_series_inversion(opts), verify_lucas_vs_N(opts),
            verify_presentations(opts), verify_pontrjagin_product(opts)};
}

} // namespace pstiefel::cli
