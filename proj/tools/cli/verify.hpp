#ifndef PSTIEFEL_CLI_VERIFY_HPP
#define PSTIEFEL_CLI_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <pstiefel/weights.hpp>

namespace pstiefel::cli {

using HFunction = std::function<Integer(const WeightTuple&, std::int64_t)>;

struct VerifyOptions {
    bool quick = false;
    /// Implementation under test for the symmetric-sum suite; swapped out by
    /// mutation tests.
    HFunction h_impl = [](const WeightTuple& ell, std::int64_t r) { return h(ell, r); };
};

struct SuiteResult {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    std::optional<std::string> counterexample; ///< first failure only

    bool passed() const { return failures == 0; }
};

SuiteResult verify_symmetric_sums(const VerifyOptions& opts);
SuiteResult verify_series_inversion(const VerifyOptions& opts);
SuiteResult verify_lucas_vs_N(const VerifyOptions& opts);
SuiteResult verify_presentations(const VerifyOptions& opts);
SuiteResult verify_pontrjagin_product(const VerifyOptions& opts);

std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

/// Every primitive tuple of length k with entries in [lo, hi], lexicographic.
std::vector<WeightTuple> primitive_tuples(std::size_t k, long lo, long hi);

} // namespace pstiefel::cli

#endif // PSTIEFEL_CLI_VERIFY_HPP
