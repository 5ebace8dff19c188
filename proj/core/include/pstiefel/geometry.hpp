#ifndef PSTIEFEL_GEOMETRY_HPP
#define PSTIEFEL_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pstiefel/cohomology.hpp>
#include <pstiefel/ring.hpp>
#include <pstiefel/series.hpp>
#include <pstiefel/weights.hpp>

namespace pstiefel {

// ---------------------------------------------------------------------------
// Pontrjagin series of P_l W_{n,2}, modulo 2-torsion. Both live in the
// subring generated by x; index i of the returned series is the coefficient
// of x^i, so p_i sits at index 2i.
// ---------------------------------------------------------------------------

/// (1 - l1^2 x^2)^n (1 - l2^2 x^2)^n (1 - (l2-l1)^2 x^2)^{-1}
TruncatedSeries tangent_pontrjagin(std::int64_t n, const WeightTuple& ell, const Integer& modulus,
                                   std::size_t truncation);

/// (1 - l1^2 x^2)^{-n} (1 - l2^2 x^2)^{-n} (1 - (l2-l1)^2 x^2)
TruncatedSeries normal_pontrjagin(std::int64_t n, const WeightTuple& ell, const Integer& modulus,
                                  std::size_t truncation);

/// Real dimension 4n - 5 of P_l W_{n,2}.
inline std::int64_t k2_dimension(std::int64_t n) { return 4 * n - 5; }

/// Witness that span(P_l W_{n,2}) <= (4n-5) - 2i: p_i(tau) reduces to a
/// nonzero multiple of x^{2i}, and x^{2i} != 0 in mod-p cohomology.
struct SpanCertificate {
    Integer prime;
    std::int64_t index = 0;
    Residue witness;
    std::int64_t span_bound = 0;
    std::int64_t N = 0; ///< nilpotency order of x mod prime

    bool operator==(const SpanCertificate&) const = default;
};

/// Witness that P_l W_{n,2} does not immerse in R^{(4n-5)+2j-1}: p_j(nu) is a
/// nonzero multiple of x^{2j} != 0, so the normal bundle has rank >= 2j.
struct ImmersionCertificate {
    Integer prime;
    std::int64_t index = 0;
    Residue witness;
    std::int64_t certified_non_immersion_dim = 0;
    /// The dimension the closed-form statement claims, one above the certified one.
    std::int64_t paper_claimed_dim = 0;
    std::int64_t N = 0;

    bool operator==(const ImmersionCertificate&) const = default;
};

/// Largest-index span certificate at prime p, if any index >= 1 qualifies.
std::optional<SpanCertificate> span_certificate(std::int64_t n, const WeightTuple& ell,
                                                const Integer& p);

/// Certificate at a prescribed index i, or nullopt when x^{2i} vanishes mod p
/// or the coefficient is zero. Index 0 is accepted and certifies nothing new.
std::optional<SpanCertificate> span_certificate_at(std::int64_t n, const WeightTuple& ell,
                                                   const Integer& p, std::int64_t index);

std::optional<ImmersionCertificate> immersion_certificate(std::int64_t n, const WeightTuple& ell,
                                                          const Integer& p);

std::optional<ImmersionCertificate> immersion_certificate_at(std::int64_t n,
                                                             const WeightTuple& ell,
                                                             const Integer& p,
                                                             std::int64_t index);

struct SpanReport {
    std::int64_t n = 0;
    std::int64_t prime_bound = 0;
    std::vector<Integer> primes_tried;
    /// Ordered by prime.
    std::vector<SpanCertificate> certificates;
    /// Minimal span bound; ties go to the smallest prime.
    std::optional<SpanCertificate> best;
};

struct ImmersionReport {
    std::int64_t n = 0;
    std::int64_t prime_bound = 0;
    std::vector<Integer> primes_tried;
    std::vector<ImmersionCertificate> certificates;
    /// Maximal certified non-immersion dimension; ties go to the smallest prime.
    std::optional<ImmersionCertificate> best;
};

SpanReport best_span_bound(std::int64_t n, const WeightTuple& ell, std::int64_t prime_bound);
ImmersionReport best_immersion_bound(std::int64_t n, const WeightTuple& ell,
                                     std::int64_t prime_bound);

// ---------------------------------------------------------------------------
// Claim checkers: compare the closed-form span/immersion statements with the
// direct series computation. Discrepancies are data.
// ---------------------------------------------------------------------------

enum class Verdict { agree, discrepant, not_applicable };

std::string to_string(Verdict v);

struct PrimeClaim {
    Integer prime;
    std::string part;            ///< "span-1", "span-2" or "immersion"
    bool hypotheses_hold = false;
    std::vector<std::string> hypotheses; ///< "name=true/false" breakdown
    std::int64_t index = 0;      ///< Pontrjagin index the statement relies on
    Residue coefficient;         ///< coefficient of x^{2*index}, mod prime
    std::int64_t N = 0;
    bool class_nonzero = false;  ///< 2*index <= N - 1
    std::int64_t claimed_bound = 0;
    Verdict verdict = Verdict::not_applicable;

    bool operator==(const PrimeClaim&) const = default;
};

struct ClaimCheck {
    std::string theorem; ///< "span" or "immersion"
    std::int64_t n = 0;
    WeightTuple ell;
    std::vector<PrimeClaim> entries;
    /// not_applicable when no prime satisfies the hypotheses; discrepant if any
    /// applicable entry disagrees.
    Verdict overall = Verdict::not_applicable;

    bool operator==(const ClaimCheck&) const = default;
};

ClaimCheck check_paper_span_theorem(std::int64_t n, const WeightTuple& ell);
ClaimCheck check_paper_immersion_theorem(std::int64_t n, const WeightTuple& ell);

// ---------------------------------------------------------------------------
// Complementary-bundle rank bounds for sums of line-bundle powers.
// ---------------------------------------------------------------------------

enum class RankReason { chern_nonzero, paper_prop_proj2, phi_mod_m, sq2_criterion, none };

std::string to_string(RankReason r);

struct RankBoundReport {
    std::string space; ///< "CP^n" or "L^d(m)"
    std::int64_t lower_bound = 0;
    std::optional<std::int64_t> achievable;
    RankReason reason = RankReason::none;
    /// Chern index and its value for chern_nonzero / phi_mod_m.
    std::optional<std::int64_t> reason_index;
    std::optional<Integer> reason_value;
    /// Why the achievable rank is attainable.
    RankReason achievable_reason = RankReason::none;
    std::vector<std::string> diagnostics;

    bool operator==(const RankBoundReport&) const = default;
};

/// Bounds on rank(zeta) where (+)_j xi^{l_j} (+) zeta is trivial over CP^n.
RankBoundReport cp_complement_min_rank(std::int64_t n, const WeightTuple& ell);

struct LensParams {
    std::int64_t d;
    Integer m;
    Integer l1;
    Integer l2;

    /// d >= 1, m >= 2, gcd(l1, l2) = 1.
    static LensParams make(std::int64_t d, Integer m, Integer l1, Integer l2);
};

struct CriterionResult {
    bool satisfied = false;
    bool d_even = false;
    bool m_even = false;
    bool m_divides_phi = false;
    bool valuations_equal = false;
    Integer phi_d;
    std::vector<std::string> diagnostics;
};

CriterionResult lens_sq2_criterion(const LensParams& params);

/// Bounds on rank(zeta) where lambda^{l1} (+) lambda^{l2} (+) zeta is trivial
/// over the lens space L^d(m).
RankBoundReport lens_rank_bound(const LensParams& params);

} // namespace pstiefel

#endif // PSTIEFEL_GEOMETRY_HPP
