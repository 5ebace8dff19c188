#ifndef PSTIEFEL_COHOMOLOGY_HPP
#define PSTIEFEL_COHOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <pstiefel/ring.hpp>
#include <pstiefel/weights.hpp>

namespace pstiefel {

/// Parameters of P_l W_{n,k}: the quotient of the complex Stiefel manifold
/// W_{n,k} by the circle acting with weights l.
struct StiefelParams {
    std::int64_t n;
    std::int64_t k;
    WeightTuple ell;

    /// Validates 1 <= k <= n and |ell| = k.
    static StiefelParams make(std::int64_t n, std::int64_t k, WeightTuple ell);

    /// Real dimension k(2n - k) - 1.
    std::int64_t dimension() const { return k * (2 * n - k) - 1; }
};

/// H*(P_l W_{n,k}; Z/p) as Z/p[x]/(x^N) (x) Lambda(y_j : n-k < j <= n, j != N).
///
/// Only degrees and relations are recorded. x sits in degree 2, y_j in 2j-1.
struct CohomologyPresentation {
    Integer p;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t N = 0;
    std::int64_t poly_gen_degree = 2;
    std::int64_t poly_relation_exponent = 0;
    /// Indices j of the exterior generators y_j, ascending.
    std::vector<std::int64_t> exterior_generators;
    /// Set for the mod-2, k = 2 shape Z/2[x, y]/(x^N, y^2).
    bool mod2_square_relations = false;

    bool operator==(const CohomologyPresentation&) const = default;

    std::vector<std::int64_t> exterior_gen_degrees() const;
    std::int64_t top_degree() const;
    std::string to_string() const;
};

/// Coefficient of x^j in d(y_j), i.e. -(-1)^j h_j(l), reduced mod p.
Residue transgression_target(const StiefelParams& params, std::int64_t j, const Integer& p);

/// Smallest r in (n-k, n] with h_r(l) != 0 mod p. Accepts p = 2.
/// Throws InvariantError("no transgression found") when the window is empty.
std::int64_t min_nonvanishing_N(const StiefelParams& params, const Integer& p);

CohomologyPresentation presentation_odd(const StiefelParams& params, const Integer& p);

CohomologyPresentation presentation_mod2_k2(std::int64_t n, const WeightTuple& ell);

/// Dispatches on p; rejects p = 2 with k >= 3, where no presentation is known.
CohomologyPresentation presentation(const StiefelParams& params, const Integer& p);

/// Coefficient list of (1 + t^2 + ... + t^{2(N-1)}) prod (1 + t^{deg y_j}),
/// index = degree.
std::vector<Integer> poincare_polynomial(const CohomologyPresentation& pres);

struct PresentationCheck {
    bool pass = false;
    std::int64_t top_degree = 0;
    std::int64_t expected_top_degree = 0;
    Integer total_rank;
    Integer expected_rank;
    bool palindromic = false;
    bool N_in_window = false;
    std::vector<std::string> failures;
};

/// Poincare-duality style self-check; failures are reported, never thrown.
PresentationCheck check_presentation_invariants(const CohomologyPresentation& pres,
                                                const StiefelParams& params);

} // namespace pstiefel

#endif // PSTIEFEL_COHOMOLOGY_HPP
