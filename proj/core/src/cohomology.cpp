#include <pstiefel/cohomology.hpp>

#include <sstream>

namespace pstiefel {

StiefelParams StiefelParams::make(std::int64_t n, std::int64_t k, WeightTuple ell) {
    if (n < 1) {
        throw InputError("n must be at least 1");
    }
    if (k < 1 || k > n) {
        throw InputError("k must satisfy 1 <= k <= n (got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
    }
    if (static_cast<std::int64_t>(ell.size()) != k) {
        throw InputError("expected " + std::to_string(k) + " weights, got " +
                         std::to_string(ell.size()));
    }
    return StiefelParams{n, k, std::move(ell)};
}

std::vector<std::int64_t> CohomologyPresentation::exterior_gen_degrees() const {
    std::vector<std::int64_t> out;
    out.reserve(exterior_generators.size());
    for (auto j : exterior_generators) {
        out.push_back(2 * j - 1);
    }
    return out;
}

std::int64_t CohomologyPresentation::top_degree() const {
    std::int64_t top = poly_gen_degree * (poly_relation_exponent - 1);
    for (auto d : exterior_gen_degrees()) {
        top += d;
    }
    return top;
}

std::string CohomologyPresentation::to_string() const {
    std::ostringstream os;
    os << "Z/" << p.get_str() << "[x]/(x^" << poly_relation_exponent << ")";
    if (mod2_square_relations) {
        for (auto j : exterior_generators) {
            os << " (x) Z/2[y_" << j << "]/(y_" << j << "^2)";
        }
    } else if (!exterior_generators.empty()) {
        os << " (x) Lambda(";
        for (std::size_t i = 0; i < exterior_generators.size(); ++i) {
            os << (i ? ", " : "") << "y_" << exterior_generators[i];
        }
        os << ")";
    }
    return os.str();
}

namespace {

void require_prime(const Integer& p) {
    if (!is_prime(p)) {
        throw InputError(p.get_str() + " is not prime");
    }
}

} // namespace

Residue transgression_target(const StiefelParams& params, std::int64_t j, const Integer& p) {
    require_prime(p);
    if (j <= params.n - params.k || j > params.n) {
        throw InputError("transgression index " + std::to_string(j) + " outside (n-k, n]");
    }
    Integer value = h(params.ell, j);
    // -(-1)^j h_j
    if (j % 2 == 0) {
        value = -value;
    }
    return Residue(value, p);
}

std::int64_t min_nonvanishing_N(const StiefelParams& params, const Integer& p) {
    require_prime(p);
    const auto table = h_table(params.ell, params.n);
    for (std::int64_t r = params.n - params.k + 1; r <= params.n; ++r) {
        if (!Residue(table[static_cast<std::size_t>(r)], p).is_zero()) {
            return r;
        }
    }
    throw InvariantError("no transgression found for n=" + std::to_string(params.n) +
                         ", k=" + std::to_string(params.k) + ", weights " +
                         params.ell.to_string() + ", p=" + p.get_str());
}

CohomologyPresentation presentation_odd(const StiefelParams& params, const Integer& p) {
    require_prime(p);
    if (p == 2) {
        throw InputError("p = 2: use presentation_mod2_k2");
    }
    CohomologyPresentation pres;
    pres.p = p;
    pres.n = params.n;
    pres.k = params.k;
    pres.N = min_nonvanishing_N(params, p);
    pres.poly_relation_exponent = pres.N;
    for (std::int64_t j = params.n - params.k + 1; j <= params.n; ++j) {
        if (j != pres.N) {
            pres.exterior_generators.push_back(j);
        }
    }
    return pres;
}

CohomologyPresentation presentation_mod2_k2(std::int64_t n, const WeightTuple& ell) {
    if (ell.size() != 2) {
        throw InputError("presentation_mod2_k2 requires k = 2");
    }
    StiefelParams::make(n, 2, ell);
    CohomologyPresentation pres;
    pres.p = 2;
    pres.n = n;
    pres.k = 2;
    pres.mod2_square_relations = true;
    if (phi(ell[0], ell[1], n - 1) % 2 == 0) {
        pres.N = n;
        pres.exterior_generators = {n - 1};
    } else {
        pres.N = n - 1;
        pres.exterior_generators = {n};
    }
    pres.poly_relation_exponent = pres.N;
    return pres;
}

CohomologyPresentation presentation(const StiefelParams& params, const Integer& p) {
    require_prime(p);
    if (p != 2) {
        return presentation_odd(params, p);
    }
    if (params.k == 2) {
        return presentation_mod2_k2(params.n, params.ell);
    }
    if (params.k == 1) {
        // Z/2[x]/(x^n): no odd generators, so no square ambiguity.
        CohomologyPresentation pres;
        pres.p = 2;
        pres.n = params.n;
        pres.k = 1;
        pres.N = min_nonvanishing_N(params, p);
        pres.poly_relation_exponent = pres.N;
        return pres;
    }
    throw InputError("p = 2 with k >= 3 is unsupported: the squares of the odd generators "
                     "are not determined");
}

std::vector<Integer> poincare_polynomial(const CohomologyPresentation& pres) {
    std::vector<Integer> poly(static_cast<std::size_t>(pres.top_degree()) + 1, 0);
    for (std::int64_t i = 0; i < pres.poly_relation_exponent; ++i) {
        poly[static_cast<std::size_t>(pres.poly_gen_degree * i)] = 1;
    }
    std::size_t filled = static_cast<std::size_t>(pres.poly_gen_degree *
                                                  (pres.poly_relation_exponent - 1));
    for (auto deg : pres.exterior_gen_degrees()) {
        const auto d = static_cast<std::size_t>(deg);
        // multiply by (1 + t^d), descending so each term is read before it is updated
        for (std::size_t i = filled + 1; i-- > 0;) {
            poly[i + d] += poly[i];
        }
        filled += d;
    }
    return poly;
}

PresentationCheck check_presentation_invariants(const CohomologyPresentation& pres,
                                                const StiefelParams& params) {
    PresentationCheck check;
    check.expected_top_degree = params.dimension();
    check.expected_rank = Integer(pres.N);
    mpz_mul_2exp(check.expected_rank.get_mpz_t(), check.expected_rank.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(params.k - 1));
    check.N_in_window = params.n - params.k < pres.N && pres.N <= params.n;
    if (!check.N_in_window) {
        check.failures.push_back("N=" + std::to_string(pres.N) + " outside (n-k, n]");
    }
    if (pres.N < 1) {
        check.failures.push_back("N must be positive");
        return check;
    }

    const auto poly = poincare_polynomial(pres);
    check.top_degree = static_cast<std::int64_t>(poly.size()) - 1;
    check.total_rank = 0;
    for (const auto& c : poly) {
        check.total_rank += c;
    }
    check.palindromic = true;
    for (std::size_t i = 0, j = poly.size() - 1; i < j; ++i, --j) {
        if (poly[i] != poly[j]) {
            check.palindromic = false;
            check.failures.push_back("Poincare polynomial not palindromic at degree " +
                                     std::to_string(i));
            break;
        }
    }
    if (check.top_degree != check.expected_top_degree) {
        check.failures.push_back("top degree " + std::to_string(check.top_degree) +
                                 " != dimension " + std::to_string(check.expected_top_degree));
    }
    if (check.total_rank != check.expected_rank) {
        check.failures.push_back("total rank " + check.total_rank.get_str() + " != N*2^(k-1) = " +
                                 check.expected_rank.get_str());
    }
    check.pass = check.failures.empty();
    return check;
}

} // namespace pstiefel
