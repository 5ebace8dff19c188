#include <pstiefel/geometry.hpp>

#include <algorithm>

namespace pstiefel {

namespace {

void require_k2(const WeightTuple& ell) {
    if (ell.size() != 2) {
        throw InputError("k != 2: Pontrjagin formulas are only available for two weights");
    }
}

void require_odd_prime(const Integer& p) {
    if (!is_prime(p)) {
        throw InputError(p.get_str() + " is not prime");
    }
    if (p == 2) {
        throw InputError("p = 2 certifies nothing: Pontrjagin classes are only known modulo "
                         "2-torsion");
    }
}

void require_modulus(const Integer& m) {
    if (m != 0 && m < 2) {
        throw InputError("modulus must be 0 (integers) or at least 2");
    }
}

Integer square(const Integer& v) { return v * v; }

// 1 - c x^2, already reduced when m > 0.
TruncatedSeries quadratic_factor(const Integer& c, const Integer& m, std::size_t truncation) {
    return TruncatedSeries::binomial(-c, 2, truncation, m);
}

std::int64_t nilpotency_order(std::int64_t n, const WeightTuple& ell, const Integer& p) {
    return min_nonvanishing_N(StiefelParams::make(n, 2, ell), p);
}

std::size_t truncation_for(std::int64_t N, std::int64_t index) {
    return static_cast<std::size_t>(std::max<std::int64_t>(N, 2 * index + 1));
}

void verify_span(const SpanCertificate& c, std::int64_t n) {
    if (c.witness.is_zero() || 2 * c.index > c.N - 1 || c.span_bound >= k2_dimension(n)) {
        throw InvariantError("emitted span certificate fails re-verification");
    }
}

void verify_immersion(const ImmersionCertificate& c) {
    if (c.witness.is_zero() || 2 * c.index > c.N - 1 || c.index < 1 ||
        c.certified_non_immersion_dim != c.paper_claimed_dim - 1) {
        throw InvariantError("emitted immersion certificate fails re-verification");
    }
}

} // namespace

TruncatedSeries tangent_pontrjagin(std::int64_t n, const WeightTuple& ell, const Integer& modulus,
                                   std::size_t truncation) {
    require_k2(ell);
    require_modulus(modulus);
    if (n < 2) {
        throw InputError("n must be at least 2 for k = 2");
    }
    const auto a = quadratic_factor(square(ell[0]), modulus, truncation);
    const auto b = quadratic_factor(square(ell[1]), modulus, truncation);
    const auto c = quadratic_factor(square(ell[1] - ell[0]), modulus, truncation);
    return int_pow(a, n) * int_pow(b, n) * inv(c);
}

TruncatedSeries normal_pontrjagin(std::int64_t n, const WeightTuple& ell, const Integer& modulus,
                                  std::size_t truncation) {
    require_k2(ell);
    require_modulus(modulus);
    if (n < 2) {
        throw InputError("n must be at least 2 for k = 2");
    }
    const auto a = quadratic_factor(square(ell[0]), modulus, truncation);
    const auto b = quadratic_factor(square(ell[1]), modulus, truncation);
    const auto c = quadratic_factor(square(ell[1] - ell[0]), modulus, truncation);
    return int_pow(a, -n) * int_pow(b, -n) * c;
}

std::optional<SpanCertificate> span_certificate_at(std::int64_t n, const WeightTuple& ell,
                                                   const Integer& p, std::int64_t index) {
    require_k2(ell);
    require_odd_prime(p);
    if (index < 0) {
        throw InputError("negative Pontrjagin index");
    }
    const std::int64_t N = nilpotency_order(n, ell, p);
    if (2 * index > N - 1) {
        return std::nullopt;
    }
    const auto series = tangent_pontrjagin(n, ell, p, truncation_for(N, index));
    auto w = series.coeff(static_cast<std::size_t>(2 * index));
    if (w.is_zero()) {
        return std::nullopt;
    }
    return SpanCertificate{p, index, std::move(w), k2_dimension(n) - 2 * index, N};
}

std::optional<SpanCertificate> span_certificate(std::int64_t n, const WeightTuple& ell,
                                                const Integer& p) {
    require_k2(ell);
    require_odd_prime(p);
    const std::int64_t N = nilpotency_order(n, ell, p);
    const auto series = tangent_pontrjagin(n, ell, p, static_cast<std::size_t>(N));
    for (std::int64_t i = (N - 1) / 2; i >= 1; --i) {
        auto w = series.coeff(static_cast<std::size_t>(2 * i));
        if (!w.is_zero()) {
            SpanCertificate cert{p, i, std::move(w), k2_dimension(n) - 2 * i, N};
            verify_span(cert, n);
            return cert;
        }
    }
    return std::nullopt;
}

std::optional<ImmersionCertificate> immersion_certificate_at(std::int64_t n,
                                                             const WeightTuple& ell,
                                                             const Integer& p,
                                                             std::int64_t index) {
    require_k2(ell);
    require_odd_prime(p);
    if (index < 0) {
        throw InputError("negative Pontrjagin index");
    }
    const std::int64_t N = nilpotency_order(n, ell, p);
    if (2 * index > N - 1) {
        return std::nullopt;
    }
    const auto series = normal_pontrjagin(n, ell, p, truncation_for(N, index));
    auto w = series.coeff(static_cast<std::size_t>(2 * index));
    if (w.is_zero()) {
        return std::nullopt;
    }
    const std::int64_t claimed = k2_dimension(n) + 2 * index;
    return ImmersionCertificate{p, index, std::move(w), claimed - 1, claimed, N};
}

std::optional<ImmersionCertificate> immersion_certificate(std::int64_t n, const WeightTuple& ell,
                                                          const Integer& p) {
    require_k2(ell);
    require_odd_prime(p);
    const std::int64_t N = nilpotency_order(n, ell, p);
    const auto series = normal_pontrjagin(n, ell, p, static_cast<std::size_t>(N));
    for (std::int64_t j = (N - 1) / 2; j >= 1; --j) {
        auto w = series.coeff(static_cast<std::size_t>(2 * j));
        if (!w.is_zero()) {
            const std::int64_t claimed = k2_dimension(n) + 2 * j;
            ImmersionCertificate cert{p, j, std::move(w), claimed - 1, claimed, N};
            verify_immersion(cert);
            return cert;
        }
    }
    return std::nullopt;
}

SpanReport best_span_bound(std::int64_t n, const WeightTuple& ell, std::int64_t prime_bound) {
    require_k2(ell);
    SpanReport report;
    report.n = n;
    report.prime_bound = prime_bound;
    for (auto p : primes_upto(prime_bound)) {
        if (p == 2) {
            continue;
        }
        report.primes_tried.emplace_back(p);
        if (auto cert = span_certificate(n, ell, Integer(p))) {
            if (!report.best || cert->span_bound < report.best->span_bound) {
                report.best = *cert;
            }
            report.certificates.push_back(std::move(*cert));
        }
    }
    return report;
}

ImmersionReport best_immersion_bound(std::int64_t n, const WeightTuple& ell,
                                     std::int64_t prime_bound) {
    require_k2(ell);
    ImmersionReport report;
    report.n = n;
    report.prime_bound = prime_bound;
    for (auto p : primes_upto(prime_bound)) {
        if (p == 2) {
            continue;
        }
        report.primes_tried.emplace_back(p);
        if (auto cert = immersion_certificate(n, ell, Integer(p))) {
            if (!report.best ||
                cert->certified_non_immersion_dim > report.best->certified_non_immersion_dim) {
                report.best = *cert;
            }
            report.certificates.push_back(std::move(*cert));
        }
    }
    return report;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::agree:
        return "AGREE";
    case Verdict::discrepant:
        return "DISCREPANT";
    case Verdict::not_applicable:
        return "NOT_APPLICABLE";
    }
    return "?";
}

namespace {

std::string flag(const std::string& name, bool value) {
    return name + "=" + (value ? "true" : "false");
}

std::vector<std::int64_t> odd_prime_divisors(const Integer& v) {
    std::vector<std::int64_t> out;
    if (v == 0) {
        return out;
    }
    Integer rest = abs(v);
    while (rest % 2 == 0) {
        rest /= 2;
    }
    for (std::int64_t p = 3; Integer(p) * p <= rest; p += 2) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
            out.push_back(p);
            while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        out.push_back(rest.get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Evaluates the statement at a fixed Pontrjagin index against the direct series.
PrimeClaim evaluate_claim(std::int64_t n, const WeightTuple& ell, const Integer& p,
                          std::int64_t index, bool normal) {
    PrimeClaim c;
    c.prime = p;
    c.index = index;
    c.N = nilpotency_order(n, ell, p);
    c.class_nonzero = 2 * index <= c.N - 1;
    const auto trunc = truncation_for(c.N, index);
    const auto series = normal ? normal_pontrjagin(n, ell, p, trunc)
                               : tangent_pontrjagin(n, ell, p, trunc);
    c.coefficient = series.coeff(static_cast<std::size_t>(2 * index));
    return c;
}

void settle(PrimeClaim& c) {
    if (!c.hypotheses_hold) {
        c.verdict = Verdict::not_applicable;
    } else {
        c.verdict = (c.class_nonzero && !c.coefficient.is_zero()) ? Verdict::agree
                                                                  : Verdict::discrepant;
    }
}

void summarize(ClaimCheck& check) {
    check.overall = Verdict::not_applicable;
    for (const auto& e : check.entries) {
        if (e.verdict == Verdict::discrepant) {
            check.overall = Verdict::discrepant;
            return;
        }
        if (e.verdict == Verdict::agree) {
            check.overall = Verdict::agree;
        }
    }
}

} // namespace

ClaimCheck check_paper_span_theorem(std::int64_t n, const WeightTuple& ell) {
    require_k2(ell);
    StiefelParams::make(n, 2, ell);
    ClaimCheck check{"span", n, ell, {}, Verdict::not_applicable};
    const Integer diff = ell[1] - ell[0];
    Integer l1n;
    Integer l2n;
    mpz_pow_ui(l1n.get_mpz_t(), ell[0].get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(l2n.get_mpz_t(), ell[1].get_mpz_t(), static_cast<unsigned long>(n));
    const Integer power_diff = l1n - l2n;

    for (auto q : odd_prime_divisors(Integer(n))) {
        const Integer p(q);
        const bool p_divides_diff = diff % p == 0;
        if (p_divides_diff) {
            continue;
        }
        // part 1: index floor((n-2)/2), bound 4n-5-2*index
        const std::int64_t i1 = (n - 2) / 2;
        PrimeClaim first = evaluate_claim(n, ell, p, i1, false);
        first.part = "span-1";
        first.hypotheses = {flag("p|n", true), flag("p!|(l2-l1)", true)};
        first.hypotheses_hold = true;
        first.claimed_bound = k2_dimension(n) - 2 * i1;
        settle(first);
        check.entries.push_back(std::move(first));

        // part 2: n odd and p | l1^n - l2^n, index (n-1)/2, bound 3n-4
        const bool n_odd = n % 2 == 1;
        const bool p_divides_power = power_diff % p == 0;
        const std::int64_t i2 = (n - 1) / 2;
        PrimeClaim second = evaluate_claim(n, ell, p, i2, false);
        second.part = "span-2";
        second.hypotheses = {flag("p|n", true), flag("p!|(l2-l1)", true), flag("n odd", n_odd),
                             flag("p|(l1^n-l2^n)", p_divides_power)};
        second.hypotheses_hold = n_odd && p_divides_power;
        second.claimed_bound = 3 * n - 4;
        settle(second);
        check.entries.push_back(std::move(second));
    }
    summarize(check);
    return check;
}

ClaimCheck check_paper_immersion_theorem(std::int64_t n, const WeightTuple& ell) {
    require_k2(ell);
    StiefelParams::make(n, 2, ell);
    ClaimCheck check{"immersion", n, ell, {}, Verdict::not_applicable};
    const std::int64_t j = (n - 3) / 2;
    if (n < 3) {
        return check;
    }
    Integer g;
    const Integer diff = ell[1] - ell[0];
    const Integer nm1(n - 1);
    mpz_gcd(g.get_mpz_t(), nm1.get_mpz_t(), diff.get_mpz_t());
    for (auto q : odd_prime_divisors(g)) {
        const Integer p(q);
        PrimeClaim c = evaluate_claim(n, ell, p, j, true);
        c.part = "immersion";
        c.hypotheses = {flag("p|(n-1)", true), flag("p|(l2-l1)", true)};
        c.hypotheses_hold = true;
        c.claimed_bound = k2_dimension(n) + 2 * j;
        settle(c);
        check.entries.push_back(std::move(c));
    }
    summarize(check);
    return check;
}

std::string to_string(RankReason r) {
    switch (r) {
    case RankReason::chern_nonzero:
        return "chern_nonzero";
    case RankReason::paper_prop_proj2:
        return "paper_prop_proj2";
    case RankReason::phi_mod_m:
        return "phi_mod_m";
    case RankReason::sq2_criterion:
        return "sq2_criterion";
    case RankReason::none:
        return "none";
    }
    return "?";
}

RankBoundReport cp_complement_min_rank(std::int64_t n, const WeightTuple& ell) {
    if (n < 1) {
        throw InputError("n must be at least 1");
    }
    const auto table = h_table(ell, n);
    RankBoundReport report;
    report.space = "CP^" + std::to_string(n);
    // c_i(zeta) = (-1)^i h_i x^i and x^i != 0 in Z[x]/(x^{n+1}) for i <= n.
    std::int64_t top = 0;
    for (std::int64_t i = n; i >= 0; --i) {
        if (table[static_cast<std::size_t>(i)] != 0) {
            top = i;
            break;
        }
    }
    report.lower_bound = top;
    report.reason = RankReason::chern_nonzero;
    report.reason_index = top;
    report.reason_value = (top % 2 == 0) ? table[static_cast<std::size_t>(top)]
                                         : Integer(-table[static_cast<std::size_t>(top)]);
    if (table[static_cast<std::size_t>(n)] == 0) {
        report.achievable = n - 1;
        report.achievable_reason = RankReason::paper_prop_proj2;
        report.diagnostics.push_back("h_n vanishes, so a rank n-1 complement exists");
    } else {
        report.achievable = n;
        report.diagnostics.push_back(
            "rank n complement exists over a complex n-dimensional base; c_n != 0 rules out n-1");
    }
    return report;
}

LensParams LensParams::make(std::int64_t d, Integer m, Integer l1, Integer l2) {
    if (d < 1) {
        throw InputError("lens dimension d must be at least 1");
    }
    if (m < 2) {
        throw InputError("lens order m must be at least 2");
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), l1.get_mpz_t(), l2.get_mpz_t());
    if (g != 1) {
        throw InputError("weights not coprime");
    }
    return LensParams{d, std::move(m), std::move(l1), std::move(l2)};
}

CriterionResult lens_sq2_criterion(const LensParams& params) {
    CriterionResult r;
    r.phi_d = phi(params.l1, params.l2, params.d);
    r.d_even = params.d % 2 == 0;
    r.m_even = params.m % 2 == 0;
    r.m_divides_phi = r.phi_d % params.m == 0;
    r.valuations_equal = r.phi_d != 0 && nu(2, params.m) == nu(2, r.phi_d);
    r.satisfied = r.d_even && r.m_even && r.m_divides_phi && r.valuations_equal;
    if (r.d_even) {
        if (r.phi_d % 2 != 0) {
            r.diagnostics.push_back("phi_" + std::to_string(params.d) + "(" +
                                    params.l1.get_str() + "," + params.l2.get_str() +
                                    ") = " + r.phi_d.get_str() +
                                    " is odd for coprime weights and even d, so 'm even' and "
                                    "'m divides phi_d' cannot hold together: the hypotheses are "
                                    "unsatisfiable");
        } else {
            r.diagnostics.push_back("phi_d is even for even d; expected odd for coprime weights");
        }
    }
    return r;
}

RankBoundReport lens_rank_bound(const LensParams& params) {
    RankBoundReport report;
    report.space = "L^" + std::to_string(params.d) + "(" + params.m.get_str() + ")";
    report.achievable = params.d;
    report.diagnostics.push_back("rank d is attainable: the lifting obstruction lies in degree "
                                 "2d+2, above the dimension of L^d(m)");
    const Integer phi_d = phi(params.l1, params.l2, params.d);
    const Integer residue = canonical(phi_d, params.m);
    if (residue != 0) {
        report.lower_bound = params.d;
        report.reason = RankReason::phi_mod_m;
        report.reason_index = params.d;
        report.reason_value = residue;
        return report;
    }
    auto crit = lens_sq2_criterion(params);
    for (auto& d : crit.diagnostics) {
        report.diagnostics.push_back(std::move(d));
    }
    if (crit.satisfied) {
        report.lower_bound = params.d;
        report.reason = RankReason::sq2_criterion;
    } else {
        report.lower_bound = params.d - 1;
        report.reason = RankReason::none;
    }
    return report;
}

} // namespace pstiefel
