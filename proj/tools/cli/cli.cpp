#include "cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <pstiefel/cohomology.hpp>
#include <pstiefel/geometry.hpp>

#include "report.hpp"

namespace pstiefel::cli {

namespace {

struct Options {
    std::int64_t n = 0;
    std::int64_t k = 2;
    std::string weights;
    std::optional<std::string> prime;
    std::optional<std::int64_t> prime_bound;
    std::optional<std::int64_t> truncation;
    std::string modulus = "0";
    std::string bundle = "tangent";
    std::string kind = "complement";
    std::int64_t d = 0;
    std::string m;
    bool json = false;
    bool quick = false;
};

Integer parse_integer(const std::string& text, const std::string& what) {
    Integer v;
    std::string t = text;
    if (!t.empty() && t.front() == '+') {
        t.erase(0, 1);
    }
    if (t.empty() || v.set_str(t, 10) != 0) {
        throw InputError("malformed " + what + ": '" + text + "'");
    }
    return v;
}

WeightTuple parse_weights(const std::string& text) {
    if (text.empty()) {
        throw InputError("--weights is required");
    }
    std::vector<Integer> raw;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        raw.push_back(parse_integer(item, "weight"));
    }
    if (!text.empty() && text.back() == ',') {
        throw InputError("malformed weight list '" + text + "'");
    }
    return WeightTuple::validate(raw);
}

Integer parse_prime(const std::string& text) {
    Integer p = parse_integer(text, "prime");
    if (!is_prime(p)) {
        throw InputError(text + " is not prime");
    }
    return p;
}

Json base_params(const Options& o, const WeightTuple& ell) {
    return Json{{"n", int_json(o.n)}, {"weights", weights_json(ell)}};
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

std::string certificate_line(const SpanCertificate& c) {
    return "certificate p=" + c.prime.get_str() + " i=" + std::to_string(c.index) + " witness " +
           c.witness.to_string();
}

std::string certificate_line(const ImmersionCertificate& c) {
    return "certificate p=" + c.prime.get_str() + " j=" + std::to_string(c.index) + " witness " +
           c.witness.to_string();
}

// ---------------------------------------------------------------------------

int cmd_cohomology(const Options& o, std::ostream& out) {
    const auto ell = parse_weights(o.weights);
    const auto params = StiefelParams::make(o.n, o.k, ell);
    if (!o.prime) {
        throw InputError("--prime is required");
    }
    const Integer p = parse_prime(*o.prime);
    const auto pres = presentation(params, p);
    const auto check = check_presentation_invariants(pres, params);
    if (!check.pass) {
        throw InvariantError("presentation self-check failed: " + check.failures.front());
    }
    if (o.json) {
        Json r = envelope("cohomology");
        r["params"] = base_params(o, ell);
        r["params"]["k"] = int_json(o.k);
        r["params"]["prime"] = int_json(p);
        r["result"] = to_json(pres);
        r["result"]["dimension"] = int_json(params.dimension());
        r["result"]["check"] = to_json(check);
        emit(out, r);
    } else {
        out << "H*(P_" << ell.to_string() << " W_{" << o.n << "," << o.k << "}; Z/" << p.get_str()
            << ") = " << pres.to_string() << '\n';
        out << "N = " << pres.N << ", relation x^" << pres.poly_relation_exponent << '\n';
        out << "exterior degrees:";
        for (auto d : pres.exterior_gen_degrees()) {
            out << ' ' << d;
        }
        out << "\ncheck: top degree " << check.top_degree << ", total rank "
            << check.total_rank.get_str() << ", pass\n";
    }
    return ok;
}

int cmd_chern(const Options& o, std::ostream& out) {
    const auto ell = parse_weights(o.weights);
    std::size_t trunc = 0;
    if (o.truncation) {
        trunc = static_cast<std::size_t>(*o.truncation);
    } else if (o.n >= 1) {
        trunc = static_cast<std::size_t>(o.n + 1); // x^{n+1} = 0 over CP^n
    } else {
        throw InputError("either --n or --truncation is required");
    }
    if (o.truncation && *o.truncation < 1) {
        throw InputError("truncation must be at least 1");
    }
    if (o.kind != "total" && o.kind != "complement") {
        throw InputError("--kind must be 'total' or 'complement'");
    }
    auto series = o.kind == "total" ? total_chern(ell, trunc) : complement_chern(ell, trunc);
    const Integer m = parse_integer(o.modulus, "modulus");
    if (m != 0) {
        series = reduce_mod(series, m);
    }
    if (o.json) {
        Json r = envelope("chern");
        r["params"] = Json{{"weights", weights_json(ell)},
                           {"kind", o.kind},
                           {"truncation", int_json(static_cast<std::int64_t>(trunc))},
                           {"modulus", int_json(m)}};
        r["result"] = series_json(series);
        emit(out, r);
    } else {
        out << (o.kind == "total" ? "c" : "c'") << " = " << series.to_string() << '\n';
    }
    return ok;
}

int cmd_pontrjagin(const Options& o, std::ostream& out) {
    const auto ell = parse_weights(o.weights);
    Integer m = parse_integer(o.modulus, "modulus");
    std::size_t trunc = static_cast<std::size_t>(std::max<std::int64_t>(o.n, 1));
    if (o.prime) {
        const Integer p = parse_prime(*o.prime);
        m = p;
        trunc = static_cast<std::size_t>(min_nonvanishing_N(StiefelParams::make(o.n, 2, ell), p));
    }
    if (o.truncation) {
        if (*o.truncation < 1) {
            throw InputError("truncation must be at least 1");
        }
        trunc = static_cast<std::size_t>(*o.truncation);
    }
    if (o.bundle != "tangent" && o.bundle != "normal") {
        throw InputError("--bundle must be 'tangent' or 'normal'");
    }
    const auto series = o.bundle == "tangent" ? tangent_pontrjagin(o.n, ell, m, trunc)
                                              : normal_pontrjagin(o.n, ell, m, trunc);
    if (o.json) {
        Json r = envelope("pontrjagin");
        r["params"] = base_params(o, ell);
        r["params"]["bundle"] = o.bundle;
        r["params"]["modulus"] = int_json(m);
        r["params"]["truncation"] = int_json(static_cast<std::int64_t>(trunc));
        r["result"] = series_json(series);
        emit(out, r);
    } else {
        out << "p(" << (o.bundle == "tangent" ? "tau" : "nu") << ") = " << series.to_string()
            << '\n';
    }
    return ok;
}

int cmd_span(const Options& o, std::ostream& out) {
    const auto ell = parse_weights(o.weights);
    StiefelParams::make(o.n, 2, ell);
    Json r = envelope("span");
    r["params"] = base_params(o, ell);
    std::ostringstream text;
    if (o.prime && !o.prime_bound) {
        const Integer p = parse_prime(*o.prime);
        r["params"]["prime"] = int_json(p);
        const auto cert = span_certificate(o.n, ell, p);
        if (cert) {
            r["result"] = Json{{"span_bound", int_json(cert->span_bound)},
                               {"dimension", int_json(k2_dimension(o.n))}};
            r["certificates"].push_back(to_json(*cert));
            text << "span <= " << cert->span_bound << ", " << certificate_line(*cert) << '\n';
        } else {
            r["result"] = Json{{"span_bound", nullptr}, {"dimension", int_json(k2_dimension(o.n))}};
            r["diagnostics"].push_back("no certificate at p=" + p.get_str());
            text << "no certificate at p=" << p.get_str() << '\n';
        }
    } else {
        const std::int64_t bound = o.prime_bound.value_or(4 * o.n);
        r["params"]["prime_bound"] = int_json(bound);
        const auto rep = best_span_bound(o.n, ell, bound);
        r["result"] = Json{{"span_bound", rep.best ? int_json(rep.best->span_bound) : Json(nullptr)},
                           {"dimension", int_json(k2_dimension(o.n))},
                           {"primes_tried", int_json(static_cast<std::int64_t>(
                                                rep.primes_tried.size()))}};
        for (const auto& c : rep.certificates) {
            r["certificates"].push_back(to_json(c));
        }
        if (rep.best) {
            text << "span <= " << rep.best->span_bound << ", " << certificate_line(*rep.best)
                 << '\n';
            text << rep.certificates.size() << " certificate(s) over odd primes <= " << bound
                 << '\n';
        } else {
            r["diagnostics"].push_back("no certificate for odd primes <= " +
                                       std::to_string(bound));
            text << "no certificate for odd primes <= " << bound << '\n';
        }
    }
    if (o.json) {
        emit(out, r);
    } else {
        out << text.str();
    }
    return ok;
}

int cmd_immersion(const Options& o, std::ostream& out) {
    const auto ell = parse_weights(o.weights);
    StiefelParams::make(o.n, 2, ell);
    Json r = envelope("immersion");
    r["params"] = base_params(o, ell);
    std::ostringstream text;
    auto describe = [&](const ImmersionCertificate& c) {
        text << "does not immerse in R^" << c.certified_non_immersion_dim
             << " (certified; closed-form claim R^" << c.paper_claimed_dim << "), "
             << certificate_line(c) << '\n';
    };
    if (o.prime && !o.prime_bound) {
        const Integer p = parse_prime(*o.prime);
        r["params"]["prime"] = int_json(p);
        const auto cert = immersion_certificate(o.n, ell, p);
        if (cert) {
            r["result"] = Json{{"certified_non_immersion_dim",
                                int_json(cert->certified_non_immersion_dim)},
                               {"paper_claimed_dim", int_json(cert->paper_claimed_dim)}};
            r["certificates"].push_back(to_json(*cert));
            describe(*cert);
        } else {
            r["result"] = Json{{"certified_non_immersion_dim", nullptr},
                               {"paper_claimed_dim", nullptr}};
            r["diagnostics"].push_back("no certificate at p=" + p.get_str());
            text << "no certificate at p=" << p.get_str() << '\n';
        }
    } else {
        const std::int64_t bound = o.prime_bound.value_or(4 * o.n);
        r["params"]["prime_bound"] = int_json(bound);
        const auto rep = best_immersion_bound(o.n, ell, bound);
        r["result"] = Json{
            {"certified_non_immersion_dim",
             rep.best ? int_json(rep.best->certified_non_immersion_dim) : Json(nullptr)},
            {"paper_claimed_dim", rep.best ? int_json(rep.best->paper_claimed_dim) : Json(nullptr)},
            {"primes_tried", int_json(static_cast<std::int64_t>(rep.primes_tried.size()))}};
        for (const auto& c : rep.certificates) {
            r["certificates"].push_back(to_json(c));
        }
        if (rep.best) {
            describe(*rep.best);
        } else {
            r["diagnostics"].push_back("no certificate for odd primes <= " +
                                       std::to_string(bound));
            text << "no certificate for odd primes <= " << bound << '\n';
        }
    }
    if (o.json) {
        emit(out, r);
    } else {
        out << text.str();
    }
    return ok;
}

void rank_text(std::ostream& out, const RankBoundReport& rep) {
    out << rep.space << ": rank >= " << rep.lower_bound;
    if (rep.achievable) {
        out << ", rank " << *rep.achievable << " achievable";
    }
    out << " (reason " << to_string(rep.reason);
    if (rep.reason_index) {
        out << ", index " << *rep.reason_index;
    }
    if (rep.reason_value) {
        out << ", value " << rep.reason_value->get_str();
    }
    out << ")\n";
    for (const auto& d : rep.diagnostics) {
        out << "  note: " << d << '\n';
    }
}

int cmd_complement(const Options& o, std::ostream& out) {
    const auto ell = parse_weights(o.weights);
    const auto rep = cp_complement_min_rank(o.n, ell);
    if (o.json) {
        Json r = envelope("complement");
        r["params"] = base_params(o, ell);
        r["result"] = to_json(rep);
        for (const auto& d : rep.diagnostics) {
            r["diagnostics"].push_back(d);
        }
        emit(out, r);
    } else {
        rank_text(out, rep);
    }
    return ok;
}

int cmd_lens(const Options& o, std::ostream& out) {
    std::vector<Integer> raw;
    {
        std::stringstream ss(o.weights);
        std::string item;
        while (std::getline(ss, item, ',')) {
            raw.push_back(parse_integer(item, "weight"));
        }
    }
    if (raw.size() != 2) {
        throw InputError("lens needs exactly two weights");
    }
    if (o.m.empty()) {
        throw InputError("--m is required");
    }
    const auto params = LensParams::make(o.d, parse_integer(o.m, "m"), raw[0], raw[1]);
    const auto rep = lens_rank_bound(params);
    const auto crit = lens_sq2_criterion(params);
    if (o.json) {
        Json r = envelope("lens");
        r["params"] = Json{{"d", int_json(params.d)},
                           {"m", int_json(params.m)},
                           {"weights", Json::array({int_json(params.l1), int_json(params.l2)})}};
        r["result"] = to_json(rep);
        r["result"]["sq2_criterion"] = to_json(crit);
        for (const auto& d : crit.diagnostics) {
            r["diagnostics"].push_back(d);
        }
        emit(out, r);
    } else {
        rank_text(out, rep);
        out << "Sq^2 criterion: " << (crit.satisfied ? "satisfied" : "unsatisfied")
            << " (d even=" << crit.d_even << ", m even=" << crit.m_even
            << ", m | phi_d=" << crit.m_divides_phi << ", nu_2 equal=" << crit.valuations_equal
            << ", phi_d=" << crit.phi_d.get_str() << ")\n";
        for (const auto& d : crit.diagnostics) {
            out << "  note: " << d << '\n';
        }
    }
    return ok;
}

void claim_text(std::ostream& out, const ClaimCheck& c) {
    out << c.theorem << " statement, n=" << c.n << ", weights " << c.ell.to_string() << ": "
        << to_string(c.overall) << '\n';
    if (c.entries.empty()) {
        out << "  no qualifying prime\n";
    }
    for (const auto& e : c.entries) {
        out << "  [" << e.part << "] p=" << e.prime.get_str() << " index " << e.index
            << " coefficient " << e.coefficient.to_string() << " (N=" << e.N
            << (e.class_nonzero ? ", class nonzero" : ", class zero") << ") claimed bound "
            << e.claimed_bound << ": " << to_string(e.verdict) << '\n';
    }
}

int cmd_check_claims(const Options& o, std::ostream& out) {
    const auto ell = parse_weights(o.weights);
    const auto span = check_paper_span_theorem(o.n, ell);
    const auto imm = check_paper_immersion_theorem(o.n, ell);
    if (o.json) {
        Json r = envelope("check-claims");
        r["params"] = base_params(o, ell);
        r["result"] = Json{{"span", to_string(span.overall)}, {"immersion", to_string(imm.overall)}};
        r["claim_checks"].push_back(to_json(span));
        r["claim_checks"].push_back(to_json(imm));
        emit(out, r);
    } else {
        claim_text(out, span);
        claim_text(out, imm);
    }
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, VerifyOptions vopts) {
    vopts.quick = o.quick;
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_verify(vopts);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    bool all = true;
    std::optional<std::string> first;
    Json r = envelope("verify");
    r["params"] = Json{{"quick", o.quick}};
    Json suites = Json::array();
    for (const auto& s : results) {
        all = all && s.passed();
        if (!s.passed() && !first) {
            first = s.name + ": " + *s.counterexample;
        }
        suites.push_back(Json{{"name", s.name},
                              {"checks", int_json(s.checks)},
                              {"failures", int_json(s.failures)},
                              {"counterexample", s.counterexample ? Json(*s.counterexample)
                                                                  : Json(nullptr)}});
    }
    r["result"] = Json{{"pass", all}, {"suites", suites}};
    if (first) {
        r["diagnostics"].push_back("counterexample: " + *first);
    }
    if (o.json) {
        emit(out, r);
    } else {
        for (const auto& s : results) {
            out << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.checks << " checks, "
                << s.failures << " failures\n";
        }
        out << (all ? "verify: all suites passed\n" : "verify: FAILED\n");
    }
    if (first) {
        err << "counterexample: " << *first << '\n';
    }
    err << "verify finished in " << ms << " ms\n";
    return all ? ok : internal_error;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run(args, out, err, VerifyOptions{});
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const VerifyOptions& verify_defaults) {
    Options o;
    CLI::App app{"Cohomology, characteristic classes and certified span/immersion bounds for "
                 "generalized projective Stiefel manifolds",
                 "pstiefel"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        auto* n_opt = sub->add_option("--n", o.n, "ambient dimension n");
        if (needs_n) {
            n_opt->required();
        }
        sub->add_option("--weights", o.weights, "comma-separated weights, e.g. 1,-1")->required();
        sub->add_flag("--json", o.json, "emit JSON on standard output");
    };

    auto* coh = app.add_subcommand("cohomology", "mod-p cohomology presentation");
    add_common(coh, true);
    coh->add_option("--k", o.k, "frame count k");
    coh->add_option("--prime", o.prime, "coefficient prime");

    auto* chern = app.add_subcommand("chern", "total or complementary Chern series");
    add_common(chern, false);
    chern->add_option("--kind", o.kind, "total | complement")->capture_default_str();
    chern->add_option("--truncation", o.truncation, "number of coefficients (default n+1)");
    chern->add_option("--modulus", o.modulus, "reduce coefficients mod m (0 = integers)");

    auto* pont = app.add_subcommand("pontrjagin", "tangent or normal Pontrjagin series, k = 2");
    add_common(pont, true);
    pont->add_option("--bundle", o.bundle, "tangent | normal")->capture_default_str();
    pont->add_option("--modulus", o.modulus, "reduce coefficients mod m (0 = integers)");
    pont->add_option("--prime", o.prime, "reduce mod p and truncate at N_p");
    pont->add_option("--truncation", o.truncation, "number of coefficients (default n)");

    auto* span = app.add_subcommand("span", "certified upper bound on the span, k = 2");
    add_common(span, true);
    span->add_option("--prime", o.prime, "certify at a single odd prime");
    span->add_option("--prime-bound", o.prime_bound, "sweep odd primes up to this bound");

    auto* imm = app.add_subcommand("immersion", "certified non-immersion dimension, k = 2");
    add_common(imm, true);
    imm->add_option("--prime", o.prime, "certify at a single odd prime");
    imm->add_option("--prime-bound", o.prime_bound, "sweep odd primes up to this bound");

    auto* comp = app.add_subcommand("complement", "complementary bundle rank over CP^n");
    add_common(comp, true);

    auto* lens = app.add_subcommand("lens", "complementary bundle rank over L^d(m)");
    lens->add_option("--d", o.d, "lens dimension parameter d")->required();
    lens->add_option("--m", o.m, "lens order m")->required();
    lens->add_option("--weights", o.weights, "coprime weights l1,l2")->required();
    lens->add_flag("--json", o.json, "emit JSON on standard output");

    auto* claims = app.add_subcommand("check-claims",
                                      "compare closed-form span/immersion statements with "
                                      "direct computation");
    add_common(claims, true);

    auto* verify = app.add_subcommand("verify", "run the oracle self-verification suites");
    verify->add_flag("--quick", o.quick, "reduced grids");
    verify->add_flag("--json", o.json, "emit JSON on standard output");

    std::vector<const char*> argv{"pstiefel"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return invalid_input;
    }

    try {
        if (coh->parsed()) {
            return cmd_cohomology(o, out);
        }
        if (chern->parsed()) {
            return cmd_chern(o, out);
        }
        if (pont->parsed()) {
            return cmd_pontrjagin(o, out);
        }
        if (span->parsed()) {
            return cmd_span(o, out);
        }
        if (imm->parsed()) {
            return cmd_immersion(o, out);
        }
        if (comp->parsed()) {
            return cmd_complement(o, out);
        }
        if (lens->parsed()) {
            return cmd_lens(o, out);
        }
        if (claims->parsed()) {
            return cmd_check_claims(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out, err, verify_defaults);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const InvariantError& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return internal_error;
    }
    err << app.help();
    return invalid_input;
}

} // namespace pstiefel::cli
