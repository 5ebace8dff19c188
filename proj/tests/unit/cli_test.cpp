#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace pstiefel;
using namespace pstiefel::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args, const VerifyOptions& v = {}) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err, v);
    return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
    args.emplace_back("--json");
    const auto o = call(args);
    EXPECT_EQ(o.code, 0) << o.err;
    Json j = Json::parse(o.out);
    EXPECT_EQ(validate_report(j), "") << o.out;
    return j;
}

WeightTuple W(long a, long b) { return WeightTuple::validate({a, b}); }

// Flips the sign of the l_j * h_{r-1} term in the recurrence.
Integer mutant_h(const WeightTuple& ell, std::int64_t r) {
    std::vector<Integer> t(static_cast<std::size_t>(r + 1), 0);
    t[0] = 1;
    for (std::size_t j = 0; j < ell.size(); ++j) {
        for (std::size_t i = 1; i < t.size(); ++i) {
            t[i] += (j == 0 ? 1 : -1) * ell[j] * t[i - 1];
        }
    }
    return t.back();
}

} // namespace

TEST(Cli, CohomologyJson) {
    auto j = call_json({"cohomology", "--n", "4", "--k", "2", "--weights", "1,1", "--prime", "3"});
    EXPECT_EQ(j["command"], "cohomology");
    EXPECT_EQ(j["result"]["N"], "3");
    EXPECT_EQ(j["result"]["relation"], "x^3");
    EXPECT_EQ(j["result"]["exterior_gen_degrees"], Json::array({"7"}));

    const auto pres = presentation_from_json(j["result"]);
    EXPECT_EQ(pres, presentation(StiefelParams::make(4, 2, W(1, 1)), 3));
}

TEST(Cli, SpanText) {
    auto o = call({"span", "--n", "7", "--weights", "1,2", "--prime", "7"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("span <= 19, certificate p=7 i=2 witness 1"), std::string::npos) << o.out;
}

TEST(Cli, InvalidInput) {
    auto o = call({"cohomology", "--n", "4", "--k", "2", "--weights", "2,4", "--prime", "3"});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.err.find("weights not primitive"), std::string::npos) << o.err;

    for (const std::vector<std::string>& bad :
         {std::vector<std::string>{},
          {"frobnicate"},
          {"span", "--n", "7"},
          {"span", "--n", "seven", "--weights", "1,2"},
          {"span", "--n", "7", "--weights", "1,x"},
          {"span", "--n", "7", "--weights", "1,2", "--prime", "2"},
          {"span", "--n", "7", "--weights", "1,2", "--prime", "9"},
          {"cohomology", "--n", "2", "--k", "3", "--weights", "1,1,1", "--prime", "3"},
          {"lens", "--d", "3", "--m", "1", "--weights", "1,2"}}) {
        auto r = call(bad);
        EXPECT_EQ(r.code, 1) << (bad.empty() ? "<empty>" : bad[0]);
        EXPECT_FALSE(r.err.empty());
        EXPECT_TRUE(r.out.empty());
    }
    // malformed flags print usage
    EXPECT_NE(call({"span", "--bogus"}).err.find("Usage"), std::string::npos);
}

TEST(Cli, NegativeWeightsParse) {
    auto j = call_json({"complement", "--n", "3", "--weights", "-1,2"});
    EXPECT_EQ(j["params"]["weights"], Json::array({"-1", "2"}));
    auto rep = rank_report_from_json(j["result"]);
    EXPECT_EQ(rep, cp_complement_min_rank(3, W(-1, 2)));
}

TEST(Cli, CertificatesRoundTrip) {
    auto s = call_json({"span", "--n", "7", "--weights", "1,2", "--prime", "7"});
    ASSERT_EQ(s["certificates"].size(), 1U);
    const auto& c = s["certificates"][0];
    EXPECT_EQ(c["basis"], "direct-series");
    for (const char* key : {"prime", "index", "witness", "bound"}) {
        ASSERT_TRUE(c.contains(key));
        EXPECT_TRUE(c[key].is_string());
    }
    EXPECT_EQ(span_certificate_from_json(c), *span_certificate(7, W(1, 2), 7));

    auto sweep = call_json({"immersion", "--n", "8", "--weights", "1,8", "--prime-bound", "50"});
    const auto rep = best_immersion_bound(8, W(1, 8), 50);
    ASSERT_EQ(sweep["certificates"].size(), rep.certificates.size());
    for (std::size_t i = 0; i < rep.certificates.size(); ++i) {
        EXPECT_EQ(immersion_certificate_from_json(sweep["certificates"][i]), rep.certificates[i]);
    }
    EXPECT_EQ(sweep["result"]["certified_non_immersion_dim"], "32");
}

TEST(Cli, ClaimChecksRoundTrip) {
    auto j = call_json({"check-claims", "--n", "21", "--weights", "2,1"});
    ASSERT_EQ(j["claim_checks"].size(), 2U);
    EXPECT_EQ(claim_check_from_json(j["claim_checks"][0]), check_paper_span_theorem(21, W(2, 1)));
    EXPECT_EQ(claim_check_from_json(j["claim_checks"][1]),
              check_paper_immersion_theorem(21, W(2, 1)));
    EXPECT_EQ(j["result"]["span"], "DISCREPANT");
}

TEST(Cli, LensAndSeries) {
    auto l = call_json({"lens", "--d", "3", "--m", "7", "--weights", "1,2"});
    EXPECT_EQ(l["result"]["lower_bound"], "3");
    EXPECT_EQ(l["result"]["reason"], "phi_mod_m");

    auto c = call_json({"chern", "--weights", "1,2", "--n", "4", "--kind", "complement"});
    EXPECT_EQ(c["result"]["coefficients"], Json::array({"1", "-3", "7", "-15", "31"}));

    auto p = call_json({"pontrjagin", "--n", "7", "--weights", "1,2", "--bundle", "tangent",
                        "--modulus", "7", "--truncation", "7"});
    EXPECT_EQ(p["result"]["coefficients"], Json::array({"1", "0", "1", "0", "1", "0", "1"}));
}

TEST(Cli, Deterministic) {
    const std::vector<std::vector<std::string>> cmds = {
        {"span", "--n", "21", "--weights", "2,1", "--json"},
        {"check-claims", "--n", "7", "--weights", "1,4", "--json"},
        {"cohomology", "--n", "9", "--k", "3", "--weights", "1,2,3", "--prime", "5", "--json"},
        {"verify", "--quick", "--json"}};
    for (const auto& cmd : cmds) {
        const auto a = call(cmd);
        const auto b = call(cmd);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, InternalErrorExitCode) {
    auto v = call({"verify", "--quick"}, VerifyOptions{false, mutant_h});
    EXPECT_EQ(v.code, 2);
    EXPECT_NE(v.err.find("counterexample"), std::string::npos);
}

TEST(Cli, VerifyQuickPasses) {
    auto o = call({"verify", "--quick"});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("all suites passed"), std::string::npos);
    EXPECT_NE(o.err.find(" ms"), std::string::npos); // timing only on stderr
}

TEST(Verify, MutantCaught) {
    EXPECT_NE(mutant_h(W(1, 2), 2), h_bruteforce(W(1, 2), 2));
    auto r = verify_symmetric_sums(VerifyOptions{true, mutant_h});
    EXPECT_FALSE(r.passed());
    ASSERT_TRUE(r.counterexample);
    EXPECT_NE(r.counterexample->find("weights ("), std::string::npos);
}

TEST(Verify, PrimitiveTuples) {
    const auto t = primitive_tuples(2, -1, 1);
    // (-1,-1) (-1,0) (-1,1) (0,-1) (0,1) (1,-1) (1,0) (1,1)
    EXPECT_EQ(t.size(), 8U);
    EXPECT_EQ(t.front(), W(-1, -1));
}
