#include "report.hpp"

#include <stdexcept>

namespace pstiefel::cli {

Json int_json(const Integer& v) { return v.get_str(); }
Json int_json(std::int64_t v) { return std::to_string(v); }

Integer json_integer(const Json& j) {
    if (!j.is_string()) {
        throw std::runtime_error("expected a decimal string, got " + j.dump());
    }
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
        throw std::runtime_error("malformed integer " + j.dump());
    }
    return v;
}

std::int64_t json_int64(const Json& j) {
    const Integer v = json_integer(j);
    if (!v.fits_slong_p()) {
        throw std::runtime_error("integer out of range " + j.dump());
    }
    return v.get_si();
}

namespace {

Json int_list(const std::vector<std::int64_t>& v) {
    Json arr = Json::array();
    for (auto x : v) {
        arr.push_back(int_json(x));
    }
    return arr;
}

std::vector<std::int64_t> int_list_from(const Json& j) {
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
        out.push_back(json_int64(x));
    }
    return out;
}

Verdict verdict_from(const std::string& s) {
    if (s == "AGREE") {
        return Verdict::agree;
    }
    if (s == "DISCREPANT") {
        return Verdict::discrepant;
    }
    if (s == "NOT_APPLICABLE") {
        return Verdict::not_applicable;
    }
    throw std::runtime_error("unknown verdict " + s);
}

RankReason reason_from(const std::string& s) {
    for (auto r : {RankReason::chern_nonzero, RankReason::paper_prop_proj2, RankReason::phi_mod_m,
                   RankReason::sq2_criterion, RankReason::none}) {
        if (to_string(r) == s) {
            return r;
        }
    }
    throw std::runtime_error("unknown reason " + s);
}

Json residue_json(const Residue& r) { return int_json(r.value()); }

} // namespace

Json weights_json(const WeightTuple& ell) {
    Json arr = Json::array();
    for (const auto& l : ell.values()) {
        arr.push_back(int_json(l));
    }
    return arr;
}

WeightTuple weights_from_json(const Json& j) {
    std::vector<Integer> raw;
    for (const auto& x : j) {
        raw.push_back(json_integer(x));
    }
    return WeightTuple::validate(raw);
}

Json series_json(const TruncatedSeries& s) {
    Json arr = Json::array();
    for (const auto& c : s.coeffs()) {
        arr.push_back(int_json(c));
    }
    return Json{{"modulus", int_json(s.modulus())},
                {"truncation", int_json(static_cast<std::int64_t>(s.truncation()))},
                {"coefficients", arr},
                {"text", s.to_string()}};
}

Json to_json(const CohomologyPresentation& pres) {
    Json poincare = Json::array();
    for (const auto& c : poincare_polynomial(pres)) {
        poincare.push_back(int_json(c));
    }
    return Json{{"p", int_json(pres.p)},
                {"n", int_json(pres.n)},
                {"k", int_json(pres.k)},
                {"N", int_json(pres.N)},
                {"relation", "x^" + std::to_string(pres.poly_relation_exponent)},
                {"poly_gen_degree", int_json(pres.poly_gen_degree)},
                {"poly_relation_exponent", int_json(pres.poly_relation_exponent)},
                {"exterior_generators", int_list(pres.exterior_generators)},
                {"exterior_gen_degrees", int_list(pres.exterior_gen_degrees())},
                {"mod2_square_relations", pres.mod2_square_relations},
                {"presentation", pres.to_string()},
                {"top_degree", int_json(pres.top_degree())},
                {"poincare_polynomial", poincare}};
}

CohomologyPresentation presentation_from_json(const Json& j) {
    CohomologyPresentation pres;
    pres.p = json_integer(j.at("p"));
    pres.n = json_int64(j.at("n"));
    pres.k = json_int64(j.at("k"));
    pres.N = json_int64(j.at("N"));
    pres.poly_gen_degree = json_int64(j.at("poly_gen_degree"));
    pres.poly_relation_exponent = json_int64(j.at("poly_relation_exponent"));
    pres.exterior_generators = int_list_from(j.at("exterior_generators"));
    pres.mod2_square_relations = j.at("mod2_square_relations").get<bool>();
    return pres;
}

Json to_json(const PresentationCheck& check) {
    return Json{{"pass", check.pass},
                {"top_degree", int_json(check.top_degree)},
                {"expected_top_degree", int_json(check.expected_top_degree)},
                {"total_rank", int_json(check.total_rank)},
                {"expected_rank", int_json(check.expected_rank)},
                {"palindromic", check.palindromic},
                {"failures", check.failures}};
}

Json to_json(const SpanCertificate& cert) {
    return Json{{"kind", "span"},
                {"prime", int_json(cert.prime)},
                {"index", int_json(cert.index)},
                {"witness", residue_json(cert.witness)},
                {"bound", int_json(cert.span_bound)},
                {"basis", "direct-series"},
                {"N", int_json(cert.N)}};
}

Json to_json(const ImmersionCertificate& cert) {
    return Json{{"kind", "immersion"},
                {"prime", int_json(cert.prime)},
                {"index", int_json(cert.index)},
                {"witness", residue_json(cert.witness)},
                {"bound", int_json(cert.certified_non_immersion_dim)},
                {"basis", "direct-series"},
                {"N", int_json(cert.N)},
                {"paper_claimed_dim", int_json(cert.paper_claimed_dim)}};
}

SpanCertificate span_certificate_from_json(const Json& j) {
    if (j.at("kind") != "span") {
        throw std::runtime_error("not a span certificate");
    }
    const Integer p = json_integer(j.at("prime"));
    return SpanCertificate{p, json_int64(j.at("index")), Residue(json_integer(j.at("witness")), p),
                           json_int64(j.at("bound")), json_int64(j.at("N"))};
}

ImmersionCertificate immersion_certificate_from_json(const Json& j) {
    if (j.at("kind") != "immersion") {
        throw std::runtime_error("not an immersion certificate");
    }
    const Integer p = json_integer(j.at("prime"));
    return ImmersionCertificate{p,
                                json_int64(j.at("index")),
                                Residue(json_integer(j.at("witness")), p),
                                json_int64(j.at("bound")),
                                json_int64(j.at("paper_claimed_dim")),
                                json_int64(j.at("N"))};
}

Json to_json(const ClaimCheck& check) {
    Json entries = Json::array();
    for (const auto& e : check.entries) {
        entries.push_back(Json{{"prime", int_json(e.prime)},
                               {"part", e.part},
                               {"hypotheses_hold", e.hypotheses_hold},
                               {"hypotheses", e.hypotheses},
                               {"index", int_json(e.index)},
                               {"coefficient", residue_json(e.coefficient)},
                               {"N", int_json(e.N)},
                               {"class_nonzero", e.class_nonzero},
                               {"claimed_bound", int_json(e.claimed_bound)},
                               {"verdict", to_string(e.verdict)}});
    }
    return Json{{"theorem", check.theorem},
                {"n", int_json(check.n)},
                {"weights", weights_json(check.ell)},
                {"overall", to_string(check.overall)},
                {"entries", entries}};
}

ClaimCheck claim_check_from_json(const Json& j) {
    ClaimCheck check{j.at("theorem").get<std::string>(), json_int64(j.at("n")),
                     weights_from_json(j.at("weights")), {},
                     verdict_from(j.at("overall").get<std::string>())};
    for (const auto& e : j.at("entries")) {
        PrimeClaim c;
        c.prime = json_integer(e.at("prime"));
        c.part = e.at("part").get<std::string>();
        c.hypotheses_hold = e.at("hypotheses_hold").get<bool>();
        c.hypotheses = e.at("hypotheses").get<std::vector<std::string>>();
        c.index = json_int64(e.at("index"));
        c.coefficient = Residue(json_integer(e.at("coefficient")), c.prime);
        c.N = json_int64(e.at("N"));
        c.class_nonzero = e.at("class_nonzero").get<bool>();
        c.claimed_bound = json_int64(e.at("claimed_bound"));
        c.verdict = verdict_from(e.at("verdict").get<std::string>());
        check.entries.push_back(std::move(c));
    }
    return check;
}

Json to_json(const RankBoundReport& report) {
    Json j{{"space", report.space},
           {"lower_bound", int_json(report.lower_bound)},
           {"achievable", report.achievable ? int_json(*report.achievable) : Json(nullptr)},
           {"reason", to_string(report.reason)},
           {"reason_index", report.reason_index ? int_json(*report.reason_index) : Json(nullptr)},
           {"reason_value", report.reason_value ? int_json(*report.reason_value) : Json(nullptr)},
           {"achievable_reason", to_string(report.achievable_reason)},
           {"diagnostics", report.diagnostics}};
    return j;
}

RankBoundReport rank_report_from_json(const Json& j) {
    RankBoundReport r;
    r.space = j.at("space").get<std::string>();
    r.lower_bound = json_int64(j.at("lower_bound"));
    if (!j.at("achievable").is_null()) {
        r.achievable = json_int64(j.at("achievable"));
    }
    r.reason = reason_from(j.at("reason").get<std::string>());
    if (!j.at("reason_index").is_null()) {
        r.reason_index = json_int64(j.at("reason_index"));
    }
    if (!j.at("reason_value").is_null()) {
        r.reason_value = json_integer(j.at("reason_value"));
    }
    r.achievable_reason = reason_from(j.at("achievable_reason").get<std::string>());
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return r;
}

Json to_json(const CriterionResult& crit) {
    return Json{{"satisfied", crit.satisfied},
                {"d_even", crit.d_even},
                {"m_even", crit.m_even},
                {"m_divides_phi", crit.m_divides_phi},
                {"valuations_equal", crit.valuations_equal},
                {"phi_d", int_json(crit.phi_d)},
                {"diagnostics", crit.diagnostics}};
}

Json envelope(const std::string& command) {
    return Json{{"command", command},
                {"params", Json::object()},
                {"result", Json::object()},
                {"certificates", Json::array()},
                {"diagnostics", Json::array()},
                {"claim_checks", Json::array()}};
}

namespace {

bool is_decimal(const Json& j) {
    if (!j.is_string()) {
        return false;
    }
    Integer v;
    return v.set_str(j.get<std::string>(), 10) == 0;
}

} // namespace

std::string validate_report(const Json& report) {
    if (!report.is_object()) {
        return "report is not an object";
    }
    for (const char* key :
         {"command", "params", "result", "certificates", "diagnostics", "claim_checks"}) {
        if (!report.contains(key)) {
            return std::string("missing key '") + key + "'";
        }
    }
    if (!report["command"].is_string()) {
        return "command is not a string";
    }
    if (!report["params"].is_object() || !report["result"].is_object()) {
        return "params/result must be objects";
    }
    if (!report["certificates"].is_array() || !report["diagnostics"].is_array() ||
        !report["claim_checks"].is_array()) {
        return "certificates/diagnostics/claim_checks must be arrays";
    }
    for (const auto& cert : report["certificates"]) {
        for (const char* key : {"prime", "index", "witness", "bound"}) {
            if (!cert.contains(key) || !is_decimal(cert[key])) {
                return std::string("certificate field '") + key + "' must be a decimal string";
            }
        }
        if (cert.value("basis", "") != "direct-series") {
            return "certificate basis must be 'direct-series'";
        }
    }
    for (const auto& d : report["diagnostics"]) {
        if (!d.is_string()) {
            return "diagnostics must be strings";
        }
    }
    for (const auto& c : report["claim_checks"]) {
        if (!c.contains("theorem") || !c.contains("overall") || !c.contains("entries")) {
            return "claim check missing theorem/overall/entries";
        }
    }
    return {};
}

} // namespace pstiefel::cli
