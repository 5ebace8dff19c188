#ifndef PSTIEFEL_CLI_REPORT_HPP
#define PSTIEFEL_CLI_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include <pstiefel/cohomology.hpp>
#include <pstiefel/geometry.hpp>

namespace pstiefel::cli {

using Json = nlohmann::ordered_json;

// Every integer is written as a decimal string so arbitrary precision
// survives serialization. The *_from_json functions invert the writers.

Json int_json(const Integer& v);
Json int_json(std::int64_t v);
Integer json_integer(const Json& j);
std::int64_t json_int64(const Json& j);

Json weights_json(const WeightTuple& ell);
WeightTuple weights_from_json(const Json& j);

Json series_json(const TruncatedSeries& s);

Json to_json(const CohomologyPresentation& pres);
CohomologyPresentation presentation_from_json(const Json& j);

Json to_json(const PresentationCheck& check);

/// {kind, prime, index, witness, bound, basis, ...}
Json to_json(const SpanCertificate& cert);
Json to_json(const ImmersionCertificate& cert);
SpanCertificate span_certificate_from_json(const Json& j);
ImmersionCertificate immersion_certificate_from_json(const Json& j);

Json to_json(const ClaimCheck& check);
ClaimCheck claim_check_from_json(const Json& j);

Json to_json(const RankBoundReport& report);
RankBoundReport rank_report_from_json(const Json& j);

Json to_json(const CriterionResult& crit);

/// Empty top-level report {command, params, result, certificates,
/// diagnostics, claim_checks}.
Json envelope(const std::string& command);

/// Structural check of a top-level report. Returns an empty string when
/// valid, otherwise a description of the first violation.
std::string validate_report(const Json& report);

} // namespace pstiefel::cli

#endif // PSTIEFEL_CLI_REPORT_HPP
