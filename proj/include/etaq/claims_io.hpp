#pragma once

// JSON claim files and reports.
//
// Claim file:
//   {"format_version": 1, "claims": [ {...}, ... ]}
// Each claim has "kind" (type1, type2, type1-power, unit-factor,
// type2-power, raw) and the fields that kind uses; any other field is an
// error. See README.md for the full schema.

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "etaq/claims.hpp"
#include "etaq/congruence.hpp"

namespace etaq {

class ClaimParseError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kClaimFormatVersion = 1;

using Json = nlohmann::ordered_json;

std::vector<CongruenceClaim> parse_claims(const Json& doc);
std::vector<CongruenceClaim> parse_claim_text(const std::string& text);
std::vector<CongruenceClaim> load_claim_file(const std::string& path);

Json claim_to_json(const CongruenceClaim& claim);
Json claims_to_json(const std::vector<CongruenceClaim>& claims);

/// Timing is omitted when include_timing is false so output is
/// reproducible byte for byte.
Json report_to_json(const VerificationReport& report, bool include_timing = true);
Json reports_to_json(const std::vector<VerificationReport>& reports, bool include_timing = true);
VerificationReport report_from_json(const Json& j);

}  // namespace etaq
