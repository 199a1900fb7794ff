#include <doctest.h>

#include "etaq/claims_io.hpp"
#include "etaq/etaq.hpp"

using namespace etaq;

namespace {

const char* kMinimal = R"j({"format_version": 1, "claims": [
  {"id": "a", "kind": "type2", "form": "delta", "ell": 23}
]})j";

}  // namespace

TEST_CASE("claim kinds round-trip") {
    for (auto k : {ClaimKind::TypeI, ClaimKind::TypeII, ClaimKind::TypeIPrimePower, ClaimKind::TypeIITwistPower,
                   ClaimKind::UnitFactor, ClaimKind::RawSeries})
        CHECK(parse_claim_kind(to_string(k)) == k);
    CHECK_THROWS(parse_claim_kind("type3"));
}

TEST_CASE("parse a minimal file") {
    auto claims = parse_claim_text(kMinimal);
    REQUIRE(claims.size() == 1);
    CHECK(claims[0].kind == ClaimKind::TypeII);
    CHECK(claims[0].ell == 23);
    CHECK(claims[0].form.key == "delta");
    CHECK_FALSE(claims[0].expect_fail);
}

TEST_CASE("malformed claim files are rejected") {
    CHECK_THROWS_AS(parse_claim_text("not json"), std::exception);
    CHECK_THROWS_AS(parse_claim_text(R"j({"format_version": 2, "claims": []})j"), ClaimParseError);
    CHECK_THROWS_AS(parse_claim_text(R"j({"claims": []})j"), ClaimParseError);
    CHECK_THROWS_AS(parse_claim_text(R"j({"format_version": 1, "claims": [], "extra": 1})j"), ClaimParseError);
    CHECK_THROWS_AS(parse_claim_text(R"j({"format_version": 1, "claims": [
        {"kind": "type2", "form": "delta", "ell": 23, "m": 1}]})j"),
                    ClaimParseError);
    CHECK_THROWS_AS(parse_claim_text(R"j({"format_version": 1, "claims": [
        {"kind": "type1", "form": "delta", "ell": 691, "m": 0}]})j"),
                    ClaimParseError);
    CHECK_THROWS_AS(parse_claim_text(R"j({"format_version": 1, "claims": [
        {"kind": "type2", "form": "delta", "ell": "23"}]})j"),
                    ClaimParseError);
    CHECK_THROWS_AS(parse_claim_text(R"j({"format_version": 1, "claims": [
        {"id": "x", "kind": "type2", "form": "delta", "ell": 23},
        {"id": "x", "kind": "type2", "form": "delta", "ell": 23}]})j"),
                    ClaimParseError);
    CHECK_THROWS_AS(parse_claim_text(R"j({"format_version": 1, "claims": [
        {"kind": "type2", "form": "delta", "ell": 23, "expect": "maybe"}]})j"),
                    ClaimParseError);
    CHECK_THROWS_AS(parse_claim_text(R"j({"format_version": 1, "claims": [
        {"kind": "type1", "form": "delta", "ell": 691, "m": 0, "m_prime": 11, "psi": "kron(x)"}]})j"),
                    ClaimParseError);
    CHECK_THROWS_WITH(parse_claim_text(R"j({"format_version": 1, "claims": [
        {"id": "named", "kind": "type2", "form": "delta", "ell": 23, "colour": "red"}]})j"),
                      doctest::Contains("colour"));
}

TEST_CASE("builtin claims survive a JSON round trip") {
    const auto& claims = builtin_claims();
    Json doc = claims_to_json(claims);
    auto back = parse_claims(doc);
    REQUIRE(back.size() == claims.size());
    CHECK(claims_to_json(back).dump() == doc.dump());
    for (std::size_t i = 0; i < claims.size(); ++i) {
        CHECK(back[i].id == claims[i].id);
        CHECK(back[i].kind == claims[i].kind);
        CHECK(back[i].expect_fail == claims[i].expect_fail);
    }
}

TEST_CASE("reports survive a JSON round trip") {
    RunConfig config;
    config.prime_bound = 500;
    std::vector<CongruenceClaim> some;
    for (const auto& c : builtin_claims())
        if (c.form.key == "delta" || c.form.key == "eta2^12") some.push_back(c);
    auto reports = verify_all(some, config);
    for (bool timing : {false, true}) {
        Json j = reports_to_json(reports, timing);
        const std::string text = j.dump(2);
        std::vector<VerificationReport> back;
        for (const auto& r : Json::parse(text)) back.push_back(report_from_json(r));
        CHECK(reports_to_json(back, timing).dump(2) == text);
    }
    Json one = report_to_json(reports.front(), false);
    CHECK_FALSE(one.contains("elapsed_ms"));
    CHECK(one.begin().key() == "id");
}
