#include <doctest.h>

#include <sstream>

#include "etaq/cli.hpp"
#include "etaq/claims_io.hpp"

using etaq::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ETAQ_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("expand") {
    CHECK(call({"expand", "--eta", "1:24", "--terms", "3"}).out == "q - 24q^2 + 252q^3\n");
    CHECK(call({"expand", "--form", "delta", "--terms", "3"}).out == "q - 24q^2 + 252q^3\n");
    CHECK(call({"expand", "--eta", "1:2,11:2", "--terms", "3", "--mod", "5^1"}).out == "q + 3q^2 + 4q^3\n");
    CHECK(call({"expand", "--eta", "4:6", "--terms", "6"}).out == "q - 6q^5\n");

    auto bad = call({"expand", "--eta", "1:1", "--terms", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("exponent sum not divisible by 24") != std::string::npos);
    CHECK(call({"expand", "--eta", "1:24", "--mod", "6"}).code == 2);
    CHECK(call({"expand", "--eta", "x"}).code == 2);
    CHECK(call({"expand"}).code == 2);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"verify", "--builtin", "--only", "type9"}).code == 2);
    CHECK(call({"verify", "--builtin", "--prime-bound", "10"}).code == 2);
    CHECK(call({"verify", "--builtin", "--margin", "-1"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"verify", "--builtin", data("claims_small.json")}).code == 2);
    CHECK(call({"verify", data("missing.json")}).code == 2);
    CHECK(call({"verify", data("claims_unknown_field.json")}).code == 2);
}

TEST_CASE("verify builtin subsets") {
    auto t1 = call({"verify", "--builtin", "--only", "type1", "--no-timing"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("30 claims: 30 ok") != std::string::npos);

    auto tp = call({"verify", "--builtin", "--only", "type2-power", "--no-timing"});
    CHECK(tp.code == 0);
    CHECK(tp.out.find("XFAIL") != std::string::npos);
    CHECK(tp.out.find("type2-power/eta2^12/3^4") != std::string::npos);

    auto t2 = call({"verify", "--builtin", "--only", "type2", "--only", "raw", "--no-timing"});
    CHECK(t2.code == 0);
}

TEST_CASE("verify claim files") {
    auto ok = call({"verify", data("claims_small.json"), "--no-timing"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("8 claims: 7 ok, 1 xfail") != std::string::npos);

    auto bad = call({"verify", data("claims_corrupted.json"), "--format", "json", "--no-timing"});
    CHECK(bad.code == 1);
    auto j = etaq::Json::parse(bad.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["verdict"] == "failed");
    CHECK(j[0]["first_failure"].is_number_integer());
}

TEST_CASE("json output is stable") {
    auto a = call({"verify", data("claims_small.json"), "--format", "json", "--no-timing", "--threads", "1"});
    auto b = call({"verify", data("claims_small.json"), "--format", "json", "--no-timing", "--threads", "3"});
    CHECK(a.out == b.out);
    auto j = etaq::Json::parse(a.out);
    std::vector<etaq::VerificationReport> back;
    for (const auto& r : j) back.push_back(etaq::report_from_json(r));
    CHECK(etaq::reports_to_json(back, false).dump(2) + "\n" == a.out);
}

TEST_CASE("dump claims round-trips through verify") {
    auto dump = call({"verify", "--builtin", "--only", "type2", "--dump-claims"});
    CHECK(dump.code == 0);
    auto claims = etaq::parse_claim_text(dump.out);
    CHECK(claims.size() == 21);
}

TEST_CASE("scan") {
    auto s = call({"scan", "--form", "delta", "--type", "II", "--ell-max", "40"});
    CHECK(s.code == 0);
    CHECK(s.out.find("\n23 ") != std::string::npos);
    auto t = call({"scan", "--form", "eta3^8", "--type", "II", "--ell-max", "10"});
    for (const char* ell : {"\n3 ", "\n5 ", "\n7 "}) CHECK(t.out.find(ell) != std::string::npos);
    auto u = call({"scan", "--form", "delta", "--type", "I", "--ell-max", "700"});
    CHECK(u.out.find("\n691 ") != std::string::npos);
    CHECK(call({"scan", "--form", "nonsense"}).code == 2);
}

TEST_CASE("catalog") {
    auto c = call({"catalog"});
    CHECK(c.code == 0);
    CHECK(c.out.find("delta") == 0);
}
