#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "etaq/arith.hpp"
#include "etaq/congruence.hpp"
#include "etaq/etaq.hpp"
#include "etaq/oracles.hpp"
#include "support.hpp"

using namespace etaq;

namespace {

FormRef ref(const std::string& key) {
    FormRef f;
    f.key = key;
    return f;
}

CongruenceClaim type1(const std::string& form, std::int64_t ell, int m, int mp, RealDirichletCharacter psi = {}) {
    CongruenceClaim c;
    c.id = "t/" + form;
    c.kind = ClaimKind::TypeI;
    c.form = ref(form);
    c.ell = ell;
    c.m = m;
    c.m_prime = mp;
    c.psi = psi;
    return c;
}

CongruenceClaim type2(const std::string& form, std::int64_t ell) {
    CongruenceClaim c;
    c.id = "t/" + form;
    c.kind = ClaimKind::TypeII;
    c.form = ref(form);
    c.ell = ell;
    return c;
}

std::vector<CongruenceClaim> builtin_of(ClaimKind kind) {
    std::vector<CongruenceClaim> out;
    for (const auto& c : builtin_claims())
        if (c.kind == kind) out.push_back(c);
    return out;
}

}  // namespace

TEST_CASE("Type I examples") {
    auto r = verify_type1(type1("delta", 691, 0, 11));
    CHECK(r.verdict == Verdict::Proved);
    CHECK(r.rigor == Rigor::SturmProved);
    CHECK(r.threshold == 58);

    auto bad = verify_type1(type1("delta", 691, 0, 9));
    CHECK(bad.verdict == Verdict::Failed);
    REQUIRE(bad.first_failure.has_value());
    CHECK(*bad.first_failure <= 5);
    CHECK(bad.note.find("k - 1") != std::string::npos);

    auto r11 = verify_type1(type1("eta1^2 eta11^2", 5, 0, 1));
    CHECK(r11.verdict == Verdict::Proved);
    CHECK(r11.note.find("E_{2,11}") != std::string::npos);

    CHECK_THROWS(verify_type1(type1("delta", 691, 3, 3)));
    CHECK_THROWS(verify_type1(type1("delta", 690, 0, 11)));
}

TEST_CASE("Type II examples") {
    auto r = verify_type2(type2("delta", 23));
    CHECK(r.verdict == Verdict::Proved);
    CHECK(r.threshold == 25);
    CHECK(r.weight == 300);

    auto bad = verify_type2(type2("delta", 29));
    CHECK(bad.verdict == Verdict::Failed);
    REQUIRE(bad.first_failure.has_value());
    CHECK(*bad.first_failure <= 50);

    CHECK(verify_type2(type2("eta1^4 eta2^2 eta4^4", 7)).verdict == Verdict::Proved);
    CHECK_THROWS(verify_type2(type2("delta", 2)));

    auto divides = verify_type2(type2("eta3^8", 3));
    CHECK(divides.verdict == Verdict::Evidence);
    CHECK(divides.rigor == Rigor::NumericalEvidence);
}

TEST_CASE("prime-power scans") {
    CongruenceClaim c;
    c.id = "pp";
    c.kind = ClaimKind::TypeIPrimePower;
    c.form = ref("eta1^8 eta2^8");
    c.ell = 2;
    c.m = 0;
    c.m_prime = 7;
    c.t = 6;
    c.modulus_d = 64;
    auto r = verify_type1_prime_power(c, 10000);
    CHECK(r.verdict == Verdict::Evidence);
    CHECK(r.rigor == Rigor::NumericalEvidence);

    // The table's t = 6 is not sharp: the congruence still holds mod 2^7
    // and first breaks mod 2^8, at p = 3.
    c.t = 7;
    CHECK(verify_type1_prime_power(c, 10000).verdict == Verdict::Evidence);
    c.t = 8;
    auto r8 = verify_type1_prime_power(c, 10000);
    CHECK(r8.verdict == Verdict::Failed);
    CHECK(r8.first_failure == 3);
    auto f = oracles::brute_eta_expand(parse_eta("1:8,2:8"), 3);
    CHECK(testing_support::mod(f[3] - (1 + 2187), 128) == 0);
    CHECK(testing_support::mod(f[3] - (1 + 2187), 256) != 0);

    CongruenceClaim e;
    e.id = "pp11";
    e.kind = ClaimKind::TypeIPrimePower;
    e.form = ref("eta1^2 eta11^2");
    e.ell = 5;
    e.m = 0;
    e.m_prime = 1;
    e.t = 2;
    e.modulus_d = 25;
    e.classes = {1, 6, 11, 16, 21};
    CHECK(verify_type1_prime_power(e, 10000).verdict == Verdict::Evidence);

    CHECK_THROWS(verify_type1_prime_power(e, 49));
}

TEST_CASE("prime-power scan matches a direct check") {
    // Independent restatement for the level-11 row: a(p) = 1 + p mod 25 for
    // p = 1 mod 5.
    auto f = oracles::brute_eta_expand(parse_eta("1:2,11:2"), 3000);
    for (std::int64_t p : oracles::primes_up_to(3000)) {
        if (p == 5 || p == 11 || p % 5 != 1) continue;
        CHECK(testing_support::mod(f[static_cast<std::size_t>(p)] - (1 + p), 25) == 0);
    }
}

TEST_CASE("unit-factor scans") {
    CongruenceClaim c;
    c.id = "u";
    c.kind = ClaimKind::UnitFactor;
    c.form = ref("eta2^12");
    c.ell = 2;
    c.m = 0;
    c.m_prime = 5;
    c.modulus_d = 8;
    c.units = {UnitClass{{5}, 1537, 12}};
    CHECK(verify_unit_factor(c, 10000).verdict == Verdict::Evidence);
    c.units = {UnitClass{{1}, 1, 11}};
    CHECK(verify_unit_factor(c, 10000).verdict == Verdict::Evidence);
    c.units = {UnitClass{{5}, 1, 12}};
    CHECK(verify_unit_factor(c, 10000).verdict == Verdict::Failed);

    CongruenceClaim d;
    d.id = "u6";
    d.kind = ClaimKind::UnitFactor;
    d.form = ref("eta1^6 eta3^6");
    d.ell = 2;
    d.m = 0;
    d.m_prime = 5;
    d.modulus_d = 24;
    d.units = {UnitClass{{5}, 9, 5}};
    CHECK(verify_unit_factor(d, 10000).verdict == Verdict::Evidence);
    d.units.clear();
    CHECK_THROWS(verify_unit_factor(d, 10000));
}

TEST_CASE("twist powers") {
    CongruenceClaim c;
    c.id = "tp";
    c.kind = ClaimKind::TypeIITwistPower;
    c.form = ref("eta6^4");
    c.ell = 3;
    c.a = 5;
    CHECK(verify_type2_prime_power(c).verdict == Verdict::Proved);
    c.form = ref("eta2^12");
    c.a = 3;
    CHECK(verify_type2_prime_power(c).verdict == Verdict::Proved);
    c.a = 4;
    auto r = verify_type2_prime_power(c);
    CHECK(r.verdict == Verdict::Failed);
    CHECK(r.first_failure.has_value());
}

TEST_CASE("Type II prime classification") {
    auto d = classify_type2_prime(ref("delta"), 23);
    CHECK(d.branch == Type2Branch::TwoKMinus1);
    CHECK(d.consistent);
    auto tau = oracles::brute_eta_expand(parse_eta("1:24"), 23);
    CHECK(testing_support::mod(tau[23], 23) != 0);

    auto f = classify_type2_prime(ref("eta1^4 eta2^2 eta4^4"), 7);
    CHECK(f.branch == Type2Branch::TwoKMinus3);
    CHECK(f.consistent);
    auto a = oracles::brute_eta_expand(parse_eta("1:4,2:2,4:4"), 7);
    CHECK(testing_support::mod(a[7], 7) == 0);

    CHECK(classify_type2_prime(ref("eta3^8"), 3).branch == Type2Branch::SmallEll);
}

TEST_CASE("exceptional prime scans") {
    auto t2 = scan_exceptional(ref("delta"), ClaimKind::TypeII, 40, 2000);
    std::set<std::int64_t> found;
    for (const auto& c : t2.candidates) found.insert(c.ell);
    CHECK(found == std::set<std::int64_t>{23});

    auto t1 = scan_exceptional(ref("delta"), ClaimKind::TypeI, 700, 2000);
    found.clear();
    for (const auto& c : t1.candidates) found.insert(c.ell);
    for (std::int64_t ell : {3, 5, 7, 691}) CHECK(found.count(ell) == 1);

    CHECK(scan_exceptional(ref("eta1^2 eta11^2"), ClaimKind::TypeII, 40, 2000).candidates.empty());

    auto t3 = scan_exceptional(ref("eta3^8"), ClaimKind::TypeII, 10, 2000);
    found.clear();
    for (const auto& c : t3.candidates) found.insert(c.ell);
    CHECK(found == std::set<std::int64_t>{3, 5, 7});
}

TEST_CASE("Type II coefficient restatement") {
    for (const auto& c : builtin_of(ClaimKind::TypeII)) {
        CAPTURE(c.id);
        const auto& e = lookup(c.form.key);
        auto f = oracles::brute_eta_expand(e.quotient, 500);
        for (std::int64_t n = 1; n <= 500; ++n) {
            if (std::gcd(n, e.level * c.ell) != 1) continue;
            if (testing_support::legendre_by_squares(n, c.ell) != -1) continue;
            REQUIRE(testing_support::mod(f[static_cast<std::size_t>(n)], c.ell) == 0);
        }
    }
}

TEST_CASE("Type I and Type II overlap at l = 3") {
    for (const char* form : {"eta1^8 eta2^8", "eta1^6 eta3^6"}) {
        CAPTURE(form);
        bool t1 = false, t2 = false;
        for (const auto& c : lookup(form).claims) {
            if (c.ell != 3) continue;
            if (c.kind == ClaimKind::TypeI) t1 = verify_type1(c).verdict != Verdict::Failed;
            if (c.kind == ClaimKind::TypeII) t2 = verify_type2(c).verdict != Verdict::Failed;
        }
        CHECK(t1);
        CHECK(t2);
    }
}

TEST_CASE("proved verdicts survive a larger margin") {
    RunConfig plain, extended;
    extended.precision_margin = 50;
    for (const auto& c : builtin_claims()) {
        if (c.kind == ClaimKind::TypeIPrimePower || c.kind == ClaimKind::UnitFactor) continue;
        auto a = verify(c, plain);
        if (a.verdict != Verdict::Proved) continue;
        CAPTURE(c.id);
        CHECK(verify(c, extended).verdict == Verdict::Proved);
    }
}

TEST_CASE("corrupting one coefficient flips the verdict") {
    for (const auto& c : builtin_of(ClaimKind::TypeI)) {
        if (c.form.key != "delta" && c.form.key != "eta1^2 eta11^2") continue;
        CAPTURE(c.id);
        auto sides = build_type1(c);
        REQUIRE(compare_sides(c, sides, true).verdict == Verdict::Proved);
        for (std::size_t n = 0; n <= static_cast<std::size_t>(sides.threshold); ++n) {
            ComparisonSides bad = sides;
            bad.lhs = sides.lhs.with_coefficient(n, sides.lhs.ring().add(sides.lhs[n], 1));
            auto r = compare_sides(c, bad, true);
            CHECK(r.verdict == Verdict::Failed);
            CHECK(r.first_failure == static_cast<std::int64_t>(n));
        }
    }
}

TEST_CASE("builtin claim counts") {
    CHECK(builtin_of(ClaimKind::TypeI).size() == 30);
    CHECK(builtin_of(ClaimKind::TypeII).size() == 21);
    std::set<std::string> ids;
    for (const auto& c : builtin_claims()) CHECK(ids.insert(c.id).second);
}

TEST_CASE("verify_all is deterministic across thread counts") {
    std::vector<CongruenceClaim> claims = builtin_of(ClaimKind::TypeII);
    RunConfig one, four;
    one.threads = 1;
    four.threads = 4;
    auto a = verify_all(claims, one);
    auto b = verify_all(claims, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].first_failure == b[i].first_failure);
    }
    CHECK(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.id < y.id; }));
}

TEST_CASE("verify_all names the failing claim") {
    auto bad = type1("delta", 691, 5, 5);
    bad.id = "broken/claim";
    CHECK_THROWS_WITH(verify_all({bad}, RunConfig{}), doctest::Contains("broken/claim"));
}

TEST_CASE("outcomes") {
    auto c = type2("delta", 29);
    c.expect_fail = true;
    CHECK(verify(c, RunConfig{}).outcome == Outcome::XFail);
    c.expect_fail = false;
    CHECK(verify(c, RunConfig{}).outcome == Outcome::UnexpectedFail);
    auto ok = type2("delta", 23);
    CHECK(verify(ok, RunConfig{}).outcome == Outcome::Ok);
    ok.expect_fail = true;
    CHECK(verify(ok, RunConfig{}).outcome == Outcome::XPass);
}
