#include <algorithm>
#include <map>
#include <stdexcept>

#include "etaq/etaq.hpp"

namespace etaq {

namespace {

struct FormRow {
    const char* alias;
    std::map<std::int64_t, std::int64_t> exponents;
    int k;
    std::int64_t level;
    const char* character;
};

// Weight, level and nebentypus are copied from the tables, not derived.
const std::vector<FormRow>& form_rows() {
    static const std::vector<FormRow> rows = {
        {"delta", {{1, 24}}, 12, 1, "1_1"},
        {"", {{1, 8}, {2, 8}}, 8, 2, "1_2"},
        {"", {{1, 6}, {3, 6}}, 6, 3, "1_3"},
        {"", {{2, 12}}, 6, 4, "1_2"},
        {"", {{2, -12}, {4, 36}, {8, -12}}, 6, 16, "1_2"},
        {"", {{1, 4}, {5, 4}}, 4, 5, "1_5"},
        {"", {{1, 2}, {2, 2}, {3, 2}, {6, 2}}, 4, 6, "1_6"},
        {"", {{3, 8}}, 4, 9, "1_3"},
        {"", {{1, 2}, {11, 2}}, 2, 11, "1_11"},
        {"", {{1, 1}, {2, 1}, {7, 1}, {14, 1}}, 2, 14, "1_14"},
        {"", {{1, 1}, {3, 1}, {5, 1}, {15, 1}}, 2, 15, "1_15"},
        {"", {{2, 2}, {10, 2}}, 2, 20, "1_20"},
        {"", {{3, 2}, {9, 2}}, 2, 27, "1_27"},
        {"", {{6, 4}}, 2, 36, "1_6"},
        {"", {{6, -4}, {12, 12}, {24, -4}}, 2, 144, "1_12"},
        {"", {{1, 4}, {2, 2}, {4, 4}}, 5, 4, "kron(-4)"},
        {"", {{4, -14}, {8, 38}, {16, -14}}, 5, 64, "kron(-4)"},
        {"", {{1, 3}, {7, 3}}, 3, 7, "kron(-7)"},
        {"", {{2, 3}, {6, 3}}, 3, 12, "kron(-3)"},
        {"", {{2, -3}, {4, 9}, {6, -3}, {8, -3}, {12, 9}, {24, -3}}, 3, 48, "kron(-3)"},
        {"", {{4, 6}}, 3, 16, "kron(-4)"},
        {"", {{4, -6}, {8, 18}, {16, -6}}, 3, 64, "kron(-4)"},
    };
    return rows;
}

EtaQuotient make_quotient(const FormRow& row) {
    EtaQuotient eq;
    eq.exponents = row.exponents;
    eq.level = row.level;
    eq.nebentypus = parse_character(row.character);
    return eq;
}

std::string form_id(const std::map<std::int64_t, std::int64_t>& ex) {
    EtaQuotient eq;
    eq.exponents = ex;
    return eq.id();
}

const std::string kDelta = "delta";
const std::string k8_8 = "eta1^8 eta2^8";
const std::string k6_6 = "eta1^6 eta3^6";
const std::string k2_12 = "eta2^12";
const std::string k2_12_tw = "eta4^36/(eta2^12 eta8^12)";
const std::string k4_4 = "eta1^4 eta5^4";
const std::string k2236 = "eta1^2 eta2^2 eta3^2 eta6^2";
const std::string k3_8 = "eta3^8";
const std::string k1_11 = "eta1^2 eta11^2";
const std::string k1_2_7_14 = "eta1 eta2 eta7 eta14";
const std::string k1_3_5_15 = "eta1 eta3 eta5 eta15";
const std::string k2_10 = "eta2^2 eta10^2";
const std::string k3_9 = "eta3^2 eta9^2";
const std::string k6_4 = "eta6^4";
const std::string k5_424 = "eta1^4 eta2^2 eta4^4";
const std::string k5_424_tw = "eta8^38/(eta4^14 eta16^14)";
const std::string k1_7 = "eta1^3 eta7^3";
const std::string k2_6 = "eta2^3 eta6^3";
const std::string k2_6_tw = "eta4^9 eta12^9/(eta2^3 eta6^3 eta8^3 eta24^3)";
const std::string k4_6 = "eta4^6";
const std::string k4_6_tw = "eta8^18/(eta4^6 eta16^6)";
const std::string k6_4_tw = "eta12^12/(eta6^4 eta24^4)";

FormRef ref(const std::string& key) { return FormRef{key, "", std::nullopt, std::nullopt}; }

CongruenceClaim type1(const std::string& form, std::int64_t ell, int m, int mp, const char* psi) {
    CongruenceClaim c;
    c.kind = ClaimKind::TypeI;
    c.form = ref(form);
    c.ell = ell;
    c.m = m;
    c.m_prime = mp;
    c.psi = parse_character(psi);
    c.id = "type1/" + form + "/" + std::to_string(ell);
    return c;
}

CongruenceClaim type2(const std::string& form, std::int64_t ell) {
    CongruenceClaim c;
    c.kind = ClaimKind::TypeII;
    c.form = ref(form);
    c.ell = ell;
    c.id = "type2/" + form + "/" + std::to_string(ell);
    return c;
}

CongruenceClaim power(const std::string& form, std::int64_t ell, int m, int mp, int t,
                      std::vector<std::int64_t> classes, std::int64_t d) {
    CongruenceClaim c;
    c.kind = ClaimKind::TypeIPrimePower;
    c.form = ref(form);
    c.ell = ell;
    c.m = m;
    c.m_prime = mp;
    c.t = t;
    c.modulus_d = d;
    std::string cls = "all";
    if (!classes.empty()) {
        cls.clear();
        for (auto b : classes) cls += (cls.empty() ? "" : ",") + std::to_string(b);
        if (classes.size() > 4) cls = std::to_string(classes.size()) + "-classes";
    }
    c.classes = std::move(classes);
    c.id = "type1-power/" + form + "/" + std::to_string(ell) + "^" + std::to_string(t) + "/mod" + std::to_string(d) +
           ":" + cls;
    return c;
}

CongruenceClaim unit(const std::string& form, std::int64_t d, std::vector<UnitClass> units) {
    CongruenceClaim c;
    c.kind = ClaimKind::UnitFactor;
    c.form = ref(form);
    c.ell = 2;
    c.m = 0;
    c.m_prime = 5;
    c.modulus_d = d;
    c.id = "unit-factor/" + form + "/u=" + std::to_string(units.front().u);
    c.units = std::move(units);
    return c;
}

CongruenceClaim twist_power(const std::string& form, int a) {
    CongruenceClaim c;
    c.kind = ClaimKind::TypeIITwistPower;
    c.form = ref(form);
    c.ell = 3;
    c.a = a;
    c.t = a;
    c.id = "type2-power/" + form + "/3^" + std::to_string(a);
    return c;
}

CongruenceClaim mod27_replication() {
    auto f = std::make_shared<SeriesRecipe>();
    f->base = SeriesRecipe::Base::Form;
    f->form = ref(k8_8);
    auto e18 = std::make_shared<SeriesRecipe>();
    e18->base = SeriesRecipe::Base::E;
    e18->k = 18;
    e18->ops.push_back(RecipeOp{RecipeOp::Kind::Pow, 12, {}, nullptr, 0});
    f->ops.push_back(RecipeOp{RecipeOp::Kind::Twist, 0, RealDirichletCharacter::trivial(2), nullptr, 0});
    f->ops.push_back(RecipeOp{RecipeOp::Kind::Theta, 3, {}, nullptr, 0});
    f->ops.push_back(RecipeOp{RecipeOp::Kind::Mul, 0, {}, e18, 0});

    auto g = std::make_shared<SeriesRecipe>();
    g->base = SeriesRecipe::Base::G;
    g->k = 20;
    g->ops.push_back(RecipeOp{RecipeOp::Kind::Twist, 0, RealDirichletCharacter::trivial(2), nullptr, 0});
    g->ops.push_back(RecipeOp{RecipeOp::Kind::Theta, 15, {}, nullptr, 0});

    CongruenceClaim c;
    c.kind = ClaimKind::RawSeries;
    c.id = "raw/eta1^8 eta2^8/theta3-E18^12-vs-theta15-G20/27";
    c.form = ref(k8_8);
    c.ell = 3;
    c.t = 3;
    c.lhs = f;
    c.rhs = g;
    c.weight = 320;
    c.level = 36;
    c.cuspidal = true;
    return c;
}

std::vector<CongruenceClaim> make_builtin_claims() {
    std::vector<CongruenceClaim> out = {
        type1(kDelta, 3, 0, 1, "1_1"),
        type1(kDelta, 5, 1, 2, "1_1"),
        type1(kDelta, 7, 1, 4, "1_1"),
        type1(kDelta, 691, 0, 11, "1_1"),
        type1(k8_8, 2, 0, 1, "1_2"),
        type1(k8_8, 3, 0, 1, "1_2"),
        type1(k8_8, 5, 1, 2, "1_2"),
        type1(k8_8, 17, 0, 7, "1_2"),
        type1(k6_6, 2, 0, 1, "1_3"),
        type1(k6_6, 3, 0, 1, "kron(-3)"),
        type1(k6_6, 13, 0, 5, "1_3"),
        type1(k2_12, 2, 0, 1, "1_4"),
        type1(k2_12, 3, 0, 1, "1_4"),
        type1(k4_4, 2, 0, 1, "1_5"),
        type1(k4_4, 5, 0, 3, "kron(5)"),
        type1(k4_4, 13, 0, 3, "1_5"),
        type1(k2236, 2, 0, 1, "1_6"),
        type1(k2236, 3, 0, 1, "1_2*kron(-3)"),
        type1(k2236, 5, 0, 3, "1_6"),
        type1(k3_8, 2, 0, 1, "1_9"),
        type1(k3_8, 3, 0, 1, "1_3*kron(-3)"),
        type1(k1_11, 5, 0, 1, "1_11"),
        type1(k1_2_7_14, 2, 0, 1, "1_14"),
        type1(k1_2_7_14, 3, 0, 1, "1_14"),
        type1(k1_3_5_15, 2, 0, 1, "1_15"),
        type1(k2_10, 2, 0, 1, "1_20"),
        type1(k2_10, 3, 0, 1, "1_20"),
        type1(k3_9, 3, 0, 1, "1_9*kron(-3)"),
        type1(k6_4, 2, 0, 1, "1_36"),
        type1(k6_4, 3, 0, 1, "1_12*kron(-3)"),

        type2(kDelta, 23),
        type2(k8_8, 3),
        type2(k6_6, 3),
        type2(k2_12, 3),
        type2(k2_12, 11),
        type2(k2_12_tw, 3),
        type2(k2_12_tw, 11),
        type2(k5_424, 7),
        type2(k5_424_tw, 7),
        type2(k1_7, 3),
        type2(k3_8, 3),
        type2(k3_8, 5),
        type2(k3_8, 7),
        type2(k2_6, 3),
        type2(k2_6_tw, 3),
        type2(k1_2_7_14, 3),
        type2(k4_6, 3),
        type2(k4_6_tw, 3),
        type2(k2_10, 3),
        type2(k6_4, 3),
        type2(k6_4_tw, 3),

        power(k8_8, 2, 0, 7, 6, {}, 64),
        power(k8_8, 3, 12, 13, 3, {}, 27),
        power(k6_6, 2, 0, 5, 4, {5, 7, 11, 19}, 24),
        power(k6_6, 2, 0, 5, 5, {13, 17, 23}, 24),
        power(k6_6, 2, 0, 5, 6, {1}, 24),
        power(k2_12, 2, 0, 5, 8, {3}, 8),
        power(k2_12, 2, 0, 5, 9, {7}, 8),
        power(k2_12, 2, 0, 5, 10, {5}, 8),
        power(k2_12, 2, 0, 5, 11, {1}, 8),
        power(k2_12, 3, 1, 4, 2, {2, 5}, 9),
        power(k2_12, 3, 1, 4, 3, {8, 17, 26}, 27),
        power(k4_4, 5, 1, 2, 2, {1, 6, 7, 11, 16, 18, 21, 24}, 25),
        power(k3_8, 2, 0, 1, 2, {3}, 4),
        power(k3_8, 3, 0, 3, 4, {1,  4,  7,  10, 13, 16, 19, 22, 25, 26, 28, 31, 34, 37, 40,
                                 43, 46, 49, 52, 53, 55, 58, 61, 64, 67, 70, 73, 76, 79, 80},
              81),
        power(k2236, 2, 0, 1, 2, {}, 4),
        power(k1_11, 5, 0, 1, 2, {1, 6, 11, 16, 21}, 25),
        power(k1_2_7_14, 3, 0, 1, 2, {1, 4, 7}, 9),
        power(k1_3_5_15, 2, 0, 1, 3, {}, 8),
        power(k3_9, 3, 0, 1, 3, {1, 10, 19, 26}, 27),

        unit(k2_12, 8, {{{1}, 1, 11}}),
        unit(k2_12, 8, {{{3}, 1729, 12}}),
        unit(k2_12, 8, {{{5}, 1537, 12}}),
        unit(k2_12, 8, {{{7}, 193, 14}}),
        unit(k6_6, 24, {{{11, 19}, 5, 5}}),
        unit(k6_6, 24, {{{5}, 9, 5}}),

        mod27_replication(),
    };

    // The sharpening of the first prime-power row to 2^7 is listed as an
    // expected failure.
    auto probe = power(k8_8, 2, 0, 7, 7, {}, 64);
    probe.expect_fail = true;
    out.push_back(probe);

    for (int a = 1; a <= 3; ++a) out.push_back(twist_power(k2_12, a));
    auto bad = twist_power(k2_12, 4);
    bad.expect_fail = true;
    out.push_back(bad);
    for (const auto& f : {k3_8, k2_6, k3_9, k6_4})
        for (int a = 1; a <= 5; ++a) out.push_back(twist_power(f, a));

    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> out;
    const auto& claims = builtin_claims();
    for (const auto& row : form_rows()) {
        CatalogEntry e;
        e.quotient = make_quotient(row);
        std::string canonical = form_id(row.exponents);
        e.id = *row.alias ? row.alias : canonical;
        if (*row.alias) e.aliases.push_back(canonical);
        e.weight = row.k;
        e.level = row.level;
        e.nebentypus = e.quotient.nebentypus;
        for (const auto& c : claims)
            if (c.form.key == e.id) e.claims.push_back(c);
        out.push_back(std::move(e));
    }
    return out;
}

std::string normalise_key(std::string_view key) {
    std::string out;
    bool space = false;
    for (char c : key) {
        if (c == ' ' || c == '\t') {
            space = !out.empty();
            continue;
        }
        if (space && out.back() != '/' && out.back() != '(' && c != '/' && c != ')') out.push_back(' ');
        space = false;
        out.push_back(c);
    }
    return out;
}

}  // namespace

const std::vector<CongruenceClaim>& builtin_claims() {
    static const std::vector<CongruenceClaim> claims = make_builtin_claims();
    return claims;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry* find_form(std::string_view key) {
    const std::string k = normalise_key(key);
    for (const auto& e : catalog()) {
        if (e.id == k) return &e;
        for (const auto& a : e.aliases)
            if (a == k) return &e;
    }
    if (k.find(':') != std::string::npos) {
        try {
            EtaQuotient eq = parse_eta(k);
            for (const auto& e : catalog())
                if (e.quotient.exponents == eq.exponents) return &e;
        } catch (const std::invalid_argument&) {
        }
    }
    return nullptr;
}

const CatalogEntry& lookup(std::string_view key) {
    if (const CatalogEntry* e = find_form(key)) return *e;
    throw std::invalid_argument("unknown form '" + std::string(key) + "'");
}

}  // namespace etaq
