#include "etaq/claims_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "etaq/etaq.hpp"

namespace etaq {

std::string to_string(ClaimKind kind) {
    switch (kind) {
        case ClaimKind::TypeI: return "type1";
        case ClaimKind::TypeII: return "type2";
        case ClaimKind::TypeIPrimePower: return "type1-power";
        case ClaimKind::TypeIITwistPower: return "type2-power";
        case ClaimKind::UnitFactor: return "unit-factor";
        case ClaimKind::RawSeries: return "raw";
    }
    return "?";
}

ClaimKind parse_claim_kind(const std::string& text) {
    for (ClaimKind k : {ClaimKind::TypeI, ClaimKind::TypeII, ClaimKind::TypeIPrimePower, ClaimKind::TypeIITwistPower,
                        ClaimKind::UnitFactor, ClaimKind::RawSeries})
        if (to_string(k) == text) return k;
    throw std::invalid_argument("unknown claim kind '" + text + "'");
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ClaimParseError(where + ": " + what);
}

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) fail(where, "unknown field '" + key + "'");
}

template <class T>
T get(const Json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        fail(where, std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback, const std::string& where) {
    return j.contains(key) ? get<T>(j, key, where) : fallback;
}

RealDirichletCharacter character(const Json& j, const char* key, const std::string& where) {
    try {
        return parse_character(get<std::string>(j, key, where));
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

FormRef parse_form(const Json& j, const std::string& where) {
    FormRef f;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (find_form(s) || s.find(':') == std::string::npos) f.key = s;
        else f.eta = s;
        if (!f.key.empty() && !find_form(f.key)) fail(where, "unknown form '" + s + "'");
        return f;
    }
    check_keys(j, {"eta", "level", "character"}, where + ".form");
    f.eta = get<std::string>(j, "eta", where + ".form");
    if (j.contains("level")) f.level = get<std::int64_t>(j, "level", where + ".form");
    if (j.contains("character")) f.character = character(j, "character", where + ".form");
    try {
        parse_eta(f.eta);
    } catch (const std::invalid_argument& e) {
        fail(where + ".form", e.what());
    }
    return f;
}

Json form_to_json(const FormRef& f) {
    if (!f.key.empty()) return f.key;
    Json j;
    j["eta"] = f.eta;
    if (f.level) j["level"] = *f.level;
    if (f.character) j["character"] = f.character->to_string();
    return j;
}

std::shared_ptr<SeriesRecipe> parse_recipe(const Json& j, const std::string& where);

SeriesRecipe::Base parse_base_kind(const std::string& s, const std::string& where) {
    using B = SeriesRecipe::Base;
    static const std::pair<const char*, B> names[] = {{"form", B::Form}, {"eta", B::Eta}, {"G", B::G},
                                                      {"E", B::E},       {"E2", B::E2},   {"E2N", B::E2N},
                                                      {"F", B::F},       {"one", B::One}};
    for (auto [n, b] : names)
        if (s == n) return b;
    fail(where, "unknown recipe base '" + s + "'");
}

const char* base_name(SeriesRecipe::Base b) {
    using B = SeriesRecipe::Base;
    switch (b) {
        case B::Form: return "form";
        case B::Eta: return "eta";
        case B::G: return "G";
        case B::E: return "E";
        case B::E2: return "E2";
        case B::E2N: return "E2N";
        case B::F: return "F";
        case B::One: return "one";
    }
    return "?";
}

std::shared_ptr<SeriesRecipe> parse_recipe(const Json& j, const std::string& where) {
    check_keys(j, {"base", "ops"}, where);
    auto r = std::make_shared<SeriesRecipe>();
    if (!j.contains("base")) fail(where, "missing field 'base'");
    const Json& b = j.at("base");
    const std::string bw = where + ".base";
    check_keys(b, {"kind", "form", "eta", "k", "N", "ell", "t"}, bw);
    r->base = parse_base_kind(get<std::string>(b, "kind", bw), bw);
    using B = SeriesRecipe::Base;
    switch (r->base) {
        case B::Form:
            if (!b.contains("form")) fail(bw, "missing field 'form'");
            r->form = parse_form(b.at("form"), bw);
            break;
        case B::Eta: r->form.eta = get<std::string>(b, "eta", bw); break;
        case B::G:
        case B::E: r->k = get<int>(b, "k", bw); break;
        case B::E2N: r->n = get<std::int64_t>(b, "N", bw); break;
        case B::F:
            r->ell = get<std::int64_t>(b, "ell", bw);
            r->t = get<int>(b, "t", bw);
            break;
        case B::E2:
        case B::One: break;
    }
    if (!j.contains("ops")) return r;
    if (!j.at("ops").is_array()) fail(where, "'ops' must be an array");
    int i = 0;
    for (const auto& op : j.at("ops")) {
        const std::string ow = where + ".ops[" + std::to_string(i++) + "]";
        if (!op.is_object() || op.size() != 1) fail(ow, "each op is an object with exactly one key");
        const std::string name = op.begin().key();
        const Json& val = op.begin().value();
        RecipeOp o;
        using K = RecipeOp::Kind;
        auto int_arg = [&](std::int64_t min) {
            if (!val.is_number_integer() || val.get<std::int64_t>() < min) fail(ow, "'" + name + "' needs an integer >= " + std::to_string(min));
            return val.get<std::int64_t>();
        };
        if (name == "twist") {
            o.kind = K::Twist;
            if (!val.is_string()) fail(ow, "'twist' needs a character spec");
            try {
                o.chi = parse_character(val.get<std::string>());
            } catch (const std::invalid_argument& e) {
                fail(ow, e.what());
            }
        } else if (name == "theta") {
            o.kind = K::Theta;
            o.arg = int_arg(0);
        } else if (name == "U") {
            o.kind = K::U;
            o.arg = int_arg(1);
        } else if (name == "V") {
            o.kind = K::V;
            o.arg = int_arg(1);
        } else if (name == "pow") {
            o.kind = K::Pow;
            if (!val.is_number_integer()) fail(ow, "'pow' needs an integer");
            o.arg = val.get<std::int64_t>();
        } else if (name == "mul") {
            o.kind = K::Mul;
            o.factor = parse_recipe(val, ow + ".mul");
        } else if (name == "scale") {
            o.kind = K::Scale;
            try {
                o.scalar = val.is_number_integer() ? mpq_class(val.get<long>()) : mpq_class(val.get<std::string>());
                o.scalar.canonicalize();
            } catch (const std::exception&) {
                fail(ow, "'scale' needs an integer or a rational string like \"1/480\"");
            }
            if (o.scalar.get_den() == 0) fail(ow, "zero denominator");
        } else {
            fail(ow, "unknown op '" + name + "'");
        }
        r->ops.push_back(std::move(o));
    }
    return r;
}

Json recipe_to_json(const SeriesRecipe& r) {
    using B = SeriesRecipe::Base;
    Json j;
    Json b;
    b["kind"] = base_name(r.base);
    switch (r.base) {
        case B::Form: b["form"] = form_to_json(r.form); break;
        case B::Eta: b["eta"] = r.form.eta; break;
        case B::G:
        case B::E: b["k"] = r.k; break;
        case B::E2N: b["N"] = r.n; break;
        case B::F:
            b["ell"] = r.ell;
            b["t"] = r.t;
            break;
        case B::E2:
        case B::One: break;
    }
    j["base"] = b;
    Json ops = Json::array();
    for (const auto& o : r.ops) {
        using K = RecipeOp::Kind;
        Json op;
        switch (o.kind) {
            case K::Twist: op["twist"] = o.chi.to_string(); break;
            case K::Theta: op["theta"] = o.arg; break;
            case K::U: op["U"] = o.arg; break;
            case K::V: op["V"] = o.arg; break;
            case K::Pow: op["pow"] = o.arg; break;
            case K::Mul: op["mul"] = recipe_to_json(*o.factor); break;
            case K::Scale: op["scale"] = o.scalar.get_str(); break;
        }
        ops.push_back(op);
    }
    if (!ops.empty()) j["ops"] = ops;
    return j;
}

std::set<std::string> allowed_fields(ClaimKind kind) {
    std::set<std::string> s{"id", "kind", "form", "ell", "expect", "note"};
    auto add = [&](std::initializer_list<const char*> xs) {
        for (auto x : xs) s.insert(x);
    };
    switch (kind) {
        case ClaimKind::TypeI: add({"m", "m_prime", "psi", "t"}); break;
        case ClaimKind::TypeII: add({"t"}); break;
        case ClaimKind::TypeIPrimePower: add({"t", "m", "m_prime", "classes", "d", "prime_bound"}); break;
        case ClaimKind::UnitFactor: add({"m", "m_prime", "d", "units", "prime_bound"}); break;
        case ClaimKind::TypeIITwistPower: add({"a"}); break;
        case ClaimKind::RawSeries: add({"t", "lhs", "rhs", "weight", "level", "cuspidal"}); break;
    }
    return s;
}

std::vector<std::int64_t> int_list(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(where, "expected an array of integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

CongruenceClaim parse_claim(const Json& j, std::size_t index) {
    std::string where = "claims[" + std::to_string(index) + "]";
    if (!j.is_object()) fail(where, "expected an object");
    CongruenceClaim c;
    try {
        c.kind = parse_claim_kind(get<std::string>(j, "kind", where));
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    check_keys(j, allowed_fields(c.kind), where);
    c.id = get_or<std::string>(j, "id", to_string(c.kind) + "/claim-" + std::to_string(index), where);
    where += " (" + c.id + ")";
    if (c.kind != ClaimKind::RawSeries || j.contains("form")) {
        if (!j.contains("form")) fail(where, "missing field 'form'");
        c.form = parse_form(j.at("form"), where);
    }
    c.ell = get<std::int64_t>(j, "ell", where);
    c.t = get_or<int>(j, "t", 1, where);
    c.note = get_or<std::string>(j, "note", "", where);
    const std::string expect = get_or<std::string>(j, "expect", "pass", where);
    if (expect != "pass" && expect != "fail") fail(where, "'expect' must be \"pass\" or \"fail\"");
    c.expect_fail = expect == "fail";
    if (j.contains("prime_bound")) c.prime_bound = get<std::int64_t>(j, "prime_bound", where);

    switch (c.kind) {
        case ClaimKind::TypeI:
            c.m = get<int>(j, "m", where);
            c.m_prime = get<int>(j, "m_prime", where);
            c.psi = j.contains("psi") ? character(j, "psi", where) : RealDirichletCharacter();
            break;
        case ClaimKind::TypeII: break;
        case ClaimKind::TypeIPrimePower:
            c.m = get<int>(j, "m", where);
            c.m_prime = get<int>(j, "m_prime", where);
            c.modulus_d = get<std::int64_t>(j, "d", where);
            if (!j.contains("classes")) fail(where, "missing field 'classes'");
            if (j.at("classes").is_string()) {
                if (j.at("classes").get<std::string>() != "all") fail(where, "'classes' must be \"all\" or a list");
            } else {
                c.classes = int_list(j.at("classes"), where + ".classes");
                if (c.classes.empty()) fail(where, "'classes' is empty");
            }
            break;
        case ClaimKind::UnitFactor: {
            c.m = get<int>(j, "m", where);
            c.m_prime = get<int>(j, "m_prime", where);
            c.modulus_d = get<std::int64_t>(j, "d", where);
            if (!j.contains("units") || !j.at("units").is_array()) fail(where, "'units' must be an array");
            int i = 0;
            for (const auto& u : j.at("units")) {
                const std::string uw = where + ".units[" + std::to_string(i++) + "]";
                check_keys(u, {"classes", "u", "t"}, uw);
                UnitClass uc;
                if (!u.contains("classes")) fail(uw, "missing field 'classes'");
                uc.classes = int_list(u.at("classes"), uw + ".classes");
                uc.u = get<std::int64_t>(u, "u", uw);
                uc.t = get<int>(u, "t", uw);
                c.units.push_back(std::move(uc));
            }
            break;
        }
        case ClaimKind::TypeIITwistPower:
            c.a = get<int>(j, "a", where);
            c.t = c.a;
            break;
        case ClaimKind::RawSeries:
            if (!j.contains("lhs") || !j.contains("rhs")) fail(where, "raw claims need 'lhs' and 'rhs'");
            c.lhs = parse_recipe(j.at("lhs"), where + ".lhs");
            c.rhs = parse_recipe(j.at("rhs"), where + ".rhs");
            c.weight = get<int>(j, "weight", where);
            c.level = get<std::int64_t>(j, "level", where);
            c.cuspidal = get_or<bool>(j, "cuspidal", false, where);
            break;
    }
    return c;
}

}  // namespace

std::vector<CongruenceClaim> parse_claims(const Json& doc) {
    check_keys(doc, {"format_version", "claims"}, "claim file");
    const int version = get<int>(doc, "format_version", "claim file");
    if (version != kClaimFormatVersion)
        fail("claim file", "unsupported format_version " + std::to_string(version));
    if (!doc.contains("claims") || !doc.at("claims").is_array()) fail("claim file", "'claims' must be an array");
    std::vector<CongruenceClaim> out;
    std::set<std::string> ids;
    std::size_t i = 0;
    for (const auto& c : doc.at("claims")) {
        out.push_back(parse_claim(c, i++));
        if (!ids.insert(out.back().id).second) fail("claim file", "duplicate claim id '" + out.back().id + "'");
    }
    return out;
}

std::vector<CongruenceClaim> parse_claim_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ClaimParseError(std::string("claim file is not valid JSON: ") + e.what());
    }
    return parse_claims(doc);
}

std::vector<CongruenceClaim> load_claim_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ClaimParseError("cannot open claim file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_claim_text(ss.str());
}

Json claim_to_json(const CongruenceClaim& c) {
    Json j;
    j["id"] = c.id;
    j["kind"] = to_string(c.kind);
    if (!c.form.key.empty() || !c.form.eta.empty()) j["form"] = form_to_json(c.form);
    j["ell"] = c.ell;
    switch (c.kind) {
        case ClaimKind::TypeI:
            j["m"] = c.m;
            j["m_prime"] = c.m_prime;
            j["psi"] = c.psi.to_string();
            break;
        case ClaimKind::TypeII: break;
        case ClaimKind::TypeIPrimePower:
            j["t"] = c.t;
            j["m"] = c.m;
            j["m_prime"] = c.m_prime;
            if (c.classes.empty()) j["classes"] = "all";
            else j["classes"] = c.classes;
            j["d"] = c.modulus_d;
            break;
        case ClaimKind::UnitFactor: {
            j["m"] = c.m;
            j["m_prime"] = c.m_prime;
            j["d"] = c.modulus_d;
            Json units = Json::array();
            for (const auto& u : c.units) units.push_back(Json{{"classes", u.classes}, {"u", u.u}, {"t", u.t}});
            j["units"] = units;
            break;
        }
        case ClaimKind::TypeIITwistPower: j["a"] = c.a; break;
        case ClaimKind::RawSeries:
            j["t"] = c.t;
            j["lhs"] = recipe_to_json(*c.lhs);
            j["rhs"] = recipe_to_json(*c.rhs);
            j["weight"] = c.weight;
            j["level"] = c.level;
            j["cuspidal"] = c.cuspidal;
            break;
    }
    if (c.prime_bound) j["prime_bound"] = *c.prime_bound;
    j["expect"] = c.expect_fail ? "fail" : "pass";
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json claims_to_json(const std::vector<CongruenceClaim>& claims) {
    Json j;
    j["format_version"] = kClaimFormatVersion;
    j["claims"] = Json::array();
    for (const auto& c : claims) j["claims"].push_back(claim_to_json(c));
    return j;
}

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> opt_from(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace

Json report_to_json(const VerificationReport& r, bool include_timing) {
    Json j;
    j["id"] = r.id;
    j["kind"] = to_string(r.kind);
    j["form"] = r.form;
    j["ell"] = r.ell;
    j["t"] = r.t;
    j["verdict"] = to_string(r.verdict);
    j["rigor"] = to_string(r.rigor);
    j["theta_rule"] = r.theta_rule;
    j["threshold"] = opt(r.threshold);
    j["prime_bound"] = opt(r.prime_bound);
    j["weight"] = opt(r.weight);
    j["level"] = opt(r.level);
    j["first_failure"] = opt(r.first_failure);
    j["expected"] = r.expected_fail ? "fail" : "pass";
    j["outcome"] = to_string(r.outcome);
    j["note"] = r.note;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

Json reports_to_json(const std::vector<VerificationReport>& reports, bool include_timing) {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r, include_timing));
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.kind = parse_claim_kind(j.at("kind").get<std::string>());
    r.form = j.at("form").get<std::string>();
    r.ell = j.at("ell").get<std::int64_t>();
    r.t = j.at("t").get<int>();
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "proved") r.verdict = Verdict::Proved;
    else if (v == "evidence") r.verdict = Verdict::Evidence;
    else if (v == "failed") r.verdict = Verdict::Failed;
    else throw std::invalid_argument("unknown verdict '" + v + "'");
    const std::string rg = j.at("rigor").get<std::string>();
    if (rg == "sturm-proved") r.rigor = Rigor::SturmProved;
    else if (rg == "numerical-evidence") r.rigor = Rigor::NumericalEvidence;
    else throw std::invalid_argument("unknown rigor '" + rg + "'");
    r.theta_rule = j.at("theta_rule").get<std::string>();
    r.threshold = opt_from<std::int64_t>(j, "threshold");
    r.prime_bound = opt_from<std::int64_t>(j, "prime_bound");
    r.weight = opt_from<int>(j, "weight");
    r.level = opt_from<std::int64_t>(j, "level");
    r.first_failure = opt_from<std::int64_t>(j, "first_failure");
    r.expected_fail = j.at("expected").get<std::string>() == "fail";
    const std::string o = j.at("outcome").get<std::string>();
    bool found = false;
    for (Outcome x : {Outcome::Ok, Outcome::XFail, Outcome::XPass, Outcome::UnexpectedFail})
        if (to_string(x) == o) {
            r.outcome = x;
            found = true;
        }
    if (!found) throw std::invalid_argument("unknown outcome '" + o + "'");
    r.note = j.at("note").get<std::string>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

}  // namespace etaq
