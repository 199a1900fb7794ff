#include "etaq/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "etaq/claims_io.hpp"
#include "etaq/congruence.hpp"
#include "etaq/etaq.hpp"

namespace etaq::cli {

namespace {

std::string term(const std::string& magnitude, std::size_t n) {
    if (n == 0) return magnitude;
    std::string q = n == 1 ? "q" : "q^" + std::to_string(n);
    return magnitude == "1" ? q : magnitude + q;
}

template <class Coeff>
std::string join_terms(const std::vector<std::pair<Coeff, std::size_t>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [c, n] : terms) {
        const bool negative = sgn(c) < 0;
        const std::string mag = (negative ? mpz_class(-c) : c).get_str();
        if (out.empty()) out = (negative ? "-" : "") + term(mag, n);
        else out += (negative ? " - " : " + ") + term(mag, n);
    }
    return out;
}

struct Selection {
    std::vector<std::string> only;
    std::vector<std::string> ids;
};

std::vector<CongruenceClaim> select(const std::vector<CongruenceClaim>& claims, const Selection& sel) {
    std::vector<CongruenceClaim> out;
    for (const auto& c : claims) {
        bool kind_ok = sel.only.empty();
        for (const auto& k : sel.only)
            if (to_string(c.kind) == k) kind_ok = true;
        bool id_ok = sel.ids.empty();
        for (const auto& s : sel.ids)
            if (c.id.find(s) != std::string::npos) id_ok = true;
        if (kind_ok && id_ok) out.push_back(c);
    }
    return out;
}

std::string upper(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
}

void print_text_report(const std::vector<VerificationReport>& reports, bool timing, std::ostream& out) {
    std::size_t ok = 0, xfail = 0, xpass = 0, bad = 0;
    for (const auto& r : reports) {
        std::ostringstream line;
        line << std::left << std::setw(15) << upper(to_string(r.outcome)) << std::setw(9) << to_string(r.verdict)
             << r.id << "\n    rigor=" << to_string(r.rigor);
        if (r.theta_rule != "none") line << " theta=" << r.theta_rule;
        if (r.weight) line << " weight=" << *r.weight;
        if (r.level) line << " level=" << *r.level;
        if (r.threshold) line << " threshold=" << *r.threshold;
        if (r.prime_bound) line << " prime_bound=" << *r.prime_bound;
        if (r.first_failure) line << " first_failure=" << *r.first_failure;
        if (r.expected_fail) line << " expected=fail";
        if (timing) line << " time=" << std::fixed << std::setprecision(1) << r.elapsed_ms << "ms";
        if (!r.note.empty()) line << "\n    note: " << r.note;
        out << line.str() << "\n";
        switch (r.outcome) {
            case Outcome::Ok: ++ok; break;
            case Outcome::XFail: ++xfail; break;
            case Outcome::XPass: ++xpass; break;
            case Outcome::UnexpectedFail: ++bad; break;
        }
    }
    out << reports.size() << " claims: " << ok << " ok, " << xfail << " xfail, " << xpass << " xpass, " << bad
        << " unexpected-fail\n";
}

std::pair<std::int64_t, int> parse_modulus(const std::string& text) {
    static const std::regex re(R"(\s*([0-9]+)\s*(?:\^\s*([0-9]+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("modulus must look like 5 or 5^2, got '" + text + "'");
    return {std::stoll(m[1].str()), m[2].matched ? std::stoi(m[2].str()) : 1};
}

FormRef form_ref_from(const std::string& form, const std::string& eta) {
    FormRef f;
    if (!form.empty()) {
        lookup(form);
        f.key = form;
    } else {
        f.eta = eta;
    }
    return f;
}

}  // namespace

std::string format_series(const ZSeries& s, std::size_t terms) {
    std::vector<std::pair<mpz_class, std::size_t>> t;
    for (std::size_t n = 0; n <= std::min(terms, s.precision()); ++n)
        if (sgn(s[n]) != 0) t.emplace_back(s[n], n);
    return join_terms(t);
}

std::string format_series(const ModSeries& s, std::size_t terms) {
    std::vector<std::pair<mpz_class, std::size_t>> t;
    for (std::size_t n = 0; n <= std::min(terms, s.precision()); ++n)
        if (s[n] != 0) t.emplace_back(mpz_class(static_cast<unsigned long>(s[n])), n);
    return join_terms(t);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eta-quotient newforms: expansions and congruence verification", "etaq"};
    app.require_subcommand(1);

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "Print the q-expansion of an eta-quotient");
    std::string eta_spec, form_key, mod_spec;
    std::size_t terms = 10;
    auto* eta_opt = expand_cmd->add_option("--eta", eta_spec, "delta:exponent pairs, e.g. 1:2,11:2");
    auto* form_opt = expand_cmd->add_option("--form", form_key, "catalog id or alias, e.g. delta");
    eta_opt->excludes(form_opt);
    expand_cmd->add_option("--terms", terms, "print coefficients a(0..terms)")->check(CLI::NonNegativeNumber);
    expand_cmd->add_option("--mod", mod_spec, "reduce modulo l or l^t, e.g. 5^1");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verify built-in or file-supplied congruence claims");
    std::string claim_file, format = "text";
    bool builtin = false, no_timing = false, dump = false;
    Selection sel;
    RunConfig config;
    verify_cmd->add_option("claims", claim_file, "JSON claim file");
    verify_cmd->add_flag("--builtin", builtin, "use the built-in claim tables");
    verify_cmd->add_option("--only", sel.only, "restrict to kinds: type1 type2 type1-power unit-factor type2-power raw")
        ->check(CLI::IsMember({"type1", "type2", "type1-power", "unit-factor", "type2-power", "raw"}));
    verify_cmd->add_option("--id", sel.ids, "restrict to claims whose id contains this text");
    verify_cmd->add_option("--prime-bound", config.prime_bound, "largest prime in prime scans (default 10000)");
    verify_cmd->add_option("--margin", config.precision_margin, "extra indices compared past the Sturm threshold");
    verify_cmd->add_option("--threads", config.threads, "worker threads (default ETAQ_THREADS or all cores)");
    verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--no-timing", no_timing, "omit timings so output is reproducible");
    verify_cmd->add_flag("--dump-claims", dump, "print the selected claims as a claim file and exit");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Search for exceptional primes of a form");
    std::string scan_form, scan_type = "II";
    std::int64_t ell_max = 40, scan_bound = 2000;
    scan_cmd->add_option("--form", scan_form, "catalog id, alias or eta spec")->required();
    scan_cmd->add_option("--type", scan_type, "I or II")->check(CLI::IsMember({"I", "II", "1", "2"}));
    scan_cmd->add_option("--ell-max", ell_max, "largest l to test");
    scan_cmd->add_option("--prime-bound", scan_bound, "largest prime p used as a witness (default 2000)");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in forms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*expand_cmd) {
            if (eta_spec.empty() && form_key.empty()) {
                err << "expand: give --eta or --form\n";
                return 2;
            }
            EtaQuotient eq = form_key.empty() ? parse_eta(eta_spec) : lookup(form_key).quotient;
            const std::size_t p = std::max<std::size_t>(terms, static_cast<std::size_t>(std::max<std::int64_t>(eq.leading_exponent(), 0)));
            if (mod_spec.empty()) {
                out << format_series(expand(eq, p, IntegerRing{}), terms) << "\n";
            } else {
                auto [ell, t] = parse_modulus(mod_spec);
                out << format_series(expand_mod(eq, p, ell, t), terms) << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            if (builtin == !claim_file.empty()) {
                err << "verify: give exactly one of --builtin or a claim file\n";
                return 2;
            }
            if (config.prime_bound < 50) {
                err << "verify: --prime-bound must be at least 50\n";
                return 2;
            }
            if (config.precision_margin < 0) {
                err << "verify: --margin must be non-negative\n";
                return 2;
            }
            const auto all = builtin ? builtin_claims() : load_claim_file(claim_file);
            const auto claims = select(all, sel);
            if (dump) {
                out << claims_to_json(claims).dump(2) << "\n";
                return 0;
            }
            if (claims.empty()) {
                err << "verify: no claims selected\n";
                return 2;
            }
            const auto reports = verify_all(claims, config);
            if (format == "json") out << reports_to_json(reports, !no_timing).dump(2) << "\n";
            else print_text_report(reports, !no_timing, out);
            for (const auto& r : reports)
                if (r.outcome != Outcome::Ok && r.outcome != Outcome::XFail) return 1;
            return 0;
        }

        if (*scan_cmd) {
            FormRef f = form_ref_from(find_form(scan_form) ? scan_form : "", find_form(scan_form) ? "" : scan_form);
            const ClaimKind kind = (scan_type == "I" || scan_type == "1") ? ClaimKind::TypeI : ClaimKind::TypeII;
            const ScanResult r = scan_exceptional(f, kind, ell_max, scan_bound);
            out << "form " << resolve_form(f).id << ", Type " << (kind == ClaimKind::TypeI ? "I" : "II")
                << ", l <= " << ell_max << ", p <= " << scan_bound << "\n";
            if (r.candidates.empty()) out << "no candidates\n";
            for (const auto& c : r.candidates)
                out << c.ell << "  witnesses=" << c.witnesses << "  " << c.detail << "\n";
            for (const auto& c : r.overlaps)
                out << "(" << c.ell << ")  witnesses=" << c.witnesses << "  " << c.detail << "\n";
            return 0;
        }

        if (*catalog_cmd) {
            for (const auto& e : catalog()) {
                out << std::left << std::setw(48) << e.id << " k=" << std::setw(3) << e.weight << " N=" << std::setw(4)
                    << e.level << " chi=" << std::setw(9) << e.nebentypus.to_string() << " claims=" << e.claims.size()
                    << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"etaq"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace etaq::cli
