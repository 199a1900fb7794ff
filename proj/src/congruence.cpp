#include "etaq/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>
#include <variant>

#include "etaq/arith.hpp"
#include "etaq/eisenstein.hpp"
#include "etaq/sturm.hpp"

namespace etaq {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "proved";
        case Verdict::Evidence: return "evidence";
        case Verdict::Failed: return "failed";
    }
    return "?";
}

std::string to_string(Rigor r) { return r == Rigor::SturmProved ? "sturm-proved" : "numerical-evidence"; }

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Ok: return "ok";
        case Outcome::XFail: return "xfail";
        case Outcome::XPass: return "xpass";
        case Outcome::UnexpectedFail: return "unexpected-fail";
    }
    return "?";
}

std::string to_string(Type2Branch b) {
    switch (b) {
        case Type2Branch::TwoKMinus1: return "two_k_minus_1";
        case Type2Branch::TwoKMinus3: return "two_k_minus_3";
        case Type2Branch::SmallEll: return "small_ell";
    }
    return "?";
}

ResolvedForm resolve_form(const FormRef& ref) {
    ResolvedForm r;
    if (!ref.key.empty()) {
        const CatalogEntry& e = lookup(ref.key);
        r.id = e.id;
        r.quotient = e.quotient;
        r.meta = FormMeta{e.weight, e.level, e.nebentypus, true};
    } else if (!ref.eta.empty()) {
        r.quotient = parse_eta(ref.eta);
        const CatalogEntry* e = find_form(ref.eta);
        r.id = e ? e->id : r.quotient.id();
        if (e && !ref.level && !ref.character) {
            r.quotient = e->quotient;
            r.meta = FormMeta{e->weight, e->level, e->nebentypus, true};
            return r;
        }
        r.meta = FormMeta{r.quotient.weight(), r.quotient.level, r.quotient.nebentypus, true};
    } else {
        throw std::invalid_argument("claim names no form");
    }
    if (ref.level) {
        r.meta.level = *ref.level;
        r.quotient.level = *ref.level;
    }
    if (ref.character) {
        r.meta.nebentypus = *ref.character;
        r.quotient.nebentypus = *ref.character;
    }
    return r;
}

namespace {

using Clock = std::chrono::steady_clock;

ModSeries placeholder() { return ModSeries(ResidueRing(2, 1), 0); }

ComparisonSides empty_sides() { return ComparisonSides{"", placeholder(), placeholder(), 0, 1, false, 0, true, true, {}}; }

std::size_t expansion_precision(std::int64_t threshold, std::int64_t margin, const EtaQuotient& eq) {
    std::int64_t p = threshold + std::max<std::int64_t>(margin, 0);
    return static_cast<std::size_t>(std::max({p, eq.leading_exponent(), std::int64_t{1}}));
}

/// Two forms mod l can be brought to a common weight when the gap is made up
/// of weights of Eisenstein series congruent to 1: E_{l-1} for l >= 5, and
/// E_4, E_6 for l = 2, 3. Weight 2 is also available for l = 2, 3 once l
/// divides the level: -(E_2 - 2E_2(2z)) = 1 mod 8 and
/// -(E_2 - 3E_2(3z))/2 = 1 mod 3 live on Gamma_0(l).
bool padding_compatible(std::int64_t ell, int gap, std::int64_t level) {
    if (gap == 0) return true;
    if (ell >= 5) return gap % (ell - 1) == 0;
    return gap % 2 == 0 && (gap != 2 || level % ell == 0);
}

void require_prime(std::int64_t ell) {
    if (!is_prime(ell)) throw std::invalid_argument("l = " + std::to_string(ell) + " is not prime");
}

VerificationReport base_report(const CongruenceClaim& claim, const std::string& form) {
    VerificationReport r;
    r.id = claim.id;
    r.kind = claim.kind;
    r.form = form;
    r.ell = claim.ell;
    r.t = claim.t;
    r.expected_fail = claim.expect_fail;
    return r;
}

std::string join_note(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "; " + b;
}

// Recipe evaluation. Eta bases go straight to ZZ/l^t; Eisenstein bases stay
// rational so that twist and theta can remove non-integral constants before
// reduction, and are reduced at the first product, power or scaling.
using Value = std::variant<QQSeries, ModSeries>;

ModSeries to_mod(const Value& v, const ResidueRing& ring) {
    if (const auto* m = std::get_if<ModSeries>(&v)) return *m;
    return reduce_mod(std::get<QQSeries>(v), ring.ell(), ring.exponent());
}

std::size_t base_precision(const SeriesRecipe& r, std::size_t out) {
    std::size_t p = out;
    for (const auto& op : r.ops)
        if (op.kind == RecipeOp::Kind::U) p *= static_cast<std::size_t>(op.arg);
    return p;
}

Value evaluate(const SeriesRecipe& r, std::size_t precision, const ResidueRing& ring) {
    const std::size_t p = base_precision(r, precision);
    Value v = [&]() -> Value {
        switch (r.base) {
            case SeriesRecipe::Base::Form:
            case SeriesRecipe::Base::Eta: {
                ResolvedForm f = resolve_form(r.form);
                return expand(f.quotient, std::max<std::size_t>(p, f.quotient.leading_exponent()), ring);
            }
            case SeriesRecipe::Base::G: return G_k(r.k, p);
            case SeriesRecipe::Base::E: return E_k(r.k, p);
            case SeriesRecipe::Base::E2: return E_2(p);
            case SeriesRecipe::Base::E2N: return E_2N(r.n, p);
            case SeriesRecipe::Base::F: return F_lt(r.ell, r.t, p);
            case SeriesRecipe::Base::One: return ModSeries::one(ring, p);
        }
        throw std::logic_error("unknown recipe base");
    }();
    for (const auto& op : r.ops) {
        switch (op.kind) {
            case RecipeOp::Kind::Twist:
                std::visit([&](auto& s) { s = twist(s, op.chi); }, v);
                break;
            case RecipeOp::Kind::Theta:
                std::visit([&](auto& s) { s = theta(s, static_cast<int>(op.arg)); }, v);
                break;
            case RecipeOp::Kind::U:
                std::visit([&](auto& s) { s = U(s, op.arg); }, v);
                break;
            case RecipeOp::Kind::V:
                std::visit([&](auto& s) { s = V(s, op.arg); }, v);
                break;
            case RecipeOp::Kind::Pow: v = pow(to_mod(v, ring), op.arg); break;
            case RecipeOp::Kind::Scale: v = scale(to_mod(v, ring), ring.from_rational(op.scalar)); break;
            case RecipeOp::Kind::Mul: {
                if (!op.factor) throw std::invalid_argument("mul op without a factor recipe");
                ModSeries a = to_mod(v, ring);
                ModSeries b = to_mod(evaluate(*op.factor, a.precision(), ring), ring);
                v = mul(a, b);
                break;
            }
        }
    }
    ModSeries out = to_mod(v, ring);
    return out.precision() > precision ? out.truncated(precision) : out;
}

std::uint64_t add_powers(std::uint64_t p, int m, int mp, std::uint64_t mod) {
    return (pow_mod(p, static_cast<std::uint64_t>(m), mod) + pow_mod(p, static_cast<std::uint64_t>(mp), mod)) % mod;
}

}  // namespace

ComparisonSides build_type1(const CongruenceClaim& claim, std::int64_t margin) {
    require_prime(claim.ell);
    if (claim.t != 1) throw std::invalid_argument("Type I claims are mod l (t = 1)");
    if (claim.m < 0 || claim.m >= claim.m_prime)
        throw std::invalid_argument("Type I claims need 0 <= m < m'");
    const ResolvedForm f = resolve_form(claim.form);
    const std::int64_t ell = claim.ell;
    const std::int64_t n = f.meta.level;
    const int k = f.meta.weight;
    const auto one_n = RealDirichletCharacter::trivial(n);
    const auto psi_n = product(claim.psi, one_n);
    const int w = claim.m_prime - claim.m + 1;

    ComparisonSides s = empty_sides();
    s.form = f.id;

    // Eisenstein factor G: weight, level and constructor.
    int g_weight = 0;
    std::int64_t g_level = 1;
    std::string g_name;
    if (w >= 3 && w <= ell - 2) {
        g_weight = w;
        g_name = "G_" + std::to_string(w);
    } else if (w == 2 && n >= 2) {
        g_weight = 2;
        g_level = n;
        g_name = "E_{2," + std::to_string(n) + "}";
    } else if (w == 2) {
        g_weight = static_cast<int>(ell + 1);
        g_name = "G_" + std::to_string(ell + 1);
    } else if (w == ell - 1 && ell >= 5) {
        // G_{l+1} is congruent to the weight-2 series, not to G_{l-1}; the
        // weight l-1 divisor sum is what the coefficient identity needs.
        g_weight = w;
        g_name = "G_" + std::to_string(w);
    } else {
        throw std::invalid_argument("no Eisenstein series for m' - m + 1 = " + std::to_string(w) + " at l = " +
                                    std::to_string(ell));
    }
    if (g_weight != 2 && (g_weight < 4 || g_weight % 2 != 0))
        throw std::invalid_argument("Eisenstein weight " + std::to_string(g_weight) + " is not an even integer >= 4");

    const FormMeta lhs_meta{k, twist_level(n, one_n), f.meta.nebentypus, true};
    const FormMeta rhs_meta{g_weight, twist_level(g_level, psi_n), RealDirichletCharacter(), false};
    const ThetaWeightRule lr = theta_weight_rule(ell, 1, 1, lhs_meta);
    const ThetaWeightRule rr = theta_weight_rule(ell, 1, claim.m + 1, rhs_meta);
    s.weight = std::max(lr.weight, rr.weight);
    s.level = checked_lcm(lr.level, rr.level);
    s.cuspidal = false;
    s.exact_theta = lr.exact && rr.exact;
    s.weights_compatible = padding_compatible(ell, std::abs(lr.weight - rr.weight), s.level);
    s.threshold = sturm_threshold(s.weight, s.level, s.cuspidal);

    const std::size_t p = expansion_precision(s.threshold, margin, f.quotient);
    s.lhs = theta(twist(expand_mod(f.quotient, p, ell, 1), one_n), 1);
    QQSeries g = w == 2 && n >= 2 ? E_2N(n, p) : G_k(g_weight, p);
    s.rhs = reduce_mod(theta(twist(g, psi_n), claim.m + 1), ell, 1);

    s.note = "G = " + g_name;
    if (ell > 2 && ((claim.m + claim.m_prime - (k - 1)) % (ell - 1) + (ell - 1)) % (ell - 1) != 0)
        s.note = join_note(s.note, "m + m' is not k - 1 mod l - 1");
    if (!s.weights_compatible)
        s.note = join_note(s.note, "weights " + std::to_string(lr.weight) + " and " + std::to_string(rr.weight) +
                                       " cannot be padded to a common weight");
    if (n % ell == 0) s.note = join_note(s.note, "l divides the level");
    return s;
}

ComparisonSides build_type2(const CongruenceClaim& claim, std::int64_t margin) {
    require_prime(claim.ell);
    if (claim.ell == 2) throw std::invalid_argument("Type II claims need odd l");
    if (claim.t != 1) throw std::invalid_argument("Type II claims are mod l (t = 1)");
    const ResolvedForm f = resolve_form(claim.form);
    const std::int64_t ell = claim.ell;
    const std::int64_t n = f.meta.level;
    const auto one_n = RealDirichletCharacter::trivial(n);
    const int j = static_cast<int>((ell + 1) / 2);

    ComparisonSides s = empty_sides();
    s.form = f.id;
    const FormMeta base{f.meta.weight, twist_level(n, one_n), f.meta.nebentypus, true};
    const ThetaWeightRule lr = theta_weight_rule(ell, 1, j, base);
    const ThetaWeightRule rr = theta_weight_rule(ell, 1, 1, base);
    s.weight = std::max(lr.weight, rr.weight);
    s.level = checked_lcm(lr.level, rr.level);
    s.cuspidal = true;
    s.exact_theta = lr.exact && rr.exact;
    s.weights_compatible = padding_compatible(ell, std::abs(lr.weight - rr.weight), s.level);
    s.threshold = sturm_threshold(s.weight, s.level, s.cuspidal);

    const std::size_t p = expansion_precision(s.threshold, margin, f.quotient);
    const ModSeries g = twist(expand_mod(f.quotient, p, ell, 1), one_n);
    s.lhs = theta(g, j);
    s.rhs = theta(g, 1);
    if (!s.weights_compatible) s.note = "weights cannot be padded to a common weight";
    if (n % ell == 0) s.note = join_note(s.note, "l divides the level");
    return s;
}

ComparisonSides build_type2_power(const CongruenceClaim& claim, std::int64_t margin) {
    require_prime(claim.ell);
    if (claim.ell == 2) throw std::invalid_argument("twist-power claims need odd l");
    if (claim.a < 1) throw std::invalid_argument("twist-power exponent a must be >= 1");
    const ResolvedForm f = resolve_form(claim.form);
    const std::int64_t ell = claim.ell;
    const std::int64_t n = f.meta.level;
    const std::int64_t star = ell % 4 == 1 ? ell : -ell;

    ComparisonSides s = empty_sides();
    s.form = f.id;
    s.weight = f.meta.weight;
    s.level = checked_lcm(n, ell * ell) * n;
    s.cuspidal = true;
    s.threshold = sturm_threshold(s.weight, s.level, s.cuspidal);
    const std::size_t p = expansion_precision(s.threshold, margin, f.quotient);
    const ModSeries g = expand_mod(f.quotient, p, ell, claim.a);
    s.lhs = twist(g, RealDirichletCharacter::trivial(ell));
    s.rhs = twist(g, RealDirichletCharacter::kron(star));
    return s;
}

ComparisonSides build_raw(const CongruenceClaim& claim, std::int64_t margin) {
    if (!claim.lhs || !claim.rhs) throw std::invalid_argument("raw claim needs lhs and rhs recipes");
    if (claim.weight < 1 || claim.level < 1) throw std::invalid_argument("raw claim needs weight >= 1 and level >= 1");
    const ResidueRing ring(claim.ell, claim.t);
    ComparisonSides s = empty_sides();
    if (!claim.form.key.empty() || !claim.form.eta.empty()) s.form = resolve_form(claim.form).id;
    s.weight = claim.weight;
    s.level = claim.level;
    s.cuspidal = claim.cuspidal;
    s.threshold = sturm_threshold(s.weight, s.level, s.cuspidal);
    const std::size_t p = static_cast<std::size_t>(std::max<std::int64_t>(s.threshold + std::max<std::int64_t>(margin, 0), 1));
    s.lhs = to_mod(evaluate(*claim.lhs, p, ring), ring);
    s.rhs = to_mod(evaluate(*claim.rhs, p, ring), ring);
    return s;
}

VerificationReport compare_sides(const CongruenceClaim& claim, const ComparisonSides& s, bool sturm_rigorous) {
    VerificationReport r = base_report(claim, s.form);
    r.threshold = s.threshold;
    r.weight = s.weight;
    r.level = s.level;
    r.note = s.note;
    const std::size_t common = std::min(s.lhs.precision(), s.rhs.precision());
    if (common < static_cast<std::size_t>(s.threshold))
        throw std::logic_error("series precision " + std::to_string(common) + " is below the threshold " +
                               std::to_string(s.threshold));
    auto diff = first_difference(s.lhs, s.rhs);
    r.rigor = sturm_rigorous ? Rigor::SturmProved : Rigor::NumericalEvidence;
    if (diff) {
        r.verdict = Verdict::Failed;
        r.first_failure = static_cast<std::int64_t>(*diff);
    } else {
        r.verdict = sturm_rigorous ? Verdict::Proved : Verdict::Evidence;
    }
    return r;
}

VerificationReport verify_type1(const CongruenceClaim& claim, std::int64_t margin) {
    ComparisonSides s = build_type1(claim, margin);
    const ResolvedForm f = resolve_form(claim.form);
    const bool rigorous = s.weights_compatible && f.meta.level % claim.ell != 0;
    VerificationReport r = compare_sides(claim, s, rigorous);
    r.theta_rule = s.exact_theta ? "exact" : "conservative";
    return r;
}

VerificationReport verify_type2(const CongruenceClaim& claim, std::int64_t margin) {
    ComparisonSides s = build_type2(claim, margin);
    const ResolvedForm f = resolve_form(claim.form);
    const bool rigorous = s.weights_compatible && f.meta.level % claim.ell != 0;
    VerificationReport r = compare_sides(claim, s, rigorous);
    r.theta_rule = s.exact_theta ? "exact" : "conservative";
    return r;
}

VerificationReport verify_type2_prime_power(const CongruenceClaim& claim, std::int64_t margin) {
    ComparisonSides s = build_type2_power(claim, margin);
    VerificationReport r = compare_sides(claim, s, true);
    r.t = claim.a;
    return r;
}

VerificationReport verify_raw(const CongruenceClaim& claim, std::int64_t margin) {
    return compare_sides(claim, build_raw(claim, margin), true);
}

namespace {

VerificationReport prime_scan(const CongruenceClaim& claim, std::int64_t prime_bound, const std::vector<UnitClass>& groups,
                              bool all_classes) {
    if (prime_bound < 50) throw std::invalid_argument("prime_bound must be at least 50");
    require_prime(claim.ell);
    if (claim.m < 0 || claim.m_prime < 0) throw std::invalid_argument("exponents m, m' must be non-negative");
    if (claim.modulus_d < 1) throw std::invalid_argument("class modulus d must be positive");
    const ResolvedForm f = resolve_form(claim.form);
    int t_max = 1;
    for (const auto& g : groups) t_max = std::max(t_max, g.t);
    const ResidueRing ring(claim.ell, t_max);
    const ModSeries a = expand(f.quotient, static_cast<std::size_t>(prime_bound), ring);

    VerificationReport r = base_report(claim, f.id);
    r.t = t_max;
    r.prime_bound = prime_bound;
    r.rigor = Rigor::NumericalEvidence;
    r.verdict = Verdict::Evidence;
    const std::int64_t bad = f.meta.level * claim.ell;
    std::int64_t checked = 0;
    for (std::int64_t p : primes_below(prime_bound)) {
        if (bad % p == 0) continue;
        const std::int64_t cls = p % claim.modulus_d;
        for (const auto& g : groups) {
            if (!all_classes && std::find(g.classes.begin(), g.classes.end(), cls) == g.classes.end()) continue;
            const std::uint64_t mod = static_cast<std::uint64_t>(checked_pow(claim.ell, g.t));
            const std::uint64_t rhs = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(ResidueRing(claim.ell, g.t).from_int(g.u)) *
                add_powers(static_cast<std::uint64_t>(p), claim.m, claim.m_prime, mod) % mod);
            ++checked;
            if (a[static_cast<std::size_t>(p)] % mod != rhs) {
                r.verdict = Verdict::Failed;
                r.first_failure = p;
                r.note = "a(" + std::to_string(p) + ") = " + std::to_string(a[static_cast<std::size_t>(p)] % mod) +
                         ", expected " + std::to_string(rhs) + " mod " + std::to_string(mod);
                return r;
            }
        }
    }
    if (checked == 0) throw std::invalid_argument("no prime below the bound falls in the claimed classes");
    r.note = std::to_string(checked) + " primes checked";
    return r;
}

}  // namespace

VerificationReport verify_type1_prime_power(const CongruenceClaim& claim, std::int64_t prime_bound) {
    if (claim.t < 1) throw std::invalid_argument("t must be >= 1");
    for (auto b : claim.classes)
        if (b < 0 || b >= claim.modulus_d) throw std::invalid_argument("residue class out of range");
    std::vector<UnitClass> groups{UnitClass{claim.classes, 1, claim.t}};
    VerificationReport r = prime_scan(claim, prime_bound, groups, claim.classes.empty());
    const std::int64_t phi = euler_phi(checked_pow(claim.ell, claim.t));
    const int k = resolve_form(claim.form).meta.weight;
    if (((claim.m + claim.m_prime - (k - 1)) % phi + phi) % phi != 0)
        r.note = join_note(r.note, "m + m' is not k - 1 mod phi(l^t)");
    return r;
}

VerificationReport verify_unit_factor(const CongruenceClaim& claim, std::int64_t prime_bound) {
    if (claim.units.empty()) throw std::invalid_argument("unit-factor claim lists no residue class");
    for (const auto& g : claim.units) {
        if (g.classes.empty()) throw std::invalid_argument("unit-factor group without classes");
        if (g.t < 1) throw std::invalid_argument("unit-factor modulus exponent must be >= 1");
    }
    return prime_scan(claim, prime_bound, claim.units, false);
}

VerificationReport verify(const CongruenceClaim& claim, const RunConfig& config) {
    const auto start = Clock::now();
    const std::int64_t bound = claim.prime_bound.value_or(config.prime_bound);
    const std::int64_t margin = config.precision_margin;
    VerificationReport r;
    switch (claim.kind) {
        case ClaimKind::TypeI: r = verify_type1(claim, margin); break;
        case ClaimKind::TypeII: r = verify_type2(claim, margin); break;
        case ClaimKind::TypeIPrimePower: r = verify_type1_prime_power(claim, bound); break;
        case ClaimKind::UnitFactor: r = verify_unit_factor(claim, bound); break;
        case ClaimKind::TypeIITwistPower: r = verify_type2_prime_power(claim, margin); break;
        case ClaimKind::RawSeries: r = verify_raw(claim, margin); break;
    }
    const bool failed = r.verdict == Verdict::Failed;
    r.expected_fail = claim.expect_fail;
    if (claim.expect_fail) r.outcome = failed ? Outcome::XFail : Outcome::XPass;
    else r.outcome = failed ? Outcome::UnexpectedFail : Outcome::Ok;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

unsigned effective_threads(const RunConfig& config) {
    if (config.threads > 0) return config.threads;
    if (const char* env = std::getenv("ETAQ_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> verify_all(const std::vector<CongruenceClaim>& claims, const RunConfig& config) {
    std::vector<VerificationReport> reports(claims.size());
    std::vector<std::exception_ptr> errors(claims.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < claims.size();) {
            try {
                reports[i] = verify(claims[i], config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::min<unsigned>(effective_threads(config), std::max<std::size_t>(claims.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < claims.size(); ++i) {
        if (!errors[i]) continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const std::exception& e) {
            throw std::invalid_argument("claim '" + claims[i].id + "': " + e.what());
        }
    }
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return reports;
}

Type2Classification classify_type2_prime(const FormRef& form, std::int64_t ell) {
    require_prime(ell);
    const ResolvedForm f = resolve_form(form);
    Type2Classification c;
    const int k = f.meta.weight;
    if (ell < k) {
        c.branch = Type2Branch::SmallEll;
        c.consistent = true;
        return c;
    }
    const std::int64_t level = f.meta.level % ell == 0 ? f.meta.level : f.meta.level * ell;
    c.threshold = sturm_threshold(k, level, true);
    const std::size_t p = static_cast<std::size_t>(ell * std::max<std::int64_t>(c.threshold, 1));
    const ModSeries g = U(expand_mod(f.quotient, std::max<std::size_t>(p, f.quotient.leading_exponent()), ell, 1), ell);
    for (std::int64_t n = 0; n <= c.threshold; ++n)
        if (g[static_cast<std::size_t>(n)] != 0) {
            c.first_nonzero = n;
            break;
        }
    c.branch = c.first_nonzero ? Type2Branch::TwoKMinus1 : Type2Branch::TwoKMinus3;
    c.consistent = c.first_nonzero ? ell == 2 * k - 1 : ell == 2 * k - 3;
    return c;
}

namespace {

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 1 || d == 0) return false;
    auto squarefree = [](std::int64_t x) {
        for (auto [p, e] : factor(std::abs(x)))
            if (e > 1) return false;
        return true;
    };
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return squarefree(d);
    if (r != 0) return false;
    const std::int64_t m = d / 4;
    const std::int64_t rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
}

struct PrimeData {
    std::int64_t p;
    std::int64_t a_mod;  // a(p) mod l
    int chi;
};

/// First (m, m', d) satisfying the Type I conditions at l, if any.
std::optional<std::string> type1_match(const std::vector<PrimeData>& primes, std::int64_t ell, int k,
                                       const std::vector<std::int64_t>& discs) {
    if (primes.empty()) return std::nullopt;
    const std::int64_t e = ell - 1;  // exponents of units mod l live mod l - 1
    const int m_max = static_cast<int>(std::max<std::int64_t>(ell - 2, 1));
    // powers[i][x] = p_i^x mod l for x < l - 1
    std::vector<std::vector<std::int64_t>> powers(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        powers[i].resize(static_cast<std::size_t>(std::max<std::int64_t>(e, 1)));
        std::int64_t v = 1 % ell;
        for (std::int64_t x = 0; x < std::max<std::int64_t>(e, 1); ++x) {
            powers[i][static_cast<std::size_t>(x)] = v;
            v = v * (primes[i].p % ell) % ell;
        }
    }
    auto pw = [&](std::size_t i, std::int64_t x) { return powers[i][static_cast<std::size_t>(((x % e) + e) % e)]; };
    std::vector<std::vector<int>> kron_vals(discs.size(), std::vector<int>(primes.size()));
    for (std::size_t di = 0; di < discs.size(); ++di)
        for (std::size_t i = 0; i < primes.size(); ++i) kron_vals[di][i] = kronecker(discs[di], primes[i].p);

    for (int mp = 1; mp <= m_max; ++mp)
        for (int m = 0; m < mp; ++m)
            for (std::size_t di = 0; di < discs.size(); ++di) {
                bool ok = true;
                for (std::size_t i = 0; i < primes.size() && ok; ++i) {
                    const std::int64_t psi = kron_vals[di][i];
                    const std::int64_t sum = (pw(i, m) + pw(i, mp)) % ell;
                    const std::int64_t want = ((psi * sum) % ell + ell) % ell;
                    if (primes[i].a_mod != want) ok = false;
                    const std::int64_t det = pw(i, m + mp);
                    const std::int64_t rhs = ((primes[i].chi * pw(i, k - 1)) % ell + ell) % ell;
                    if (det != rhs) ok = false;
                }
                if (ok) {
                    std::string psi = discs[di] == 1 ? "1_N" : "1_N*kron(" + std::to_string(discs[di]) + ")";
                    return "m=" + std::to_string(m) + " m'=" + std::to_string(mp) + " psi=" + psi;
                }
            }
    return std::nullopt;
}

}  // namespace

ScanResult scan_exceptional(const FormRef& form, ClaimKind kind, std::int64_t ell_max, std::int64_t prime_bound) {
    if (ell_max < 2 || prime_bound < 2) throw std::invalid_argument("scan bounds must be at least 2");
    if (kind != ClaimKind::TypeI && kind != ClaimKind::TypeII)
        throw std::invalid_argument("scan supports Type I and Type II only");
    const ResolvedForm f = resolve_form(form);
    const std::int64_t n = f.meta.level;
    const int k = f.meta.weight;
    const ZSeries a = expand(f.quotient, static_cast<std::size_t>(prime_bound), IntegerRing{});
    const auto primes = primes_below(prime_bound);

    std::vector<std::int64_t> discs{1};
    for (std::int64_t d : divisors(n))
        for (std::int64_t s : {d, -d})
            if (is_fundamental_discriminant(s)) discs.push_back(s);

    auto prime_data = [&](std::int64_t ell) {
        std::vector<PrimeData> out;
        for (std::int64_t p : primes) {
            if ((n * ell) % p == 0) continue;
            const std::int64_t am = static_cast<std::int64_t>(
                mpz_fdiv_ui(a[static_cast<std::size_t>(p)].get_mpz_t(), static_cast<unsigned long>(ell)));
            out.push_back({p, am, f.meta.nebentypus(p)});
        }
        return out;
    };

    ScanResult result;
    for (std::int64_t ell : primes_below(ell_max)) {
        const auto pd = prime_data(ell);
        if (kind == ClaimKind::TypeI) {
            if (auto m = type1_match(pd, ell, k, discs))
                result.candidates.push_back({ell, static_cast<std::int64_t>(pd.size()), *m});
            continue;
        }
        if (ell == 2) continue;
        std::int64_t witnesses = 0;
        bool ok = true;
        for (const auto& d : pd) {
            if (kronecker(d.p, ell) != -1) continue;
            if (d.a_mod != 0) {
                ok = false;
                break;
            }
            ++witnesses;
        }
        if (!ok || witnesses == 0) continue;
        if (n % ell != 0) {
            if (auto m = type1_match(pd, ell, k, discs)) {
                result.overlaps.push_back({ell, witnesses, "also Type I: " + *m});
                continue;
            }
        }
        result.candidates.push_back({ell, witnesses, "a(p) = 0 for all (p/l) = -1"});
    }
    return result;
}

}  // namespace etaq
