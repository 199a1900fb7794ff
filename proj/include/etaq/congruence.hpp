#pragma once

// Verification engine: builds both sides of a claim in ZZ/l^t, compares
// them up to a Sturm threshold or over a prime scan, and reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etaq/claims.hpp"
#include "etaq/etaq.hpp"
#include "etaq/operators.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

enum class Verdict { Proved, Evidence, Failed };
enum class Rigor { SturmProved, NumericalEvidence };
enum class Outcome { Ok, XFail, XPass, UnexpectedFail };

std::string to_string(Verdict v);
std::string to_string(Rigor r);
std::string to_string(Outcome o);

struct VerificationReport {
    std::string id;
    ClaimKind kind = ClaimKind::TypeI;
    std::string form;
    std::int64_t ell = 0;
    int t = 1;
    Verdict verdict = Verdict::Failed;
    Rigor rigor = Rigor::NumericalEvidence;
    std::string theta_rule = "none";  // "exact", "conservative" or "none"
    std::optional<std::int64_t> threshold;
    std::optional<std::int64_t> prime_bound;
    std::optional<int> weight;
    std::optional<std::int64_t> level;
    std::optional<std::int64_t> first_failure;  // index, or prime for scans
    bool expected_fail = false;
    Outcome outcome = Outcome::UnexpectedFail;
    std::string note;
    double elapsed_ms = 0;
};

struct RunConfig {
    std::int64_t prime_bound = 10000;
    std::int64_t precision_margin = 0;
    /// 0 picks ETAQ_THREADS or the hardware concurrency.
    unsigned threads = 0;
};

/// A catalog or inline form with its metadata.
struct ResolvedForm {
    std::string id;
    EtaQuotient quotient;
    FormMeta meta;
};

ResolvedForm resolve_form(const FormRef& ref);

/// Both sides of a threshold comparison with their bookkeeping.
struct ComparisonSides {
    std::string form;
    ModSeries lhs;
    ModSeries rhs;
    int weight = 0;
    std::int64_t level = 1;
    bool cuspidal = false;
    std::int64_t threshold = 0;
    bool exact_theta = true;
    bool weights_compatible = true;
    std::string note;
};

/// Sides of theta(f (x) 1_N) == theta^{m+1}(G (x) psi 1_N) mod l, expanded
/// to threshold + margin.
ComparisonSides build_type1(const CongruenceClaim& claim, std::int64_t margin = 0);
/// Sides of theta^{(l+1)/2}(f (x) 1_N) == theta(f (x) 1_N) mod l.
ComparisonSides build_type2(const CongruenceClaim& claim, std::int64_t margin = 0);
/// Sides of f (x) 1_l == f (x) (./l) mod l^a.
ComparisonSides build_type2_power(const CongruenceClaim& claim, std::int64_t margin = 0);
/// Both recipes of a raw claim, evaluated mod l^t.
ComparisonSides build_raw(const CongruenceClaim& claim, std::int64_t margin = 0);

/// Compares sides up to their common precision and fills the verdict.
VerificationReport compare_sides(const CongruenceClaim& claim, const ComparisonSides& sides, bool sturm_rigorous);

VerificationReport verify_type1(const CongruenceClaim& claim, std::int64_t margin = 0);
VerificationReport verify_type2(const CongruenceClaim& claim, std::int64_t margin = 0);
VerificationReport verify_type1_prime_power(const CongruenceClaim& claim, std::int64_t prime_bound);
VerificationReport verify_unit_factor(const CongruenceClaim& claim, std::int64_t prime_bound);
VerificationReport verify_type2_prime_power(const CongruenceClaim& claim, std::int64_t margin = 0);
VerificationReport verify_raw(const CongruenceClaim& claim, std::int64_t margin = 0);

/// Dispatches on claim.kind, times the run and fills expected/outcome.
VerificationReport verify(const CongruenceClaim& claim, const RunConfig& config);

/// Runs claims on a worker pool; reports come back sorted by id. An
/// exception from any claim is rethrown after all workers finish.
std::vector<VerificationReport> verify_all(const std::vector<CongruenceClaim>& claims, const RunConfig& config);

unsigned effective_threads(const RunConfig& config);

enum class Type2Branch { TwoKMinus1, TwoKMinus3, SmallEll };
std::string to_string(Type2Branch b);

struct Type2Classification {
    Type2Branch branch = Type2Branch::SmallEll;
    /// The branch agrees with l = 2k-1 or l = 2k-3 respectively.
    bool consistent = true;
    std::int64_t threshold = 0;
    /// First n with (f|U_l)(n) != 0 mod l, if any.
    std::optional<std::int64_t> first_nonzero;
};

/// l < k gives SmallEll. Otherwise f|U_l mod l is computed up to the Sturm
/// threshold of weight k on Gamma_0(N l) (N when l | N) and the branch is
/// read off from whether it vanishes.
Type2Classification classify_type2_prime(const FormRef& form, std::int64_t ell);

struct ScanCandidate {
    std::int64_t ell = 0;
    /// Primes p that were tested and satisfied the condition.
    std::int64_t witnesses = 0;
    std::string detail;
};

struct ScanResult {
    std::vector<ScanCandidate> candidates;
    /// Type II: primes l not dividing N that pass the test but are also
    /// Type I; their vanishing is explained by the Eisenstein congruence.
    std::vector<ScanCandidate> overlaps;
};

/// kind is TypeI or TypeII. Type I searches psi = 1_N (d/.) for d = 1 or a
/// fundamental discriminant dividing N, and 0 <= m < m' <= max(l-2, 1),
/// requiring a(p) == psi(p)(p^m + p^m') and p^{m+m'} == chi(p) p^{k-1}
/// mod l for every prime p <= prime_bound with p not dividing N l.
ScanResult scan_exceptional(const FormRef& form, ClaimKind kind, std::int64_t ell_max, std::int64_t prime_bound);

}  // namespace etaq
