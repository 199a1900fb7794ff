#pragma once

// Eta-quotients prod_delta eta(delta z)^{r_delta} and the built-in catalog of
// eta-quotient newforms.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "etaq/characters.hpp"
#include "etaq/claims.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

struct EtaQuotient {
    std::map<std::int64_t, std::int64_t> exponents;  // delta -> r_delta, r_delta != 0
    std::int64_t level = 1;
    RealDirichletCharacter nebentypus;

    /// sum of delta * r_delta.
    std::int64_t order_numerator() const;
    /// sum of r_delta, i.e. twice the weight.
    std::int64_t twice_weight() const;
    /// Throws std::invalid_argument for half-integral weight.
    int weight() const;
    /// s / 24; throws std::invalid_argument unless 24 | s.
    std::int64_t leading_exponent() const;
    /// Canonical id such as "eta1^4 eta5^4" or "eta12^12/(eta6^4 eta24^4)".
    std::string id() const;
    /// "1:2,11:2" form accepted by parse_eta.
    std::string spec() const;
};

/// Parses "delta:exponent" pairs separated by commas. The level defaults to
/// the lcm of the deltas and the nebentypus to the trivial character of
/// that level. Throws std::invalid_argument on malformed input.
EtaQuotient parse_eta(std::string_view spec);

namespace detail {

/// Nonzero terms (exponent, coefficient) of a sparse series with constant
/// term 1.
using SparseTerms = std::vector<std::pair<std::size_t, std::int64_t>>;

/// prod (1 - q^{delta n}) via Euler's pentagonal theorem, up to q^P.
SparseTerms pentagonal_terms(std::int64_t delta, std::size_t precision);
/// prod (1 - q^{delta n})^3 via Jacobi's identity, up to q^P.
SparseTerms jacobi_terms(std::int64_t delta, std::size_t precision);

/// c <- c * s (multiply) or c <- c / s (divide), in place; s[0] must be 1.
template <CoefficientRing R>
void apply_sparse(std::vector<typename R::value_type>& c, const SparseTerms& s, bool divide, const R& ring) {
    const std::size_t p = c.size() - 1;
    if constexpr (std::is_same_v<R, ResidueRing>) {
        const std::uint64_t mod = ring.modulus();
        if (mod < (std::uint64_t{1} << 31)) {
            const std::int64_t m = static_cast<std::int64_t>(mod);
            auto step = [&](std::size_t n) {
                std::int64_t acc = 0;
                for (std::size_t j = 1; j < s.size() && s[j].first <= n; ++j)
                    acc += s[j].second * static_cast<std::int64_t>(c[n - s[j].first]);
                acc %= m;
                if (divide) acc = -acc;
                std::int64_t v = (static_cast<std::int64_t>(c[n]) + acc) % m;
                c[n] = static_cast<std::uint64_t>(v < 0 ? v + m : v);
            };
            if (divide)
                for (std::size_t n = 0; n <= p; ++n) step(n);
            else
                for (std::size_t n = p + 1; n-- > 0;) step(n);
            return;
        }
    }
    std::vector<typename R::value_type> sc;
    sc.reserve(s.size());
    for (auto [e, v] : s) sc.push_back(ring.from_integer(mpz_class(static_cast<long>(v))));
    auto step = [&](std::size_t n) {
        auto acc = ring.zero();
        for (std::size_t j = 1; j < s.size() && s[j].first <= n; ++j)
            acc = ring.add(acc, ring.mul(sc[j], c[n - s[j].first]));
        c[n] = divide ? ring.sub(c[n], acc) : ring.add(c[n], acc);
    };
    if (divide)
        for (std::size_t n = 0; n <= p; ++n) step(n);
    else
        for (std::size_t n = p + 1; n-- > 0;) step(n);
}

}  // namespace detail

/// q-expansion of an eta-quotient to precision P over the given ring.
///
/// Each eta(delta z)^r is applied as |r| / 3 sparse Jacobi cubes and
/// |r| mod 3 sparse pentagonal factors, multiplied or divided in place, so
/// the cost is O(P * sqrt(P) * sum |r|) with no dense products.
template <CoefficientRing R>
QSeries<R> expand(const EtaQuotient& eq, std::size_t precision, R ring) {
    const std::int64_t lead = eq.leading_exponent();
    if (lead < 0 || static_cast<std::size_t>(lead) > precision)
        throw std::invalid_argument("precision " + std::to_string(precision) + " is below the leading exponent " +
                                    std::to_string(lead) + " of " + eq.id());
    const std::size_t p = precision - static_cast<std::size_t>(lead);
    std::vector<typename R::value_type> c(p + 1, ring.zero());
    c[0] = ring.one();
    for (auto [delta, r] : eq.exponents) {
        const bool divide = r < 0;
        const std::int64_t a = r < 0 ? -r : r;
        if (a >= 3) {
            auto cube = detail::jacobi_terms(delta, p);
            for (std::int64_t i = 0; i < a / 3; ++i) detail::apply_sparse(c, cube, divide, ring);
        }
        if (a % 3 != 0) {
            auto pent = detail::pentagonal_terms(delta, p);
            for (std::int64_t i = 0; i < a % 3; ++i) detail::apply_sparse(c, pent, divide, ring);
        }
    }
    std::vector<typename R::value_type> out(precision + 1, ring.zero());
    for (std::size_t i = 0; i <= p; ++i) out[i + static_cast<std::size_t>(lead)] = std::move(c[i]);
    return QSeries<R>(std::move(ring), std::move(out));
}

/// Expansion directly in ZZ/l^t, never touching big integers.
ModSeries expand_mod(const EtaQuotient& eq, std::size_t precision, std::int64_t ell, int t);

struct CatalogEntry {
    std::string id;
    std::vector<std::string> aliases;
    EtaQuotient quotient;
    int weight = 0;
    std::int64_t level = 1;
    RealDirichletCharacter nebentypus;
    /// Built-in claims whose form is this entry.
    std::vector<CongruenceClaim> claims;
};

const std::vector<CatalogEntry>& catalog();

/// Finds an entry by id, alias, or eta spec ("1:24"). Whitespace in ids is
/// normalised. Returns nullptr if nothing matches.
const CatalogEntry* find_form(std::string_view key);

/// As find_form, but throws std::invalid_argument naming the key.
const CatalogEntry& lookup(std::string_view key);

/// Every claim from the built-in tables, including expected-fail probes.
const std::vector<CongruenceClaim>& builtin_claims();

}  // namespace etaq
