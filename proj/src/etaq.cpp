#include "etaq/etaq.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "etaq/arith.hpp"

namespace etaq {

std::int64_t EtaQuotient::order_numerator() const {
    std::int64_t s = 0;
    for (auto [d, r] : exponents) s += d * r;
    return s;
}

std::int64_t EtaQuotient::twice_weight() const {
    std::int64_t s = 0;
    for (auto [d, r] : exponents) s += r;
    return s;
}

int EtaQuotient::weight() const {
    std::int64_t w = twice_weight();
    if (w % 2 != 0) throw std::invalid_argument(id() + " has half-integral weight");
    return static_cast<int>(w / 2);
}

std::int64_t EtaQuotient::leading_exponent() const {
    std::int64_t s = order_numerator();
    if (s % 24 != 0) throw std::invalid_argument("exponent sum not divisible by 24 (sum delta*r = " + std::to_string(s) + ")");
    return s / 24;
}

std::string EtaQuotient::id() const {
    auto term = [](std::int64_t d, std::int64_t r) {
        std::string t = "eta" + std::to_string(d);
        if (r != 1) t += "^" + std::to_string(r);
        return t;
    };
    std::string num, den;
    for (auto [d, r] : exponents) {
        std::string& dst = r > 0 ? num : den;
        if (!dst.empty()) dst += ' ';
        dst += term(d, r > 0 ? r : -r);
    }
    if (num.empty()) num = "1";
    return den.empty() ? num : num + "/(" + den + ")";
}

std::string EtaQuotient::spec() const {
    std::string s;
    for (auto [d, r] : exponents) {
        if (!s.empty()) s += ',';
        s += std::to_string(d) + ":" + std::to_string(r);
    }
    return s;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw std::invalid_argument("malformed eta spec '" + std::string(whole) + "'");
    return v;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out.push_back(c);
    return out;
}

}  // namespace

EtaQuotient parse_eta(std::string_view spec) {
    std::string s = strip_spaces(spec);
    if (s.empty()) throw std::invalid_argument("empty eta spec");
    EtaQuotient eq;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = std::string_view(s).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t colon = tok.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("malformed eta spec '" + std::string(spec) + "'");
        std::int64_t d = parse_int(tok.substr(0, colon), spec);
        std::int64_t r = parse_int(tok.substr(colon + 1), spec);
        if (d < 1) throw std::invalid_argument("eta spec '" + std::string(spec) + "': delta must be positive");
        eq.exponents[d] += r;
        if (eq.exponents[d] == 0) eq.exponents.erase(d);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (eq.exponents.empty()) throw std::invalid_argument("eta spec '" + std::string(spec) + "' has no nonzero exponent");
    eq.level = 1;
    for (auto [d, r] : eq.exponents) eq.level = checked_lcm(eq.level, d);
    eq.nebentypus = RealDirichletCharacter::trivial(eq.level);
    return eq;
}

namespace detail {

SparseTerms pentagonal_terms(std::int64_t delta, std::size_t precision) {
    SparseTerms out{{0, 1}};
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        const std::uint64_t e1 = static_cast<std::uint64_t>(delta) * static_cast<std::uint64_t>(k * (3 * k - 1) / 2);
        const std::uint64_t e2 = static_cast<std::uint64_t>(delta) * static_cast<std::uint64_t>(k * (3 * k + 1) / 2);
        if (e1 > precision) break;
        out.emplace_back(e1, sign);
        if (e2 <= precision) out.emplace_back(e2, sign);
    }
    return out;
}

SparseTerms jacobi_terms(std::int64_t delta, std::size_t precision) {
    SparseTerms out{{0, 1}};
    for (std::int64_t k = 1;; ++k) {
        const std::uint64_t e = static_cast<std::uint64_t>(delta) * static_cast<std::uint64_t>(k * (k + 1) / 2);
        if (e > precision) break;
        out.emplace_back(e, (k % 2 == 0 ? 1 : -1) * (2 * k + 1));
    }
    return out;
}

}  // namespace detail

ModSeries expand_mod(const EtaQuotient& eq, std::size_t precision, std::int64_t ell, int t) {
    return expand(eq, precision, ResidueRing(ell, t));
}

}  // namespace etaq
