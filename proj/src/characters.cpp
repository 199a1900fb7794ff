#include "etaq/characters.hpp"

#include <gmp.h>

#include <cstdlib>
#include <numeric>
#include <regex>
#include <stdexcept>

#include "etaq/arith.hpp"

namespace etaq {

int kronecker(std::int64_t a, std::int64_t n) {
    if (a == 0 && n == 0) throw std::invalid_argument("kronecker symbol (0/0) is undefined");
    mpz_t za;
    mpz_init_set_si(za, a);
    int r = mpz_kronecker_si(za, n);
    mpz_clear(za);
    return r;
}

RealDirichletCharacter::RealDirichletCharacter(std::int64_t trivial_part, std::int64_t kronecker_disc)
    : m_(trivial_part), d_(kronecker_disc) {
    if (m_ < 1) throw std::invalid_argument("trivial part must be positive, got " + std::to_string(m_));
    if (d_ == 0) throw std::invalid_argument("kronecker factor must be nonzero");
}

std::int64_t RealDirichletCharacter::modulus() const {
    std::int64_t ad = std::llabs(d_);
    std::int64_t r = ((d_ % 4) + 4) % 4;
    std::int64_t period = (r == 0 || r == 1) ? ad : 4 * ad;
    return checked_lcm(m_, period);
}

int RealDirichletCharacter::operator()(std::int64_t n) const {
    if (std::gcd(n, m_) > 1) return 0;
    if (d_ == 1) return 1;
    return kronecker(d_, n);
}

int RealDirichletCharacter::parity() const { return d_ < 0 ? -1 : 1; }

std::string RealDirichletCharacter::to_string() const {
    std::string k = "kron(" + std::to_string(d_) + ")";
    if (d_ == 1) return "1_" + std::to_string(m_);
    if (m_ == 1) return k;
    return "1_" + std::to_string(m_) + "*" + k;
}

RealDirichletCharacter product(const RealDirichletCharacter& a, const RealDirichletCharacter& b) {
    std::int64_t m = checked_lcm(a.trivial_part(), b.trivial_part());
    std::int64_t d = a.kronecker_disc() * b.kronecker_disc();
    // (p^2 e / n) = (e / n) away from p; move square factors into the trivial
    // part as long as the remaining factor stays a discriminant-shaped value.
    for (auto [p, e] : factor(std::llabs(d))) {
        for (int i = 0; i + 1 < e; i += 2) {
            std::int64_t rest = d / (p * p);
            std::int64_t r = ((rest % 4) + 4) % 4;
            if (r != 0 && r != 1) break;
            d = rest;
            m = checked_lcm(m, p);
        }
    }
    return {m, d};
}

RealDirichletCharacter parse_character(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty character spec");
    static const std::regex trivial_re(R"(1_([0-9]+))");
    static const std::regex kron_re(R"(kron\((-?[0-9]+)\))");
    RealDirichletCharacter result;
    std::size_t pos = 0;
    while (true) {
        std::size_t star = s.find('*', pos);
        std::string tok = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        std::smatch m;
        try {
            if (std::regex_match(tok, m, trivial_re)) {
                result = product(result, RealDirichletCharacter::trivial(std::stoll(m[1].str())));
            } else if (std::regex_match(tok, m, kron_re)) {
                result = product(result, RealDirichletCharacter::kron(std::stoll(m[1].str())));
            } else {
                throw std::invalid_argument("bad token");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed character spec '" + std::string(spec) + "' at token '" + tok + "'");
        }
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return result;
}

}  // namespace etaq
