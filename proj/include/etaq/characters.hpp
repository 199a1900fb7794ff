#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace etaq {

/// Kronecker symbol (a/n). Throws std::invalid_argument for a = n = 0.
int kronecker(std::int64_t a, std::int64_t n);

/// Real Dirichlet character written as 1_M * (d/.): the trivial character
/// of modulus M times a Kronecker symbol. The declared modulus is kept, so
/// 1_9 and 1_3 are distinct characters even though they agree as functions.
class RealDirichletCharacter {
 public:
    RealDirichletCharacter() = default;
    /// Throws std::invalid_argument for M < 1 or d = 0.
    RealDirichletCharacter(std::int64_t trivial_part, std::int64_t kronecker_disc);

    static RealDirichletCharacter trivial(std::int64_t m) { return {m, 1}; }
    static RealDirichletCharacter kron(std::int64_t d) { return {1, d}; }

    std::int64_t trivial_part() const { return m_; }
    std::int64_t kronecker_disc() const { return d_; }

    /// lcm of M and the period of n -> (d/n).
    std::int64_t modulus() const;

    int operator()(std::int64_t n) const;

    bool is_trivial() const { return d_ == 1; }
    /// chi(-1).
    int parity() const;

    /// "1_2*kron(-3)" style; parse(to_string()) reproduces the character.
    std::string to_string() const;

    friend bool operator==(const RealDirichletCharacter&, const RealDirichletCharacter&) = default;

 private:
    std::int64_t m_ = 1;
    std::int64_t d_ = 1;
};

RealDirichletCharacter product(const RealDirichletCharacter& a, const RealDirichletCharacter& b);

/// Grammar: token ('*' token)*, token = "1_M" | "kron(d)"; whitespace is
/// ignored. Throws std::invalid_argument on malformed input.
RealDirichletCharacter parse_character(std::string_view spec);

}  // namespace etaq
