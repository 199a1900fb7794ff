#pragma once

// Plain data describing a congruence claim. Building and checking the
// series happens in congruence.hpp; reading and writing JSON in
// claims_io.hpp.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "etaq/characters.hpp"

namespace etaq {

enum class ClaimKind { TypeI, TypeII, TypeIPrimePower, TypeIITwistPower, UnitFactor, RawSeries };

/// "type1", "type2", "type1-power", "type2-power", "unit-factor", "raw".
std::string to_string(ClaimKind kind);
/// Inverse of to_string; throws std::invalid_argument.
ClaimKind parse_claim_kind(const std::string& text);

/// A form given either by catalog key or by an inline eta spec. Inline
/// forms may override the default level (lcm of deltas) and nebentypus.
struct FormRef {
    std::string key;
    std::string eta;
    std::optional<std::int64_t> level;
    std::optional<RealDirichletCharacter> character;
};

/// Residue classes b mod d with unit u and congruence modulus l^t.
struct UnitClass {
    std::vector<std::int64_t> classes;
    std::int64_t u = 1;
    int t = 1;
};

struct SeriesRecipe;

struct RecipeOp {
    enum class Kind { Twist, Theta, U, V, Pow, Mul, Scale };
    Kind kind = Kind::Theta;
    std::int64_t arg = 0;                  // theta exponent, U/V index, power
    RealDirichletCharacter chi;            // Twist
    std::shared_ptr<SeriesRecipe> factor;  // Mul
    mpq_class scalar;                      // Scale
};

/// A series built from a base by a left-to-right list of operators.
struct SeriesRecipe {
    enum class Base { Form, Eta, G, E, E2, E2N, F, One };
    Base base = Base::One;
    FormRef form;             // Form / Eta
    int k = 0;                // G, E
    std::int64_t n = 0;       // E2N
    std::int64_t ell = 0;     // F
    int t = 0;                // F
    std::vector<RecipeOp> ops;
};

struct CongruenceClaim {
    std::string id;
    ClaimKind kind = ClaimKind::TypeI;
    FormRef form;
    std::int64_t ell = 2;
    int t = 1;

    // TypeI / TypeIPrimePower / UnitFactor
    int m = 0;
    int m_prime = 0;
    RealDirichletCharacter psi;

    // TypeIPrimePower: classes mod d (empty = all classes)
    std::vector<std::int64_t> classes;
    std::int64_t modulus_d = 1;

    // UnitFactor
    std::vector<UnitClass> units;

    // TypeIITwistPower
    int a = 1;

    // RawSeries: lhs == rhs mod l^t, checked at weight/level
    std::shared_ptr<SeriesRecipe> lhs;
    std::shared_ptr<SeriesRecipe> rhs;
    int weight = 0;
    std::int64_t level = 1;
    bool cuspidal = false;

    std::optional<std::int64_t> prime_bound;  // overrides the run default
    bool expect_fail = false;
    std::string note;
};

}  // namespace etaq
