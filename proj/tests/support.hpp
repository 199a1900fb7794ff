#pragma once

// Helpers shared by the unit tests. Everything here is deliberately naive.

#include <cstdint>
#include <random>
#include <vector>

#include "etaq/qseries.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline etaq::ZSeries random_z(std::size_t precision, std::int64_t bound = 20) {
    std::vector<mpz_class> c(precision + 1);
    for (auto& v : c) v = static_cast<long>(uniform(-bound, bound));
    return etaq::ZSeries(etaq::IntegerRing{}, std::move(c));
}

inline etaq::ModSeries random_mod(std::size_t precision, std::int64_t ell, int t) {
    etaq::ResidueRing ring(ell, t);
    std::vector<std::uint64_t> c(precision + 1);
    for (auto& v : c) v = static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(ring.modulus()) - 1));
    return etaq::ModSeries(ring, std::move(c));
}

/// Is a a square mod p, by listing all squares.
inline bool is_square_mod(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    for (std::int64_t x = 0; x < p; ++x)
        if ((x * x) % p == a) return true;
    return false;
}

/// Legendre symbol by enumerating squares; p an odd prime.
inline int legendre_by_squares(std::int64_t a, std::int64_t p) {
    if (((a % p) + p) % p == 0) return 0;
    return is_square_mod(a, p) ? 1 : -1;
}

inline std::int64_t mod(const mpz_class& v, std::int64_t m) {
    mpz_class r = v % m;
    if (r < 0) r += m;
    return r.get_si();
}

}  // namespace testing_support
