#pragma once

// Slow, structurally independent computations used to cross-check the fast
// paths. Nothing here is on a verification hot path.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "etaq/etaq.hpp"
#include "etaq/qseries.hpp"

namespace etaq::oracles {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p.
struct EllipticCurveOverFp {
    std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    std::int64_t p = 2;
};

/// Discriminant of the integral model.
mpz_class discriminant(const EllipticCurveOverFp& e);

/// #E(F_p) including the point at infinity. Throws std::domain_error when
/// the model is singular mod p.
std::int64_t count_points(const EllipticCurveOverFp& e);

/// sum_{d | n} d^nu by trial division up to n.
mpz_class sigma(std::int64_t n, int nu);

/// sum over d | n with gcd(d, M) = 1 of d^nu.
mpz_class sigma_coprime(std::int64_t n, int nu, std::int64_t m);

/// prod (1 - q^n)^2 (1 - q^{11n})^2 to precision P.
ZSeries colored_partition_series(std::size_t precision);

/// Eta-quotient expansion by multiplying in one factor (1 - q^{delta n})
/// at a time, then dividing out negative exponents by long division.
ZSeries brute_eta_expand(const EtaQuotient& eq, std::size_t precision);

/// Sieve of Eratosthenes.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Legendre symbol (a/p) for odd prime p by Euler's criterion.
int legendre_euler(std::int64_t a, std::int64_t p);

/// Bernoulli numbers B_0..B_n by the Akiyama-Tanigawa algorithm (B_1 = +1/2
/// there; it is flipped to -1/2 here).
std::vector<mpq_class> bernoulli_table(int n);

}  // namespace etaq::oracles
