#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace etaq {

// Small-integer number theory shared by every module. All arguments are
// machine integers; callers needing arbitrary precision use GMP directly.

bool is_prime(std::int64_t n);

/// Prime factorisation as (p, e) pairs in increasing order of p. n >= 1.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// lcm that throws std::overflow_error instead of wrapping.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

/// base^exp, throwing std::overflow_error if the result exceeds int64.
std::int64_t checked_pow(std::int64_t base, int exp);

/// Primes p <= bound in increasing order.
std::vector<std::int64_t> primes_below(std::int64_t bound);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Floor division for a possibly negative numerator, positive denominator.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
}

}  // namespace etaq
