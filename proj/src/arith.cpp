#include "etaq/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace etaq {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factor: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = n;
    for (auto [p, e] : factor(n)) phi = phi / p * (p - 1);
    return phi;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    std::int64_t g = std::gcd(a, b);
    std::int64_t q = a / g;
    if (q > std::numeric_limits<std::int64_t>::max() / b)
        throw std::overflow_error("lcm overflows 64 bits");
    return q * b;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && std::abs(r) > std::numeric_limits<std::int64_t>::max() / std::abs(base))
            throw std::overflow_error("power overflows 64 bits");
        r *= base;
    }
    return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    unsigned __int128 r = 1, b = base % mod;
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<std::int64_t> primes_below(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<char> sieve(static_cast<std::size_t>(bound) + 1, 1);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) sieve[j] = 0;
    }
    return out;
}

}  // namespace etaq
