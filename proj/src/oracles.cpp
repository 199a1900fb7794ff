#include "etaq/oracles.hpp"

#include <numeric>
#include <stdexcept>

#include "etaq/arith.hpp"

namespace etaq::oracles {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

/// In place c <- c * (1 - q^e) over ZZ.
void times_one_minus(std::vector<mpz_class>& c, std::size_t e) {
    for (std::size_t i = c.size(); i-- > e;) c[i] -= c[i - e];
}

}  // namespace

mpz_class discriminant(const EllipticCurveOverFp& e) {
    mpz_class a1 = e.a1, a2 = e.a2, a3 = e.a3, a4 = e.a4, a6 = e.a6;
    mpz_class b2 = a1 * a1 + 4 * a2;
    mpz_class b4 = 2 * a4 + a1 * a3;
    mpz_class b6 = a3 * a3 + 4 * a6;
    mpz_class b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

std::int64_t count_points(const EllipticCurveOverFp& e) {
    const std::int64_t p = e.p;
    if (!is_prime(p)) throw std::invalid_argument("count_points needs a prime field");
    mpz_class disc = discriminant(e);
    if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("curve is singular mod " + std::to_string(p));
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t rhs = mod(mod(mod(x * x, p) * x, p) + mod(e.a2 * mod(x * x, p), p) + mod(e.a4 * x, p) + e.a6, p);
        const std::int64_t lin = mod(e.a1 * x + e.a3, p);
        if (p == 2) {
            for (std::int64_t y = 0; y < 2; ++y)
                if (mod(y * y + lin * y - rhs, 2) == 0) ++count;
            continue;
        }
        // (2y + lin)^2 = 4 rhs + lin^2
        const std::int64_t d = mod(4 * rhs + lin * lin, p);
        count += 1 + legendre_euler(d, p);
    }
    return count;
}

mpz_class sigma(std::int64_t n, int nu) {
    if (n < 1) throw std::invalid_argument("sigma needs n >= 1");
    mpz_class s = 0, dp;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(nu));
        s += dp;
    }
    return s;
}

mpz_class sigma_coprime(std::int64_t n, int nu, std::int64_t m) {
    if (n < 1) throw std::invalid_argument("sigma_coprime needs n >= 1");
    mpz_class s = 0, dp;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0 || std::gcd(d, m) != 1) continue;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(nu));
        s += dp;
    }
    return s;
}

ZSeries colored_partition_series(std::size_t precision) {
    std::vector<mpz_class> c(precision + 1, 0);
    c[0] = 1;
    for (std::size_t n = 1; n <= precision; ++n) {
        times_one_minus(c, n);
        times_one_minus(c, n);
        if (11 * n <= precision) {
            times_one_minus(c, 11 * n);
            times_one_minus(c, 11 * n);
        }
    }
    return ZSeries(IntegerRing{}, std::move(c));
}

ZSeries brute_eta_expand(const EtaQuotient& eq, std::size_t precision) {
    const std::int64_t lead = eq.leading_exponent();
    if (lead < 0 || static_cast<std::size_t>(lead) > precision)
        throw std::invalid_argument("precision below leading exponent");
    const std::size_t p = precision - static_cast<std::size_t>(lead);
    std::vector<mpz_class> num(p + 1, 0), den(p + 1, 0);
    num[0] = 1;
    den[0] = 1;
    for (auto [delta, r] : eq.exponents) {
        auto& target = r > 0 ? num : den;
        const std::int64_t a = r > 0 ? r : -r;
        for (std::size_t n = 1; static_cast<std::size_t>(delta) * n <= p; ++n)
            for (std::int64_t i = 0; i < a; ++i) times_one_minus(target, static_cast<std::size_t>(delta) * n);
    }
    // Long division num / den; den has constant term 1.
    std::vector<mpz_class> quo(p + 1, 0);
    for (std::size_t n = 0; n <= p; ++n) {
        mpz_class acc = num[n];
        for (std::size_t k = 1; k <= n; ++k) acc -= den[k] * quo[n - k];
        quo[n] = acc;
    }
    std::vector<mpz_class> out(precision + 1, 0);
    for (std::size_t i = 0; i <= p; ++i) out[i + static_cast<std::size_t>(lead)] = quo[i];
    return ZSeries(IntegerRing{}, std::move(out));
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

int legendre_euler(std::int64_t a, std::int64_t p) {
    const std::int64_t r = mod(a, p);
    if (r == 0) return 0;
    std::uint64_t v = pow_mod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((p - 1) / 2),
                              static_cast<std::uint64_t>(p));
    return v == 1 ? 1 : -1;
}

std::vector<mpq_class> bernoulli_table(int n) {
    std::vector<mpq_class> out;
    std::vector<mpq_class> a(n + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = mpq_class(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
        out.push_back(a[0]);
    }
    if (n >= 1) out[1] = mpq_class(-1, 2);
    return out;
}

}  // namespace etaq::oracles
