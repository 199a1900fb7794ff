#include "etaq/eisenstein.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/operators.hpp"

namespace etaq {

namespace {

std::mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_cache{mpq_class(1)};

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// sigma^{psi,phi}_{nu}(n) for n = 0..P; entry 0 is left at zero.
std::vector<mpz_class> divisor_sums(std::size_t precision, int nu, const RealDirichletCharacter& psi,
                                    const RealDirichletCharacter& phi) {
    std::vector<mpz_class> s(precision + 1, 0);
    mpz_class dp;
    for (std::size_t d = 1; d <= precision; ++d) {
        int pd = phi(static_cast<std::int64_t>(d));
        if (pd == 0) continue;
        mpz_ui_pow_ui(dp.get_mpz_t(), d, static_cast<unsigned long>(nu));
        for (std::size_t n = d, q = 1; n <= precision; n += d, ++q) {
            int v = pd * psi(static_cast<std::int64_t>(q));
            if (v == 1) s[n] += dp;
            else if (v == -1) s[n] -= dp;
        }
    }
    return s;
}

void require_even_weight(int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("G_k/E_k need even k >= 4, got " + std::to_string(k));
}

}  // namespace

mpq_class bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli index must be non-negative");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (int m = static_cast<int>(bernoulli_cache.size()); m <= k; ++m) {
        mpq_class acc = 0;
        if (m % 2 == 1 && m > 1) {
            bernoulli_cache.emplace_back(0);
            continue;
        }
        for (int j = 0; j < m; ++j) acc += mpq_class(binomial(m + 1, j)) * bernoulli_cache[j];
        mpq_class b = -acc / mpq_class(m + 1);
        b.canonicalize();
        bernoulli_cache.push_back(b);
    }
    return bernoulli_cache[k];
}

mpq_class bernoulli_generalized(int k, const RealDirichletCharacter& phi) {
    if (k < 1) throw std::invalid_argument("generalized Bernoulli numbers need k >= 1");
    const std::int64_t m = phi.modulus();
    std::vector<mpq_class> b(k + 1);
    for (int j = 0; j <= k; ++j) b[j] = bernoulli(j);
    mpq_class sum = 0;
    for (std::int64_t a = 1; a <= m; ++a) {
        int v = phi(a);
        if (v == 0) continue;
        // B_k(a/M) = sum_j C(k, j) B_j (a/M)^{k-j}
        mpq_class x(a, m), poly = 0, xp = 1;
        x.canonicalize();
        for (int j = k; j >= 0; --j) {
            poly += mpq_class(binomial(k, j)) * b[j] * xp;
            xp *= x;
        }
        sum += v * poly;
    }
    mpz_class mk;
    mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k - 1));
    mpq_class r = sum * mpq_class(mk);
    r.canonicalize();
    return r;
}

mpz_class sigma(std::int64_t n, int nu) {
    if (n < 1) throw std::invalid_argument("sigma needs n >= 1");
    mpz_class s = 0, dp;
    for (std::int64_t d : divisors(n)) {
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(nu));
        s += dp;
    }
    return s;
}

QQSeries G_k(int k, std::size_t precision) {
    require_even_weight(k);
    auto s = divisor_sums(precision, k - 1, RealDirichletCharacter(), RealDirichletCharacter());
    std::vector<mpq_class> c(precision + 1);
    c[0] = -bernoulli(k) / (2 * k);
    for (std::size_t n = 1; n <= precision; ++n) c[n] = mpq_class(s[n]);
    return QQSeries(RationalRing{}, std::move(c));
}

QQSeries E_k(int k, std::size_t precision) {
    require_even_weight(k);
    mpq_class factor = mpq_class(-2 * k) / bernoulli(k);
    return scale(G_k(k, precision), factor);
}

QQSeries E_2(std::size_t precision) {
    auto s = divisor_sums(precision, 1, RealDirichletCharacter(), RealDirichletCharacter());
    std::vector<mpq_class> c(precision + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= precision; ++n) c[n] = mpq_class(-24 * s[n]);
    return QQSeries(RationalRing{}, std::move(c));
}

QQSeries E_2N(std::int64_t n, std::size_t precision) {
    if (n < 2) throw std::invalid_argument("E_{2,N} needs N >= 2");
    QQSeries e2 = E_2(precision);
    QQSeries r = sub(scale(V(e2, n), mpq_class(n)), e2);
    return scale(r, mpq_class(1, 24));
}

QQSeries G_gen(int k, const RealDirichletCharacter& psi, const RealDirichletCharacter& phi, std::size_t precision) {
    if (k < 1) throw std::invalid_argument("generalized Eisenstein series need k >= 1");
    const int sign = (k % 2 == 0) ? 1 : -1;
    if (psi.parity() * phi.parity() != sign)
        throw std::invalid_argument("parity condition psi(-1)phi(-1) = (-1)^k fails for k = " + std::to_string(k) +
                                    ", psi = " + psi.to_string() + ", phi = " + phi.to_string());
    auto s = divisor_sums(precision, k - 1, psi, phi);
    std::vector<mpq_class> c(precision + 1);
    const bool psi_is_one = psi.trivial_part() == 1 && psi.is_trivial();
    c[0] = psi_is_one ? mpq_class(-bernoulli_generalized(k, phi) / (2 * k)) : mpq_class(0);
    for (std::size_t n = 1; n <= precision; ++n) c[n] = mpq_class(s[n]);
    return QQSeries(RationalRing{}, std::move(c));
}

QQSeries E_gen(int k, const RealDirichletCharacter& psi, const RealDirichletCharacter& phi, std::size_t precision) {
    mpq_class b = bernoulli_generalized(k, phi);
    if (sgn(b) == 0) throw std::domain_error("B_{k,phi} vanishes; E_gen is not defined");
    return scale(G_gen(k, psi, phi, precision), mpq_class(-2 * k) / b);
}

QQSeries F_lt(std::int64_t ell, int t, std::size_t precision) {
    if (!((ell == 3 && t >= 2) || (ell == 2 && t >= 4)))
        throw std::invalid_argument("F_{l,t} is defined for l = 3, t >= 2 and l = 2, t >= 4; got l = " +
                                    std::to_string(ell) + ", t = " + std::to_string(t));
    const int j = static_cast<int>(2 + euler_phi(checked_pow(ell, t)));
    const QQSeries ej = E_k(j, precision);
    QQSeries acc(RationalRing{}, precision);
    std::int64_t li = 1;
    for (int i = 0; i < t; ++i, li *= ell) acc = add(acc, scale(V(ej, li), mpq_class(li)));
    return scale(acc, mpq_class(ell == 3 ? -2 : -1));
}

}  // namespace etaq
