#pragma once

// theta, U, V, twist and Hecke operators on q-series, plus the weight and
// level bookkeeping used for Sturm-bound comparisons.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "etaq/arith.hpp"
#include "etaq/characters.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

struct FormMeta {
    int weight = 0;
    std::int64_t level = 1;
    RealDirichletCharacter nebentypus;
    bool cuspidal = true;
};

struct ThetaWeightRule {
    std::int64_t ell = 0;
    int t = 1;
    int j = 0;
    FormMeta base;
    int weight = 0;
    std::int64_t level = 1;
    bool exact = true;
    /// Weight added per theta application.
    int step = 0;
};

/// Weight and level of theta^j f mod l^t.
///   l >= 5, t = 1: +j(l+1), same level, exact.
///   l = 3, t >= 2 or l = 2, t >= 4: +j(2 + phi(l^t)), level N l^{t-1}, exact.
///   l = 3, t = 1 or l = 2, t <= 3: the t = 2 (resp. t = 4) rule, which is a
///     congruence mod a higher power and so also mod l^t; conservative.
///   l >= 5, t > 1: +j k(t) with k(t) = 2 + 2 l^{t-1}(l-1), level N l^t;
///     conservative.
ThetaWeightRule theta_weight_rule(std::int64_t ell, int t, int j, const FormMeta& meta);

/// Level assigned to f (x) chi for f of level N: lcm(N, M^2), M the modulus
/// of chi.
std::int64_t twist_level(std::int64_t level, const RealDirichletCharacter& chi);

namespace detail {

template <CoefficientRing R>
typename R::value_type integer_power(const R& ring, std::uint64_t n, std::uint64_t e) {
    if constexpr (std::is_same_v<R, ResidueRing>) {
        return pow_mod(n % ring.modulus(), e, ring.modulus());
    } else {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), n, e);
        return ring.from_integer(r);
    }
}

}  // namespace detail

/// a(n) -> n^j a(n). Kills the constant term for j >= 1.
template <CoefficientRing R>
QSeries<R> theta(const QSeries<R>& a, int j = 1) {
    if (j < 0) throw std::invalid_argument("theta exponent must be non-negative");
    if (j == 0) return a;
    const R& ring = a.ring();
    std::vector<typename R::value_type> c(a.precision() + 1, ring.zero());
    for (std::size_t n = 1; n <= a.precision(); ++n) {
        if (ring.is_zero(a[n])) continue;
        c[n] = ring.mul(a[n], detail::integer_power(ring, n, static_cast<std::uint64_t>(j)));
    }
    return QSeries<R>(ring, std::move(c));
}

/// a(n) -> a(mn); precision floor(P/m).
template <CoefficientRing R>
QSeries<R> U(const QSeries<R>& a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("U_m needs m >= 1");
    const std::size_t mm = static_cast<std::size_t>(m);
    const std::size_t p = a.precision() / mm;
    std::vector<typename R::value_type> c;
    c.reserve(p + 1);
    for (std::size_t n = 0; n <= p; ++n) c.push_back(a[n * mm]);
    return QSeries<R>(a.ring(), std::move(c));
}

/// q -> q^m at the same precision P; a(n) for n <= P/m is all that is
/// needed, so the result is fully determined.
template <CoefficientRing R>
QSeries<R> V(const QSeries<R>& a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("V_m needs m >= 1");
    const std::size_t mm = static_cast<std::size_t>(m);
    std::vector<typename R::value_type> c(a.precision() + 1, a.ring().zero());
    for (std::size_t n = 0; n * mm <= a.precision(); ++n) c[n * mm] = a[n];
    return QSeries<R>(a.ring(), std::move(c));
}

/// a(n) -> chi(n) a(n). The constant term is kept only when chi(0) != 0,
/// which happens for the character that is 1 everywhere.
template <CoefficientRing R>
QSeries<R> twist(const QSeries<R>& a, const RealDirichletCharacter& chi) {
    const R& ring = a.ring();
    std::vector<typename R::value_type> c(a.precision() + 1, ring.zero());
    for (std::size_t n = 0; n <= a.precision(); ++n) {
        int v = chi(static_cast<std::int64_t>(n));
        if (v == 1) c[n] = a[n];
        else if (v == -1) c[n] = ring.neg(a[n]);
    }
    return QSeries<R>(ring, std::move(c));
}

/// g | T_p = g | U_p + chi(p) p^{k-1} g | V_p; precision floor(P/p).
template <CoefficientRing R>
QSeries<R> hecke_Tp(const QSeries<R>& a, std::int64_t p, const FormMeta& meta) {
    if (!is_prime(p)) throw std::invalid_argument("T_p needs prime p, got " + std::to_string(p));
    const R& ring = a.ring();
    const std::size_t pp = static_cast<std::size_t>(p);
    const std::size_t prec = a.precision() / pp;
    int chi = meta.nebentypus(p);
    auto w = detail::integer_power(ring, static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(meta.weight - 1));
    if (chi == -1) w = ring.neg(w);
    std::vector<typename R::value_type> c(prec + 1, ring.zero());
    for (std::size_t n = 0; n <= prec; ++n) {
        c[n] = a[n * pp];
        if (chi != 0 && n % pp == 0) c[n] = ring.add(c[n], ring.mul(w, a[n / pp]));
    }
    return QSeries<R>(ring, std::move(c));
}

/// Coefficient at q^m: sum over d | gcd(m, n) of chi(d) d^{k-1} a(mn/d^2);
/// precision floor(P/n).
template <CoefficientRing R>
QSeries<R> hecke_Tn(const QSeries<R>& a, std::int64_t n, const FormMeta& meta) {
    if (n < 1) throw std::invalid_argument("T_n needs n >= 1");
    const R& ring = a.ring();
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t prec = a.precision() / nn;
    std::vector<typename R::value_type> c(prec + 1, ring.zero());
    for (std::size_t m = 0; m <= prec; ++m) {
        auto acc = ring.zero();
        // gcd(0, n) = n: every divisor of n contributes for the constant term.
        std::int64_t g = std::gcd(static_cast<std::int64_t>(m), n);
        for (std::int64_t d : divisors(g)) {
            int chi = meta.nebentypus(d);
            if (chi == 0) continue;
            auto w = detail::integer_power(ring, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(meta.weight - 1));
            auto term = ring.mul(w, a[m * nn / static_cast<std::size_t>(d * d)]);
            acc = chi == 1 ? ring.add(acc, term) : ring.sub(acc, term);
        }
        c[m] = acc;
    }
    return QSeries<R>(ring, std::move(c));
}

}  // namespace etaq
