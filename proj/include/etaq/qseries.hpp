#pragma once

// Exact truncated q-series over ZZ, QQ and ZZ/l^t ZZ.
//
// A QSeries of precision P stores a(0), ..., a(P); nothing past q^P is
// known. Binary operations take the smaller precision of their operands, so
// no result ever claims coefficients its inputs did not determine.

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace etaq {

/// Thrown when two series over different coefficient rings are combined.
class RingMismatch : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation needs a unit (or an l-integral value) and does
/// not get one.
class NotInvertible : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

class IntegerRing {
 public:
    using value_type = mpz_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const mpz_class& v) const { return v; }
    value_type from_rational(const mpq_class& v) const {
        if (v.get_den() != 1) throw NotInvertible("rational " + v.get_str() + " is not an integer");
        return v.get_num();
    }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
    value_type inverse(const value_type& a) const {
        if (!is_unit(a)) throw NotInvertible(a.get_str() + " is not a unit in ZZ");
        return a;
    }
    value_type normalize(value_type a) const { return a; }
    std::string to_string(const value_type& a) const { return a.get_str(); }
    std::string name() const { return "ZZ"; }
    bool operator==(const IntegerRing&) const = default;
};

class RationalRing {
 public:
    using value_type = mpq_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const mpz_class& v) const { return mpq_class(v); }
    value_type from_rational(const mpq_class& v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_unit(const value_type& a) const { return sgn(a) != 0; }
    value_type inverse(const value_type& a) const {
        if (!is_unit(a)) throw NotInvertible("0 is not invertible in QQ");
        return 1 / a;
    }
    value_type normalize(value_type a) const {
        a.canonicalize();
        return a;
    }
    std::string to_string(const value_type& a) const { return a.get_str(); }
    std::string name() const { return "QQ"; }
    bool operator==(const RationalRing&) const = default;
};

/// ZZ / l^t ZZ with l prime. Residues are kept in [0, l^t).
class ResidueRing {
 public:
    using value_type = std::uint64_t;

    /// Throws std::invalid_argument unless ell is prime, t >= 1 and
    /// l^t < 2^62.
    ResidueRing(std::int64_t ell, int t);

    std::int64_t ell() const { return ell_; }
    int exponent() const { return t_; }
    std::uint64_t modulus() const { return modulus_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % modulus_; }
    value_type from_integer(const mpz_class& v) const;
    value_type from_int(std::int64_t v) const;
    value_type from_rational(const mpq_class& v) const;
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + modulus_ - b; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % modulus_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : modulus_ - a; }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_unit(value_type a) const { return a % static_cast<value_type>(ell_) != 0; }
    value_type inverse(value_type a) const;
    value_type normalize(value_type a) const { return a % modulus_; }
    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string name() const;
    bool operator==(const ResidueRing&) const = default;

 private:
    std::int64_t ell_;
    int t_;
    std::uint64_t modulus_;
};

template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a, const mpz_class& z,
                                   const mpq_class& q) {
    { r.zero() } -> std::convertible_to<typename R::value_type>;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.from_integer(z) } -> std::convertible_to<typename R::value_type>;
    { r.from_rational(q) } -> std::convertible_to<typename R::value_type>;
    { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.neg(a) } -> std::convertible_to<typename R::value_type>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.is_unit(a) } -> std::same_as<bool>;
    { r.inverse(a) } -> std::convertible_to<typename R::value_type>;
    { r.name() } -> std::convertible_to<std::string>;
    { r == r } -> std::same_as<bool>;
};

template <CoefficientRing R>
class QSeries {
 public:
    using ring_type = R;
    using value_type = typename R::value_type;

    /// The zero series known to precision P.
    QSeries(R ring, std::size_t precision) : ring_(std::move(ring)), coeffs_(precision + 1, ring_.zero()) {}

    /// Takes a(0..P) with P = coeffs.size() - 1; values are normalised into
    /// the ring's canonical representatives.
    QSeries(R ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least the constant term");
        for (auto& c : coeffs_) c = ring_.normalize(std::move(c));
    }

    static QSeries one(R ring, std::size_t precision) {
        QSeries s(std::move(ring), precision);
        s.coeffs_[0] = s.ring_.one();
        return s;
    }

    static QSeries monomial(R ring, std::size_t exponent, value_type c, std::size_t precision) {
        QSeries s(std::move(ring), precision);
        if (exponent <= precision) s.coeffs_[exponent] = s.ring_.normalize(std::move(c));
        return s;
    }

    const R& ring() const { return ring_; }
    std::size_t precision() const { return coeffs_.size() - 1; }
    const value_type& operator[](std::size_t n) const { return coeffs_.at(n); }
    std::span<const value_type> coefficients() const { return coeffs_; }

    QSeries truncated(std::size_t precision) const {
        if (precision >= this->precision()) return *this;
        return QSeries(ring_, std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + precision + 1));
    }

    /// Copy with one coefficient replaced.
    QSeries with_coefficient(std::size_t n, value_type v) const {
        QSeries s = *this;
        s.coeffs_.at(n) = ring_.normalize(std::move(v));
        return s;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const value_type& c) { return ring_.is_zero(c); });
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

 private:
    R ring_;
    std::vector<value_type> coeffs_;
};

using ZSeries = QSeries<IntegerRing>;
using QQSeries = QSeries<RationalRing>;
using ModSeries = QSeries<ResidueRing>;

namespace detail {

template <CoefficientRing R>
void require_same_ring(const QSeries<R>& a, const QSeries<R>& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

/// Indices of nonzero coefficients; sparse operands (Euler factors,
/// pentagonal series) are common enough that skipping zeros matters.
template <CoefficientRing R>
std::vector<std::size_t> support(const QSeries<R>& a, std::size_t limit) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= limit; ++i)
        if (!a.ring().is_zero(a[i])) idx.push_back(i);
    return idx;
}

}  // namespace detail

template <CoefficientRing R>
QSeries<R> add(const QSeries<R>& a, const QSeries<R>& b) {
    detail::require_same_ring(a, b);
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<typename R::value_type> c(p + 1);
    for (std::size_t i = 0; i <= p; ++i) c[i] = a.ring().add(a[i], b[i]);
    return QSeries<R>(a.ring(), std::move(c));
}

template <CoefficientRing R>
QSeries<R> sub(const QSeries<R>& a, const QSeries<R>& b) {
    detail::require_same_ring(a, b);
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<typename R::value_type> c(p + 1);
    for (std::size_t i = 0; i <= p; ++i) c[i] = a.ring().sub(a[i], b[i]);
    return QSeries<R>(a.ring(), std::move(c));
}

template <CoefficientRing R>
QSeries<R> negate(const QSeries<R>& a) {
    std::vector<typename R::value_type> c(a.precision() + 1);
    for (std::size_t i = 0; i <= a.precision(); ++i) c[i] = a.ring().neg(a[i]);
    return QSeries<R>(a.ring(), std::move(c));
}

template <CoefficientRing R>
QSeries<R> scale(const QSeries<R>& a, const typename R::value_type& s) {
    std::vector<typename R::value_type> c(a.precision() + 1);
    for (std::size_t i = 0; i <= a.precision(); ++i) c[i] = a.ring().mul(a[i], s);
    return QSeries<R>(a.ring(), std::move(c));
}

/// Truncated Cauchy product, O(P^2) in the worst case; zero coefficients of
/// the sparser factor are skipped.
template <CoefficientRing R>
QSeries<R> mul(const QSeries<R>& a, const QSeries<R>& b) {
    detail::require_same_ring(a, b);
    const R& ring = a.ring();
    const std::size_t p = std::min(a.precision(), b.precision());
    auto sa = detail::support(a, p);
    auto sb = detail::support(b, p);
    const QSeries<R>& sparse = sa.size() <= sb.size() ? a : b;
    const QSeries<R>& dense = sa.size() <= sb.size() ? b : a;
    const auto& idx = sa.size() <= sb.size() ? sa : sb;

    if constexpr (std::is_same_v<R, ResidueRing>) {
        const std::uint64_t m = ring.modulus();
        if (m < (std::uint64_t{1} << 32)) {
            // Products fit in 64 bits; accumulate without reducing per term.
            std::vector<unsigned __int128> acc(p + 1, 0);
            for (std::size_t i : idx) {
                const std::uint64_t x = sparse[i];
                for (std::size_t j = 0; i + j <= p; ++j) acc[i + j] += static_cast<unsigned __int128>(x * dense[j]);
            }
            std::vector<std::uint64_t> c(p + 1);
            for (std::size_t n = 0; n <= p; ++n) c[n] = static_cast<std::uint64_t>(acc[n] % m);
            return QSeries<R>(ring, std::move(c));
        }
    }
    std::vector<typename R::value_type> c(p + 1, ring.zero());
    for (std::size_t i : idx)
        for (std::size_t j = 0; i + j <= p; ++j) {
            if constexpr (std::is_same_v<R, IntegerRing>) {
                mpz_addmul(c[i + j].get_mpz_t(), sparse[i].get_mpz_t(), dense[j].get_mpz_t());
            } else {
                c[i + j] = ring.add(c[i + j], ring.mul(sparse[i], dense[j]));
            }
        }
    return QSeries<R>(ring, std::move(c));
}

/// a / b for b with unit constant term; cost O(P * nnz(b)).
template <CoefficientRing R>
QSeries<R> divide(const QSeries<R>& a, const QSeries<R>& b) {
    detail::require_same_ring(a, b);
    const R& ring = a.ring();
    if (!ring.is_unit(b[0]))
        throw NotInvertible("constant term " + ring.to_string(b[0]) + " is not a unit in " + ring.name());
    const std::size_t p = std::min(a.precision(), b.precision());
    const auto inv0 = ring.inverse(b[0]);
    auto idx = detail::support(b, p);
    std::vector<typename R::value_type> c(p + 1, ring.zero());
    for (std::size_t n = 0; n <= p; ++n) {
        auto acc = a[n];
        for (std::size_t k : idx) {
            if (k == 0) continue;
            if (k > n) break;
            acc = ring.sub(acc, ring.mul(b[k], c[n - k]));
        }
        c[n] = ring.mul(acc, inv0);
    }
    return QSeries<R>(ring, std::move(c));
}

template <CoefficientRing R>
QSeries<R> invert(const QSeries<R>& a) {
    return divide(QSeries<R>::one(a.ring(), a.precision()), a);
}

/// Binary powering; negative exponents invert first.
template <CoefficientRing R>
QSeries<R> pow(const QSeries<R>& a, std::int64_t e) {
    QSeries<R> base = e < 0 ? invert(a) : a;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    QSeries<R> result = QSeries<R>::one(a.ring(), a.precision());
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

template <CoefficientRing R>
QSeries<R> operator+(const QSeries<R>& a, const QSeries<R>& b) { return add(a, b); }
template <CoefficientRing R>
QSeries<R> operator-(const QSeries<R>& a, const QSeries<R>& b) { return sub(a, b); }
template <CoefficientRing R>
QSeries<R> operator-(const QSeries<R>& a) { return negate(a); }
template <CoefficientRing R>
QSeries<R> operator*(const QSeries<R>& a, const QSeries<R>& b) { return mul(a, b); }

/// Coefficient-wise image under a ring map given as a callable.
template <CoefficientRing To, CoefficientRing From, class F>
QSeries<To> map_coefficients(const QSeries<From>& a, To ring, F&& f) {
    std::vector<typename To::value_type> c;
    c.reserve(a.precision() + 1);
    for (const auto& v : a.coefficients()) c.push_back(f(v));
    return QSeries<To>(std::move(ring), std::move(c));
}

ModSeries reduce_mod(const ZSeries& a, std::int64_t ell, int t);
/// Throws NotInvertible if some coefficient has a denominator divisible by l.
ModSeries reduce_mod(const QQSeries& a, std::int64_t ell, int t);
ModSeries reduce_mod(const ModSeries& a, int t);

QQSeries to_rational(const ZSeries& a);

/// Least n <= P with a(n) != 0 in ZZ/l^t; nullopt when every stored
/// coefficient vanishes (the order is beyond the precision).
std::optional<std::size_t> ord_ell(const ModSeries& a);

/// First index at which two series over the same ring differ, up to the
/// smaller precision.
template <CoefficientRing R>
std::optional<std::size_t> first_difference(const QSeries<R>& a, const QSeries<R>& b) {
    detail::require_same_ring(a, b);
    const std::size_t p = std::min(a.precision(), b.precision());
    for (std::size_t i = 0; i <= p; ++i)
        if (!(a[i] == b[i])) return i;
    return std::nullopt;
}

}  // namespace etaq
