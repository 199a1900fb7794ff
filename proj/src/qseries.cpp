#include "etaq/qseries.hpp"

#include "etaq/arith.hpp"

namespace etaq {

ResidueRing::ResidueRing(std::int64_t ell, int t) : ell_(ell), t_(t), modulus_(1) {
    if (!is_prime(ell)) throw std::invalid_argument("modulus base " + std::to_string(ell) + " is not prime");
    if (t < 1) throw std::invalid_argument("modulus exponent must be positive, got " + std::to_string(t));
    for (int i = 0; i < t; ++i) {
        if (modulus_ > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(ell))
            throw std::invalid_argument(std::to_string(ell) + "^" + std::to_string(t) + " exceeds 2^62");
        modulus_ *= static_cast<std::uint64_t>(ell);
    }
}

ResidueRing::value_type ResidueRing::from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), modulus_);
    return r.get_ui();
}

ResidueRing::value_type ResidueRing::from_int(std::int64_t v) const {
    std::int64_t m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % m;
    return static_cast<value_type>(r < 0 ? r + m : r);
}

ResidueRing::value_type ResidueRing::from_rational(const mpq_class& v) const {
    mpz_class den = v.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(ell_)))
        throw NotInvertible("rational " + v.get_str() + " is not " + std::to_string(ell_) + "-integral");
    mpz_class m(static_cast<unsigned long>(modulus_)), inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    return mul(from_integer(v.get_num()), from_integer(inv));
}

ResidueRing::value_type ResidueRing::inverse(value_type a) const {
    if (!is_unit(a)) throw NotInvertible(std::to_string(a) + " is not a unit mod " + std::to_string(modulus_));
    mpz_class x(static_cast<unsigned long>(a)), m(static_cast<unsigned long>(modulus_)), inv;
    mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return inv.get_ui();
}

std::string ResidueRing::name() const {
    return t_ == 1 ? "ZZ/" + std::to_string(ell_) : "ZZ/" + std::to_string(ell_) + "^" + std::to_string(t_);
}

ModSeries reduce_mod(const ZSeries& a, std::int64_t ell, int t) {
    ResidueRing r(ell, t);
    return map_coefficients(a, r, [&](const mpz_class& v) { return r.from_integer(v); });
}

ModSeries reduce_mod(const QQSeries& a, std::int64_t ell, int t) {
    ResidueRing r(ell, t);
    return map_coefficients(a, r, [&](const mpq_class& v) { return r.from_rational(v); });
}

ModSeries reduce_mod(const ModSeries& a, int t) {
    if (t > a.ring().exponent())
        throw std::invalid_argument("cannot lift a series mod " + a.ring().name() + " to a higher power");
    ResidueRing r(a.ring().ell(), t);
    return map_coefficients(a, r, [&](std::uint64_t v) { return v % r.modulus(); });
}

QQSeries to_rational(const ZSeries& a) {
    return map_coefficients(a, RationalRing{}, [](const mpz_class& v) { return mpq_class(v); });
}

std::optional<std::size_t> ord_ell(const ModSeries& a) {
    for (std::size_t i = 0; i <= a.precision(); ++i)
        if (a[i] != 0) return i;
    return std::nullopt;
}

}  // namespace etaq
