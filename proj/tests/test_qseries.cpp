#include <doctest.h>

#include "etaq/eisenstein.hpp"
#include "etaq/qseries.hpp"
#include "support.hpp"

using namespace etaq;
using testing_support::random_mod;
using testing_support::random_z;

namespace {

ZSeries zs(std::initializer_list<long> c) {
    std::vector<mpz_class> v;
    for (long x : c) v.emplace_back(x);
    return ZSeries(IntegerRing{}, std::move(v));
}

ModSeries ms(std::int64_t ell, int t, std::initializer_list<std::uint64_t> c) {
    return ModSeries(ResidueRing(ell, t), std::vector<std::uint64_t>(c));
}

}  // namespace

TEST_CASE("add") {
    CHECK(zs({1, 1}) + zs({1, -1}) == zs({2, 0}));
    auto a = ZSeries::monomial(IntegerRing{}, 1, 1, 3);
    auto b = ZSeries::monomial(IntegerRing{}, 2, 1, 5);
    auto s = a + b;
    CHECK(s.precision() == 3);
    CHECK(s == zs({0, 1, 1, 0}));
    CHECK(ms(5, 1, {0, 4}) + ms(5, 1, {0, 3}) == ms(5, 1, {0, 2}));
}

TEST_CASE("mul") {
    CHECK(zs({1, 1, 0}) * zs({1, -1, 0}) == zs({1, 0, -1}));
    CHECK(pow(zs({1, 1, 1}), 2) == zs({1, 2, 3}));
    CHECK(ms(3, 1, {1, 2, 0}) * ms(3, 1, {1, 2, 0}) == ms(3, 1, {1, 1, 1}));
}

TEST_CASE("ring mismatch is rejected") {
    CHECK_THROWS_AS(ms(3, 1, {1}) + ms(5, 1, {1}), RingMismatch);
    CHECK_THROWS_AS(ms(3, 1, {1}) * ms(3, 2, {1}), RingMismatch);
}

TEST_CASE("residue ring construction") {
    CHECK_THROWS(ResidueRing(4, 1));
    CHECK_THROWS(ResidueRing(5, 0));
    CHECK_THROWS(ResidueRing(2, 70));
    CHECK(ResidueRing(2, 14).modulus() == 16384);
    CHECK(ResidueRing(3, 1).from_int(-1) == 2);
}

TEST_CASE("invert") {
    auto g = invert(zs({1, -1, 0, 0, 0, 0}));
    CHECK(g == zs({1, 1, 1, 1, 1, 1}));

    auto a = ms(3, 2, {1, 3, 0, 0, 0});
    auto inv = invert(a);
    CHECK(inv[1] == 6);  // -3 mod 9
    CHECK(a * inv == ModSeries::one(a.ring(), 4));

    CHECK_THROWS_AS(invert(ms(3, 2, {3, 1})), NotInvertible);
    CHECK_THROWS_AS(invert(zs({2, 1})), NotInvertible);
}

TEST_CASE("pow") {
    CHECK(pow(zs({1, 1, 0, 0}), 2) == zs({1, 2, 1, 0}));
    CHECK(pow(zs({1, -1, 0, 0, 0}), -2) == zs({1, 2, 3, 4, 5}));
    CHECK(pow(zs({7, 3, 2}), 0) == ZSeries::one(IntegerRing{}, 2));
    CHECK_THROWS_AS(pow(ms(3, 1, {0, 1}), -1), NotInvertible);

    // E_18 = 1 mod 27, so every power of it is the series 1.
    auto e18 = reduce_mod(E_k(18, 300), 3, 3);
    auto p12 = pow(e18, 12);
    CHECK(p12 == ModSeries::one(p12.ring(), 300));
}

TEST_CASE("reduce_mod") {
    QQSeries a(RationalRing{}, std::vector<mpq_class>{mpq_class(691, 2730), mpq_class(1, 6)});
    auto r691 = reduce_mod(a, 691, 1);
    CHECK(r691[0] == 0);
    CHECK(r691[1] == 576);  // 6 * 576 = 3456 = 5 * 691 + 1
    QQSeries sixth(RationalRing{}, std::vector<mpq_class>{mpq_class(1, 6)});
    CHECK(reduce_mod(sixth, 5, 1)[0] == 1);

    QQSeries bad(RationalRing{}, std::vector<mpq_class>{mpq_class(1, 3)});
    CHECK_THROWS(reduce_mod(bad, 3, 2));

    auto z = zs({-1, 26, 27, 28});
    auto r = reduce_mod(z, 3, 3);
    CHECK(r == ms(3, 3, {26, 26, 0, 1}));
    CHECK(reduce_mod(r, 1) == ms(3, 1, {2, 2, 0, 1}));
}

TEST_CASE("ord_ell") {
    CHECK(ord_ell(reduce_mod(zs({3, 9, 1}), 3, 1)) == 2);
    CHECK_FALSE(ord_ell(ModSeries(ResidueRing(3, 1), 10)).has_value());
    CHECK(ord_ell(ms(5, 2, {0, 0, 0, 5})) == 3);
}

TEST_CASE("ring axioms on random series") {
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_z(25), b = random_z(25), c = random_z(25);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);

        auto x = random_mod(25, 7, 3), y = random_mod(25, 7, 3), z = random_mod(25, 7, 3);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("invert is a two-sided inverse") {
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_mod(30, 3, 4);
        if (!a.ring().is_unit(a[0])) a = a.with_coefficient(0, 1);
        auto inv = invert(a);
        auto one = ModSeries::one(a.ring(), 30);
        CHECK(a * inv == one);
        CHECK(inv * a == one);
    }
    auto z = random_z(20).with_coefficient(0, -1);
    CHECK(z * invert(z) == ZSeries::one(IntegerRing{}, 20));
}

TEST_CASE("pow agrees with repeated multiplication") {
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_z(15, 5);
        auto acc = ZSeries::one(IntegerRing{}, 15);
        for (int e = 0; e <= 8; ++e) {
            CHECK(pow(a, e) == acc);
            acc = acc * a;
        }
        auto m = random_mod(15, 2, 10);
        auto macc = ModSeries::one(m.ring(), 15);
        for (int e = 0; e <= 8; ++e) {
            CHECK(pow(m, e) == macc);
            macc = macc * m;
        }
    }
}

TEST_CASE("reduction commutes with ring operations") {
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_z(20, 1000), b = random_z(20, 1000);
        CHECK(reduce_mod(a * b, 5, 2) == reduce_mod(a, 5, 2) * reduce_mod(b, 5, 2));
        CHECK(reduce_mod(a + b, 2, 12) == reduce_mod(a, 2, 12) + reduce_mod(b, 2, 12));
    }
}

TEST_CASE("large moduli use exact products") {
    // 3^39 is above 2^61; products must not wrap.
    ResidueRing ring(3, 39);
    const std::uint64_t m = ring.modulus();
    auto a = ModSeries(ring, std::vector<std::uint64_t>{m - 1, m - 2});
    auto sq = a * a;
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 4);
}
