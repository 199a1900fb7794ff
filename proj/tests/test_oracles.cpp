#include <doctest.h>

#include <numeric>

#include "etaq/arith.hpp"
#include "etaq/etaq.hpp"
#include "etaq/oracles.hpp"
#include "support.hpp"

using namespace etaq;
using namespace etaq::oracles;

namespace {

// y^2 + y = x^3 - x^2, conductor 11.
EllipticCurveOverFp conductor11(std::int64_t p) { return {0, -1, 1, 0, 0, p}; }

// Every (x, y) in F_p^2, plus infinity.
std::int64_t count_by_enumeration(const EllipticCurveOverFp& e) {
    const std::int64_t p = e.p;
    auto md = [p](std::int64_t v) { return ((v % p) + p) % p; };
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            if (md(y * y + e.a1 * x * y + e.a3 * y) == md(x * x * x + e.a2 * x * x + e.a4 * x + e.a6)) ++count;
    return count;
}

}  // namespace

TEST_CASE("sigma") {
    CHECK(sigma(6, 1) == 12);
    for (std::int64_t p : {2, 3, 5, 97}) CHECK(sigma(p, 0) == 2);
    CHECK(sigma(2, 11) == 2049);
    CHECK_THROWS(sigma(0, 1));
}

TEST_CASE("sigma coprime") {
    CHECK(sigma_coprime(5, 1, 11) == 6);
    CHECK(sigma_coprime(10, 1, 11) == 18);
    CHECK(sigma_coprime(11, 1, 11) == 1);
}

TEST_CASE("point counting") {
    CHECK(count_points(conductor11(2)) == 5);
    CHECK(count_points(conductor11(3)) == 5);
    auto f = expand(parse_eta("1:2,11:2"), 10, IntegerRing{});
    CHECK(f[2] == 2 + 1 - count_points(conductor11(2)));
    for (std::int64_t p : primes_up_to(120)) {
        if (p == 11) continue;
        CHECK(count_points(conductor11(p)) == count_by_enumeration(conductor11(p)));
    }
    CHECK_THROWS(count_points(conductor11(11)));
    CHECK(discriminant(conductor11(2)) == -11);
}

TEST_CASE("printed curve has the wrong conductor") {
    // y^2 - y = x^3 - x, i.e. a3 = -1, a4 = -1.
    EllipticCurveOverFp printed{0, 0, -1, -1, 0, 3};
    auto f = expand(parse_eta("1:2,11:2"), 5, IntegerRing{});
    CHECK(3 + 1 - count_points(printed) == -3);
    CHECK(f[3] == -1);
}

TEST_CASE("colored partitions") {
    auto v = colored_partition_series(10);
    CHECK(v[0] == 1);
    CHECK(v[1] == -2);
    CHECK(v[2] == -1);
}

TEST_CASE("brute eta expansion") {
    auto d = brute_eta_expand(parse_eta("1:24"), 5);
    CHECK(d == expand(parse_eta("1:24"), 5, IntegerRing{}));
    CHECK(brute_eta_expand(parse_eta("1:8,2:8"), 5)[2] == -8);
    CHECK(brute_eta_expand(parse_eta("2:12"), 5)[3] == -12);
}

TEST_CASE("primes") {
    CHECK(primes_up_to(10) == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(2) == std::vector<std::int64_t>{2});
    CHECK(primes_up_to(10000).size() == 1229);
    CHECK(primes_up_to(10000) == primes_below(10000));
}

TEST_CASE("legendre by Euler's criterion") {
    for (std::int64_t p : primes_up_to(200)) {
        if (p == 2) continue;
        for (std::int64_t a = -5; a < p; ++a) CHECK(legendre_euler(a, p) == testing_support::legendre_by_squares(a, p));
    }
}

TEST_CASE("Eichler-Shimura at level 11") {
    auto f = expand(parse_eta("1:2,11:2"), 200, IntegerRing{});
    for (std::int64_t p : primes_up_to(200)) {
        if (p == 11) continue;
        CHECK(f[static_cast<std::size_t>(p)] == p + 1 - count_points(conductor11(p)));
    }
}

TEST_CASE("point counts are divisible by 5") {
    for (std::int64_t p : primes_up_to(1000)) {
        if (p == 5 || p == 11) continue;
        CHECK(count_points(conductor11(p)) % 5 == 0);
    }
}

TEST_CASE("partition congruence") {
    auto v = colored_partition_series(500);
    for (std::int64_t n = 1; n <= 500; ++n) {
        if (n % 11 == 0) continue;
        CHECK(testing_support::mod(v[static_cast<std::size_t>(n - 1)] - sigma_coprime(n, 1, 11), 5) == 0);
    }
}
