#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rfree/arith.hpp"

using namespace rfree;

namespace {

// Euler-criterion Legendre symbol, test-side oracle
int legendre_oracle(std::int64_t a, std::uint64_t p) {
    std::uint64_t e = (p - 1) / 2, base = mod_floor(a, p), r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    if (r == 0)
        return 0;
    return r == 1 ? 1 : -1;
}

// Jacobi via factorization into Legendre symbols
int jacobi_oracle(std::int64_t a, std::uint64_t n) {
    int s = 1;
    for (const auto& pp : factorize(n))
        for (unsigned i = 0; i < pp.e; ++i)
            s *= legendre_oracle(a, pp.p);
    return s;
}

bool is_prime_trial(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

TEST_CASE("jacobi matches the Legendre-product oracle") {
    CHECK(jacobi(1, 1) == 1); // empty product
    CHECK(jacobi(7, 1) == 1);
    CHECK(jacobi(2, 15) == jacobi_oracle(2, 15));
    CHECK(jacobi(2, 15) == 1); // (2/3)(2/5) = (-1)(-1)
    CHECK(jacobi(3, 9) == 0);  // shared factor
    for (std::uint64_t n = 1; n <= 99; n += 2)
        for (std::int64_t a = -50; a <= 50; ++a)
            REQUIRE(jacobi(a, n) == jacobi_oracle(a, n));
}

TEST_CASE("jacobi is completely multiplicative in the numerator") {
    for (std::uint64_t n = 1; n <= 99; n += 2)
        for (std::int64_t a = -50; a <= 50; ++a)
            for (std::int64_t b = -50; b <= 50; b += 7)
                REQUIRE(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
}

TEST_CASE("jacobi rejects even or zero moduli") {
    CHECK_THROWS_AS(jacobi(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(1, 0), std::invalid_argument);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 7).value == 1);
    CHECK(mod_inverse(3, 7).value == 5); // 3*5 = 15 == 1 (mod 7)
    CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
    // involution wherever defined, exhaustive q <= 50
    for (std::uint64_t q = 1; q <= 50; ++q)
        for (std::uint64_t x = 0; x < q; ++x) {
            if (gcd_u64(x == 0 ? q : x, q) != 1)
                continue;
            const Residue inv = mod_inverse(static_cast<std::int64_t>(x), q);
            CHECK(mulmod(inv.value, x % q, q) == 1 % q);
            CHECK(mod_inverse(static_cast<std::int64_t>(inv.value), q).value == x % q);
        }
}

TEST_CASE("moebius and the fundamental divisor-sum identity") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        int sum = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0)
                continue;
            sum += moebius(d);
            if (d != n / d)
                sum += moebius(n / d);
        }
        REQUIRE(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    REQUIRE(is_prime_trial(9973));
    CHECK(factorize(9973) == Factorization{{9973, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = dist(rng);
        const Factorization f = factorize(n);
        REQUIRE(unfactorize(f) == n);
        for (std::size_t j = 0; j < f.size(); ++j) {
            REQUIRE(is_prime_trial(f[j].p));
            REQUIRE(f[j].e >= 1);
            if (j > 0)
                REQUIRE(f[j - 1].p < f[j].p);
        }
    }
}

TEST_CASE("divisor_count") {
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(9) == 3);
    CHECK(divisor_count(12) == 6);
}

TEST_CASE("crt_lift") {
    CHECK(crt_lift({{1, 2}}) == Residue{1, 2});
    CHECK(crt_lift({{1, 2}, {2, 3}}) == Residue{5, 6});
    CHECK(crt_lift({{0, 4}, {0, 9}}) == Residue{0, 36});
    CHECK_THROWS_AS(crt_lift({{1, 4}, {1, 6}}), std::domain_error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        std::uniform_int_distribution<std::uint64_t> m1(1, 40), m2(1, 40), m3(1, 40);
        const std::uint64_t q1 = m1(rng), q2 = m2(rng), q3 = m3(rng);
        if (gcd_u64(q1, q2) != 1 || gcd_u64(q1, q3) != 1 || gcd_u64(q2, q3) != 1)
            continue;
        std::vector<Residue> parts{{rng() % q1, q1}, {rng() % q2, q2}, {rng() % q3, q3}};
        const Residue lifted = crt_lift(parts);
        REQUIRE(lifted.modulus == q1 * q2 * q3);
        for (const auto& part : parts)
            REQUIRE(lifted.value % part.modulus == part.value);
    }
}

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    const auto primes = primes_up_to(100);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 2; n <= 100; ++n)
        if (is_prime_trial(n))
            expected.push_back(n);
    REQUIRE(expected.size() == 25);
    CHECK(primes == expected);
}
