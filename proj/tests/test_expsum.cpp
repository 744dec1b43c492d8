#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rfree/expsum.hpp"

using namespace rfree;

namespace {

// test-side term-by-term oracle with raw std::polar phases
cplx gauss_oracle(std::uint64_t q, std::int64_t n, std::int64_t m) {
    cplx acc = 0;
    for (std::uint64_t x = 1; x <= q; ++x) {
        const std::int64_t xx = static_cast<std::int64_t>(x);
        acc += std::polar(1.0, 2.0 * pi *
                                   static_cast<double>(mod_floor(n * xx * xx + m * xx, q)) /
                                   static_cast<double>(q));
    }
    return acc;
}

cplx salie_oracle(std::uint64_t c, std::int64_t a, std::int64_t b) {
    cplx acc = 0;
    for (std::uint64_t x = 1; x <= c; ++x) {
        if (gcd_u64(x, c) != 1)
            continue;
        const std::uint64_t xb = mod_inverse(static_cast<std::int64_t>(x), c).value;
        const std::int64_t arg = a * static_cast<std::int64_t>(x) + b * static_cast<std::int64_t>(xb);
        acc += static_cast<double>(jacobi(static_cast<std::int64_t>(x), c)) *
               std::polar(1.0, 2.0 * pi * static_cast<double>(mod_floor(arg, c)) / static_cast<double>(c));
    }
    return acc;
}

constexpr double sqrt3 = 1.7320508075688772;

} // namespace

TEST_CASE("gauss_direct point values") {
    CHECK(approx_equal(gauss_direct({1, 5, 7}), 1.0, 1e-12));
    CHECK(approx_equal(gauss_direct({5, 0, 0}), 5.0, 1e-12));
    // G(3;1,0) = 2 e_3(1) + 1 = i sqrt(3); sign cross-checked against G^2 = -3
    const cplx g3 = gauss_direct({3, 1, 0});
    CHECK(approx_equal(g3, cplx(0.0, sqrt3), 1e-9));
    CHECK(approx_equal(g3 * g3, cplx(-3.0, 0.0), 1e-9));
    CHECK(approx_equal(gauss_direct({4, 1, 0}), cplx(2.0, 2.0), 1e-9));
}

TEST_CASE("gauss_reduce matches the gcd-extraction cases") {
    // d = (6,2) = 2 does not divide m = 3
    CHECK(approx_equal(gauss_reduce({6, 2, 3}), 0.0, 1e-12));
    CHECK(approx_equal(gauss_direct({6, 2, 3}), 0.0, 1e-9));
    // d | m: both sides by direct summation
    CHECK(approx_equal(gauss_reduce({6, 2, 4}), 2.0 * gauss_oracle(3, 1, 2), 1e-9));
    CHECK(approx_equal(gauss_direct({6, 2, 4}), 2.0 * gauss_oracle(3, 1, 2), 1e-9));
    // 9 == 1 (mod 4) so the square has positive sign
    const cplx g9 = gauss_reduce({9, 1, 0});
    CHECK(approx_equal(g9 * g9, cplx(9.0, 0.0), 1e-9));
    CHECK(approx_equal(g9, gauss_oracle(9, 1, 0), 1e-9));
}

TEST_CASE("gauss_reduce equals gauss_direct on a dense sample") {
    for (std::uint64_t q = 1; q <= 40; ++q) {
        const double tol = 1e-9 * std::sqrt(static_cast<double>(q));
        for (std::int64_t n = -static_cast<std::int64_t>(q); n <= static_cast<std::int64_t>(q); ++n)
            for (std::int64_t m = -static_cast<std::int64_t>(q); m <= static_cast<std::int64_t>(q); m += 3)
                REQUIRE(approx_equal(gauss_reduce({q, n, m}), gauss_oracle(q, n, m), tol));
    }
}

TEST_CASE("|G(q;1)|^2 = q for odd q") {
    for (std::uint64_t q = 1; q <= 399; q += 2) {
        CHECK(std::abs(std::norm(gauss_direct({q, 1, 0})) - static_cast<double>(q)) < 1e-6);
        // and the closed-form unit value matches direct summation
        CHECK(approx_equal(gauss_unit(q), gauss_direct({q, 1, 0}), 1e-9 * std::sqrt(static_cast<double>(q))));
    }
}

TEST_CASE("salie_direct point values") {
    CHECK(approx_equal(salie_direct({1, 12, -5}), 1.0, 1e-12));
    // S(3;1,1) = e_3(2) - e_3(1) = -i sqrt(3)
    CHECK(approx_equal(salie_direct({3, 1, 1}), cplx(0.0, -sqrt3), 1e-9));
    CHECK_THROWS_AS(salie_direct({4, 1, 1}), std::invalid_argument);
}

TEST_CASE("salie symmetry S(c;a,b) = S(c;b,a)") {
    for (std::uint64_t c = 1; c <= 45; c += 2)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(c); ++a)
            for (std::int64_t b = a; b < static_cast<std::int64_t>(c); ++b)
                REQUIRE(approx_equal(salie_direct({c, a, b}), salie_direct({c, b, a}),
                                     1e-9 * std::sqrt(static_cast<double>(c))));
}

TEST_CASE("salie_zero_b point values and agreement with direct summation") {
    // full character sum over the units of Z/3
    CHECK(approx_equal(salie_zero_b(3, 1, 0), 0.0, 1e-12));
    // S(3;1,0) is the quadratic Gauss sum
    CHECK(approx_equal(salie_zero_b(3, 1, 1), cplx(0.0, sqrt3), 1e-9));
    CHECK(approx_equal(salie_zero_b(3, 1, 1), t_sum({3, 1, 1}), 1e-9));
    // S(9;1,0) dies with the alpha >= 2 character sum
    CHECK(approx_equal(salie_zero_b(3, 2, 1), 0.0, 1e-9));
    CHECK(approx_equal(salie_oracle(9, 1, 0), 0.0, 1e-9));

    for (std::uint64_t p : {3ull, 5ull, 7ull})
        for (unsigned alpha = 1; alpha <= 3; ++alpha) {
            const std::uint64_t c = ipow(p, alpha);
            for (std::int64_t a = -3; a < static_cast<std::int64_t>(c); a += (a < 8 ? 1 : 5))
                REQUIRE(approx_equal(salie_zero_b(p, alpha, a), salie_oracle(c, a, 0),
                                     1e-9 * std::sqrt(static_cast<double>(c))));
        }
}

TEST_CASE("t_sum point values") {
    CHECK(approx_equal(t_sum({5, 0, 2}), 4.0, 1e-12)); // trivial character over 4 units
    CHECK(approx_equal(t_sum({9, 1, 1}), 0.0, 1e-12)); // closed-form vanishing
    CHECK(approx_equal(t_sum_direct({9, 1, 1}), 0.0, 1e-9));
    CHECK(approx_equal(t_sum({3, 1, 1}), cplx(0.0, sqrt3), 1e-9)); // e_3(1) - e_3(2)
    CHECK_THROWS_AS(t_sum({6, 1, 1}), std::invalid_argument);
}

TEST_CASE("t_sum closed form equals direct summation on prime powers") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull})
        for (unsigned alpha = 1; alpha <= 3; ++alpha)
            for (unsigned rho = 1; rho <= 3; ++rho) {
                const std::uint64_t c = ipow(p, alpha);
                for (std::int64_t a = 0; a < static_cast<std::int64_t>(std::min<std::uint64_t>(c, 30)); ++a)
                    REQUIRE(approx_equal(t_sum({c, a, rho}), t_sum_direct({c, a, rho}),
                                         1e-9 * std::sqrt(static_cast<double>(c))));
            }
}

TEST_CASE("jacobi prime-power identity (x/p^a) = (x/p)^a") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull})
        for (unsigned alpha = 1; alpha <= 3; ++alpha) {
            const std::uint64_t c = ipow(p, alpha);
            for (std::uint64_t x = 1; x < c; ++x) {
                if (x % p == 0)
                    continue;
                int pw = 1;
                for (unsigned i = 0; i < alpha; ++i)
                    pw *= jacobi(static_cast<std::int64_t>(x), p);
                REQUIRE(jacobi(static_cast<std::int64_t>(x), c) == pw);
            }
        }
}

TEST_CASE("salie bounds on a small exhaustive range") {
    // Weil bound and the b = 0 gcd bound, p in {3,5,7}, alpha <= 2
    for (std::uint64_t p : {3ull, 5ull, 7ull})
        for (unsigned alpha = 1; alpha <= 2; ++alpha) {
            const std::uint64_t c = ipow(p, alpha);
            const double weil = static_cast<double>(divisor_count(c)) *
                                std::pow(static_cast<double>(p), alpha / 2.0);
            for (std::int64_t a = 0; a < static_cast<std::int64_t>(c); ++a) {
                for (std::int64_t b = 0; b < static_cast<std::int64_t>(c); ++b) {
                    if (a % static_cast<std::int64_t>(p) == 0 && b % static_cast<std::int64_t>(p) == 0)
                        continue;
                    REQUIRE(std::abs(salie_direct({c, a, b})) <= weil + 1e-6);
                }
                const double cap = std::pow(static_cast<double>(p), alpha / 2.0) *
                                   std::sqrt(static_cast<double>(gcd_u64(c, mod_floor(a, c) == 0 ? c : mod_floor(a, c))));
                REQUIRE(std::abs(salie_direct({c, a, 0})) <= cap + 1e-6);
            }
        }
}
