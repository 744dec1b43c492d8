#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rfree/counting.hpp"

using namespace rfree;

namespace {

std::uint64_t naive_D(std::uint64_t H, std::uint64_t q, std::int64_t k) {
    std::uint64_t count = 0;
    const std::int64_t hh = static_cast<std::int64_t>(H);
    for (std::int64_t x = 1; x <= hh; ++x)
        for (std::int64_t y = 1; y <= hh; ++y)
            for (std::int64_t z = 1; z <= hh; ++z)
                count += mod_floor(x * x + y * y + z * z + k, q) == 0;
    return count;
}

bool rfree_trial(std::int64_t n, unsigned r) {
    if (n == 0)
        return false;
    const std::uint64_t a = static_cast<std::uint64_t>(n < 0 ? -n : n);
    for (std::uint64_t d = 2; ipow_clamped(d, r, a + 1) <= a; ++d)
        if (a % ipow(d, r) == 0)
            return false;
    return true;
}

std::uint64_t naive_R(std::uint64_t H, unsigned r, std::int64_t k) {
    std::uint64_t count = 0;
    const std::int64_t hh = static_cast<std::int64_t>(H);
    for (std::int64_t x = 1; x <= hh; ++x)
        for (std::int64_t y = 1; y <= hh; ++y)
            for (std::int64_t z = 1; z <= hh; ++z)
                count += rfree_trial(x * x + y * y + z * z + k, r);
    return count;
}

} // namespace

TEST_CASE("residue_count") {
    CHECK(residue_count(1, 4, 2) == 2); // x in {1,3}
    CHECK(residue_count(2, 4, 2) == 2); // x in {2,4}
    CHECK(residue_count(5, 4, 7) == 0);
    CHECK_THROWS_AS(residue_count(0, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(residue_count(3, 4, 2), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t H = 1 + rng() % 1000, q = 1 + rng() % 100;
        std::uint64_t sum = 0;
        for (std::uint64_t a = 1; a <= q; ++a)
            sum += residue_count(a, H, q);
        REQUIRE(sum == H); // the classes partition [1, H]
    }
}

TEST_CASE("count_D point values") {
    CHECK(count_D({7, 1, 3}) == 343); // empty congruence
    CHECK(count_D({4, 2, 1}) == naive_D(4, 2, 1));
    CHECK(naive_D(4, 2, 1) == 32);
    CHECK_THROWS_AS(count_D({4, count_d_budget + 1, 0}), budget_error);
}

TEST_CASE("count_D equals the naive triple loop, exhaustive small range") {
    for (std::uint64_t H = 1; H <= 25; ++H)
        for (std::uint64_t q = 1; q <= 25; ++q)
            for (std::int64_t k = -5; k <= 5; ++k)
                REQUIRE(count_D({H, q, k}) == naive_D(H, q, k));
}

TEST_CASE("D(q,q,k) = lambda(q;k)") {
    for (std::uint64_t q = 1; q <= 100; ++q)
        for (std::int64_t k = -5; k <= 5; ++k)
            REQUIRE(count_D({q, q, k}) == static_cast<std::uint64_t>(lambda_exact(q, k)));
}

TEST_CASE("compute_Ni point values") {
    CHECK(approx_equal(compute_Ni(1, {4, 2, 1}).value, 0.0, 1e-12)); // geometric sum vanishes
    CHECK(approx_equal(compute_Ni(1, {9, 1, 2}).value, 0.0, 1e-12)); // empty t-range
    CHECK(approx_equal(compute_Ni(2, {9, 1, 2}).value, 0.0, 1e-12));
    CHECK_THROWS_AS(compute_Ni(4, {4, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(compute_Ni(1, {4, ni_budget + 1, 1}), budget_error);
}

TEST_CASE("N_i are real and the decomposition reconstructs D") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        const std::uint64_t H = 1 + rng() % 200, q = 1 + rng() % 100;
        const std::int64_t k = static_cast<std::int64_t>(rng() % 11) - 5;
        for (int j = 1; j <= 3; ++j)
            REQUIRE(std::abs(compute_Ni(j, {H, q, k}).value.imag()) <= 1e-6);
        REQUIRE(decomposition_check({H, q, k}) <= 1e-6 * static_cast<double>(q));
    }
    // analytic cases
    CHECK(decomposition_check({4, 2, 1}) <= 1e-6);
    CHECK(decomposition_check({31, 1, -2}) == 0.0); // q = 1: all N_i empty, D = H^3
    CHECK(decomposition_check({12, 12, 3}) <= 1e-6 * 12);
    // N_3 absorbs what the main term and N_1, N_2 miss
    const auto n3 = compute_Ni(3, {3, 3, 0});
    const double lam = static_cast<double>(lambda_exact(3, 0));
    const double recon3 = lam + 3.0 * compute_Ni(1, {3, 3, 0}).value.real() +
                          3.0 * compute_Ni(2, {3, 3, 0}).value.real() + n3.value.real();
    REQUIRE(std::abs(static_cast<double>(count_D({3, 3, 0})) - recon3) <= 1e-6);
}

TEST_CASE("build_sieve marks exactly the non-r-free integers") {
    const RFreeSieve s2 = build_sieve(2, 20);
    const std::vector<std::uint64_t> not_free{4, 8, 9, 12, 16, 18, 20};
    for (std::uint64_t n = 1; n <= 20; ++n) {
        const bool expected = std::find(not_free.begin(), not_free.end(), n) == not_free.end();
        REQUIRE(s2.is_rfree(n) == expected);
        REQUIRE(s2.is_rfree(n) == rfree_trial(static_cast<std::int64_t>(n), 2));
    }
    const RFreeSieve s3 = build_sieve(3, 10);
    for (std::uint64_t n = 1; n <= 10; ++n)
        REQUIRE(s3.is_rfree(n) == (n != 8));
    CHECK(build_sieve(2, 1).is_rfree(1));
    CHECK(build_sieve(5, 100).is_rfree(1));
    CHECK_FALSE(s2.value_is_rfree(0));
    CHECK(s2.value_is_rfree(-5));
    CHECK_FALSE(s2.value_is_rfree(-18));
    CHECK_THROWS_AS(build_sieve(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_sieve(2, sieve_budget + 1), budget_error);
}

TEST_CASE("count_R_direct point values against trial division") {
    CHECK(count_R_direct(2, 2, 1) == naive_R(2, 2, 1));
    CHECK(naive_R(2, 2, 1) == 7); // only 1+1+1+1 = 4 fails
    CHECK(count_R_direct(1, 2, -3) == 0); // sole value is 0
    for (std::uint64_t H : {1ull, 3ull, 9ull, 17ull})
        for (unsigned r : {2u, 3u})
            for (std::int64_t k : {-5, -3, 0, 1, 4}) {
                const std::uint64_t R = count_R_direct(H, r, k);
                REQUIRE(R == naive_R(H, r, k));
                REQUIRE(R <= H * H * H);
            }
    CHECK_THROWS_AS(count_R_direct(count_r_budget + 1, 2, 1), budget_error);
}

TEST_CASE("count_R_direct is thread-count invariant") {
    for (unsigned threads : {1u, 2u, 3u, 7u})
        REQUIRE(count_R_direct(23, 2, -4, threads) == count_R_direct(23, 2, -4, 1));
}

TEST_CASE("count_R_moebius equals count_R_direct at full eta") {
    CHECK(count_R_moebius(MoebiusPlan::full(2, 2, 1)) == 7);
    CHECK(count_R_moebius(MoebiusPlan::full(1, 2, -3)) == 0);
    CHECK(count_R_moebius(MoebiusPlan::full(40, 3, 2)) ==
          static_cast<std::int64_t>(count_R_direct(40, 3, 2)));
    std::mt19937_64 rng(19);
    for (int i = 0; i < 40; ++i) {
        const std::uint64_t H = 1 + rng() % 30;
        const unsigned r = 2 + static_cast<unsigned>(rng() % 2);
        const std::int64_t k = static_cast<std::int64_t>(rng() % 11) - 5;
        REQUIRE(count_R_moebius(MoebiusPlan::full(H, r, k)) ==
                static_cast<std::int64_t>(count_R_direct(H, r, k)));
    }
    CHECK_THROWS_AS(count_R_moebius({10, 2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(count_R_moebius({10, 2, 1, MoebiusPlan::full_eta(10, 2, 1) + 1}),
                    std::invalid_argument);
}

TEST_CASE("zero_count") {
    CHECK(zero_count(5, 1) == 0);
    CHECK(zero_count(1, -3) == 1);   // 1+1+1 = 3
    CHECK(zero_count(2, -6) == 3);   // permutations of (1,1,2)
    CHECK(zero_count(10, -12) == 1); // only (2,2,2)
    // cross-check against a naive scan
    for (std::int64_t k : {-27, -14, -12, -6, -3, 0, 2})
        for (std::uint64_t H : {1ull, 2ull, 6ull, 11ull}) {
            std::uint64_t expected = 0;
            for (std::uint64_t x = 1; x <= H; ++x)
                for (std::uint64_t y = 1; y <= H; ++y)
                    for (std::uint64_t z = 1; z <= H; ++z)
                        expected += static_cast<std::int64_t>(x * x + y * y + z * z) + k == 0;
            REQUIRE(zero_count(H, k) == expected);
        }
}

TEST_CASE("count_R_direct is nondecreasing in H") {
    for (std::int64_t k : {-4, 0, 3}) {
        std::uint64_t prev = 0;
        for (std::uint64_t H = 1; H <= 25; ++H) {
            const std::uint64_t cur = count_R_direct(H, 2, k);
            REQUIRE(cur >= prev);
            prev = cur;
        }
    }
}
