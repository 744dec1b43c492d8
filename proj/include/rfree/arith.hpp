#pragma once

#include <numeric>
#include <vector>

#include "rfree/common.hpp"

namespace rfree {

struct PrimePower {
    std::uint64_t p;
    unsigned e;
    bool operator==(const PrimePower&) const = default;
};

// Prime-power decomposition, primes strictly increasing; empty for n = 1.
using Factorization = std::vector<PrimePower>;

struct Residue {
    std::uint64_t value;   // in [0, modulus)
    std::uint64_t modulus; // >= 1
    bool operator==(const Residue&) const = default;
};

// Jacobi symbol (a/n) for odd positive n; (a/1) = 1.
inline int jacobi(std::int64_t a, std::uint64_t n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    std::uint64_t u = mod_floor(a, n);
    int sign = 1;
    while (u != 0) {
        while (u % 2 == 0) {
            u /= 2;
            std::uint64_t m8 = n % 8;
            if (m8 == 3 || m8 == 5)
                sign = -sign;
        }
        std::swap(u, n);
        if (u % 4 == 3 && n % 4 == 3)
            sign = -sign;
        u %= n;
    }
    return n == 1 ? sign : 0;
}

// y with x*y == 1 (mod q); throws std::domain_error when gcd(x, q) > 1.
inline Residue mod_inverse(std::int64_t x, std::uint64_t q) {
    if (q == 0)
        throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (q == 1)
        return {0, 1};
    std::int64_t r0 = static_cast<std::int64_t>(q), r1 = static_cast<std::int64_t>(mod_floor(x, q));
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t t = r0 / r1;
        r0 -= t * r1;
        std::swap(r0, r1);
        s0 -= t * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: argument not invertible");
    return {mod_floor(s0, q), q};
}

// Trial division up to sqrt(n); n = 1 yields the empty factorization.
inline Factorization factorize(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("factorize: argument must be positive");
    Factorization f;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            f.push_back({d, e});
        }
    }
    if (n > 1)
        f.push_back({n, 1});
    return f;
}

inline std::uint64_t unfactorize(const Factorization& f) {
    std::uint64_t n = 1;
    for (const auto& pp : f)
        n *= ipow(pp.p, pp.e);
    return n;
}

inline int moebius(std::uint64_t n) {
    Factorization f = factorize(n);
    for (const auto& pp : f)
        if (pp.e > 1)
            return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

inline std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t tau = 1;
    for (const auto& pp : factorize(n))
        tau *= pp.e + 1;
    return tau;
}

// Unique residue modulo the product of pairwise coprime moduli.
inline Residue crt_lift(const std::vector<Residue>& parts) {
    Residue acc{0, 1};
    for (const auto& part : parts) {
        if (part.modulus == 0 || part.value >= part.modulus)
            throw std::invalid_argument("crt_lift: residue out of range");
        if (gcd_u64(acc.modulus, part.modulus) != 1)
            throw std::domain_error("crt_lift: moduli not pairwise coprime");
        unsigned __int128 prod = static_cast<unsigned __int128>(acc.modulus) * part.modulus;
        if (prod > ~static_cast<std::uint64_t>(0))
            throw std::overflow_error("crt_lift: modulus product exceeds 64 bits");
        // x = acc.value + acc.modulus * t, t chosen so x == part.value (mod part.modulus)
        std::uint64_t q = part.modulus;
        std::uint64_t diff = mod_floor(static_cast<std::int64_t>(part.value % q) -
                                           static_cast<std::int64_t>(acc.value % q),
                                       q);
        std::uint64_t t = mulmod(diff, mod_inverse(static_cast<std::int64_t>(acc.modulus % q), q).value, q);
        acc.value += acc.modulus * t;
        acc.modulus = static_cast<std::uint64_t>(prod);
    }
    return acc;
}

// Sieve of Eratosthenes; exactly the primes <= limit.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (std::uint64_t j = i * i; j <= limit; j += i)
                composite[j] = true;
        }
    }
    return primes;
}

} // namespace rfree
