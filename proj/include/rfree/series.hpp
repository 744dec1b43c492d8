#pragma once

#include <utility>
#include <vector>

#include "rfree/arith.hpp"
#include "rfree/common.hpp"
#include "rfree/congruence.hpp"

// Singular series c_{k,r} = prod_p (1 - lambda(p^r; k) / p^{3r}) with a
// certified truncation bound. For odd p not dividing k the factor has the
// closed form 1 - p^{-r} - (k/p) p^{-r-1}; the finitely many remaining primes
// are evaluated exactly and must sit below the cutoff.

namespace rfree {

struct SeriesResult {
    double value = 0;
    std::uint64_t prime_cutoff = 0;
    double tail_bound = 0; // bound on |true - value|
    std::vector<std::pair<std::uint64_t, double>> per_prime_factors;
};

inline double euler_factor(std::uint64_t p, unsigned r, std::int64_t k) {
    if (r < 2)
        throw std::invalid_argument("euler_factor: r must be at least 2");
    if (p % 2 == 1 && mod_floor(k, p) != 0) {
        const double pr = std::pow(static_cast<double>(p), static_cast<double>(r));
        return 1.0 - 1.0 / pr - static_cast<double>(jacobi(k, p)) / (pr * static_cast<double>(p));
    }
    const LambdaValue lam = lambda_fast_untwisted(p, r, k);
    const double p3r = std::pow(static_cast<double>(p), 3.0 * r);
    const double l = lam.exact ? static_cast<double>(*lam.exact) : lam.value.real();
    return 1.0 - l / p3r;
}

// Bound on |log(full product) - log(partial product)| past the cutoff P,
// from |lambda(p^r;k) - p^{2r}| <= (r+1) p^{2r-1/2} for the good primes:
//   sum_{n>P} 2 (n^{-r} + (r+1) n^{-r-1/2})
// estimated by integrals.
inline double series_tail_log_bound(unsigned r, std::uint64_t P) {
    const double p = static_cast<double>(P);
    const double t1 = std::pow(p, 1.0 - static_cast<double>(r)) / (static_cast<double>(r) - 1.0);
    const double t2 = static_cast<double>(r + 1) * std::pow(p, 0.5 - static_cast<double>(r)) /
                      (static_cast<double>(r) - 0.5);
    return 2.0 * (t1 + t2);
}

inline SeriesResult singular_series(unsigned r, std::int64_t k, std::uint64_t P) {
    if (r < 2)
        throw std::invalid_argument("singular_series: r must be at least 2");
    if (P < 2)
        throw std::invalid_argument("singular_series: cutoff must be at least 2");
    // every prime dividing 2k must lie inside the cutoff, or the tail bound
    // (which assumes good primes only) would be invalid
    std::uint64_t bad = 2 * static_cast<std::uint64_t>(k < 0 ? -k : k);
    if (bad == 0)
        bad = 2;
    for (const auto& pp : factorize(bad))
        if (pp.p > P)
            throw std::invalid_argument("singular_series: cutoff below a prime dividing 2k");

    SeriesResult out;
    out.prime_cutoff = P;
    bool zero_factor = false;
    double log_sum = 0, comp = 0; // compensated summation in log space
    for (std::uint64_t p : primes_up_to(P)) {
        const double f = euler_factor(p, r, k);
        out.per_prime_factors.emplace_back(p, f);
        if (f <= 0.0) {
            zero_factor = true;
            continue;
        }
        const double term = std::log(f) - comp;
        const double t = log_sum + term;
        comp = (t - log_sum) - term;
        log_sum = t;
    }
    out.value = zero_factor ? 0.0 : std::exp(log_sum);
    out.tail_bound = out.value * std::expm1(series_tail_log_bound(r, P));
    return out;
}

} // namespace rfree
