#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <fftw3.h>

#include "rfree/common.hpp"
#include "rfree/counting.hpp"
#include "rfree/expsum.hpp"
#include "rfree/series.hpp"

// Property suites behind `verify`: each drives one cluster of invariants with
// a deterministic seed and reports per-property case/failure counts. The
// exhaustive bound scans (Weil, T-sum vanishing) evaluate whole families of
// sums at once as DFTs of honestly-built character vectors.

namespace rfree {

struct PropertyResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    double worst = 0; // largest deviation or bound ratio seen
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    bool small_budget = false;
    unsigned threads = 0;
};

namespace detail {

inline unsigned effective_threads(unsigned requested) {
    return requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
}

// DFT out[a] = sum_x in[x] e^{+2 pi i a x / n}
class Dft {
  public:
    explicit Dft(std::size_t n) : n_(n) {
        in_ = static_cast<cplx*>(fftw_malloc(sizeof(cplx) * n));
        out_ = static_cast<cplx*>(fftw_malloc(sizeof(cplx) * n));
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in_),
                                 reinterpret_cast<fftw_complex*>(out_), FFTW_BACKWARD,
                                 FFTW_ESTIMATE);
    }
    ~Dft() {
        fftw_destroy_plan(plan_);
        fftw_free(in_);
        fftw_free(out_);
    }
    Dft(const Dft&) = delete;
    Dft& operator=(const Dft&) = delete;
    std::size_t size() const { return n_; }
    cplx* in() { return in_; }
    const cplx* out() const { return out_; }
    void execute() { fftw_execute(plan_); }

  private:
    std::size_t n_;
    cplx* in_;
    cplx* out_;
    fftw_plan plan_;
};

template <class Fn>
inline void parallel_over(std::uint64_t count, unsigned threads, Fn&& fn) {
    threads = std::min<std::uint64_t>(std::max(1u, threads), count ? count : 1);
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; ++i)
            fn(i, 0u);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::uint64_t i = t; i < count; i += threads)
                fn(i, t);
        });
    for (auto& th : pool)
        th.join();
}

inline void merge_max(PropertyResult& into, std::uint64_t cases, std::uint64_t failures,
                      double worst) {
    into.cases += cases;
    into.failures += failures;
    into.worst = std::max(into.worst, worst);
}

} // namespace detail

// Gauss/Salie/T-sum invariants: structural reduction vs direct summation,
// |G(q;1)|^2 = q, Salie symmetry, the Weil bound, Lemma-2.4-style gcd bound,
// salie_zero_b agreement, and T-sum vanishing for alpha >= 2.
inline std::vector<PropertyResult> verify_expsum(const SuiteOptions& opt) {
    std::vector<PropertyResult> results;
    const unsigned threads = detail::effective_threads(opt.threads);

    { // gauss_reduce == gauss_direct, exhaustive |n|,|m| <= q
        const std::uint64_t qmax = opt.small_budget ? 60 : 200;
        PropertyResult res{"gauss_reduce_vs_direct"};
        std::vector<PropertyResult> partial(threads, res);
        detail::parallel_over(qmax, threads, [&](std::uint64_t i, unsigned tid) {
            const std::uint64_t q = i + 1;
            const double tol = 1e-9 * std::sqrt(static_cast<double>(q));
            auto& acc = partial[tid];
            for (std::int64_t n = -static_cast<std::int64_t>(q); n <= static_cast<std::int64_t>(q); ++n) {
                for (std::int64_t m = -static_cast<std::int64_t>(q); m <= static_cast<std::int64_t>(q); ++m) {
                    const double dev = std::abs(gauss_reduce({q, n, m}) - gauss_direct({q, n, m}));
                    ++acc.cases;
                    acc.failures += dev > tol;
                    acc.worst = std::max(acc.worst, dev);
                }
            }
        });
        for (const auto& p : partial)
            detail::merge_max(res, p.cases, p.failures, p.worst);
        results.push_back(res);
    }

    { // |G(q;1)|^2 = q for odd q
        PropertyResult res{"gauss_modulus_squared"};
        const std::uint64_t qmax = opt.small_budget ? 399 : 999;
        for (std::uint64_t q = 1; q <= qmax; q += 2) {
            const double dev = std::abs(std::norm(gauss_direct({q, 1, 0})) - static_cast<double>(q));
            ++res.cases;
            res.failures += dev > 1e-6;
            res.worst = std::max(res.worst, dev);
        }
        results.push_back(res);
    }

    { // S(c;a,b) = S(c;b,a), exhaustive
        PropertyResult res{"salie_symmetry"};
        const std::uint64_t cmax = opt.small_budget ? 45 : 99;
        for (std::uint64_t c = 1; c <= cmax; c += 2) {
            std::vector<std::vector<cplx>> table(c, std::vector<cplx>(c));
            for (std::uint64_t a = 0; a < c; ++a)
                for (std::uint64_t b = 0; b < c; ++b)
                    table[a][b] = salie_direct({c, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
            const double tol = 1e-9 * std::sqrt(static_cast<double>(c));
            for (std::uint64_t a = 0; a < c; ++a) {
                for (std::uint64_t b = a; b < c; ++b) {
                    const double dev = std::abs(table[a][b] - table[b][a]);
                    ++res.cases;
                    res.failures += dev > tol;
                    res.worst = std::max(res.worst, dev);
                }
            }
        }
        results.push_back(res);
    }

    { // Weil bound |S(p^a; a, b)| <= tau(p^a) p^{a/2} when p does not divide a or b,
      // whole a-rows per fixed b via one DFT of x -> (x/c) e_c(b x^{-1})
        PropertyResult res{"salie_weil_bound"};
        const std::vector<std::uint64_t> ps = opt.small_budget
                                                  ? std::vector<std::uint64_t>{3, 5, 7}
                                                  : std::vector<std::uint64_t>{3, 5, 7, 11, 13};
        for (std::uint64_t p : ps) {
            for (unsigned alpha = 1; alpha <= 3; ++alpha) {
                const std::uint64_t c = ipow(p, alpha);
                std::vector<int> chi(c, 0);
                std::vector<std::uint64_t> inv(c, 0);
                for (std::uint64_t x = 1; x < c; ++x) {
                    if (x % p == 0)
                        continue;
                    chi[x] = jacobi(static_cast<std::int64_t>(x), c);
                    inv[x] = mod_inverse(static_cast<std::int64_t>(x), c).value;
                }
                const double bound =
                    static_cast<double>(divisor_count(c)) * std::pow(static_cast<double>(p), alpha / 2.0) + 1e-6;
                PhaseTable w(c);
                detail::Dft dft(c);
                for (std::uint64_t b = 0; b < c; ++b) {
                    for (std::uint64_t x = 0; x < c; ++x)
                        dft.in()[x] = chi[x] == 0 ? cplx(0, 0)
                                                  : static_cast<double>(chi[x]) * w[mulmod(b, inv[x], c)];
                    dft.execute();
                    for (std::uint64_t a = 0; a < c; ++a) {
                        if (a % p == 0 && b % p == 0)
                            continue;
                        const double mag = std::abs(dft.out()[a]);
                        ++res.cases;
                        res.failures += mag > bound;
                        res.worst = std::max(res.worst, mag / bound);
                    }
                }
            }
        }
        results.push_back(res);
    }

    { // |S(p^a; a, 0)| <= p^{a/2} gcd(p^a, a)^{1/2}, and salie_zero_b == salie_direct
        PropertyResult bnd{"salie_b0_gcd_bound"};
        PropertyResult agree{"salie_zero_b_vs_direct"};
        const std::vector<std::uint64_t> ps = opt.small_budget
                                                  ? std::vector<std::uint64_t>{3, 5, 7}
                                                  : std::vector<std::uint64_t>{3, 5, 7, 11, 13};
        for (std::uint64_t p : ps) {
            for (unsigned alpha = 1; alpha <= 3; ++alpha) {
                const std::uint64_t c = ipow(p, alpha);
                const double tol = 1e-9 * std::sqrt(static_cast<double>(c));
                for (std::uint64_t a = 0; a < c; ++a) {
                    const cplx direct = salie_direct({c, static_cast<std::int64_t>(a), 0});
                    const double cap = std::pow(static_cast<double>(p), alpha / 2.0) *
                                           std::sqrt(static_cast<double>(gcd_u64(c, a == 0 ? c : a))) +
                                       1e-6;
                    const double mag = std::abs(direct);
                    ++bnd.cases;
                    bnd.failures += mag > cap;
                    bnd.worst = std::max(bnd.worst, mag / cap);
                    const double dev = std::abs(direct - salie_zero_b(p, alpha, static_cast<std::int64_t>(a)));
                    ++agree.cases;
                    agree.failures += dev > tol;
                    agree.worst = std::max(agree.worst, dev);
                }
            }
        }
        results.push_back(bnd);
        results.push_back(agree);
    }

    { // T(p^alpha; a, rho) = 0 for alpha >= 2, p not dividing a (all a via DFT);
      // |T(p; a, rho)| <= sqrt(p) at alpha = 1
        PropertyResult res{"tsum_vanishing"};
        PropertyResult res1{"tsum_prime_bound"};
        const std::uint64_t pmax = opt.small_budget ? 13 : 31;
        const unsigned amax = opt.small_budget ? 3 : 4;
        for (std::uint64_t p : primes_up_to(pmax)) {
            if (p == 2)
                continue;
            for (unsigned rho = 1; rho <= 3; ++rho) {
                { // alpha = 1
                    const double cap = std::sqrt(static_cast<double>(p)) + 1e-6;
                    for (std::uint64_t a = 1; a < p; ++a) {
                        const double mag = std::abs(t_sum_direct({p, static_cast<std::int64_t>(a), rho}));
                        ++res1.cases;
                        res1.failures += mag > cap;
                        res1.worst = std::max(res1.worst, mag / cap);
                    }
                }
                for (unsigned alpha = 2; alpha <= amax; ++alpha) {
                    const std::uint64_t c = ipow(p, alpha);
                    detail::Dft dft(c);
                    const bool twist = rho % 2 == 1;
                    for (std::uint64_t x = 0; x < c; ++x)
                        dft.in()[x] = x == 0 || x % p == 0
                                          ? cplx(0, 0)
                                          : cplx(twist ? jacobi(static_cast<std::int64_t>(x), c) : 1, 0);
                    dft.execute();
                    const double tol = 1e-9 * std::pow(static_cast<double>(p), alpha / 2.0);
                    for (std::uint64_t a = 1; a < c; ++a) {
                        if (a % p == 0)
                            continue;
                        const double mag = std::abs(dft.out()[a]);
                        ++res.cases;
                        res.failures += mag > tol;
                        res.worst = std::max(res.worst, mag);
                    }
                }
            }
        }
        results.push_back(res);
        results.push_back(res1);
    }

    return results;
}

// Lambda invariants: closed form vs brute force, CRT vs brute force,
// conjugate and permutation symmetry, the explicit gcd bound, and the
// cross-module identity lambda(q;k) = D(q,q,k).
inline std::vector<PropertyResult> verify_lambda(const SuiteOptions& opt) {
    std::vector<PropertyResult> results;
    const unsigned threads = detail::effective_threads(opt.threads);
    std::mt19937_64 rng(opt.seed);

    { // lambda_prime_power == lambda_brute
        PropertyResult res{"prime_power_vs_brute"};
        struct Case {
            std::uint64_t p;
            unsigned r;
            std::int64_t k, u, v, w;
        };
        std::vector<Case> cases;
        for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
            for (unsigned r = 1; r <= 3; ++r) {
                if (ipow_clamped(p, 3 * r, lambda_brute_budget + 1) > lambda_brute_budget)
                    continue;
                const std::uint64_t q = ipow(p, r);
                unsigned samples = opt.small_budget ? 4 : 24;
                if (q * q * q > 10'000'000ull) // trim the largest brute moduli
                    samples = opt.small_budget ? 2 : 6;
                std::uniform_int_distribution<std::uint64_t> twist(0, q - 1);
                for (std::int64_t k = -4; k <= 4; ++k) {
                    cases.push_back({p, r, k, 0, 0, 0});
                    if (p == 3) // exhaustive over [0,p)^3
                        for (std::int64_t u = 0; u < 3; ++u)
                            for (std::int64_t v = 0; v < 3; ++v)
                                for (std::int64_t w = 0; w < 3; ++w)
                                    cases.push_back({p, r, k, u, v, w});
                    for (unsigned s = 0; s < samples; ++s)
                        cases.push_back({p, r, k, static_cast<std::int64_t>(twist(rng)),
                                         static_cast<std::int64_t>(twist(rng)),
                                         static_cast<std::int64_t>(twist(rng))});
                }
            }
        }
        std::vector<PropertyResult> partial(threads, res);
        detail::parallel_over(cases.size(), threads, [&](std::uint64_t i, unsigned tid) {
            const Case& c = cases[i];
            const std::uint64_t q = ipow(c.p, c.r);
            const double tol = 1e-6 * std::pow(static_cast<double>(c.p), 2.0 * c.r);
            const cplx a = lambda_prime_power(c.p, c.r, c.u, c.v, c.w, c.k).value;
            const cplx b = lambda_brute({q, c.u, c.v, c.w, c.k}).value;
            const double dev = std::abs(a - b);
            auto& acc = partial[tid];
            ++acc.cases;
            acc.failures += dev > tol;
            acc.worst = std::max(acc.worst, dev);
        });
        for (const auto& p : partial)
            detail::merge_max(res, p.cases, p.failures, p.worst);
        results.push_back(res);
    }

    { // lambda_crt == lambda_brute over sampled moduli and twists
        PropertyResult res{"crt_vs_brute"};
        const unsigned samples = opt.small_budget ? 40 : 150;
        std::uniform_int_distribution<std::uint64_t> qdist(2, 200);
        std::uniform_int_distribution<std::int64_t> kdist(-4, 4);
        struct Case {
            std::uint64_t q;
            std::int64_t n, m, l, k;
        };
        std::vector<Case> cases;
        for (unsigned s = 0; s < samples; ++s) {
            const std::uint64_t q = qdist(rng);
            std::uniform_int_distribution<std::int64_t> tw(0, static_cast<std::int64_t>(q) - 1);
            cases.push_back({q, tw(rng), tw(rng), tw(rng), kdist(rng)});
            cases.push_back({q, 0, 0, 0, kdist(rng)});
        }
        std::vector<PropertyResult> partial(threads, res);
        detail::parallel_over(cases.size(), threads, [&](std::uint64_t i, unsigned tid) {
            const Case& c = cases[i];
            const LambdaQuery lq{c.q, c.n, c.m, c.l, c.k};
            const cplx via_crt = lambda_crt(lq, factorize(c.q)).value;
            const cplx via_brute = lambda_brute(lq).value;
            const double tol = 1e-6 * static_cast<double>(c.q) * static_cast<double>(c.q);
            const double dev = std::abs(via_crt - via_brute);
            auto& acc = partial[tid];
            ++acc.cases;
            acc.failures += dev > tol;
            acc.worst = std::max(acc.worst, dev);
        });
        for (const auto& p : partial)
            detail::merge_max(res, p.cases, p.failures, p.worst);
        results.push_back(res);
    }

    { // conjugate and permutation symmetry of the twisted sum
        PropertyResult conj{"conjugate_symmetry"};
        PropertyResult perm{"permutation_symmetry"};
        const unsigned samples = opt.small_budget ? 25 : 80;
        std::uniform_int_distribution<std::uint64_t> qdist(1, 100);
        std::uniform_int_distribution<std::int64_t> kdist(-4, 4);
        for (unsigned s = 0; s < samples; ++s) {
            const std::uint64_t q = qdist(rng);
            std::uniform_int_distribution<std::int64_t> tw(0, static_cast<std::int64_t>(q) - 1);
            const std::int64_t n = tw(rng), m = tw(rng), l = tw(rng), k = kdist(rng);
            const double tol = 1e-6 * static_cast<double>(q) * static_cast<double>(q);
            const cplx base = lambda_brute({q, n, m, l, k}).value;
            {
                const cplx neg = lambda_brute({q, -n, -m, -l, k}).value;
                const double dev = std::abs(std::conj(base) - neg);
                ++conj.cases;
                conj.failures += dev > tol;
                conj.worst = std::max(conj.worst, dev);
            }
            {
                const cplx swapped = lambda_brute({q, m, l, n, k}).value;
                const double dev = std::abs(base - swapped);
                ++perm.cases;
                perm.failures += dev > tol;
                perm.worst = std::max(perm.worst, dev);
            }
        }
        results.push_back(conj);
        results.push_back(perm);
    }

    { // |lambda(p^r; u,v,w,k)| <= (r+1)^2 p^r gcd(p^r, u, v, w) for odd p, p not dividing 2k
        PropertyResult res{"twisted_gcd_bound"};
        for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
            for (unsigned r = 1; r <= 3; ++r) {
                if (ipow_clamped(p, 3 * r, lambda_brute_budget + 1) > lambda_brute_budget)
                    continue;
                const std::uint64_t q = ipow(p, r);
                std::uniform_int_distribution<std::uint64_t> twist(0, q - 1);
                const unsigned samples = opt.small_budget ? 10 : 40;
                for (std::int64_t k : {1, 2, 3, -1, -4}) {
                    if (mod_floor(k, p) == 0)
                        continue;
                    for (unsigned s = 0; s < samples; ++s) {
                        const std::uint64_t u = twist(rng), v = twist(rng), w = twist(rng);
                        const double mag = std::abs(lambda_prime_power(p, r,
                                                                       static_cast<std::int64_t>(u),
                                                                       static_cast<std::int64_t>(v),
                                                                       static_cast<std::int64_t>(w), k)
                                                        .value);
                        const std::uint64_t g = gcd_u64(gcd_u64(gcd_u64(u, v), w), q);
                        const double cap = static_cast<double>((r + 1) * (r + 1)) *
                                               static_cast<double>(q) *
                                               static_cast<double>(g == 0 ? q : g) +
                                           1e-6;
                        ++res.cases;
                        res.failures += mag > cap;
                        res.worst = std::max(res.worst, mag / cap);
                    }
                }
            }
        }
        results.push_back(res);
    }

    { // lambda(q; k) = D(q, q, k)
        PropertyResult res{"lambda_equals_Dqq"};
        const std::uint64_t qmax = opt.small_budget ? 40 : 100;
        for (std::uint64_t q = 1; q <= qmax; ++q) {
            for (std::int64_t k = -5; k <= 5; ++k) {
                const std::int64_t lam = lambda_exact(q, k);
                const std::uint64_t d = count_D({q, q, k});
                ++res.cases;
                res.failures += lam != static_cast<std::int64_t>(d);
                res.worst = std::max(res.worst, std::abs(static_cast<double>(lam) - static_cast<double>(d)));
            }
        }
        results.push_back(res);
    }

    return results;
}

// Exactness of the orthogonality decomposition Eq-style residual checks.
inline std::vector<PropertyResult> verify_decomposition(const SuiteOptions& opt) {
    std::vector<PropertyResult> results;
    std::mt19937_64 rng(opt.seed);

    PropertyResult res{"decomposition_residual"};
    std::uniform_int_distribution<std::uint64_t> hdist(1, 200), qdist(1, 100);
    std::uniform_int_distribution<std::int64_t> kdist(-5, 5);
    const unsigned samples = opt.small_budget ? 30 : 100;
    for (unsigned s = 0; s < samples; ++s) {
        const std::uint64_t H = hdist(rng), q = qdist(rng);
        const std::int64_t k = kdist(rng);
        const double resid = decomposition_check({H, q, k});
        const double tol = 1e-6 * static_cast<double>(q);
        ++res.cases;
        res.failures += resid > tol;
        res.worst = std::max(res.worst, resid);
    }
    results.push_back(res);

    PropertyResult edge{"decomposition_analytic_cases"};
    for (std::int64_t k : {-4, -1, 0, 1, 3}) {
        { // q = 1: all N_i empty, D = H^3 exactly
            const double resid = decomposition_check({17, 1, k});
            ++edge.cases;
            edge.failures += resid != 0.0;
            edge.worst = std::max(edge.worst, resid);
        }
        for (std::uint64_t q : {2ull, 5ull, 12ull, 36ull}) { // H = q: D collapses to lambda
            const double resid = decomposition_check({q, q, k});
            ++edge.cases;
            edge.failures += resid > 1e-6 * static_cast<double>(q);
            edge.worst = std::max(edge.worst, resid);
        }
        { // N1(4, 2, 1)-style vanishing geometric sums (q | H)
            const NiValue n1 = compute_Ni(1, {4, 2, k});
            ++edge.cases;
            edge.failures += std::abs(n1.value) > 1e-9;
        }
    }
    results.push_back(edge);

    PropertyResult imag{"Ni_real_valued"};
    for (unsigned s = 0; s < (opt.small_budget ? 10u : 40u); ++s) {
        const std::uint64_t H = hdist(rng), q = qdist(rng);
        const std::int64_t k = kdist(rng);
        for (int i = 1; i <= 3; ++i) {
            const NiValue ni = compute_Ni(i, {H, q, k});
            ++imag.cases;
            imag.failures += std::abs(ni.value.imag()) > 1e-6;
            imag.worst = std::max(imag.worst, std::abs(ni.value.imag()));
        }
    }
    results.push_back(imag);

    return results;
}

// Moebius identity at full eta, sieve correctness, monotonicity.
inline std::vector<PropertyResult> verify_moebius(const SuiteOptions& opt) {
    std::vector<PropertyResult> results;
    const unsigned threads = detail::effective_threads(opt.threads);

    { // count_R_direct == count_R_moebius at full eta
        PropertyResult res{"direct_vs_moebius"};
        const std::uint64_t hmax = opt.small_budget ? 20 : 40;
        struct Case {
            std::uint64_t H;
            unsigned r;
            std::int64_t k;
        };
        std::vector<Case> cases;
        for (std::uint64_t H = 1; H <= hmax; ++H)
            for (unsigned r : {2u, 3u})
                for (std::int64_t k = -5; k <= 5; ++k)
                    cases.push_back({H, r, k});
        std::vector<PropertyResult> partial(threads, res);
        detail::parallel_over(cases.size(), threads, [&](std::uint64_t i, unsigned tid) {
            const Case& c = cases[i];
            const std::uint64_t direct = count_R_direct(c.H, c.r, c.k, 1);
            const std::int64_t moeb = count_R_moebius(MoebiusPlan::full(c.H, c.r, c.k));
            auto& acc = partial[tid];
            ++acc.cases;
            acc.failures += static_cast<std::int64_t>(direct) != moeb;
        });
        for (const auto& p : partial)
            detail::merge_max(res, p.cases, p.failures, p.worst);
        results.push_back(res);
    }

    { // sieve flags vs per-integer trial division
        PropertyResult res{"sieve_vs_trial_division"};
        const std::uint64_t limit = opt.small_budget ? 1000 : 5000;
        for (unsigned r : {2u, 3u, 4u}) {
            const RFreeSieve sieve = build_sieve(r, limit);
            for (std::uint64_t n = 1; n <= limit; ++n) {
                bool free = true;
                for (std::uint64_t d = 2; ipow_clamped(d, r, limit + 1) <= n; ++d)
                    if (n % ipow(d, r) == 0) {
                        free = false;
                        break;
                    }
                ++res.cases;
                res.failures += sieve.is_rfree(n) != free;
            }
        }
        results.push_back(res);
    }

    { // monotonicity of count_R_direct in H
        PropertyResult res{"count_R_monotone"};
        for (std::int64_t k : {-4, 0, 3}) {
            std::uint64_t prev = 0;
            for (std::uint64_t H = 1; H <= (opt.small_budget ? 15u : 30u); ++H) {
                const std::uint64_t cur = count_R_direct(H, 2, k, 1);
                ++res.cases;
                res.failures += cur < prev;
                prev = cur;
            }
        }
        results.push_back(res);
    }

    return results;
}

inline std::vector<PropertyResult> verify_all(const SuiteOptions& opt) {
    std::vector<PropertyResult> all;
    for (auto* suite : {&verify_expsum, &verify_lambda, &verify_decomposition, &verify_moebius}) {
        auto part = (*suite)(opt);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

} // namespace rfree
