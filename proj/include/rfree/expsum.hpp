#pragma once

#include <vector>

#include "rfree/arith.hpp"
#include "rfree/common.hpp"

// Complete exponential sums: Gauss sums G(q; n, m), Salie sums S(c; a, b)
// and character sums T(c; a, rho). Conventions: e_q(t) = exp(2*pi*i*t/q)
// with the argument always reduced mod q before evaluation, (x/c) is the
// Jacobi symbol (odd c only), and summation runs over ascending x so
// floating-point results are reproducible.

namespace rfree {

// e_q(t) from the reduced residue of t
inline cplx unit_phase(std::int64_t t, std::uint64_t q) {
    return std::polar(1.0, 2.0 * pi * static_cast<double>(mod_floor(t, q)) / static_cast<double>(q));
}

// e_q(j) for j in [0, q)
class PhaseTable {
  public:
    explicit PhaseTable(std::uint64_t q) : q_(q), w_(q) {
        for (std::uint64_t j = 0; j < q; ++j)
            w_[j] = std::polar(1.0, 2.0 * pi * static_cast<double>(j) / static_cast<double>(q));
    }
    std::uint64_t modulus() const { return q_; }
    // j must already lie in [0, q)
    const cplx& operator[](std::uint64_t j) const { return w_[j]; }

  private:
    std::uint64_t q_;
    std::vector<cplx> w_;
};

struct GaussQuery {
    std::uint64_t q; // >= 1
    std::int64_t n;
    std::int64_t m = 0;
};

struct SalieQuery {
    std::uint64_t c; // odd, >= 1
    std::int64_t a;
    std::int64_t b;
};

struct TSumQuery {
    std::uint64_t c; // odd, >= 1
    std::int64_t a;
    unsigned rho; // character power, >= 1 (0 behaves like any even power)
};

// G(q; n, m) = sum_{1<=x<=q} e_q(n x^2 + m x), term by term.
inline cplx gauss_direct(const GaussQuery& gq) {
    if (gq.q == 0)
        throw std::invalid_argument("gauss_direct: modulus must be positive");
    const std::uint64_t q = gq.q;
    const std::uint64_t n = mod_floor(gq.n, q);
    const std::uint64_t m = mod_floor(gq.m, q);
    PhaseTable w(q);
    // f(x) = n x^2 + m x mod q, stepped by first/second differences
    std::uint64_t cur = (n + m) % q;        // f(1)
    std::uint64_t step = (3 * n + m) % q;   // f(2) - f(1)
    const std::uint64_t step2 = (2 * n) % q;
    cplx acc = 0;
    for (std::uint64_t x = 1; x <= q; ++x) {
        acc += w[cur];
        cur += step;
        if (cur >= q)
            cur -= q;
        step += step2;
        if (step >= q)
            step -= q;
    }
    return acc;
}

// G(q; 1) for odd q by the classical sign evaluation:
// sqrt(q) for q = 1 (mod 4), i*sqrt(q) for q = 3 (mod 4).
// Squaring recovers (-1)^((q-1)/2) q.
inline cplx gauss_unit(std::uint64_t q) {
    if (q % 2 == 0)
        throw std::invalid_argument("gauss_unit: modulus must be odd");
    double r = std::sqrt(static_cast<double>(q));
    return q % 4 == 1 ? cplx(r, 0.0) : cplx(0.0, r);
}

// Structural evaluation of G(q; n, m):
//   (i)  with d = (q, n): zero when d does not divide m, else d*G(q/d; n/d, m/d);
//   (ii) for odd q/d the completed square e_q(-(4n)^{-1} m^2) (n/q) G(q; 1);
// falls back to direct summation for even moduli after gcd extraction.
inline cplx gauss_reduce(const GaussQuery& gq) {
    if (gq.q == 0)
        throw std::invalid_argument("gauss_reduce: modulus must be positive");
    std::uint64_t q = gq.q;
    std::uint64_t n = mod_floor(gq.n, q);
    std::uint64_t m = mod_floor(gq.m, q);
    if (q == 1)
        return 1.0;
    const std::uint64_t d = n == 0 ? q : gcd_u64(n, q);
    if (m % d != 0)
        return 0.0;
    const double scale = static_cast<double>(d);
    q /= d;
    n /= d;
    m /= d;
    if (q == 1)
        return scale;
    if (q % 2 == 1) {
        const std::uint64_t inv4n = mod_inverse(static_cast<std::int64_t>(mulmod(4 % q, n, q)), q).value;
        const std::uint64_t t = mod_floor(-static_cast<std::int64_t>(mulmod(inv4n, mulmod(m, m, q), q)), q);
        const int chi = jacobi(static_cast<std::int64_t>(n), q);
        return scale * unit_phase(static_cast<std::int64_t>(t), q) * static_cast<double>(chi) * gauss_unit(q);
    }
    return scale * gauss_direct({q, static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)});
}

// S(c; a, b) = sum over units x mod c of (x/c) e_c(a x + b x^{-1}).
inline cplx salie_direct(const SalieQuery& sq) {
    if (sq.c == 0 || sq.c % 2 == 0)
        throw std::invalid_argument("salie_direct: modulus must be odd and positive");
    const std::uint64_t c = sq.c;
    if (c == 1)
        return 1.0;
    const std::uint64_t a = mod_floor(sq.a, c);
    const std::uint64_t b = mod_floor(sq.b, c);
    PhaseTable w(c);
    cplx acc = 0;
    for (std::uint64_t x = 1; x <= c; ++x) {
        if (gcd_u64(x, c) != 1)
            continue;
        const std::uint64_t xinv = mod_inverse(static_cast<std::int64_t>(x), c).value;
        const std::uint64_t idx = (mulmod(a, x, c) + mulmod(b, xinv, c)) % c;
        acc += static_cast<double>(jacobi(static_cast<std::int64_t>(x), c)) * w[idx];
    }
    return acc;
}

// T(c; a, rho) = sum over units x mod c of (x/c)^rho e_c(a x), term by term.
inline cplx t_sum_direct(const TSumQuery& tq) {
    if (tq.c == 0 || tq.c % 2 == 0)
        throw std::invalid_argument("t_sum_direct: modulus must be odd and positive");
    const std::uint64_t c = tq.c;
    if (c == 1)
        return 1.0;
    const std::uint64_t a = mod_floor(tq.a, c);
    const bool twist = tq.rho % 2 == 1; // (x/c)^rho is (x/c) for odd rho, trivial on units otherwise
    PhaseTable w(c);
    cplx acc = 0;
    std::uint64_t idx = 0;
    for (std::uint64_t x = 1; x <= c; ++x) {
        idx += a;
        if (idx >= c)
            idx -= c;
        if (gcd_u64(x, c) != 1)
            continue;
        if (twist)
            acc += static_cast<double>(jacobi(static_cast<std::int64_t>(x), c)) * w[idx];
        else
            acc += w[idx];
    }
    return acc;
}

// T(c; a, rho) with the closed-form shortcut for prime powers:
// T(p^alpha; a, rho) = 0 whenever alpha >= 2 and p does not divide a.
inline cplx t_sum(const TSumQuery& tq) {
    if (tq.c == 0 || tq.c % 2 == 0)
        throw std::invalid_argument("t_sum: modulus must be odd and positive");
    if (tq.c == 1)
        return 1.0;
    const Factorization f = factorize(tq.c);
    if (f.size() == 1 && f[0].e >= 2 && mod_floor(tq.a, f[0].p) != 0)
        return 0.0;
    return t_sum_direct(tq);
}

// S(p^alpha; a, 0) through the unit-group splitting: with p^beta || a and
// a = p^beta a', S = p^beta T(p^{alpha-beta}; a', alpha); when p^alpha | a the
// sum collapses to the unit-character sum, phi(p^alpha) for even alpha and 0
// for odd alpha. Agrees with salie_direct everywhere.
inline cplx salie_zero_b(std::uint64_t p, unsigned alpha, std::int64_t a) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("salie_zero_b: p must be an odd prime");
    if (alpha == 0)
        throw std::invalid_argument("salie_zero_b: alpha must be positive");
    const std::uint64_t q = ipow(p, alpha);
    std::uint64_t am = mod_floor(a, q);
    if (am == 0) {
        const double phi = static_cast<double>(q - q / p);
        return alpha % 2 == 0 ? cplx(phi, 0.0) : cplx(0.0, 0.0);
    }
    unsigned beta = 0;
    while (am % p == 0) {
        am /= p;
        ++beta;
    }
    const cplx t = t_sum({ipow(p, alpha - beta), static_cast<std::int64_t>(am), alpha});
    return static_cast<double>(ipow(p, beta)) * t;
}

} // namespace rfree
