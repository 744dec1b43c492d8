#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rfree/arith.hpp"
#include "rfree/common.hpp"
#include "rfree/expsum.hpp"

// Solution counts of x^2 + y^2 + z^2 + k == 0 (mod q) over [1,q]^3, untwisted
// (an exact integer) and twisted by the additive character e_q(nx + my + lz).
// Three routes are provided: brute-force triple enumeration, CRT splitting
// into prime-power factors, and the Gauss/Salie closed form
//   lambda(p^r; u,v,w,k) = p^{-r} sum over beta <= r with p^beta | (u,v,w) of
//       p^{3 beta} G(p^{r-beta}; 1)^3 S(p^{r-beta}; k, -(4)^{-1}(u^2+v^2+w^2)/p^{2 beta})
// valid for odd p. p = 2 always routes to enumeration.

namespace rfree {

struct LambdaQuery {
    std::uint64_t q; // >= 1
    std::int64_t n = 0, m = 0, l = 0;
    std::int64_t k = 0;
    bool untwisted() const { return n == 0 && m == 0 && l == 0; }
};

struct LambdaValue {
    cplx value;
    std::optional<std::int64_t> exact; // present for untwisted queries
};

inline constexpr std::uint64_t lambda_brute_budget = 1'000'000'000; // q^3 triples
inline constexpr std::uint64_t lambda_pair_budget = 1'000'000'000;  // q^2 pairs

// Square roots modulo q: for each residue s the ascending list of c in [1, q]
// with c^2 == s (mod q), stored CSR-style.
class SquareRootTable {
  public:
    explicit SquareRootTable(std::uint64_t q) : q_(q), sq_(q + 1), start_(q + 2, 0), roots_(q) {
        for (std::uint64_t x = 1; x <= q; ++x) {
            sq_[x] = mulmod(x, x, q);
            ++start_[sq_[x] + 1];
        }
        for (std::uint64_t s = 0; s < q + 1; ++s)
            start_[s + 1] += start_[s];
        std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
        for (std::uint64_t x = 1; x <= q; ++x)
            roots_[fill[sq_[x]]++] = static_cast<std::uint32_t>(x);
    }
    std::uint64_t modulus() const { return q_; }
    std::uint64_t square_mod(std::uint64_t x) const { return sq_[x]; } // x in [0, q]
    std::uint32_t root_count(std::uint64_t s) const { return start_[s + 1] - start_[s]; }
    std::span<const std::uint32_t> roots(std::uint64_t s) const {
        return {roots_.data() + start_[s], roots_.data() + start_[s + 1]};
    }

  private:
    std::uint64_t q_;
    std::vector<std::uint32_t> sq_;
    std::vector<std::uint32_t> start_;
    std::vector<std::uint32_t> roots_;
};

// Exact triple enumeration over [1,q]^3. Budget: q^3 <= 1e9.
inline LambdaValue lambda_brute(const LambdaQuery& lq) {
    const std::uint64_t q = lq.q;
    if (q == 0)
        throw std::invalid_argument("lambda_brute: modulus must be positive");
    if (ipow_clamped(q, 3, lambda_brute_budget + 1) > lambda_brute_budget)
        throw budget_error("lambda_brute: q^3 exceeds enumeration budget");
    std::vector<std::uint32_t> sq(q + 1);
    for (std::uint64_t x = 1; x <= q; ++x)
        sq[x] = static_cast<std::uint32_t>(mulmod(x, x, q));
    const std::uint64_t negk = mod_floor(-lq.k, q);

    if (lq.untwisted()) {
        std::int64_t count = 0;
        for (std::uint64_t x = 1; x <= q; ++x) {
            for (std::uint64_t y = 1; y <= q; ++y) {
                std::uint64_t s = negk + 2 * q - sq[x] - sq[y];
                s %= q;
                const std::uint32_t target = static_cast<std::uint32_t>(s);
                for (std::uint64_t z = 1; z <= q; ++z)
                    count += sq[z] == target;
            }
        }
        return {cplx(static_cast<double>(count), 0.0), count};
    }

    PhaseTable w(q);
    const std::uint64_t n = mod_floor(lq.n, q), m = mod_floor(lq.m, q), l = mod_floor(lq.l, q);
    std::vector<std::uint32_t> lz(q + 1);
    for (std::uint64_t z = 1; z <= q; ++z)
        lz[z] = static_cast<std::uint32_t>(mulmod(l, z, q));
    cplx acc = 0;
    for (std::uint64_t x = 1; x <= q; ++x) {
        const std::uint64_t nx = mulmod(n, x, q);
        for (std::uint64_t y = 1; y <= q; ++y) {
            std::uint64_t s = negk + 2 * q - sq[x] - sq[y];
            s %= q;
            const std::uint32_t target = static_cast<std::uint32_t>(s);
            const std::uint64_t base = (nx + mulmod(m, y, q)) % q;
            for (std::uint64_t z = 1; z <= q; ++z) {
                if (sq[z] == target) {
                    std::uint64_t idx = base + lz[z];
                    if (idx >= q)
                        idx -= q;
                    acc += w[idx];
                }
            }
        }
    }
    return {acc, std::nullopt};
}

// Exact untwisted count in O(q^2) via the square-root table. Budget: q^2 <= 1e9.
inline std::int64_t lambda_untwisted_exact(std::uint64_t q, std::int64_t k) {
    if (q == 0)
        throw std::invalid_argument("lambda_untwisted_exact: modulus must be positive");
    if (ipow_clamped(q, 2, lambda_pair_budget + 1) > lambda_pair_budget)
        throw budget_error("lambda_untwisted_exact: q^2 exceeds enumeration budget");
    SquareRootTable tab(q);
    const std::uint64_t negk = mod_floor(-k, q);
    std::int64_t count = 0;
    for (std::uint64_t x = 1; x <= q; ++x) {
        const std::uint64_t sx = negk + 2 * q - tab.square_mod(x);
        for (std::uint64_t y = 1; y <= q; ++y)
            count += tab.root_count((sx - tab.square_mod(y)) % q);
    }
    return count;
}

// Closed form for odd prime powers (see header comment). Must agree with
// lambda_brute; the untwisted result is rounded to the nearest integer.
inline LambdaValue lambda_prime_power(std::uint64_t p, unsigned r, std::int64_t u, std::int64_t v,
                                      std::int64_t w, std::int64_t k) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("lambda_prime_power: p must be an odd prime");
    if (r == 0)
        throw std::invalid_argument("lambda_prime_power: exponent must be positive");
    const std::uint64_t q = ipow(p, r);
    const std::uint64_t ur = mod_floor(u, q), vr = mod_floor(v, q), wr = mod_floor(w, q);
    const std::uint64_t g = gcd_u64(gcd_u64(ur, vr), wr); // 0 when fully untwisted
    const unsigned __int128 sumsq = static_cast<unsigned __int128>(ur) * ur +
                                    static_cast<unsigned __int128>(vr) * vr +
                                    static_cast<unsigned __int128>(wr) * wr;
    cplx total = 0;
    std::uint64_t pbeta = 1;
    for (unsigned beta = 0; beta <= r; ++beta, pbeta *= p) {
        if (g != 0 && g % pbeta != 0)
            break; // divisibility by p^beta only gets harder as beta grows
        const unsigned alpha = r - beta;
        const double scale = std::pow(static_cast<double>(p), 3.0 * beta - static_cast<double>(r));
        if (alpha == 0) {
            total += scale;
            break;
        }
        const std::uint64_t qa = ipow(p, alpha);
        const unsigned __int128 div = static_cast<unsigned __int128>(pbeta) * pbeta;
        const std::uint64_t quotient = static_cast<std::uint64_t>((sumsq / div) % qa);
        const std::uint64_t inv4 = mod_inverse(4, qa).value;
        const std::int64_t b = -static_cast<std::int64_t>(mulmod(inv4, quotient, qa));
        const cplx g3 = std::pow(gauss_unit(qa), 3);
        const cplx s = salie_direct({qa, k, b});
        total += scale * g3 * s;
    }
    LambdaValue out{total, std::nullopt};
    if (ur == 0 && vr == 0 && wr == 0 && std::abs(total.real()) < 9.0e15)
        out.exact = static_cast<std::int64_t>(std::llround(total.real()));
    return out;
}

// O(r) untwisted evaluation: for odd p not dividing k only the beta = r and
// beta = r-1 terms survive, giving lambda(p^r; k) = p^{2r} + (k/p) p^{2r-1}.
// For p | k or p = 2 the value is delegated to enumeration when it fits and
// to the closed form otherwise.
inline LambdaValue lambda_fast_untwisted(std::uint64_t p, unsigned r, std::int64_t k) {
    if (p < 2)
        throw std::invalid_argument("lambda_fast_untwisted: p must be prime");
    if (r == 0)
        throw std::invalid_argument("lambda_fast_untwisted: exponent must be positive");
    if (p % 2 == 1 && mod_floor(k, p) != 0) {
        const int chi = jacobi(k, p);
        const std::uint64_t p2r = ipow_clamped(p, 2 * r, ~static_cast<std::uint64_t>(0));
        if (p2r < (static_cast<std::uint64_t>(1) << 62)) {
            const std::int64_t lam = static_cast<std::int64_t>(p2r) +
                                     chi * static_cast<std::int64_t>(p2r / p);
            return {cplx(static_cast<double>(lam), 0.0), lam};
        }
        const double lam = std::pow(static_cast<double>(p), 2.0 * r) *
                           (1.0 + static_cast<double>(chi) / static_cast<double>(p));
        return {cplx(lam, 0.0), std::nullopt};
    }
    if (ipow_clamped(p, 3 * r, lambda_brute_budget + 1) <= lambda_brute_budget)
        return lambda_brute({ipow(p, r), 0, 0, 0, k});
    if (p % 2 == 1)
        return lambda_prime_power(p, r, 0, 0, 0, k);
    const std::int64_t lam = lambda_untwisted_exact(ipow(p, r), k);
    return {cplx(static_cast<double>(lam), 0.0), lam};
}

// Multiplicative splitting (CRT): with q_i = q / p^e and the inverse taken
// mod p^e, lambda(q; n,m,l,k) = prod over p^e || q of
// lambda(p^e; n q_i^{-1}, m q_i^{-1}, l q_i^{-1}, k).
inline LambdaValue lambda_crt(const LambdaQuery& lq, const Factorization& fact) {
    if (lq.q == 0)
        throw std::invalid_argument("lambda_crt: modulus must be positive");
    if (unfactorize(fact) != lq.q)
        throw std::invalid_argument("lambda_crt: factorization does not match modulus");
    cplx value = 1.0;
    std::optional<std::int64_t> exact;
    if (lq.untwisted())
        exact = 1;
    for (const auto& pp : fact) {
        const std::uint64_t pe = ipow(pp.p, pp.e);
        const std::uint64_t qi = lq.q / pe;
        const std::uint64_t qibar = pe == 1 ? 0 : mod_inverse(static_cast<std::int64_t>(qi % pe), pe).value;
        const auto twist = [&](std::int64_t t) {
            return static_cast<std::int64_t>(mulmod(mod_floor(t, pe), qibar, pe));
        };
        const LambdaQuery part{pe, twist(lq.n), twist(lq.m), twist(lq.l), lq.k};
        LambdaValue factor;
        if (ipow_clamped(pe, 3, lambda_brute_budget + 1) <= lambda_brute_budget)
            factor = lambda_brute(part);
        else if (pp.p % 2 == 1)
            factor = lambda_prime_power(pp.p, pp.e, part.n, part.m, part.l, part.k);
        else
            throw budget_error("lambda_crt: even prime-power factor exceeds enumeration budget");
        value *= factor.value;
        if (exact && factor.exact)
            *exact *= *factor.exact;
        else
            exact.reset();
    }
    return {value, exact};
}

// Exact untwisted lambda(q; k) assembled multiplicatively from the cheapest
// exact route per prime power.
inline std::int64_t lambda_exact(std::uint64_t q, std::int64_t k) {
    if (q == 0)
        throw std::invalid_argument("lambda_exact: modulus must be positive");
    __int128 prod = 1;
    for (const auto& pp : factorize(q)) {
        const LambdaValue part = lambda_fast_untwisted(pp.p, pp.e, k);
        if (!part.exact)
            throw budget_error("lambda_exact: prime-power factor too large for exact evaluation");
        prod *= *part.exact;
        if (prod > static_cast<__int128>(9'000'000'000'000'000'000LL))
            throw std::overflow_error("lambda_exact: value exceeds 64 bits");
    }
    return static_cast<std::int64_t>(prod);
}

} // namespace rfree
