#pragma once

#include <array>
#include <thread>
#include <vector>

#include "rfree/common.hpp"
#include "rfree/congruence.hpp"
#include "rfree/expsum.hpp"

// Box counts D(H,q,k) of x^2+y^2+z^2+k == 0 (mod q) over [1,H]^3, the
// orthogonality sums N_1, N_2, N_3 entering the exact decomposition
//   D = (H^3/q^3) lambda + 3 (H^2/q^2) N_1 + 3 (H/q) N_2 + N_3,
// the r-free sieve, and two independent algorithms for R(H,r,k).

namespace rfree {

struct BoxQuery {
    std::uint64_t H; // >= 1
    std::uint64_t q; // >= 1
    std::int64_t k;
};

inline constexpr std::uint64_t count_d_budget = 1'000'000;    // modulus cap
inline constexpr std::uint64_t ni_budget = 3'000;             // modulus cap
inline constexpr std::uint64_t sieve_budget = 1'000'000'000;  // bit-array length
inline constexpr std::uint64_t count_r_budget = 1'200;        // box side cap

// #{1 <= x <= H : x == a (mod q)} for a in [1, q]
inline std::uint64_t residue_count(std::uint64_t a, std::uint64_t H, std::uint64_t q) {
    if (a == 0 || a > q)
        throw std::invalid_argument("residue_count: residue must lie in [1, q]");
    return a <= H ? (H - a) / q + 1 : 0;
}

// Exact D(H,q,k): solutions mod q enumerated through the square-root table,
// each weighted by the product of box residue counts. Residues above
// min(q, H) have weight zero and are skipped.
inline std::uint64_t count_D(const BoxQuery& bq) {
    const std::uint64_t H = bq.H, q = bq.q;
    if (H == 0 || q == 0)
        throw std::invalid_argument("count_D: H and q must be positive");
    if (q > count_d_budget)
        throw budget_error("count_D: modulus exceeds enumeration budget");
    SquareRootTable tab(q);
    const std::uint64_t negk = mod_floor(-bq.k, q);
    const std::uint64_t amax = std::min(q, H);
    std::vector<std::uint64_t> rc(amax + 1);
    for (std::uint64_t a = 1; a <= amax; ++a)
        rc[a] = (H - a) / q + 1;
    std::uint64_t total = 0;
    for (std::uint64_t a = 1; a <= amax; ++a) {
        const std::uint64_t sa = negk + 2 * q - tab.square_mod(a);
        for (std::uint64_t b = 1; b <= amax; ++b) {
            const std::uint64_t s = (sa - tab.square_mod(b)) % q;
            std::uint64_t inner = 0;
            for (std::uint32_t c : tab.roots(s)) {
                if (c > H)
                    break; // roots ascend
                inner += (H - c) / q + 1;
            }
            total += rc[a] * rc[b] * inner;
        }
    }
    return total;
}

struct NiValue {
    int i;
    cplx value;
};

namespace detail {

// Geometric sum g(t) = sum_{h=1}^{H} e_q(h t) in closed form,
// e(theta (H+1)/2) sin(pi H theta) / sin(pi theta) with theta = t/q.
// Argument reductions are exact mod 2q.
inline cplx geometric_sum(std::uint64_t t, std::uint64_t q, std::uint64_t H) {
    const std::uint64_t q2 = 2 * q;
    const double s_num = std::sin(pi * static_cast<double>(mulmod(H % q2, t, q2)) / static_cast<double>(q));
    const double s_den = std::sin(pi * static_cast<double>(t) / static_cast<double>(q));
    const cplx phase = unit_phase(static_cast<std::int64_t>(mulmod((H + 1) % q2, t, q2)), q2);
    return phase * (s_num / s_den);
}

struct NiSet {
    cplx n1, n2, n3;
};

// All three N_i in one pass. The defining t-sums are evaluated with the
// twisted lambda values expanded over the solution set, which reorders the
// summation as sum over solutions of prod W(coord) with
// W(x) = sum_{t=1}^{q-1} e_q(-t x) g(t).
inline NiSet compute_ni_all(const BoxQuery& bq) {
    const std::uint64_t H = bq.H, q = bq.q;
    if (H == 0 || q == 0)
        throw std::invalid_argument("compute_Ni: H and q must be positive");
    if (q > ni_budget)
        throw budget_error("compute_Ni: modulus exceeds budget");
    if (q == 1)
        return {0.0, 0.0, 0.0}; // empty t-range
    std::vector<cplx> g(q);
    for (std::uint64_t t = 1; t < q; ++t)
        g[t] = geometric_sum(t, q, H);
    PhaseTable w(q);
    std::vector<cplx> W(q + 1);
    for (std::uint64_t x = 1; x <= q; ++x) {
        cplx acc = 0;
        std::uint64_t idx = 0;
        const std::uint64_t step = x % q;
        for (std::uint64_t t = 1; t < q; ++t) {
            idx += step;
            if (idx >= q)
                idx -= q;
            acc += std::conj(w[idx]) * g[t];
        }
        W[x] = acc;
    }
    SquareRootTable tab(q);
    std::vector<std::uint32_t> rcount(q);
    std::vector<cplx> rsum(q);
    for (std::uint64_t s = 0; s < q; ++s) {
        rcount[s] = tab.root_count(s);
        cplx acc = 0;
        for (std::uint32_t c : tab.roots(s))
            acc += W[c];
        rsum[s] = acc;
    }
    const std::uint64_t negk = mod_floor(-bq.k, q);
    cplx n1 = 0, n2 = 0, n3 = 0;
    for (std::uint64_t x = 1; x <= q; ++x) {
        const std::uint64_t sx = negk + 2 * q - tab.square_mod(x);
        cplx a1 = 0, a2 = 0, a3 = 0;
        for (std::uint64_t y = 1; y <= q; ++y) {
            const std::uint64_t s = (sx - tab.square_mod(y)) % q;
            const double cnt = rcount[s];
            a1 += cnt;
            a2 += cnt * W[y];
            a3 += W[y] * rsum[s];
        }
        n1 += W[x] * a1;
        n2 += W[x] * a2;
        n3 += W[x] * a3;
    }
    const double dq = static_cast<double>(q);
    return {n1 / dq, n2 / (dq * dq), n3 / (dq * dq * dq)};
}

} // namespace detail

inline NiValue compute_Ni(int i, const BoxQuery& bq) {
    if (i < 1 || i > 3)
        throw std::invalid_argument("compute_Ni: index must be 1, 2 or 3");
    const detail::NiSet all = detail::compute_ni_all(bq);
    const std::array<cplx, 3> vals{all.n1, all.n2, all.n3};
    return {i, vals[static_cast<std::size_t>(i - 1)]};
}

// |D - (H^3/q^3) lambda - 3 (H^2/q^2) N1 - 3 (H/q) N2 - N3|; the identity is
// exact, so the residual is pure floating-point noise (contract: <= 1e-6 q).
inline double decomposition_check(const BoxQuery& bq) {
    const double D = static_cast<double>(count_D(bq));
    const double lam = static_cast<double>(lambda_exact(bq.q, bq.k));
    const detail::NiSet ni = detail::compute_ni_all(bq);
    const double H = static_cast<double>(bq.H), q = static_cast<double>(bq.q);
    const cplx recon = (H * H * H) / (q * q * q) * lam + 3.0 * (H * H) / (q * q) * ni.n1 +
                       3.0 * (H / q) * ni.n2 + ni.n3;
    return std::abs(D - recon);
}

// r-free flags over [1, limit] as a bit array; flags[n] == true iff no prime
// p has p^r | n. Built by clearing multiples of d^r for every d >= 2.
struct RFreeSieve {
    unsigned r = 2;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> bits; // bit n set <=> n is r-free, n in [1, limit]

    bool is_rfree(std::uint64_t n) const { return (bits[n >> 6] >> (n & 63)) & 1; }
    // polynomial values: n != 0 and |n| r-free
    bool value_is_rfree(std::int64_t n) const {
        return n != 0 && is_rfree(static_cast<std::uint64_t>(n < 0 ? -n : n));
    }
};

inline RFreeSieve build_sieve(unsigned r, std::uint64_t limit) {
    if (r < 2)
        throw std::invalid_argument("build_sieve: r must be at least 2");
    if (limit == 0)
        throw std::invalid_argument("build_sieve: limit must be positive");
    if (limit > sieve_budget)
        throw budget_error("build_sieve: limit exceeds memory budget");
    RFreeSieve sieve{r, limit, std::vector<std::uint64_t>((limit >> 6) + 1, ~std::uint64_t{0})};
    for (std::uint64_t d = 2;; ++d) {
        const std::uint64_t step = ipow_clamped(d, r, limit + 1);
        if (step > limit)
            break;
        for (std::uint64_t m = step; m <= limit; m += step)
            sieve.bits[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
    }
    return sieve;
}

// #{(x,y,z) in [1,H]^3 : x^2+y^2+z^2+k = 0}; nonempty only for k <= -3.
inline std::uint64_t zero_count(std::uint64_t H, std::int64_t k) {
    if (k > -3)
        return 0;
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= H; ++x) {
        const std::int64_t sx = static_cast<std::int64_t>(x * x) + k;
        for (std::uint64_t y = 1; y <= H; ++y) {
            const std::int64_t t = -sx - static_cast<std::int64_t>(y * y);
            if (t < 1)
                break; // -sx - y^2 decreases in y
            const std::uint64_t z = isqrt_u64(static_cast<std::uint64_t>(t));
            count += z <= H && z * z == static_cast<std::uint64_t>(t);
        }
    }
    return count;
}

// Exact R(H,r,k) by scanning the box against the sieve. The x-range is
// partitioned across threads; partial counts combine by integer addition.
inline std::uint64_t count_R_direct(std::uint64_t H, unsigned r, std::int64_t k, unsigned threads = 0) {
    if (H == 0)
        throw std::invalid_argument("count_R_direct: H must be positive");
    if (H > count_r_budget)
        throw budget_error("count_R_direct: H exceeds enumeration budget");
    const std::uint64_t limit = 3 * H * H + static_cast<std::uint64_t>(k < 0 ? -k : k);
    const RFreeSieve sieve = build_sieve(r, limit);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, H));

    std::vector<std::uint64_t> partial(threads, 0);
    auto work = [&](unsigned tid) {
        std::uint64_t local = 0;
        for (std::uint64_t x = 1 + tid; x <= H; x += threads) {
            const std::int64_t sx = static_cast<std::int64_t>(x * x) + k;
            for (std::uint64_t y = 1; y <= H; ++y) {
                const std::int64_t sxy = sx + static_cast<std::int64_t>(y * y);
                for (std::uint64_t z = 1; z <= H; ++z) {
                    const std::int64_t n = sxy + static_cast<std::int64_t>(z * z);
                    if (n != 0 && sieve.is_rfree(static_cast<std::uint64_t>(n < 0 ? -n : n)))
                        ++local;
                }
            }
        }
        partial[tid] = local;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : partial)
        total += c;
    return total;
}

struct MoebiusPlan {
    std::uint64_t H;
    unsigned r;
    std::int64_t k;
    std::uint64_t eta; // d-range [1, eta]

    static std::uint64_t full_eta(std::uint64_t H, unsigned r, std::int64_t k) {
        return rth_root_floor(3 * H * H + static_cast<std::uint64_t>(k < 0 ? -k : k), r);
    }
    static MoebiusPlan full(std::uint64_t H, unsigned r, std::int64_t k) {
        return {H, r, k, full_eta(H, r, k)};
    }
};

// Moebius inclusion-exclusion: sum_{d <= eta} mu(d) #{triples: d^r | n, n != 0}
// with the per-modulus counts taken from count_D. At full eta this equals
// count_R_direct exactly.
inline std::int64_t count_R_moebius(const MoebiusPlan& plan) {
    if (plan.H == 0 || plan.r < 2)
        throw std::invalid_argument("count_R_moebius: need H >= 1 and r >= 2");
    if (plan.eta == 0 || plan.eta > MoebiusPlan::full_eta(plan.H, plan.r, plan.k))
        throw std::invalid_argument("count_R_moebius: eta out of range");
    const std::int64_t zeros = static_cast<std::int64_t>(zero_count(plan.H, plan.k));
    std::int64_t total = 0;
    for (std::uint64_t d = 1; d <= plan.eta; ++d) {
        const int mu = moebius(d);
        if (mu == 0)
            continue;
        const std::uint64_t D = count_D({plan.H, ipow(d, plan.r), plan.k});
        total += mu * (static_cast<std::int64_t>(D) - zeros);
    }
    return total;
}

} // namespace rfree
