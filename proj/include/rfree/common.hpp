#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rfree {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Thrown when an input exceeds an operation's stated enumeration or memory
// budget. CLI maps this to exit code 3.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline bool approx_equal(cplx a, cplx b, double tol) {
    return std::abs(a - b) <= tol;
}

// a mod m in [0, m), for any sign of a
inline std::uint64_t mod_floor(std::int64_t a, std::uint64_t m) {
    std::int64_t r = a % static_cast<std::int64_t>(m);
    if (r < 0)
        r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

// (a * b) mod m without overflow, m < 2^64
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// b^e, throws std::overflow_error past 2^64
inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= b;
        if (r > ~static_cast<std::uint64_t>(0))
            throw std::overflow_error("ipow: 64-bit overflow");
    }
    return static_cast<std::uint64_t>(r);
}

// b^e saturating at cap instead of overflowing (for budget tests)
inline std::uint64_t ipow_clamped(std::uint64_t b, unsigned e, std::uint64_t cap) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= b;
        if (r > cap)
            return cap;
    }
    return static_cast<std::uint64_t>(r);
}

// floor(n^(1/r))
inline std::uint64_t rth_root_floor(std::uint64_t n, unsigned r) {
    if (r == 0)
        throw std::invalid_argument("rth_root_floor: r must be positive");
    if (r == 1 || n < 2)
        return n;
    std::uint64_t x = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / r)) + 2;
    while (x > 1 && ipow_clamped(x, r, ~static_cast<std::uint64_t>(0)) > n)
        --x;
    return x;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) { return rth_root_floor(n, 2); }

} // namespace rfree
