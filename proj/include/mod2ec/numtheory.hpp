#pragma once

// Shared integer machinery: exact 64-bit modular arithmetic, deterministic
// Miller-Rabin, Pollard-rho factorization for multiprecision integers, and
// integer root extraction for monic depressed cubics.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace mod2ec {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Deterministic for all 64-bit inputs with this fixed base set.
inline bool is_prime_u64(uint64_t n) {
    constexpr uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (uint64_t q : bases) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : bases) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s && witness; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

inline uint64_t next_prime_above(uint64_t n) {
    mpz_class z(static_cast<unsigned long>(n));
    do {
        mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
        if (!z.fits_ulong_p()) throw std::overflow_error("prime exceeds 64 bits");
    } while (!is_prime_u64(z.get_ui()));  // mpz_nextprime is probabilistic; recheck
    return z.get_ui();
}

namespace detail {

inline mpz_class pollard_rho_factor(const mpz_class& n) {
    // n odd composite, not a prime power of interest; Brent variant
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eedul);
    while (true) {
        mpz_class x = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            if (x == y) break;
            d = gcd(x - y, n);
        }
        if (d != 1 && d != n) return d;
    }
}

}  // namespace detail

// Prime factorization of |n|, n != 0. Trial division up to 10^5, then
// Pollard rho on whatever survives.
inline std::map<mpz_class, unsigned> factor_integer(mpz_class n) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    n = abs(n);
    std::map<mpz_class, unsigned> out;
    for (mpz_class d = 2; d <= 100000 && d * d <= n; d == 2 ? d = 3 : d += 2) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            ++out[d];
            n /= d;
        }
    }
    std::vector<mpz_class> pending;
    if (n > 1) pending.push_back(n);
    while (!pending.empty()) {
        mpz_class m = pending.back();
        pending.pop_back();
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
            ++out[m];
            continue;
        }
        mpz_class d = detail::pollard_rho_factor(m);
        pending.push_back(d);
        pending.push_back(m / d);
    }
    return out;
}

// Least positive c with d | c^k, for d > 0.
inline mpz_class kth_clearing_factor(const mpz_class& d, unsigned k) {
    if (d <= 0 || k == 0) throw std::invalid_argument("kth_clearing_factor needs d > 0, k > 0");
    mpz_class c = 1;
    for (const auto& [q, e] : factor_integer(d)) {
        mpz_class qe;
        mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), (e + k - 1) / k);
        c *= qe;
    }
    return c;
}

namespace detail {

// least x in [lo, hi] with sgn*f(x) >= 0, or hi+1 if none; f monotone
// nondecreasing after the sign flip
template <typename F>
mpz_class bisect_first_nonneg(const F& f, int sgn, mpz_class lo, mpz_class hi) {
    if (sgn * f(hi) < 0) return hi + 1;
    while (lo < hi) {
        mpz_class mid = lo + (hi - lo) / 2;
        if (sgn * f(mid) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace detail

// All integer roots of x^3 + A x + B, found by bisection over the monotone
// intervals of the cubic. Exact for arbitrarily large coefficients; never
// needs a factorization of B.
inline std::vector<mpz_class> integer_roots_depressed_cubic(const mpz_class& A, const mpz_class& B) {
    auto f = [&](const mpz_class& x) -> mpz_class { return x * x * x + A * x + B; };
    mpz_class M = 1 + (abs(A) > abs(B) ? abs(A) : abs(B));  // Cauchy bound
    std::vector<std::pair<std::pair<mpz_class, mpz_class>, int>> intervals;
    if (A >= 0) {
        intervals.push_back({{-M, M}, +1});
    } else {
        mpz_class s = sqrt(mpz_class((-A) / 3));  // floor sqrt of the turning point
        intervals.push_back({{-M, -s - 1}, +1});
        intervals.push_back({{-s, s}, -1});
        intervals.push_back({{s + 1, M}, +1});
    }
    std::vector<mpz_class> roots;
    for (const auto& [range, sgn] : intervals) {
        const auto& [lo, hi] = range;
        if (lo > hi) continue;
        mpz_class x = detail::bisect_first_nonneg(f, sgn, lo, hi);
        if (x <= hi && f(x) == 0) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace mod2ec
