#pragma once

// Prime-field arithmetic F_p for odd primes 3 < p <= 2^61. The modulus cap
// guarantees that a product of two reduced residues fits an unsigned 128-bit
// intermediate, so every operation is exact.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mod2ec/numtheory.hpp"

namespace mod2ec {

inline constexpr uint64_t kMaxPrimeModulus = uint64_t{1} << 61;

// Fails fast on invalid moduli. Deterministic Miller-Rabin, memoized so that
// element construction in tight loops costs one comparison.
inline void validate_prime_modulus(uint64_t p) {
    thread_local uint64_t cached[2] = {0, 0};
    if (p == cached[0] || p == cached[1]) return;
    if (p <= 3) throw std::invalid_argument("field modulus must exceed 3");
    if (p > kMaxPrimeModulus) throw std::invalid_argument("field modulus must be <= 2^61");
    if (!is_prime_u64(p)) throw std::invalid_argument("field modulus must be prime");
    cached[1] = cached[0];
    cached[0] = p;
}

class Fp {
public:
    // Detached element; any arithmetic involving it throws.
    Fp() = default;

    Fp(uint64_t value, uint64_t modulus) {
        validate_prime_modulus(modulus);
        p_ = modulus;
        v_ = value % modulus;
    }

    static Fp from_signed(long long value, uint64_t modulus) {
        validate_prime_modulus(modulus);
        long long r = value % static_cast<long long>(modulus);
        if (r < 0) r += static_cast<long long>(modulus);
        return raw(static_cast<uint64_t>(r), modulus);
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp zero() const { return raw(0, require_attached()); }
    Fp one() const { return raw(1, require_attached()); }
    Fp from_int(long long n) const { return from_signed(n, require_attached()); }

    friend bool same_field(const Fp& x, const Fp& y) { return x.p_ != 0 && x.p_ == y.p_; }

    friend bool operator==(const Fp& x, const Fp& y) = default;

    friend Fp operator+(const Fp& x, const Fp& y) {
        check_same(x, y);
        uint64_t s = x.v_ + y.v_;
        if (s >= x.p_) s -= x.p_;
        return raw(s, x.p_);
    }
    friend Fp operator-(const Fp& x, const Fp& y) {
        check_same(x, y);
        uint64_t s = x.v_ >= y.v_ ? x.v_ - y.v_ : x.v_ + x.p_ - y.v_;
        return raw(s, x.p_);
    }
    friend Fp operator*(const Fp& x, const Fp& y) {
        check_same(x, y);
        return raw(mulmod_u64(x.v_, y.v_, x.p_), x.p_);
    }
    friend Fp operator/(const Fp& x, const Fp& y) { return x * y.inverse(); }

    Fp operator-() const { return raw(v_ == 0 ? 0 : require_attached() - v_, p_); }

    Fp inverse() const {
        require_attached();
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        return raw(powmod_u64(v_, p_ - 2, p_), p_);
    }

    Fp pow(uint64_t e) const {
        require_attached();
        return raw(powmod_u64(v_, e, p_), p_);
    }

private:
    static Fp raw(uint64_t v, uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    uint64_t require_attached() const {
        if (p_ == 0) throw std::invalid_argument("operation on detached F_p element");
        return p_;
    }
    static void check_same(const Fp& x, const Fp& y) {
        x.require_attached();
        if (x.p_ != y.p_) throw std::invalid_argument("mixed F_p moduli");
    }

    uint64_t v_ = 0;
    uint64_t p_ = 0;
};

// Euler's criterion; zero counts as a square.
inline bool is_square(const Fp& x) {
    if (x.is_zero()) return true;
    return x.pow((x.modulus() - 1) / 2).value() == 1;
}

// Tonelli-Shanks. Returns the smaller of the two roots.
inline Fp sqrt_mod_p(const Fp& x) {
    const uint64_t p = x.modulus();
    if (x.is_zero()) return x;
    if (!is_square(x)) throw std::domain_error("not a quadratic residue");
    uint64_t r;
    if (p % 4 == 3) {
        r = powmod_u64(x.value(), (p + 1) / 4, p);
    } else {
        uint64_t q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        uint64_t z = 2;
        while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
        uint64_t m = s;
        uint64_t c = powmod_u64(z, q, p);
        uint64_t t = powmod_u64(x.value(), q, p);
        r = powmod_u64(x.value(), (q + 1) / 2, p);
        while (t != 1) {
            uint64_t i = 0;
            uint64_t t2 = t;
            while (t2 != 1) {
                t2 = mulmod_u64(t2, t2, p);
                ++i;
            }
            uint64_t b = c;
            for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
            m = i;
            c = mulmod_u64(b, b, p);
            t = mulmod_u64(t, c, p);
            r = mulmod_u64(r, b, p);
        }
    }
    if (p - r < r) r = p - r;
    return Fp(r, p);
}

// x is a k-th power in F_p^* iff x^((p-1)/gcd(k, p-1)) = 1.
inline bool kth_power_exists(const Fp& x, uint64_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (x.is_zero()) throw std::domain_error("kth_power_exists requires nonzero input");
    uint64_t g = std::gcd(k, x.modulus() - 1);
    return x.pow((x.modulus() - 1) / g).value() == 1;
}

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

}  // namespace mod2ec
