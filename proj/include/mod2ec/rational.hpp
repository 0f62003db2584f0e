#pragma once

// Exact rational arithmetic over GMP. Values are always in lowest terms with
// a positive denominator; zero is 0/1.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mod2ec {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(make_mpz(n)) {}
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Text format: optional sign, decimal integer, optional "/" followed by a
    // positive decimal integer.
    static Rational parse(const std::string& text) {
        size_t i = 0;
        const size_t n = text.size();
        auto fail = [&]() -> void { throw std::invalid_argument("malformed rational '" + text + "'"); };
        if (n == 0) fail();
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
        }
        size_t num_begin = i;
        while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == num_begin) fail();
        mpz_class num(text.substr(num_begin, i - num_begin), 10);  // GMP rejects a leading '+'
        if (negative) num = -num;
        mpz_class den(1);
        if (i < n) {
            if (text[i] != '/') fail();
            ++i;
            size_t den_begin = i;
            while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == den_begin || i != n) fail();
            den = mpz_class(text.substr(den_begin), 10);
            if (den == 0) throw std::invalid_argument("denominator must be positive in '" + text + "'");
        }
        return Rational(num, den);
    }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long long n) const { return Rational(n); }

    friend bool same_field(const Rational&, const Rational&) { return true; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.q_ < y.q_; }

    friend Rational operator+(const Rational& x, const Rational& y) { return wrap(x.q_ + y.q_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return wrap(x.q_ - y.q_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return wrap(x.q_ * y.q_); }
    friend Rational operator/(const Rational& x, const Rational& y) { return x * y.inverse(); }

    Rational operator-() const { return wrap(-q_); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q");
        return wrap(1 / q_);
    }

    Rational pow(uint64_t e) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
        return Rational(num, den);
    }

private:
    static mpz_class make_mpz(long long n) {
        static_assert(sizeof(long) == sizeof(long long), "64-bit long assumed");
        return mpz_class(static_cast<long>(n));
    }
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.q_ = q;
        return r;  // GMP keeps results canonical
    }

    mpq_class q_;
};

inline bool is_square(const Rational& x) {
    if (x.is_zero()) return true;
    if (x.sign() < 0) return false;
    return mpz_perfect_square_p(x.numerator().get_mpz_t()) &&
           mpz_perfect_square_p(x.denominator().get_mpz_t());
}

// x = n/d in lowest terms is a k-th power in Q iff |n| and d are both k-th
// powers of integers and the sign is attainable for the parity of k.
inline bool kth_power_exists(const Rational& x, uint64_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (x.is_zero()) throw std::domain_error("kth_power_exists requires nonzero input");
    if (k % 2 == 0 && x.sign() < 0) return false;
    mpz_class n = abs(x.numerator()), d = x.denominator(), root;
    return mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 &&
           mpz_root(root.get_mpz_t(), d.get_mpz_t(), k) != 0;
}

inline std::string to_string(const Rational& x) { return x.str(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace mod2ec
