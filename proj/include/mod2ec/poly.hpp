#pragma once

// Dense univariate polynomials over an exact field. Everything in scope has
// degree <= 6, so no attempt is made at asymptotics: schoolbook products,
// classical division, Euclidean gcd.

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mod2ec/field.hpp"
#include "mod2ec/fp.hpp"
#include "mod2ec/mod2class.hpp"
#include "mod2ec/numtheory.hpp"
#include "mod2ec/rational.hpp"

namespace mod2ec {

template <Field K>
class Polynomial {
public:
    // zero polynomial
    Polynomial() = default;

    // coefficients with the constant term first; trailing zeros are trimmed
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}); }

    static Polynomial monomial(const K& coeff, int degree) {
        std::vector<K> c;
        c.reserve(degree + 1);
        for (int i = 0; i < degree; ++i) c.push_back(coeff.zero());
        c.push_back(coeff);
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    const K& coeff(int i) const {
        assert(i >= 0 && i <= degree());
        return c_[static_cast<size_t>(i)];
    }

    K coeff_or(int i, const K& like) const {
        if (i < 0 || i > degree()) return like.zero();
        return c_[static_cast<size_t>(i)];
    }

    const K& leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && leading() == leading().one(); }

    K eval(const K& at) const {
        if (is_zero()) return at.zero();
        K acc = c_.back();
        for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Polynomial derivative() const {
        std::vector<K> out;
        for (int i = 1; i <= degree(); ++i) out.push_back(c_[static_cast<size_t>(i)].from_int(i) * c_[static_cast<size_t>(i)]);
        return Polynomial(std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
        return leading().inverse() * *this;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        const Polynomial& lo = f.degree() <= g.degree() ? f : g;
        const Polynomial& hi = f.degree() <= g.degree() ? g : f;
        std::vector<K> out = hi.c_;
        for (size_t i = 0; i < lo.c_.size(); ++i) out[i] = out[i] + lo.c_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

    Polynomial operator-() const {
        std::vector<K> out;
        out.reserve(c_.size());
        for (const K& c : c_) out.push_back(-c);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        if (f.is_zero() || g.is_zero()) return Polynomial();
        const K zero = f.c_[0].zero();
        std::vector<K> out(f.c_.size() + g.c_.size() - 1, zero);
        for (size_t i = 0; i < f.c_.size(); ++i)
            for (size_t j = 0; j < g.c_.size(); ++j) out[i + j] = out[i + j] + f.c_[i] * g.c_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const K& s, const Polynomial& f) {
        std::vector<K> out;
        out.reserve(f.c_.size());
        for (const K& c : f.c_) out.push_back(s * c);
        return Polynomial(std::move(out));
    }

    bool operator==(const Polynomial&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

// f = q*g + r with deg r < deg g.
template <Field K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.degree() < g.degree()) return {Polynomial<K>(), f};
    const K lg_inv = g.leading().inverse();
    std::vector<K> rem = f.coeffs();
    std::vector<K> quo(static_cast<size_t>(f.degree() - g.degree() + 1), g.leading().zero());
    for (int d = f.degree(); d >= g.degree(); --d) {
        K c = rem[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        K factor = c * lg_inv;
        quo[static_cast<size_t>(d - g.degree())] = factor;
        for (int i = 0; i <= g.degree(); ++i) {
            size_t idx = static_cast<size_t>(d - g.degree() + i);
            rem[idx] = rem[idx] - factor * g.coeff(i);
        }
    }
    return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

// Monic gcd by the Euclidean algorithm. gcd(f, 0) = monic(f).
template <Field K>
Polynomial<K> poly_gcd(Polynomial<K> f, Polynomial<K> g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    while (!g.is_zero()) {
        Polynomial<K> r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

// x^p reduced mod f, square-and-multiply over the bits of p.
inline Polynomial<Fp> powmod_x_to_p(const Polynomial<Fp>& f) {
    if (f.degree() < 1) throw std::invalid_argument("modulus must have positive degree");
    const Fp one = f.leading().one();
    const uint64_t p = one.modulus();
    Polynomial<Fp> acc = divmod(Polynomial<Fp>::constant(one), f).second;
    Polynomial<Fp> base = divmod(Polynomial<Fp>::monomial(one, 1), f).second;
    for (int bit = 62; bit >= 0; --bit) {
        if ((p >> bit) == 0) continue;
        acc = divmod(acc * acc, f).second;
        if ((p >> bit) & 1) acc = divmod(acc * base, f).second;
    }
    return acc;
}

// Factorization type of a separable cubic over F_p, via a single gcd with
// x^p - x: the degree d of gcd(x^p - x, f) counts roots of f in F_p, and for
// separable cubics d in {0,1,3} determines the full multiset of factor
// degrees ({3}, {1,2}, {1,1,1} respectively). d = 2 is impossible.
inline Mod2Class degree_multiset(const Polynomial<Fp>& input) {
    if (input.degree() != 3) throw std::invalid_argument("degree_multiset expects a cubic");
    const Polynomial<Fp> f = input.monic();
    if (poly_gcd(f, f.derivative()).degree() != 0) throw std::domain_error("cubic is not separable");
    const Fp one = f.leading();
    const Polynomial<Fp> frob = powmod_x_to_p(f) - Polynomial<Fp>::monomial(one.one(), 1);
    const Polynomial<Fp> g = frob.is_zero() ? f.monic() : poly_gcd(frob, f);
    switch (g.degree()) {
        case 3: return Mod2Class::split;
        case 1: return Mod2Class::linear_quadratic;
        case 0: return Mod2Class::irreducible;
        default: throw std::logic_error("separable cubic with two roots in F_p cannot exist");
    }
}

// Rational roots of a monic depressed cubic x^3 + a x + b over Q. Clearing
// denominators reduces to integer roots of an integral monic cubic.
inline std::vector<Rational> rational_roots_depressed_cubic(const Polynomial<Rational>& f) {
    if (f.degree() != 3 || !f.is_monic() || !f.coeff(2).is_zero())
        throw std::invalid_argument("expected a monic cubic with no quadratic term");
    const Rational a = f.coeff(1), b = f.coeff(0);
    mpz_class c = lcm(a.denominator(), b.denominator());
    const Rational scale{c};
    mpz_class A = (a * scale.pow(2)).numerator();
    mpz_class B = (b * scale.pow(3)).numerator();
    std::vector<Rational> out;
    for (const mpz_class& r : integer_roots_depressed_cubic(A, B)) out.emplace_back(r, c);
    return out;
}

// Display form "c0 + c1*x + c2*x^2 + ..."; output only, not a parse format.
template <Field K>
std::string to_string(const Polynomial<K>& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i > 0) os << " + ";
        os << to_string(f.coeff(i));
        if (i == 1) os << "*" << var;
        if (i > 1) os << "*" << var << "^" << i;
    }
    return os.str();
}

template <Field K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& f) {
    return os << to_string(f);
}

}  // namespace mod2ec
