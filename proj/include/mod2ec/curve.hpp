#pragma once

// Short Weierstrass curves y^2 = x^3 + a x + b over an exact field of
// characteristic not 2 or 3, their standard invariants, twists, isomorphism
// testing, and reduction from Q to F_p.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mod2ec/field.hpp"
#include "mod2ec/fp.hpp"
#include "mod2ec/numtheory.hpp"
#include "mod2ec/poly.hpp"
#include "mod2ec/rational.hpp"

namespace mod2ec {

// Defined for arbitrary pairs so singular ones can be detected.
template <Field K>
K weierstrass_discriminant(const K& a, const K& b) {
    return a.from_int(-16) * (a.from_int(4) * a * a * a + a.from_int(27) * b * b);
}

template <Field K>
class EllipticCurve {
public:
    EllipticCurve(K a, K b) : a_(std::move(a)), b_(std::move(b)) {
        if (!same_field(a_, b_)) throw std::invalid_argument("curve coefficients from different fields");
        if (weierstrass_discriminant(a_, b_).is_zero())
            throw std::domain_error("singular curve: 4a^3 + 27b^2 = 0");
    }

    const K& a() const { return a_; }
    const K& b() const { return b_; }

    K discriminant() const { return weierstrass_discriminant(a_, b_); }

    // 6912 a^3 / (4a^3 + 27b^2) = 1728 * 4a^3 / (4a^3 + 27b^2)
    K j_invariant() const {
        const K a3 = a_ * a_ * a_;
        return a_.from_int(6912) * a3 / (a_.from_int(4) * a3 + a_.from_int(27) * b_ * b_);
    }

    // x^3 + a x + b, whose roots are the x-coordinates of the nontrivial
    // 2-torsion points; separable whenever the curve is nonsingular.
    Polynomial<K> two_division_poly() const {
        return Polynomial<K>({b_, a_, a_.zero(), a_.one()});
    }

    bool operator==(const EllipticCurve&) const = default;

private:
    K a_, b_;
};

template <Field K>
EllipticCurve<K> quadratic_twist(const EllipticCurve<K>& E, const K& d) {
    if (d.is_zero()) throw std::domain_error("twist by zero");
    return EllipticCurve<K>(E.a() * d * d, E.b() * d * d * d);
}

// E' ~ E iff a' = u^4 a, b' = u^6 b for some u != 0. Away from j in {0,1728}
// the candidate scale s = u^2 is forced; at the special j values the test is
// a pure power-residue condition.
template <Field K>
bool is_isomorphic(const EllipticCurve<K>& E1, const EllipticCurve<K>& E2) {
    if (!same_field(E1.a(), E2.a())) throw std::invalid_argument("curves over different fields");
    if (!(E1.j_invariant() == E2.j_invariant())) return false;
    if (E1.a().is_zero()) return kth_power_exists(E2.b() / E1.b(), 6);  // j = 0
    if (E1.b().is_zero()) return kth_power_exists(E2.a() / E1.a(), 4);  // j = 1728
    const K s = (E1.a() * E2.b()) / (E2.a() * E1.b());
    return E2.a() == s * s * E1.a() && E2.b() == s * s * s * E1.b() && is_square(s);
}

template <Field K>
std::string curve_text(const EllipticCurve<K>& E) {
    return to_string(E.a()) + "," + to_string(E.b());
}

// --- Q-specific operations -------------------------------------------------

// Least positive c such that (a c^4, b c^6) is integral.
inline mpz_class integral_scale(const EllipticCurve<Rational>& E) {
    const mpz_class da = E.a().denominator(), db = E.b().denominator();
    mpz_class c = 1;
    if (da != 1) c = kth_clearing_factor(da, 4);
    if (db != 1) c = lcm(c, kth_clearing_factor(db, 6));
    return c;
}

// (a c^4, b c^6) with integer coefficients; isomorphic to E over Q.
inline EllipticCurve<Rational> integral_model(const EllipticCurve<Rational>& E) {
    const Rational c{integral_scale(E)};
    return EllipticCurve<Rational>(E.a() * c.pow(4), E.b() * c.pow(6));
}

inline mpz_class integral_discriminant(const EllipticCurve<Rational>& E) {
    const EllipticCurve<Rational> M = integral_model(E);
    return weierstrass_discriminant(M.a(), M.b()).numerator();
}

// Image of x in F_p; requires the denominator to be invertible mod p.
inline Fp rational_mod_p(const Rational& x, uint64_t p) {
    const Fp den(mpz_fdiv_ui(x.denominator().get_mpz_t(), p), p);
    if (den.is_zero()) throw std::domain_error("denominator divisible by p");
    return Fp(mpz_fdiv_ui(x.numerator().get_mpz_t(), p), p) / den;
}

// Coefficientwise reduction of the integral model at a prime of good
// reduction.
inline EllipticCurve<Fp> reduce_mod_p(const EllipticCurve<Rational>& E, uint64_t p) {
    if (p <= 3) throw std::domain_error("reduction requires p > 3");
    validate_prime_modulus(p);
    const EllipticCurve<Rational> M = integral_model(E);
    const mpz_class disc = weierstrass_discriminant(M.a(), M.b()).numerator();
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) throw std::domain_error("bad reduction at p");
    return EllipticCurve<Fp>(Fp(mpz_fdiv_ui(M.a().numerator().get_mpz_t(), p), p),
                             Fp(mpz_fdiv_ui(M.b().numerator().get_mpz_t(), p), p));
}

// First `count` primes p > 3 not dividing the integral model's discriminant.
inline std::vector<uint64_t> good_primes(const EllipticCurve<Rational>& E, size_t count) {
    const mpz_class disc = integral_discriminant(E);
    std::vector<uint64_t> out;
    uint64_t p = 3;
    while (out.size() < count) {
        p = next_prime_above(p);
        if (!mpz_divisible_ui_p(disc.get_mpz_t(), p)) out.push_back(p);
    }
    return out;
}

}  // namespace mod2ec
