#pragma once

// Alternative one-parameter description of the mod-2 class of E, derived from
// the Legendre family A_lambda: y^2 = x(x-1)(x-lambda). Three coefficient
// cases (ab != 0, b = 0, a = 0), each a rational family in t twisted by d.
// The t = infinity member is the leading-coefficient limit of the t -> 1/s
// substitution (the s-rescaling is itself a quadratic twist, absorbed in d);
// for b = 0 that limit is the singular cubic (x - a)^2 (x + 2a) and is
// rejected like any other singular member.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "mod2ec/curve.hpp"
#include "mod2ec/field.hpp"
#include "mod2ec/mod2.hpp"

namespace mod2ec {

// Weierstrass coefficients of the Legendre curve:
//   a4 = -(1/3)(lambda^2 - lambda + 1)
//   a6 = -(1/27)(2 lambda^3 - 3 lambda^2 - 3 lambda + 2)
template <Field K>
std::pair<K, K> legendre_to_weierstrass(const K& lam) {
    if (lam.is_zero() || lam == lam.one()) throw std::domain_error("lambda in {0, 1} is singular");
    auto c = [&](long long k) { return lam.from_int(k); };
    const K a4 = -(lam * lam - lam + c(1)) / c(3);
    const K a6 = -(c(2) * lam * lam * lam - c(3) * lam * lam - c(3) * lam + c(2)) / c(27);
    return {a4, a6};
}

// j of the Legendre curve: 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2).
template <Field K>
K legendre_j(const K& lam) {
    if (lam.is_zero() || lam == lam.one()) throw std::domain_error("lambda in {0, 1} is singular");
    auto c = [&](long long k) { return lam.from_int(k); };
    const K q = lam * lam - lam + c(1);
    const K d = lam * (lam - c(1));
    return c(256) * q * q * q / (d * d);
}

enum class Param3Case { generic, b_zero, a_zero };

inline std::string to_string(Param3Case c) {
    switch (c) {
        case Param3Case::generic: return "generic";
        case Param3Case::b_zero: return "b=0";
        case Param3Case::a_zero: return "a=0";
    }
    return "?";
}

template <Field K>
Param3Case param3_case(const EllipticCurve<K>& E) {
    if (E.b().is_zero()) return Param3Case::b_zero;
    if (E.a().is_zero()) return Param3Case::a_zero;
    return Param3Case::generic;
}

template <Field K>
struct Param3Input {
    EllipticCurve<K> base;
    std::optional<K> t;  // nullopt encodes t = infinity
    K twist_scale;       // the d of "d y^2 = ..."; must be nonzero
};

template <Field K>
EllipticCurve<K> param3_curve(const Param3Input<K>& in) {
    const K& a = in.base.a();
    const K& b = in.base.b();
    const K& d = in.twist_scale;
    if (d.is_zero()) throw std::invalid_argument("twist scale d must be nonzero");
    auto c = [&](long long k) { return d.from_int(k); };

    K A = a.zero(), B = a.zero();
    switch (param3_case(in.base)) {
        case Param3Case::generic: {
            // d y^2 = x^3 + a(1 + (J-1) t^2) x + b(1 + 3t - 3(J-1) t^2 - (J-1) t^3),
            // J = 4a^3 / (4a^3 + 27b^2)
            const K a3 = a * a * a;
            const K jm1 = c(4) * a3 / (c(4) * a3 + c(27) * b * b) - c(1);
            if (in.t) {
                const K& t = *in.t;
                A = a * (c(1) + jm1 * t * t);
                B = b * (c(1) + c(3) * t - c(3) * jm1 * t * t - jm1 * t * t * t);
            } else {
                A = a * jm1;
                B = -b * jm1;
            }
            break;
        }
        case Param3Case::b_zero: {
            // d y^2 = x^3 + a(1 - 3a t^2) x + 2 a^2 t (1 + a t^2)
            if (in.t) {
                const K& t = *in.t;
                A = a * (c(1) - c(3) * a * t * t);
                B = c(2) * a * a * t * (c(1) + a * t * t);
            } else {
                A = c(-3) * a * a;
                B = c(2) * a * a * a;
            }
            break;
        }
        case Param3Case::a_zero: {
            // d y^2 = x^3 + 3 b t x + b(1 - b t^3)
            if (in.t) {
                const K& t = *in.t;
                A = c(3) * b * t;
                B = b * (c(1) - b * t * t * t);
            } else {
                A = a.zero();
                B = -b * b;
            }
            break;
        }
    }
    if (weierstrass_discriminant(A, B).is_zero())
        throw std::domain_error("singular member at this t");
    return quadratic_twist(EllipticCurve<K>(A, B), d);
}

struct Param3Report {
    Param3Case curve_case;
    bool membership = true;   // every nonsingular member has the base's class
    bool coverage = false;    // the produced coefficient set equals class_set_fp
    uint64_t members = 0;     // nonsingular (t, d) members encountered
    uint64_t skipped = 0;     // singular (t, d) parameters
    size_t produced = 0;      // distinct coefficient pairs produced
    size_t class_set_size = 0;
};

// Exhaustively runs t over F_p and infinity and d over F_p^*, checking that
// every nonsingular member shares E's factorization type, and reporting
// whether the family covers the whole class set.
inline Param3Report param3_membership_check(const EllipticCurve<Fp>& E) {
    const uint64_t p = E.a().modulus();
    const Mod2Class base_class = class_over_fp(E);
    Param3Report report;
    report.curve_case = param3_case(E);
    std::set<std::pair<uint64_t, uint64_t>> produced;
    for (uint64_t ti = 0; ti <= p; ++ti) {
        std::optional<Fp> t;
        if (ti < p) t = Fp(ti, p);
        for (uint64_t dv = 1; dv < p; ++dv) {
            try {
                const EllipticCurve<Fp> member = param3_curve(Param3Input<Fp>{E, t, Fp(dv, p)});
                ++report.members;
                if (class_over_fp(member) != base_class) report.membership = false;
                produced.insert({member.a().value(), member.b().value()});
            } catch (const std::domain_error&) {
                ++report.skipped;
            }
        }
    }
    const auto class_set = class_set_fp(E);
    report.produced = produced.size();
    report.class_set_size = class_set.size();
    report.coverage = produced == class_set;
    return report;
}

}  // namespace mod2ec
