#pragma once

// Decision procedures for "E[2] and E'[2] are isomorphic Galois modules".
// Over F_p the answer is exact: the absolute Galois group is procyclic, so
// the module is determined by the Frobenius cycle type on the roots of the
// 2-division cubic, i.e. by its factorization type. Over Q the rational
// factorization pattern and, in the irreducible case, Frobenius sampling at
// good primes give either a proof of non-isomorphism or bounded evidence of
// isomorphism.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mod2ec/curve.hpp"
#include "mod2ec/family.hpp"
#include "mod2ec/mod2class.hpp"
#include "mod2ec/poly.hpp"

namespace mod2ec {

inline Mod2Class class_over_fp(const EllipticCurve<Fp>& E) {
    return degree_multiset(E.two_division_poly());
}

inline bool iso_fp(const EllipticCurve<Fp>& E1, const EllipticCurve<Fp>& E2) {
    if (E1.a().modulus() != E2.a().modulus()) throw std::invalid_argument("curves over different F_p");
    return class_over_fp(E1) == class_over_fp(E2);
}

// Factorization pattern of the 2-division cubic over Q, from integer roots of
// the integral model's cubic.
inline Mod2Class rational_pattern(const EllipticCurve<Rational>& E) {
    const EllipticCurve<Rational> M = integral_model(E);
    const auto roots = integer_roots_depressed_cubic(M.a().numerator(), M.b().numerator());
    switch (roots.size()) {
        case 3: return Mod2Class::split;
        case 1: return Mod2Class::linear_quadratic;
        case 0: return Mod2Class::irreducible;
        default: throw std::logic_error("monic integral cubic with exactly two integer roots");
    }
}

struct IsoVerdict {
    enum class Kind { isomorphic, not_isomorphic, probably_isomorphic };

    Kind kind;
    std::optional<uint64_t> witness_prime;  // mismatching Frobenius pattern at this prime
    size_t primes_checked = 0;              // for probably_isomorphic
    std::string detail;

    std::string str() const {
        switch (kind) {
            case Kind::isomorphic: return "ISO";
            case Kind::probably_isomorphic: return "PROBABLY_ISO n=" + std::to_string(primes_checked);
            case Kind::not_isomorphic:
                if (witness_prime) return "NOT_ISO p=" + std::to_string(*witness_prime);
                return "NOT_ISO pattern";
        }
        return "?";
    }
};

namespace detail {

// Discriminant of the quadratic factor of a {1,2}-pattern integral cubic
// x^3 + Ax + B: factoring out the unique integer root r leaves
// x^2 + rx + (r^2 + A), of discriminant -3r^2 - 4A.
inline mpz_class quadratic_factor_disc(const EllipticCurve<Rational>& E) {
    const EllipticCurve<Rational> M = integral_model(E);
    const mpz_class A = M.a().numerator();
    const auto roots = integer_roots_depressed_cubic(A, M.b().numerator());
    if (roots.size() != 1) throw std::logic_error("quadratic_factor_disc expects pattern {1,2}");
    const mpz_class& r = roots.front();
    return -3 * r * r - 4 * A;
}

// First `count` primes > 3 at which every listed discriminant is nonzero.
inline std::vector<uint64_t> primes_good_for_all(const std::vector<mpz_class>& discs, size_t count) {
    std::vector<uint64_t> out;
    uint64_t p = 3;
    while (out.size() < count) {
        p = next_prime_above(p);
        bool good = true;
        for (const mpz_class& d : discs)
            if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
                good = false;
                break;
            }
        if (good) out.push_back(p);
    }
    return out;
}

}  // namespace detail

// Decide mod-2 isomorphism over Q.
//   - rational patterns differ: proof of non-isomorphism;
//   - both split: the algebras are Q x Q x Q, isomorphic;
//   - both {1,2}: the algebras are Q x quadratic field; the fields coincide
//     iff the product of the two quadratic discriminants is a perfect square
//     (equivalently, equal squarefree kernels) -- decided exactly;
//   - both {3}: compare Frobenius patterns at the first `prime_budget` primes
//     good for both curves. A mismatch is a proof; universal agreement is
//     reported as probable isomorphism with the budget recorded.
inline IsoVerdict iso_q(const EllipticCurve<Rational>& E1, const EllipticCurve<Rational>& E2,
                        size_t prime_budget = 25) {
    const Mod2Class p1 = rational_pattern(E1), p2 = rational_pattern(E2);
    if (p1 != p2) {
        return {IsoVerdict::Kind::not_isomorphic, std::nullopt, 0,
                "rational patterns " + to_string(p1) + " vs " + to_string(p2)};
    }
    switch (p1) {
        case Mod2Class::split:
            return {IsoVerdict::Kind::isomorphic, std::nullopt, 0, "both cubics split over Q"};
        case Mod2Class::linear_quadratic: {
            const mpz_class d1 = detail::quadratic_factor_disc(E1);
            const mpz_class d2 = detail::quadratic_factor_disc(E2);
            const mpz_class prod = d1 * d2;
            if (mpz_perfect_square_p(prod.get_mpz_t()))
                return {IsoVerdict::Kind::isomorphic, std::nullopt, 0, "equal quadratic fields"};
            return {IsoVerdict::Kind::not_isomorphic, std::nullopt, 0, "quadratic fields differ"};
        }
        case Mod2Class::irreducible: {
            const auto primes = detail::primes_good_for_all(
                {integral_discriminant(E1), integral_discriminant(E2)}, prime_budget);
            for (uint64_t p : primes) {
                if (class_over_fp(reduce_mod_p(E1, p)) != class_over_fp(reduce_mod_p(E2, p)))
                    return {IsoVerdict::Kind::not_isomorphic, p, 0,
                            "Frobenius patterns differ at p=" + std::to_string(p)};
            }
            return {IsoVerdict::Kind::probably_isomorphic, std::nullopt, prime_budget,
                    "patterns agree at all sampled primes"};
        }
    }
    throw std::logic_error("unreachable");
}

// Lexicographically first normalized (u : v) in P^1(F_p) witnessing that E'
// shares E's mod-2 representation, if one exists. Scan order:
// (0,1), (1,0), (1,1), (2,1), ..., (p-1,1).
inline std::optional<UVPoint<Fp>> find_witness_fp(const EllipticCurve<Fp>& E,
                                                  const EllipticCurve<Fp>& Eprime) {
    if (E.a().modulus() != Eprime.a().modulus())
        throw std::invalid_argument("curves over different F_p");
    const uint64_t p = E.a().modulus();
    const Fp one(1, p), zero(0, p);
    auto try_point = [&](const UVPoint<Fp>& pt) { return verify_witness(E, Eprime, pt); };
    if (try_point({zero, one})) return UVPoint<Fp>{zero, one};
    if (try_point({one, zero})) return UVPoint<Fp>{one, zero};
    for (uint64_t u = 1; u < p; ++u) {
        UVPoint<Fp> pt{Fp(u, p), one};
        if (try_point(pt)) return pt;
    }
    return std::nullopt;
}

// S1: every nonsingular (alpha, beta) whose 2-division cubic has E's
// factorization type.
inline std::set<std::pair<uint64_t, uint64_t>> class_set_fp(const EllipticCurve<Fp>& E) {
    const uint64_t p = E.a().modulus();
    const Mod2Class target = class_over_fp(E);
    std::set<std::pair<uint64_t, uint64_t>> out;
    for (uint64_t a = 0; a < p; ++a) {
        for (uint64_t b = 0; b < p; ++b) {
            const Fp fa(a, p), fb(b, p);
            if (weierstrass_discriminant(fa, fb).is_zero()) continue;
            if (degree_multiset(Polynomial<Fp>({fb, fa, Fp(0, p), Fp(1, p)})) == target)
                out.insert({a, b});
        }
    }
    return out;
}

// S2: coefficient pairs of all nonsingular family members E_{u,v}, (u,v) in
// F_p x F_p.
inline std::set<std::pair<uint64_t, uint64_t>> family_image_fp(const EllipticCurve<Fp>& E) {
    const uint64_t p = E.a().modulus();
    const FamilyContext<Fp> ctx{E};
    std::set<std::pair<uint64_t, uint64_t>> out;
    for (uint64_t u = 0; u < p; ++u) {
        for (uint64_t v = 0; v < p; ++v) {
            const Fp fu(u, p), fv(v, p);
            if (singularity_locus(ctx, fu, fv).is_zero()) continue;
            const auto [alpha, beta] = family_coeffs(ctx, fu, fv);
            out.insert({alpha.value(), beta.value()});
        }
    }
    return out;
}

}  // namespace mod2ec
