#pragma once

// The two-parameter family E_{u,v} attached to a base curve E: y^2 = x^3+ax+b.
// Its members are exactly the curves sharing E's mod-2 Galois representation.
// The executable definition of the member coefficients is the characteristic
// polynomial of multiplication by 3u*x^2 + 3v*x + 2au on K[x]/(x^3+ax+b); the
// closed forms live alongside as an independently computed route, and the two
// must agree everywhere (see family_coeffs_formula and the oracle tests).

#include <stdexcept>
#include <utility>

#include "mod2ec/curve.hpp"
#include "mod2ec/field.hpp"
#include "mod2ec/matrix3.hpp"
#include "mod2ec/poly.hpp"

namespace mod2ec {

template <Field K>
struct UVPoint {
    K u, v;
};

// Canonical representative (u : 1) or (1 : 0) of a point of P^1.
template <Field K>
UVPoint<K> normalize(const UVPoint<K>& pt) {
    if (pt.v.is_zero()) {
        if (pt.u.is_zero()) throw std::invalid_argument("(0, 0) is not a point of P^1");
        return {pt.u.one(), pt.v};
    }
    return {pt.u / pt.v, pt.v.one()};
}

template <Field K>
struct FamilyContext {
    EllipticCurve<K> base;
};

// v^3 + a u^2 v + b u^3; the member E_{u,v} is nonsingular iff this is
// nonzero. For u != 0 it equals u^3 * f(v/u) with f the 2-division cubic.
template <Field K>
K singularity_locus(const FamilyContext<K>& ctx, const K& u, const K& v) {
    const K& a = ctx.base.a();
    const K& b = ctx.base.b();
    return v * v * v + a * u * u * v + b * u * u * u;
}

// 3u*x^2 + 3v*x + 2au, the image of z under the algebra map that carries the
// member's coordinate into K[x]/(f).
template <Field K>
Polynomial<K> family_multiplier(const FamilyContext<K>& ctx, const K& u, const K& v) {
    const K three = u.from_int(3);
    return Polynomial<K>({u.from_int(2) * ctx.base.a() * u, three * v, three * u});
}

// Characteristic cubic T^3 + alpha*T + beta of the multiplier acting on
// K[x]/(x^3 + ax + b). Defined for every (u, v); the quadratic term always
// vanishes (the multiplier is trace-free by the choice of constant term 2au).
template <Field K>
Polynomial<K> family_charpoly(const FamilyContext<K>& ctx, const K& u, const K& v) {
    const Polynomial<K> cp =
        charpoly3(mult_matrix(family_multiplier(ctx, u, v), ctx.base.two_division_poly()));
    if (!cp.coeff(2).is_zero()) throw std::logic_error("family characteristic cubic has a T^2 term");
    return cp;
}

// Member coefficients (alpha, beta) at a nonsingular parameter.
template <Field K>
std::pair<K, K> family_coeffs(const FamilyContext<K>& ctx, const K& u, const K& v) {
    if (singularity_locus(ctx, u, v).is_zero())
        throw std::domain_error("singular family member: v^3 + a u^2 v + b u^3 = 0");
    const Polynomial<K> cp = family_charpoly(ctx, u, v);
    return {cp.coeff(1), cp.coeff(0)};
}

// Closed forms for the same coefficients:
//   alpha = 3(3 a v^2 + 9 b u v - a^2 u^2)
//   beta  = 27 b v^3 - 18 a^2 u v^2 - 27 a b u^2 v - (2 a^3 + 27 b^2) u^3
// Computed independently of the characteristic polynomial so the two routes
// check each other.
template <Field K>
std::pair<K, K> family_coeffs_formula(const FamilyContext<K>& ctx, const K& u, const K& v) {
    const K& a = ctx.base.a();
    const K& b = ctx.base.b();
    auto c = [&](long long k) { return u.from_int(k); };
    const K alpha = c(3) * (c(3) * a * v * v + c(9) * b * u * v - a * a * u * u);
    const K beta = c(27) * b * v * v * v - c(18) * a * a * u * v * v - c(27) * a * b * u * u * v -
                   (c(2) * a * a * a + c(27) * b * b) * u * u * u;
    return {alpha, beta};
}

template <Field K>
EllipticCurve<K> family_curve(const FamilyContext<K>& ctx, const K& u, const K& v) {
    const auto [alpha, beta] = family_coeffs(ctx, u, v);
    return EllipticCurve<K>(alpha, beta);
}

// disc(E_{u,v}) = 3^6 * locus^2 * disc(E).
template <Field K>
bool family_disc_check(const FamilyContext<K>& ctx, const K& u, const K& v) {
    const K locus = singularity_locus(ctx, u, v);
    const EllipticCurve<K> member = family_curve(ctx, u, v);
    return member.discriminant() == u.from_int(729) * locus * locus * ctx.base.discriminant();
}

// 3 a v^2 + 9 b u v - a^2 u^2, the degree-2 form whose cube is the numerator
// of C(u, v).
template <Field K>
K witness_numerator(const FamilyContext<K>& ctx, const K& u, const K& v) {
    const K& a = ctx.base.a();
    const K& b = ctx.base.b();
    auto c = [&](long long k) { return u.from_int(k); };
    return c(3) * a * v * v + c(9) * b * u * v - a * a * u * u;
}

// C(u, v) = (3av^2 + 9buv - a^2u^2)^3 / (27 a^3 (v^3 + au^2v + bu^3)^2), the
// ratio j(E_{u,v}) / j(E) as a function of the parameter. Homogeneous of
// degree 0, hence well defined on P^1. Undefined when a = 0.
template <Field K>
K j_ratio(const FamilyContext<K>& ctx, const UVPoint<K>& pt) {
    const K& a = ctx.base.a();
    if (a.is_zero()) throw std::domain_error("j ratio C(u, v) is undefined when a = 0");
    const K locus = singularity_locus(ctx, pt.u, pt.v);
    if (locus.is_zero()) throw std::domain_error("j ratio C(u, v) is undefined at a singular parameter");
    const K num = witness_numerator(ctx, pt.u, pt.v);
    return num * num * num / (a.from_int(27) * a * a * a * locus * locus);
}

// Matrix of the algebra map z -> 3u x^2 + 3v x + 2au with respect to the
// bases {1, z, z^2} and {1, x, x^2}; its determinant is 27 * locus.
template <Field K>
Matrix3<K> phi_basis_matrix(const FamilyContext<K>& ctx, const K& u, const K& v) {
    const Polynomial<K> f = ctx.base.two_division_poly();
    const Polynomial<K> h = family_multiplier(ctx, u, v);
    const K zero = u.zero();
    std::array<K, 9> e{zero, zero, zero, zero, zero, zero, zero, zero, zero};
    Matrix3<K> M(std::move(e));
    Polynomial<K> power = Polynomial<K>::constant(u.one());
    for (int col = 0; col < 3; ++col) {
        for (int row = 0; row < 3; ++row) M(row, col) = power.coeff_or(row, zero);
        power = divmod(power * h, f).second;
    }
    return M;
}

template <Field K>
K phi_det(const FamilyContext<K>& ctx, const K& u, const K& v) {
    return det3(phi_basis_matrix(ctx, u, v));
}

// The two ratio criteria deciding whether (u : v) witnesses that E' shares
// E's mod-2 representation, for j(E') outside {0, 1728}:
//   (i)  j(E')/j(E) = C(u, v)                      when a != 0
//   (ii) j(E')/(j(E) - 1728) = -4 C(u,v) a^3/(27 b^2)   when b != 0
// Both are checked when ab != 0 (they are equivalent there). The right side
// of (ii) is evaluated in the a-free form -4 num^3 / (729 b^2 locus^2), so
// the criterion stays usable when a = 0.
template <Field K>
bool verify_witness(const EllipticCurve<K>& E, const EllipticCurve<K>& Eprime, const UVPoint<K>& pt) {
    const K jp = Eprime.j_invariant();
    if (jp.is_zero() || jp == jp.from_int(1728))
        throw std::domain_error("witness criteria are undefined for j(E') in {0, 1728}");
    const FamilyContext<K> ctx{E};
    const K locus = singularity_locus(ctx, pt.u, pt.v);
    if (locus.is_zero()) return false;  // a singular parameter never witnesses
    const K num = witness_numerator(ctx, pt.u, pt.v);
    const K num3 = num * num * num;
    const K j = E.j_invariant();
    auto c = [&](long long k) { return jp.from_int(k); };
    bool ok = true;
    if (!E.a().is_zero()) {
        const K a = E.a();
        const K C = num3 / (c(27) * a * a * a * locus * locus);
        ok = ok && jp / j == C;
    }
    if (!E.b().is_zero()) {
        const K b = E.b();
        const K rhs = c(-4) * num3 / (c(729) * b * b * locus * locus);
        ok = ok && jp / (j - c(1728)) == rhs;
    }
    return ok;
}

}  // namespace mod2ec
