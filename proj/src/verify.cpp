#include "mod2ec/verify.hpp"

#include <sstream>

#include "mod2ec/family.hpp"
#include "mod2ec/mod2.hpp"
#include "mod2ec/param3.hpp"

namespace mod2ec::verify {

namespace {

// Applies fn to every nonsingular curve over F_p (or just the selected one).
template <typename Fn>
void for_each_curve(uint64_t p, const BaseFilter& base, Fn&& fn) {
    validate_prime_modulus(p);
    if (base) {
        fn(EllipticCurve<Fp>(Fp(base->first, p), Fp(base->second, p)));
        return;
    }
    for (uint64_t a = 0; a < p; ++a) {
        for (uint64_t b = 0; b < p; ++b) {
            const Fp fa(a, p), fb(b, p);
            if (weierstrass_discriminant(fa, fb).is_zero()) continue;
            fn(EllipticCurve<Fp>(fa, fb));
        }
    }
}

}  // namespace

CheckResult set_equality(uint64_t p, BaseFilter base) {
    CheckResult res;
    for_each_curve(p, base, [&](const EllipticCurve<Fp>& E) {
        ++res.checked;
        if (class_set_fp(E) != family_image_fp(E)) ++res.failures;
    });
    res.ok = res.failures == 0;
    res.note = "bases=" + std::to_string(res.checked);
    return res;
}

CheckResult invariant_formulas(uint64_t p, BaseFilter base) {
    CheckResult res;
    const Fp c729(729, p);
    for_each_curve(p, base, [&](const EllipticCurve<Fp>& E) {
        const FamilyContext<Fp> ctx{E};
        const Fp a = E.a();
        const Fp discE = E.discriminant();
        const Fp jE = E.j_invariant();
        const Fp c27a3 = Fp(27, p) * a * a * a;
        for (uint64_t uv = 0; uv < p * p; ++uv) {
            const Fp u(uv / p, p), v(uv % p, p);
            const Fp locus = singularity_locus(ctx, u, v);
            if (locus.is_zero()) continue;
            ++res.checked;
            const auto [alpha, beta] = family_coeffs(ctx, u, v);
            const EllipticCurve<Fp> member(alpha, beta);
            if (member.discriminant() != c729 * locus * locus * discE) ++res.failures;
            if (!a.is_zero()) {
                // j(E_{u,v}) * 27 a^3 * locus^2 = num^3 * j(E), cross-multiplied
                const Fp num = witness_numerator(ctx, u, v);
                if (member.j_invariant() * c27a3 * locus * locus != num * num * num * jE)
                    ++res.failures;
            }
        }
    });
    res.ok = res.failures == 0;
    res.note = "members=" + std::to_string(res.checked);
    return res;
}

CheckResult witness_against_class(uint64_t p, BaseFilter base) {
    CheckResult res;
    const Fp c1728 = Fp::from_signed(1728, p);

    // Candidate partners: every nonsingular curve with j outside {0, 1728}.
    std::vector<EllipticCurve<Fp>> partners;
    std::vector<Mod2Class> partner_class;
    for_each_curve(p, {}, [&](const EllipticCurve<Fp>& E) {
        const Fp j = E.j_invariant();
        if (j.is_zero() || j == c1728) return;
        partners.push_back(E);
        partner_class.push_back(class_over_fp(E));
    });

    for_each_curve(p, base, [&](const EllipticCurve<Fp>& E) {
        const Mod2Class cls = class_over_fp(E);
        const FamilyContext<Fp> ctx{E};
        const bool ab_nonzero = !E.a().is_zero() && !E.b().is_zero();
        for (size_t i = 0; i < partners.size(); ++i) {
            const EllipticCurve<Fp>& Ep = partners[i];
            ++res.checked;
            const bool expected = partner_class[i] == cls;
            const bool found = find_witness_fp(E, Ep).has_value();
            if (found != expected) ++res.failures;

            if (!ab_nonzero) continue;
            // criteria (i) and (ii) must agree pointwise when ab != 0
            const Fp jp = Ep.j_invariant();
            const Fp jE = E.j_invariant();
            auto scan_point = [&](const Fp& u, const Fp& v) {
                const Fp locus = singularity_locus(ctx, u, v);
                if (locus.is_zero()) return;
                const Fp num = witness_numerator(ctx, u, v);
                const Fp num3 = num * num * num;
                const Fp a = E.a(), b = E.b();
                const bool crit_i = jp / jE == num3 / (Fp(27, p) * a * a * a * locus * locus);
                const bool crit_ii =
                    jp / (jE - c1728) == Fp::from_signed(-4, p) * num3 / (Fp(729, p) * b * b * locus * locus);
                if (crit_i != crit_ii) ++res.failures;
            };
            const Fp one(1, p), zero(0, p);
            scan_point(one, zero);
            for (uint64_t u = 0; u < p; ++u) scan_point(Fp(u, p), one);
        }
    });
    res.ok = res.failures == 0;
    res.note = "pairs=" + std::to_string(res.checked);
    return res;
}

Param3Summary param3_membership(uint64_t p, BaseFilter base) {
    Param3Summary summary;
    for_each_curve(p, base, [&](const EllipticCurve<Fp>& E) {
        const Param3Report report = param3_membership_check(E);
        ++summary.membership.checked;
        if (!report.membership) ++summary.membership.failures;
        if (report.coverage)
            ++summary.covered;
        else
            ++summary.uncovered;
        std::ostringstream line;
        line << "p=" << p << " a=" << E.a().value() << " b=" << E.b().value() << " case="
             << to_string(report.curve_case) << " class=" << to_string(class_over_fp(E))
             << " members=" << report.members << " skipped=" << report.skipped
             << " produced=" << report.produced << " class_set=" << report.class_set_size
             << " membership=" << (report.membership ? "yes" : "NO")
             << " coverage=" << (report.coverage ? "yes" : "no");
        summary.coverage_lines.push_back(line.str());
    });
    summary.membership.ok = summary.membership.failures == 0;
    summary.membership.note = "bases=" + std::to_string(summary.membership.checked) +
                              " covered=" + std::to_string(summary.covered) +
                              " uncovered=" + std::to_string(summary.uncovered);
    return summary;
}

FieldReport verify_field(uint64_t p, BaseFilter base) {
    FieldReport report;
    auto add = [&](const std::string& name, const CheckResult& res) {
        report.ok = report.ok && res.ok;
        report.lines.push_back((res.ok ? "PASS " : "FAIL ") + name + " (" + res.note +
                               (res.failures ? ", failures=" + std::to_string(res.failures) : "") + ")");
    };
    add("family image equals factorization class (set equality)", set_equality(p, base));
    add("discriminant and j-invariant identities", invariant_formulas(p, base));
    add("witness search matches class equality; ratio criteria agree", witness_against_class(p, base));
    const Param3Summary p3 = param3_membership(p, base);
    add("t-family membership", p3.membership);
    report.coverage_lines = p3.coverage_lines;
    return report;
}

}  // namespace mod2ec::verify
