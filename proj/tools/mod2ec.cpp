// mod2ec: exact-arithmetic toolkit for mod-2 representations of elliptic
// curves in short Weierstrass form, over Q and over prime fields F_p.
//
// Subcommands:
//   family   member of the two-parameter family attached to a base curve
//   class    factorization type of the 2-division cubic
//   check    decide mod-2 isomorphism of two curves
//   witness  search P^1(F_p) for a point witnessing shared 2-torsion
//   param3   member of the t-parametrized (Legendre-derived) family
//   verify   exhaustive verification over a small prime field
//   group    partition a corpus of curve records by signature
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mod2ec/curve.hpp"
#include "mod2ec/family.hpp"
#include "mod2ec/mod2.hpp"
#include "mod2ec/param3.hpp"
#include "mod2ec/records.hpp"
#include "mod2ec/verify.hpp"

namespace {

using namespace mod2ec;

struct FieldChoice {
    std::optional<uint64_t> p;
    bool rational = false;

    bool over_q() const { return !p.has_value(); }
    void validate() const {
        if (p && rational) throw CLI::ValidationError("--p and --rational are mutually exclusive");
    }
};

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

Fp to_fp(const Rational& x, uint64_t p) { return rational_mod_p(x, p); }

std::vector<CurveRecord> load_records(const std::string& path) {
    if (path.empty() || path == "-") return read_records(std::cin, std::cerr);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return read_records(in, std::cerr);
}

int run_family(const FieldChoice& field, const Rational& a, const Rational& b, const Rational& u,
               const Rational& v) {
    nlohmann::ordered_json out;
    auto emit = [&](const auto& ctx, const auto& fu, const auto& fv) {
        const auto locus = singularity_locus(ctx, fu, fv);
        const auto [alpha, beta] = family_coeffs(ctx, fu, fv);
        const auto member = family_curve(ctx, fu, fv);
        out["alpha"] = to_string(alpha);
        out["beta"] = to_string(beta);
        out["disc"] = to_string(member.discriminant());
        out["j"] = to_string(member.j_invariant());
        out["locus"] = to_string(locus);
        out["phi_det"] = to_string(phi_det(ctx, fu, fv));
    };
    if (field.over_q()) {
        const FamilyContext<Rational> ctx{EllipticCurve<Rational>(a, b)};
        emit(ctx, u, v);
    } else {
        const uint64_t p = *field.p;
        const FamilyContext<Fp> ctx{EllipticCurve<Fp>(to_fp(a, p), to_fp(b, p))};
        emit(ctx, to_fp(u, p), to_fp(v, p));
        out["p"] = p;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_class(const FieldChoice& field, const std::optional<Rational>& a,
              const std::optional<Rational>& b, const std::string& input) {
    if (a.has_value() != b.has_value())
        throw std::invalid_argument("--a and --b must be given together");
    auto emit = [&](const CurveRecord& rec) {
        nlohmann::ordered_json out;
        if (rec.label) out["label"] = *rec.label;
        if (rec.over_q()) {
            out["field"] = "Q";
            out["class"] = degrees(rational_pattern(rec.curve_q()));
        } else {
            out["p"] = *rec.p;
            out["class"] = degrees(class_over_fp(rec.curve_fp()));
        }
        std::cout << out.dump() << "\n";
    };
    if (a && b) {
        CurveRecord rec{std::nullopt, *a, *b, field.p};
        emit(rec);
        return 0;
    }
    for (CurveRecord rec : load_records(input)) {
        if (!rec.p && field.p) rec.p = field.p;  // apply the global field to Q records
        emit(rec);
    }
    return 0;
}

int run_check(const FieldChoice& field, const Rational& a, const Rational& b, const Rational& a2,
              const Rational& b2, size_t prime_budget) {
    if (field.over_q()) {
        const EllipticCurve<Rational> E1(a, b), E2(a2, b2);
        std::cout << iso_q(E1, E2, prime_budget).str() << "\n";
    } else {
        const uint64_t p = *field.p;
        const EllipticCurve<Fp> E1(to_fp(a, p), to_fp(b, p)), E2(to_fp(a2, p), to_fp(b2, p));
        std::cout << (iso_fp(E1, E2) ? "ISO" : "NOT_ISO pattern") << "\n";
    }
    return 0;
}

int run_witness(uint64_t p, const Rational& a, const Rational& b, const Rational& a2,
                const Rational& b2) {
    const EllipticCurve<Fp> E(to_fp(a, p), to_fp(b, p)), Ep(to_fp(a2, p), to_fp(b2, p));
    const auto pt = find_witness_fp(E, Ep);
    nlohmann::ordered_json out;
    out["found"] = pt.has_value();
    if (pt) {
        out["u"] = to_string(pt->u);
        out["v"] = to_string(pt->v);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_param3(const FieldChoice& field, const Rational& a, const Rational& b,
               const std::string& t_text, const Rational& d) {
    nlohmann::ordered_json out;
    auto emit = [&](const auto& base, const auto& t, const auto& dd) {
        using K = std::decay_t<decltype(dd)>;
        const auto member = param3_curve(Param3Input<K>{base, t, dd});
        out["a"] = to_string(member.a());
        out["b"] = to_string(member.b());
        out["case"] = to_string(param3_case(base));
    };
    const bool infinite = t_text == "inf";
    if (field.over_q()) {
        const EllipticCurve<Rational> base(a, b);
        std::optional<Rational> t;
        if (!infinite) t = parse_rational_flag(t_text, "--t");
        emit(base, t, d);
    } else {
        const uint64_t p = *field.p;
        const EllipticCurve<Fp> base(to_fp(a, p), to_fp(b, p));
        std::optional<Fp> t;
        if (!infinite) t = to_fp(parse_rational_flag(t_text, "--t"), p);
        emit(base, t, to_fp(d, p));
        out["p"] = p;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_verify(uint64_t p, const std::optional<Rational>& a, const std::optional<Rational>& b,
               const std::string& coverage_out) {
    verify::BaseFilter base;
    if (a && b) base = {to_fp(*a, p).value(), to_fp(*b, p).value()};
    const verify::FieldReport report = verify::verify_field(p, base);
    for (const std::string& line : report.lines) std::cout << line << "\n";
    if (!coverage_out.empty()) {
        std::ofstream out(coverage_out);
        if (!out) throw std::invalid_argument("cannot open '" + coverage_out + "'");
        for (const std::string& line : report.coverage_lines) out << line << "\n";
        std::cerr << "coverage report: " << coverage_out << " (" << report.coverage_lines.size()
                  << " lines)\n";
    } else {
        for (const std::string& line : report.coverage_lines) std::cout << line << "\n";
    }
    return report.ok ? 0 : 1;
}

int run_group(const std::string& input, size_t prime_budget) {
    const auto records = load_records(input);
    for (const RecordGroup& group : group_by_signature(records, prime_budget))
        std::cout << render_group(group) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mod-2 representation toolkit for elliptic curves"};
    app.require_subcommand(1);

    FieldChoice field;
    std::string a_text, b_text, a2_text, b2_text, u_text, v_text, t_text, d_text = "1";
    std::string input, coverage_out;
    size_t prime_budget = 25;
    uint64_t p_flag = 0;

    auto add_field_flags = [&](CLI::App* cmd) {
        cmd->add_option("--p", p_flag, "prime modulus (> 3); omit for Q");
        cmd->add_flag("--rational", field.rational, "force exact rational arithmetic (default)");
    };

    CLI::App* family = app.add_subcommand("family", "emit the family member at (u, v)");
    family->add_option("--a", a_text, "base curve a")->required();
    family->add_option("--b", b_text, "base curve b")->required();
    family->add_option("--u", u_text, "parameter u")->required();
    family->add_option("--v", v_text, "parameter v")->required();
    add_field_flags(family);

    CLI::App* cls = app.add_subcommand("class", "factorization type of the 2-division cubic");
    cls->add_option("--a", a_text, "curve a");
    cls->add_option("--b", b_text, "curve b");
    cls->add_option("--in", input, "record file ('-' for stdin)");
    add_field_flags(cls);

    CLI::App* check = app.add_subcommand("check", "decide mod-2 isomorphism of two curves");
    check->add_option("--a", a_text, "first curve a")->required();
    check->add_option("--b", b_text, "first curve b")->required();
    check->add_option("--a2", a2_text, "second curve a")->required();
    check->add_option("--b2", b2_text, "second curve b")->required();
    check->add_option("--primes", prime_budget, "prime budget for the irreducible case over Q");
    add_field_flags(check);

    CLI::App* witness = app.add_subcommand("witness", "search P^1(F_p) for a witness point");
    witness->add_option("--a", a_text, "first curve a")->required();
    witness->add_option("--b", b_text, "first curve b")->required();
    witness->add_option("--a2", a2_text, "second curve a")->required();
    witness->add_option("--b2", b2_text, "second curve b")->required();
    witness->add_option("--p", p_flag, "prime modulus (> 3)")->required();

    CLI::App* param3 = app.add_subcommand("param3", "emit the t-family member");
    param3->add_option("--a", a_text, "base curve a")->required();
    param3->add_option("--b", b_text, "base curve b")->required();
    param3->add_option("--t", t_text, "parameter t (rational text or 'inf')")->required();
    param3->add_option("--d", d_text, "twist scale d (default 1)");
    add_field_flags(param3);

    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive verification over F_p");
    verify_cmd->add_option("--p", p_flag, "prime modulus (> 3)")->required();
    verify_cmd->add_option("--a", a_text, "restrict to one base curve: a");
    verify_cmd->add_option("--b", b_text, "restrict to one base curve: b");
    verify_cmd->add_option("--coverage-out", coverage_out, "write the coverage report to a file");

    CLI::App* group = app.add_subcommand("group", "partition records by signature");
    group->add_option("--in", input, "record file ('-' for stdin)");
    group->add_option("--primes", prime_budget, "signature length over Q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (p_flag != 0) field.p = p_flag;
        field.validate();
        auto rat = [&](const std::string& text, const char* flag) {
            return parse_rational_flag(text, flag);
        };
        auto opt_rat = [&](const std::string& text, const char* flag) -> std::optional<Rational> {
            if (text.empty()) return std::nullopt;
            return parse_rational_flag(text, flag);
        };

        if (family->parsed())
            return run_family(field, rat(a_text, "--a"), rat(b_text, "--b"), rat(u_text, "--u"),
                              rat(v_text, "--v"));
        if (cls->parsed())
            return run_class(field, opt_rat(a_text, "--a"), opt_rat(b_text, "--b"), input);
        if (check->parsed())
            return run_check(field, rat(a_text, "--a"), rat(b_text, "--b"), rat(a2_text, "--a2"),
                             rat(b2_text, "--b2"), prime_budget);
        if (witness->parsed())
            return run_witness(*field.p, rat(a_text, "--a"), rat(b_text, "--b"),
                               rat(a2_text, "--a2"), rat(b2_text, "--b2"));
        if (param3->parsed())
            return run_param3(field, rat(a_text, "--a"), rat(b_text, "--b"), t_text,
                              rat(d_text, "--d"));
        if (verify_cmd->parsed())
            return run_verify(*field.p, opt_rat(a_text, "--a"), opt_rat(b_text, "--b"), coverage_out);
        if (group->parsed()) return run_group(input, prime_budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
