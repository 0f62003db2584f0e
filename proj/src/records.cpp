#include "mod2ec/records.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "mod2ec/mod2.hpp"

namespace mod2ec {

namespace {

std::string at_line(size_t line_number, const std::string& what) {
    if (line_number == 0) return what;
    return "line " + std::to_string(line_number) + ": " + what;
}

}  // namespace

EllipticCurve<Rational> CurveRecord::curve_q() const {
    if (!over_q()) throw std::invalid_argument("record is not over Q");
    return EllipticCurve<Rational>(a, b);
}

EllipticCurve<Fp> CurveRecord::curve_fp() const {
    if (over_q()) throw std::invalid_argument("record carries no prime");
    return EllipticCurve<Fp>(rational_mod_p(a, *p), rational_mod_p(b, *p));
}

std::string CurveRecord::display_label() const {
    if (label) return *label;
    std::string text = a.str() + "," + b.str();
    if (p) text += "@" + std::to_string(*p);
    return text;
}

CurveRecord parse_curve_record(const std::string& line, size_t line_number) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(at_line(line_number, std::string("bad JSON: ") + e.what()));
    }
    if (!obj.is_object()) throw std::invalid_argument(at_line(line_number, "record must be a JSON object"));
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (key != "label" && key != "a" && key != "b" && key != "p")
            throw std::invalid_argument(at_line(line_number, "unknown key '" + key + "'"));
    }
    if (!obj.contains("a") || !obj.contains("b"))
        throw std::invalid_argument(at_line(line_number, "record needs both \"a\" and \"b\""));

    CurveRecord rec;
    try {
        if (obj.contains("label")) {
            if (!obj["label"].is_string())
                throw std::invalid_argument("\"label\" must be a string");
            rec.label = obj["label"].get<std::string>();
        }
        if (!obj["a"].is_string() || !obj["b"].is_string())
            throw std::invalid_argument("\"a\" and \"b\" must be rational-text strings");
        rec.a = Rational::parse(obj["a"].get<std::string>());
        rec.b = Rational::parse(obj["b"].get<std::string>());
        if (obj.contains("p")) {
            if (!obj["p"].is_number_unsigned() && !obj["p"].is_number_integer())
                throw std::invalid_argument("\"p\" must be an integer");
            const int64_t p = obj["p"].get<int64_t>();
            if (p <= 3) throw std::invalid_argument("\"p\" must exceed 3");
            validate_prime_modulus(static_cast<uint64_t>(p));
            rec.p = static_cast<uint64_t>(p);
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(at_line(line_number, e.what()));
    }

    // Force construction so singular records surface here, as domain_error.
    try {
        if (rec.over_q())
            (void)rec.curve_q();
        else
            (void)rec.curve_fp();
    } catch (const std::domain_error& e) {
        throw std::domain_error(at_line(line_number, e.what()));
    }
    return rec;
}

std::string render_curve_record(const CurveRecord& rec) {
    nlohmann::ordered_json obj;
    if (rec.label) obj["label"] = *rec.label;
    obj["a"] = rec.a.str();
    obj["b"] = rec.b.str();
    if (rec.p) obj["p"] = *rec.p;
    return obj.dump();
}

std::vector<CurveRecord> read_records(std::istream& in, std::ostream& diagnostics) {
    std::vector<CurveRecord> out;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_curve_record(line, line_number));
        } catch (const std::domain_error& e) {
            diagnostics << "skipping record: " << e.what() << "\n";
        }
    }
    return out;
}

std::vector<uint64_t> shared_good_primes(const std::vector<mpz_class>& discs, size_t count) {
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

ClassSignature signature_at_primes(const EllipticCurve<Rational>& E,
                                   const std::vector<uint64_t>& primes) {
    ClassSignature sig;
    sig.reserve(primes.size());
    for (uint64_t p : primes) sig.emplace_back(p, class_over_fp(reduce_mod_p(E, p)));
    return sig;
}

std::vector<RecordGroup> group_by_signature(const std::vector<CurveRecord>& records,
                                            size_t prime_budget) {
    if (records.empty()) return {};

    const bool rational = records.front().over_q();
    for (const CurveRecord& rec : records) {
        if (rec.over_q() != rational || (!rational && rec.p != records.front().p))
            throw std::invalid_argument("cannot group records over mixed fields");
    }

    std::map<ClassSignature, std::vector<std::string>> buckets;
    if (rational) {
        std::vector<mpz_class> discs;
        discs.reserve(records.size());
        for (const CurveRecord& rec : records) discs.push_back(integral_discriminant(rec.curve_q()));
        const auto primes = shared_good_primes(discs, prime_budget);
        for (const CurveRecord& rec : records)
            buckets[signature_at_primes(rec.curve_q(), primes)].push_back(rec.display_label());
    } else {
        for (const CurveRecord& rec : records) {
            const ClassSignature sig{{*rec.p, class_over_fp(rec.curve_fp())}};
            buckets[sig].push_back(rec.display_label());
        }
    }

    std::vector<RecordGroup> out;
    out.reserve(buckets.size());
    for (auto& [sig, members] : buckets) out.push_back({sig, std::move(members)});
    return out;
}

std::string render_group(const RecordGroup& group) {
    nlohmann::ordered_json obj;
    auto signature = nlohmann::ordered_json::array();
    for (const auto& [p, cls] : group.signature)
        signature.push_back(nlohmann::ordered_json::array({p, degrees(cls)}));
    obj["signature"] = std::move(signature);
    obj["members"] = group.members;
    return obj.dump();
}

}  // namespace mod2ec
