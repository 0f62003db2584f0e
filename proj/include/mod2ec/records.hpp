#pragma once

// Line-delimited curve records and corpus grouping. One JSON object per line:
//   {"label"?: string, "a": rational-text, "b": rational-text, "p"?: integer}
// Absent "p" means the curve lives over Q. Rendering is canonical: lowest
// terms, positive denominator, fixed key order.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mod2ec/curve.hpp"
#include "mod2ec/mod2class.hpp"
#include "mod2ec/rational.hpp"

namespace mod2ec {

struct CurveRecord {
    std::optional<std::string> label;
    Rational a, b;
    std::optional<uint64_t> p;  // absent => Q

    bool over_q() const { return !p.has_value(); }
    EllipticCurve<Rational> curve_q() const;
    EllipticCurve<Fp> curve_fp() const;
    std::string display_label() const;
};

// Throws std::invalid_argument on malformed input (message carries the line
// number when given) and std::domain_error when the record parses but the
// curve is singular.
CurveRecord parse_curve_record(const std::string& line, size_t line_number = 0);

std::string render_curve_record(const CurveRecord& rec);

// Reads records line by line. Singular records are reported to `diagnostics`
// and skipped; malformed lines are fatal.
std::vector<CurveRecord> read_records(std::istream& in, std::ostream& diagnostics);

// The effective invariant for grouping a corpus over Q: the factorization
// type at each of the first N primes good for every member.
using ClassSignature = std::vector<std::pair<uint64_t, Mod2Class>>;

struct RecordGroup {
    ClassSignature signature;
    std::vector<std::string> members;  // display labels, input order
};

// First `count` primes > 3 dividing none of the given integral discriminants.
std::vector<uint64_t> shared_good_primes(const std::vector<mpz_class>& discs, size_t count);

ClassSignature signature_at_primes(const EllipticCurve<Rational>& E,
                                   const std::vector<uint64_t>& primes);

// Partitions records by signature (over Q, at the first `prime_budget` shared
// good primes) or by factorization type (all records over one F_p). Groups
// come out sorted by signature; members keep input order. Mixing fields is an
// error.
std::vector<RecordGroup> group_by_signature(const std::vector<CurveRecord>& records,
                                            size_t prime_budget = 25);

std::string render_group(const RecordGroup& group);

}  // namespace mod2ec
