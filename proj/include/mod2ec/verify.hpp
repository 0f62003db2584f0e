#pragma once

// Exhaustive small-field verification of the library's central claims, shared
// by the CLI `verify` subcommand and the acceptance suite:
//   - set equality: the family image equals the full factorization-type class
//   - the discriminant and j-invariant identities of the family
//   - witness search succeeds exactly for class-equal pairs (j' outside
//     {0, 1728}), with the two ratio criteria agreeing whenever ab != 0
//   - membership and coverage of the alternative t-parametrized families

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mod2ec::verify {

struct CheckResult {
    bool ok = true;
    uint64_t checked = 0;
    uint64_t failures = 0;
    std::string note;
};

using BaseFilter = std::optional<std::pair<uint64_t, uint64_t>>;  // restrict to one (a, b)

CheckResult set_equality(uint64_t p, BaseFilter base = {});
CheckResult invariant_formulas(uint64_t p, BaseFilter base = {});
CheckResult witness_against_class(uint64_t p, BaseFilter base = {});

struct Param3Summary {
    CheckResult membership;
    std::vector<std::string> coverage_lines;
    uint64_t covered = 0;
    uint64_t uncovered = 0;
};

Param3Summary param3_membership(uint64_t p, BaseFilter base = {});

struct FieldReport {
    bool ok = true;
    std::vector<std::string> lines;           // one PASS/FAIL line per check
    std::vector<std::string> coverage_lines;  // per-curve coverage records
};

FieldReport verify_field(uint64_t p, BaseFilter base = {});

}  // namespace mod2ec::verify
