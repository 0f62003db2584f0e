#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mod2ec {

// Factorization type of a separable cubic: the sorted multiset of degrees of
// its irreducible factors. Over F_p this classifies the etale cubic algebra
// F_p[x]/(f), which is exactly the invariant deciding mod-2 isomorphism of
// elliptic curves there.
enum class Mod2Class {
    split = 0,             // {1,1,1}
    linear_quadratic = 1,  // {1,2}
    irreducible = 2,       // {3}
};

inline std::vector<int> degrees(Mod2Class c) {
    switch (c) {
        case Mod2Class::split: return {1, 1, 1};
        case Mod2Class::linear_quadratic: return {1, 2};
        case Mod2Class::irreducible: return {3};
    }
    return {};
}

inline std::string to_string(Mod2Class c) {
    switch (c) {
        case Mod2Class::split: return "{1,1,1}";
        case Mod2Class::linear_quadratic: return "{1,2}";
        case Mod2Class::irreducible: return "{3}";
    }
    return "?";
}

inline std::ostream& operator<<(std::ostream& os, Mod2Class c) { return os << to_string(c); }

}  // namespace mod2ec
