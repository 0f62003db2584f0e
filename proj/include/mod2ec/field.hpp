#pragma once

#include <concepts>

namespace mod2ec {

// The coefficient fields this library works over: exact, with sameness of the
// underlying field decidable at runtime (moduli must match for F_p).
template <typename K>
concept Field = std::copyable<K> && requires(const K& x, const K& y, long long n) {
    { x + y } -> std::same_as<K>;
    { x - y } -> std::same_as<K>;
    { x * y } -> std::same_as<K>;
    { x / y } -> std::same_as<K>;
    { -x } -> std::same_as<K>;
    { x == y } -> std::convertible_to<bool>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x.zero() } -> std::same_as<K>;
    { x.one() } -> std::same_as<K>;
    { x.from_int(n) } -> std::same_as<K>;
    { x.inverse() } -> std::same_as<K>;
    { same_field(x, y) } -> std::convertible_to<bool>;
};

}  // namespace mod2ec
