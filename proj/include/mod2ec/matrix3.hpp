#pragma once

// Fixed 3x3 matrices over an exact field, plus the multiplication-operator
// construction on K[x]/(f) for monic cubics f. This is all the linear algebra
// the library needs.

#include <array>
#include <stdexcept>

#include "mod2ec/field.hpp"
#include "mod2ec/poly.hpp"

namespace mod2ec {

template <Field K>
class Matrix3 {
public:
    explicit Matrix3(std::array<K, 9> entries) : m_(std::move(entries)) {}

    static Matrix3 diagonal(const K& d0, const K& d1, const K& d2) {
        const K z = d0.zero();
        return Matrix3({d0, z, z, z, d1, z, z, z, d2});
    }

    const K& operator()(int row, int col) const { return m_[static_cast<size_t>(3 * row + col)]; }
    K& operator()(int row, int col) { return m_[static_cast<size_t>(3 * row + col)]; }

    K trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

    bool operator==(const Matrix3&) const = default;

private:
    std::array<K, 9> m_;
};

template <Field K>
K det3(const Matrix3<K>& M) {
    return M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) -
           M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
           M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
}

// Characteristic polynomial T^3 - tr(M) T^2 + c2(M) T - det(M), where c2 is
// the sum of the principal 2x2 minors.
template <Field K>
Polynomial<K> charpoly3(const Matrix3<K>& M) {
    const K tr = M.trace();
    const K c2 = (M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0)) +
                 (M(0, 0) * M(2, 2) - M(0, 2) * M(2, 0)) +
                 (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1));
    const K dt = det3(M);
    return Polynomial<K>({-dt, c2, -tr, tr.one()});
}

// Matrix of multiplication by h on K[x]/(f) with respect to the basis
// {1, x, x^2}; f must be a monic cubic, deg h <= 2.
template <Field K>
Matrix3<K> mult_matrix(const Polynomial<K>& h, const Polynomial<K>& f) {
    if (f.degree() != 3 || !f.is_monic()) throw std::invalid_argument("modulus must be a monic cubic");
    if (h.degree() > 2) throw std::invalid_argument("multiplier degree must be at most 2");
    const K zero = f.leading().zero();
    std::array<K, 9> e{zero, zero, zero, zero, zero, zero, zero, zero, zero};
    Matrix3<K> M(std::move(e));
    for (int col = 0; col < 3; ++col) {
        const Polynomial<K> image = divmod(h * Polynomial<K>::monomial(f.leading(), col), f).second;
        for (int row = 0; row < 3; ++row) M(row, col) = image.coeff_or(row, zero);
    }
    return M;
}

}  // namespace mod2ec
