#pragma once

#include "pellfrac/integers.hpp"

namespace pellfrac {

// Minimal 2x2 matrix over a commutative ring T (used with Int and with
// multivariate polynomials).
template <class T>
struct Mat2x2 {
    T m11{}, m12{}, m21{}, m22{};

    static Mat2x2 identity() { return {T(1), T(0), T(0), T(1)}; }

    friend Mat2x2 operator*(const Mat2x2& x, const Mat2x2& y) {
        return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
                x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
    }

    T det() const { return m11 * m22 - m12 * m21; }

    // Adjugate: adj(M) * M = det(M) * I.
    Mat2x2 adjugate() const { return {m22, -m12, -m21, m11}; }

    friend bool operator==(const Mat2x2& x, const Mat2x2& y) {
        return x.m11 == y.m11 && x.m12 == y.m12 && x.m21 == y.m21 && x.m22 == y.m22;
    }
    friend bool operator!=(const Mat2x2& x, const Mat2x2& y) { return !(x == y); }
};

using Mat2 = Mat2x2<Int>;

}  // namespace pellfrac
