#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace pellfrac {

// Exact arbitrary-precision arithmetic used throughout the library.  Every
// core computation is integer or rational; no floating point is involved.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Floor division: rounds toward negative infinity for either sign of b.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;  // cpp_int division truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// a mod m reduced into [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Largest s >= 0 with s*s <= n.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    const Int s = boost::multiprecision::sqrt(n);
    return s * s == n;
}

// Decomposition n = root^2 * squarefree, by trial division (desk-scale input).
struct SquareSplit {
    Int root;
    Int squarefree;
};

inline SquareSplit split_square(Int n) {
    if (n <= 0) throw std::domain_error("split_square: argument must be positive");
    SquareSplit out{1, 1};
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned i = 1; i < e; i += 2) out.root *= p;
        if (e & 1u) out.squarefree *= p;
    }
    out.squarefree *= n;  // leftover factor is prime (or 1)
    return out;
}

// Extended gcd: returns g = gcd(a, b) >= 0 and (x, y) with a*x + b*y = g.
struct XGcd {
    Int g, x, y;
};

inline XGcd xgcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {a, x0, y0};
}

// Inverse of a modulo m > 1; requires gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    const XGcd e = xgcd(mod_floor(a, m), m);
    if (e.g != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_floor(e.x, m);
}

// Exact floor((a + b*sqrt(d)) / c) for c > 0, d > 0 and d not a perfect
// square (so b*sqrt(d) is irrational whenever b != 0; b = 0 is allowed).
inline Int floor_linear_surd(const Int& a, const Int& b, const Int& c, const Int& d) {
    if (c <= 0) throw std::domain_error("floor_linear_surd: denominator must be positive");
    Int m = 0;
    if (b > 0) m = isqrt(b * b * d);
    else if (b < 0) m = -isqrt(b * b * d) - 1;  // -ceil(|b|*sqrt(d)), exact: b^2*d is not a square
    return floor_div(a + m, c);
}

// Sign of a + b*sqrt(d), d > 0 not a perfect square: -1, 0 or +1.
inline int sign_linear_surd(const Int& a, const Int& b, const Int& d) {
    if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
    if (a <= 0 && b <= 0) return -1;
    if (a > 0) return a * a > b * b * d ? 1 : -1;  // b < 0; ties impossible, d non-square
    return b * b * d > a * a ? 1 : -1;             // a < 0, b > 0
}

}  // namespace pellfrac
