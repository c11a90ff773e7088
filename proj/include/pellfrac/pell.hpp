#pragma once

// Fermat-Pell conics: the hyperbola C*x^2 - B*x*y + A*y^2 = (-1)^k * A
// attached to a quadratic form (A, B, C) and a parity k, together with
// fundamental solutions of y^2 - D*x^2 = +-1 via continued fractions.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pellfrac/cfrac.hpp"
#include "pellfrac/surd.hpp"

namespace pellfrac {

struct ConicPoint {
    Int x;
    Int y;

    friend bool operator==(const ConicPoint& lhs, const ConicPoint& rhs) {
        return lhs.x == rhs.x && lhs.y == rhs.y;
    }
    friend bool operator!=(const ConicPoint& lhs, const ConicPoint& rhs) { return !(lhs == rhs); }
    friend bool operator<(const ConicPoint& lhs, const ConicPoint& rhs) {
        if (lhs.x != rhs.x) return lhs.x < rhs.x;
        return lhs.y < rhs.y;
    }
};

class PellConic {
public:
    PellConic(QuadPoly coeffs, int parity)
        : coeffs_(std::move(coeffs)), parity_(((parity % 2) + 2) % 2) {}

    const QuadPoly& coeffs() const { return coeffs_; }
    int parity() const { return parity_; }

    // Right-hand side (-1)^k * A of the conic equation.
    Int rhs() const { return parity_ == 0 ? coeffs_.A() : -coeffs_.A(); }

private:
    QuadPoly coeffs_;
    int parity_;
};

inline bool on_conic(const PellConic& conic, const ConicPoint& p) {
    const Int& a = conic.coeffs().A();
    const Int& b = conic.coeffs().B();
    const Int& c = conic.coeffs().C();
    return c * p.x * p.x - b * p.x * p.y + a * p.y * p.y == conic.rhs();
}

// Least positive (x, y) with y^2 - D*x^2 = sign, read off the convergents of
// the expansion of sqrt(D).  For sign = -1 a solution exists if and only if
// the period length of sqrt(D) is odd; otherwise returns nullopt.
inline std::optional<ConicPoint> fundamental_pell(const Int& D, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (D <= 1 || is_square(D)) throw std::invalid_argument("D must be a nonsquare integer > 1");

    const PeriodicCF cf = expand(QuadSurd(0, 1, 1, D));
    const std::size_t ell = cf.period().size();
    if (sign == -1 && ell % 2 == 0) return std::nullopt;
    const std::size_t t = (sign == 1 && ell % 2 == 1) ? 2 * ell : ell;

    std::vector<Int> digits;
    digits.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
        digits.push_back(i == 0 ? cf.preperiod().front() : cf.period()[(i - 1) % ell]);

    const Mat2 m = convergent_matrix(digits);
    return ConicPoint{m.m21, m.m11};  // (q_{t-1}, p_{t-1})
}

// All integer points with |x|, |y| <= bound, sorted lexicographically.
// Scans x and solves the resulting quadratic in y with an integer square root.
inline std::vector<ConicPoint> solutions_up_to(const PellConic& conic, const Int& bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    const Int& a = conic.coeffs().A();
    const Int& b = conic.coeffs().B();
    const Int& c = conic.coeffs().C();
    const Int target = conic.rhs();

    std::vector<ConicPoint> out;
    for (Int x = -bound; x <= bound; ++x) {
        // a*y^2 - b*x*y + (c*x^2 - target) = 0
        const Int disc = b * b * x * x - 4 * a * (c * x * x - target);
        if (disc < 0) continue;
        const Int r = isqrt(disc);
        if (r * r != disc) continue;
        for (const Int& num : {Int(b * x + r), Int(b * x - r)}) {
            if (mod_floor(num, 2 * a) != 0) continue;
            const Int y = floor_div(num, 2 * a);
            if (abs(y) > bound) continue;
            out.push_back({x, y});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pellfrac
