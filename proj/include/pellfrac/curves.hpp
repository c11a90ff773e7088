#pragma once

// Elliptic curves Y^2 = (X - e1)(X - e2)(X - e3) with integer roots, the
// chord-tangent group law in exact rational arithmetic, bounded rational
// point search, and torsion classification by the uniform bound over Q.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pellfrac/integers.hpp"
#include "pellfrac/mpoly.hpp"

namespace pellfrac {

struct CurvePoint {
    Rat X;
    Rat Y;
    bool at_infinity = false;

    static CurvePoint infinity() { return CurvePoint{0, 0, true}; }
    static CurvePoint affine(Rat x, Rat y) { return CurvePoint{std::move(x), std::move(y), false}; }

    friend bool operator==(const CurvePoint& lhs, const CurvePoint& rhs) {
        if (lhs.at_infinity || rhs.at_infinity) return lhs.at_infinity == rhs.at_infinity;
        return lhs.X == rhs.X && lhs.Y == rhs.Y;
    }
    friend bool operator!=(const CurvePoint& lhs, const CurvePoint& rhs) { return !(lhs == rhs); }
    friend bool operator<(const CurvePoint& lhs, const CurvePoint& rhs) {
        if (lhs.at_infinity != rhs.at_infinity) return lhs.at_infinity;  // infinity first
        if (lhs.X != rhs.X) return lhs.X < rhs.X;
        return lhs.Y < rhs.Y;
    }

    std::string str() const {
        if (at_infinity) return "infinity";
        return "(" + X.str() + ", " + Y.str() + ")";
    }
};

class IntegralCubicCurve {
public:
    IntegralCubicCurve(Int e1, Int e2, Int e3)
        : e1_(std::move(e1)), e2_(std::move(e2)), e3_(std::move(e3)) {
        if (e1_ == e2_ || e1_ == e3_ || e2_ == e3_)
            throw std::invalid_argument("curve roots must be pairwise distinct");
    }

    const Int& e1() const { return e1_; }
    const Int& e2() const { return e2_; }
    const Int& e3() const { return e3_; }

    // Coefficients of the expanded model Y^2 = X^3 + a2*X^2 + a1*X + a0.
    Int a2() const { return -(e1_ + e2_ + e3_); }
    Int a1() const { return e1_ * e2_ + e1_ * e3_ + e2_ * e3_; }
    Int a0() const { return -e1_ * e2_ * e3_; }

    friend bool operator==(const IntegralCubicCurve& lhs, const IntegralCubicCurve& rhs) {
        return lhs.e1_ == rhs.e1_ && lhs.e2_ == rhs.e2_ && lhs.e3_ == rhs.e3_;
    }

private:
    Int e1_, e2_, e3_;
};

inline bool on_curve(const IntegralCubicCurve& curve, const CurvePoint& p) {
    if (p.at_infinity) return true;
    return p.Y * p.Y == (p.X - curve.e1()) * (p.X - curve.e2()) * (p.X - curve.e3());
}

// One-time symbolic check that substituting X = (b+2)^2 x, Y = (b+2)^3 y into
// the integral model Y^2 = X(X - (b+2)^2)(X - (b^2-4)) recovers (b+2)^5 times
// the cleared form of y^2 = x(x-1)(x - (b-2)/(b+2)).
inline bool integral_model_identity_holds() {
    const VarContext ctx = make_context({"b", "x", "y"});
    const MPoly b = MPoly::variable(ctx, 0);
    const MPoly x = MPoly::variable(ctx, 1);
    const MPoly y = MPoly::variable(ctx, 2);
    const MPoly two = MPoly::constant(ctx, 2);
    const MPoly bp2 = b + two;

    const MPoly X = bp2 * bp2 * x;
    const MPoly Y = bp2 * bp2 * bp2 * y;
    const MPoly integral = Y * Y - X * (X - bp2 * bp2) * (X - (b * b - MPoly::constant(ctx, 4)));
    const MPoly affine_cleared = bp2 * y * y - x * (x - MPoly::constant(ctx, 1)) * (bp2 * x - (b - two));
    return integral == pow(bp2, 5) * affine_cleared;
}

inline IntegralCubicCurve curve_from_b(const Int& b) {
    static const bool identity_ok = integral_model_identity_holds();
    if (!identity_ok) throw std::logic_error("integral model substitution identity failed");
    if (b < 3) throw std::invalid_argument("curve parameter b must be at least 3");
    return IntegralCubicCurve(0, (b + 2) * (b + 2), b * b - 4);
}

inline CurvePoint group_add(const IntegralCubicCurve& curve, const CurvePoint& p,
                            const CurvePoint& q) {
    if (!on_curve(curve, p) || !on_curve(curve, q))
        throw std::domain_error("point is not on the curve");
    if (p.at_infinity) return q;
    if (q.at_infinity) return p;

    Rat lambda;
    if (p.X == q.X) {
        if (p.Y == -q.Y) return CurvePoint::infinity();  // includes two-torsion doubling
        // Tangent slope at p = q.
        lambda = (3 * p.X * p.X + 2 * Rat(curve.a2()) * p.X + Rat(curve.a1())) / (2 * p.Y);
    } else {
        lambda = (q.Y - p.Y) / (q.X - p.X);
    }
    const Rat x3 = lambda * lambda - Rat(curve.a2()) - p.X - q.X;
    const Rat y3 = lambda * (p.X - x3) - p.Y;
    return CurvePoint::affine(x3, y3);
}

// All points with X = p/q^2, Y = r/q^3 in lowest terms, |p|, |q| <= bound,
// plus the point at infinity; sorted deterministically (infinity first).
inline std::vector<CurvePoint> point_search(const IntegralCubicCurve& curve, const Int& bound) {
    if (bound < 1) throw std::invalid_argument("height bound must be >= 1");
    std::vector<CurvePoint> out{CurvePoint::infinity()};
    for (Int q = 1; q <= bound; ++q) {
        const Int q2 = q * q, q3 = q2 * q;
        for (Int p = -bound; p <= bound; ++p) {
            if (gcd(p, q) != 1) continue;
            const Int num = (p - curve.e1() * q2) * (p - curve.e2() * q2) * (p - curve.e3() * q2);
            if (num < 0) continue;
            const Int r = isqrt(num);
            if (r * r != num) continue;
            const Rat x = Rat(p) / q2;
            out.push_back(CurvePoint::affine(x, Rat(r) / q3));
            if (r != 0) out.push_back(CurvePoint::affine(x, Rat(-r) / q3));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Order of p if it is at most 12, otherwise nullopt ("nontorsion"): by the
// uniform torsion bound for elliptic curves over the rationals, imported
// here as standard background, no rational point has finite order above 12.
inline std::optional<int> classify_torsion(const IntegralCubicCurve& curve, const CurvePoint& p) {
    if (!on_curve(curve, p)) throw std::domain_error("point is not on the curve");
    CurvePoint r = p;
    for (int n = 1; n <= 12; ++n) {
        if (r.at_infinity) return n;
        r = group_add(curve, r, p);
    }
    return std::nullopt;
}

}  // namespace pellfrac
