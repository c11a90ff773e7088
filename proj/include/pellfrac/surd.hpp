#pragma once

#include "pellfrac/integers.hpp"

#include <ostream>
#include <sstream>
#include <string>

namespace pellfrac {

class QuadPoly;

// Real quadratic irrational (a + b*sqrt(d)) / c held in canonical form:
//
//   d > 1 squarefree,  c > 0,  b != 0,  gcd(a, b, c) = 1.
//
// The constructor canonicalizes arbitrary input: square factors of the
// radicand are absorbed into b, the sign of c is normalized, and common
// factors are divided out.  Rational input (b = 0, or d a perfect square) is
// rejected, as is a zero denominator or a non-positive radicand.
class QuadSurd {
public:
    QuadSurd(Int a, Int b, Int c, Int d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (c_ == 0) throw std::invalid_argument("quadratic surd: denominator c must be nonzero");
        if (d_ <= 0) throw std::invalid_argument("quadratic surd: radicand d must be positive");
        if (b_ == 0) throw std::invalid_argument("quadratic surd: b = 0 gives a rational value");
        const SquareSplit sp = split_square(d_);
        b_ *= sp.root;
        d_ = sp.squarefree;
        if (d_ == 1) throw std::invalid_argument("quadratic surd: radicand is a perfect square, value is rational");
        if (c_ < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
        const Int g = gcd(gcd(a_, b_), c_);
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    QuadSurd conjugate() const { return QuadSurd(a_, -b_, c_, d_); }

    Int floor() const { return floor_linear_surd(a_, b_, c_, d_); }

    // -1, +1 (a quadratic irrational is never zero).
    int sign() const { return sign_linear_surd(a_, b_, d_); }

    // Defined after QuadPoly below.
    QuadPoly minimal_poly() const;

    // True iff the value exceeds 1 and its conjugate lies in (-1, 0); such
    // numbers are exactly the ones with a purely periodic expansion.
    bool cf_reduced() const {
        return sign_linear_surd(a_ - c_, b_, d_) > 0     // value > 1
            && sign_linear_surd(a_, -b_, d_) < 0         // conjugate < 0
            && sign_linear_surd(a_ + c_, -b_, d_) > 0;   // conjugate > -1
    }

    friend bool operator==(const QuadSurd& l, const QuadSurd& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
    }
    friend bool operator!=(const QuadSurd& l, const QuadSurd& r) { return !(l == r); }

    // Canonical rendering, e.g. "sqrt(11)", "(3+sqrt(5))/2", "-2+3*sqrt(7)".
    std::string str() const {
        std::ostringstream os;
        std::string radical;
        if (b_ == 1) radical = "sqrt(" + d_.str() + ")";
        else if (b_ == -1) radical = "-sqrt(" + d_.str() + ")";
        else radical = b_.str() + "*sqrt(" + d_.str() + ")";
        if (a_ == 0) {
            os << radical;
            if (c_ != 1) os << "/" << c_;
        } else {
            std::string inner = a_.str() + (b_ > 0 ? "+" : "") + radical;
            if (c_ != 1) os << "(" << inner << ")/" << c_;
            else os << inner;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadSurd& s) { return os << s.str(); }

private:
    Int a_, b_, c_, d_;
};

// Integer quadratic A x^2 + B x + C in canonical form: primitive coefficient
// triple, A > 0, and positive non-square discriminant B^2 - 4AC (so both
// roots are real quadratic irrationals).
class QuadPoly {
public:
    QuadPoly(Int A, Int B, Int C) : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
        if (A_ == 0 && B_ == 0 && C_ == 0) throw std::invalid_argument("quadratic polynomial: zero polynomial");
        const Int g = gcd(gcd(A_, B_), C_);
        A_ /= g;
        B_ /= g;
        C_ /= g;
        if (A_ < 0) {
            A_ = -A_;
            B_ = -B_;
            C_ = -C_;
        }
        if (A_ == 0) throw std::invalid_argument("quadratic polynomial: leading coefficient is zero");
        const Int disc = discriminant();
        if (disc <= 0 || is_square(disc))
            throw std::invalid_argument("quadratic polynomial: discriminant must be positive and non-square");
    }

    const Int& A() const { return A_; }
    const Int& B() const { return B_; }
    const Int& C() const { return C_; }

    Int discriminant() const { return B_ * B_ - 4 * A_ * C_; }

    // The larger of the two real roots, (-B + sqrt(disc)) / (2A).
    QuadSurd root() const { return QuadSurd(-B_, 1, 2 * A_, discriminant()); }

    friend bool operator==(const QuadPoly& l, const QuadPoly& r) {
        return l.A_ == r.A_ && l.B_ == r.B_ && l.C_ == r.C_;
    }
    friend bool operator!=(const QuadPoly& l, const QuadPoly& r) { return !(l == r); }

    std::string str() const {
        return "(" + A_.str() + ", " + B_.str() + ", " + C_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadPoly& p) { return os << p.str(); }

private:
    Int A_, B_, C_;
};

// Minimal polynomial of (a + b*sqrt(d))/c: from c*x - a = b*sqrt(d),
// (c^2) x^2 - 2ac x + (a^2 - b^2 d) = 0, made primitive by the constructor.
inline QuadPoly QuadSurd::minimal_poly() const {
    return QuadPoly(c_ * c_, -2 * a_ * c_, a_ * a_ - b_ * b_ * d_);
}

}  // namespace pellfrac
