#pragma once

#include "pellfrac/integers.hpp"
#include "pellfrac/mat2.hpp"
#include "pellfrac/surd.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pellfrac {

// An eventually periodic continued fraction
//     [b1, ..., bN; (a1, ..., ak)]
// with preperiod digits b1..bN and repeating period digits a1..ak.  The first
// digit may be any integer; every later digit (including all period digits)
// must be >= 1, so the value is a well-defined quadratic irrational.  The
// representation is allowed to be non-minimal (e.g. a doubled period);
// canonical() computes the unique minimal form.
class PeriodicCF {
public:
    PeriodicCF(std::vector<Int> preperiod, std::vector<Int> period)
        : pre_(std::move(preperiod)), per_(std::move(period)) {
        if (per_.empty()) throw std::invalid_argument("periodic continued fraction: empty period");
        for (std::size_t i = 1; i < pre_.size(); ++i)
            if (pre_[i] < 1) throw std::invalid_argument("periodic continued fraction: digit after the first must be >= 1");
        // Every period digit recurs past position 0 of the stream, so all of
        // them must be >= 1 (this also covers the purely periodic case).
        for (const Int& a : per_)
            if (a < 1) throw std::invalid_argument("periodic continued fraction: period digits must be >= 1");
    }

    const std::vector<Int>& preperiod() const { return pre_; }
    const std::vector<Int>& period() const { return per_; }

    // (preperiod length, period length)
    std::pair<std::size_t, std::size_t> signature() const { return {pre_.size(), per_.size()}; }

    // Equality of representations (not of values); use canonical() to compare values.
    friend bool operator==(const PeriodicCF& x, const PeriodicCF& y) {
        return x.pre_ == y.pre_ && x.per_ == y.per_;
    }
    friend bool operator!=(const PeriodicCF& x, const PeriodicCF& y) { return !(x == y); }

    // The unique representation of the same digit stream with minimal period
    // length and minimal preperiod length.
    PeriodicCF canonical() const {
        // Minimal period: smallest divisor p of k such that the period block
        // is p-periodic (the minimal period of the repeating tail divides
        // every period of it).
        std::vector<Int> per = per_;
        const std::size_t k = per.size();
        for (std::size_t p = 1; p < k; ++p) {
            if (k % p != 0) continue;
            bool ok = true;
            for (std::size_t i = p; i < k && ok; ++i) ok = (per[i] == per[i % p]);
            if (ok) {
                per.resize(p);
                break;
            }
        }
        // Minimal preperiod: while the last preperiod digit equals the last
        // period digit, absorb it by rotating the period right.
        std::vector<Int> pre = pre_;
        while (!pre.empty() && pre.back() == per.back()) {
            pre.pop_back();
            per.insert(per.begin(), per.back());
            per.pop_back();
        }
        return PeriodicCF(std::move(pre), std::move(per));
    }

    // The same value with the period unrolled once into the preperiod:
    // [b1..bN; (a1..ak)] -> [b1..bN, a1..ak; (a1..ak)].
    PeriodicCF unrolled_once() const {
        std::vector<Int> pre = pre_;
        pre.insert(pre.end(), per_.begin(), per_.end());
        return PeriodicCF(std::move(pre), per_);
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const PeriodicCF& cf) {
        os << '[';
        for (std::size_t i = 0; i < cf.pre_.size(); ++i) {
            if (i) os << ", ";
            os << cf.pre_[i];
        }
        if (!cf.pre_.empty()) os << "; ";
        os << '(';
        for (std::size_t i = 0; i < cf.per_.size(); ++i) {
            if (i) os << ", ";
            os << cf.per_[i];
        }
        os << ")]";
        return os;
    }

private:
    std::vector<Int> pre_;
    std::vector<Int> per_;
};

// Continued fraction expansion of a quadratic irrational, with minimal
// preperiod and minimal period.
//
// Writes th = (P0 + sqrt(D)) / Q0 with Q0 | D - P0^2 and iterates
//   a_i   = floor((P_i + sqrt(D)) / Q_i),
//   P_i+1 = a_i Q_i - P_i,
//   Q_i+1 = (D - P_i+1^2) / Q_i.
// Every complete quotient is determined by the pair (P_i, Q_i), and distinct
// pairs give distinct values, so the digit stream repeats exactly when a pair
// repeats; the first repetition therefore yields the minimal preperiod and
// minimal period.
inline PeriodicCF expand(const QuadSurd& th) {
    const Int s = th.b() > 0 ? 1 : -1;
    const Int D = th.b() * th.b() * th.c() * th.c() * th.d();
    Int P = th.a() * th.c() * s;
    Int Q = th.c() * th.c() * s;
    const Int r = isqrt(D);  // floor(sqrt(D)); D is never a perfect square

    std::vector<Int> digits;
    std::map<std::pair<Int, Int>, std::size_t> seen;  // (P, Q) -> step index
    for (;;) {
        const auto it = seen.find({P, Q});
        if (it != seen.end()) {
            const std::size_t start = it->second;
            std::vector<Int> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
            std::vector<Int> per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
            return PeriodicCF(std::move(pre), std::move(per));
        }
        seen.emplace(std::make_pair(P, Q), digits.size());
        const Int a = Q > 0 ? floor_div(P + r, Q) : floor_div(-P - r - 1, -Q);
        digits.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;  // exact by the invariant Q_i | D - P_i+1^2
    }
}

// Matrix of the Moebius map x -> a + 1/x.
inline Mat2 digit_matrix(const Int& a) { return Mat2{a, 1, 1, 0}; }

// Product M(a_1) ... M(a_n) over a digit block; identity for an empty block.
inline Mat2 convergent_matrix(const std::vector<Int>& digits) {
    Mat2 m = Mat2::identity();
    for (const Int& a : digits) m = m * digit_matrix(a);
    return m;
}

// Exact value of an eventually periodic continued fraction.
//
// The purely periodic tail y = [(a1..ak)] is the fixed point > 1 of the
// period matrix Q, i.e. the larger root of Q21 y^2 + (Q22 - Q11) y - Q12 = 0;
// the preperiod matrix then maps y to the value by a Moebius transformation,
// rationalized back into the form (a + b sqrt(d)) / c.
inline QuadSurd evaluate(const PeriodicCF& cf) {
    const Mat2 q = convergent_matrix(cf.period());
    // Primitive integral quadratic A0 y^2 + B0 y + C0 = 0 for the tail.
    // Reducing to primitive form first keeps the discriminant small even when
    // the matrix entries are huge (long periods), which matters because the
    // surd constructor extracts the square part of the radicand.
    Int A0 = q.m21, B0 = q.m22 - q.m11, C0 = -q.m12;
    const Int g = gcd(gcd(A0, B0), C0);
    A0 /= g;
    B0 /= g;
    C0 /= g;
    const Int D = B0 * B0 - 4 * A0 * C0;
    // y = (p + sqrt(D)) / r is the larger root (A0 = Q21/g > 0), as required
    // by y > 1 > conjugate.
    const Int p = -B0;
    const Int r = 2 * A0;

    const Mat2 pm = convergent_matrix(cf.preperiod());
    // value = (P11 y + P12) / (P21 y + P22) with y = (p + sqrt(D)) / r:
    //   numerator   = (P11 p + P12 r) + P11 sqrt(D)
    //   denominator = (P21 p + P22 r) + P21 sqrt(D)
    const Int n0 = pm.m11 * p + pm.m12 * r;
    const Int n1 = pm.m11;
    const Int m0 = pm.m21 * p + pm.m22 * r;
    const Int m1 = pm.m21;
    // Multiply by the conjugate of the denominator.
    return QuadSurd(n0 * m0 - n1 * m1 * D, n1 * m0 - n0 * m1, m0 * m0 - m1 * m1 * D, D);
}

// The integer matrix E = P Q P^{-1} (preperiod matrix P, period matrix Q)
// fixing the value of the continued fraction under its Moebius action.
// det P = +-1, so P^{-1} = det(P) * adj(P) stays integral.
inline Mat2 equivalence_matrix(const PeriodicCF& cf) {
    const Mat2 pm = convergent_matrix(cf.preperiod());
    const Mat2 q = convergent_matrix(cf.period());
    Mat2 inv = pm.adjugate();
    if (pm.det() < 0) inv = Mat2{-inv.m11, -inv.m12, -inv.m21, -inv.m22};
    return pm * q * inv;
}

// The primitive integral quadratic equation satisfied by any fixed point of
// the Moebius action of E: E21 x^2 + (E22 - E11) x - E12 = 0.
inline QuadPoly induced_quadratic(const Mat2& e) {
    if (e.m21 == 0) throw std::invalid_argument("induced quadratic: degenerate matrix (lower-left entry is zero)");
    return QuadPoly(e.m21, e.m22 - e.m11, -e.m12);
}

}  // namespace pellfrac
