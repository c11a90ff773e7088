#pragma once

// Narrow class groups of real quadratic orders, realized classically:
// narrow classes correspond to rho-cycles of reduced primitive indefinite
// binary quadratic forms, with Dirichlet composition on representatives.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pellfrac/integers.hpp"
#include "pellfrac/surd.hpp"

namespace pellfrac {

// The form a*x^2 + b*x*y + c*y^2 with positive non-square discriminant.
struct BQForm {
    Int a, b, c;

    BQForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        const Int d = b * b - 4 * a * c;
        if (d <= 0 || is_square(d))
            throw std::invalid_argument("form discriminant must be positive and non-square");
    }

    Int disc() const { return b * b - 4 * a * c; }

    friend bool operator==(const BQForm& lhs, const BQForm& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c;
    }
    friend bool operator!=(const BQForm& lhs, const BQForm& rhs) { return !(lhs == rhs); }
    friend bool operator<(const BQForm& lhs, const BQForm& rhs) {
        if (lhs.a != rhs.a) return lhs.a < rhs.a;
        if (lhs.b != rhs.b) return lhs.b < rhs.b;
        return lhs.c < rhs.c;
    }

    std::string str() const {
        return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
    }
};

inline bool is_primitive(const BQForm& f) { return gcd(gcd(f.a, f.b), f.c) == 1; }

// Reduced: 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b,
// tested with exact integer comparisons.
inline bool is_reduced(const BQForm& f) {
    const Int d = f.disc();
    if (f.b <= 0 || f.b * f.b >= d) return false;
    const Int two_abs_a = 2 * abs(f.a);
    const Int hi = two_abs_a + f.b;
    if (d >= hi * hi) return false;  // sqrt(D) - b < 2|a|
    const Int lo = two_abs_a - f.b;
    return lo <= 0 || lo * lo < d;  // 2|a| < sqrt(D) + b
}

// One step of the classical rho-operator: (a, b, c) -> (c, b', (b'^2 - D)/(4c))
// where b' is the largest integer <= floor(sqrt(D)) congruent to -b mod 2|c|.
inline BQForm reduction_step(const BQForm& f) {
    const Int d = f.disc();
    const Int s = isqrt(d);
    const Int bp = s - mod_floor(s + f.b, 2 * abs(f.c));
    return BQForm(f.c, bp, (bp * bp - d) / (4 * f.c));
}

// Iterate rho until reduced.  Theory bounds the number of steps by
// O(log max|coefficient|); the cap guards against implementation bugs.
inline BQForm reduce(BQForm f) {
    const Int biggest = std::max({Int(abs(f.a)), Int(abs(f.b)), Int(abs(f.c)), Int(2)});
    const unsigned cap = 2 * boost::multiprecision::msb(biggest) + 16;
    for (unsigned i = 0; i <= cap; ++i) {
        if (is_reduced(f)) return f;
        f = reduction_step(f);
    }
    throw std::logic_error("form reduction did not terminate within the expected bound");
}

namespace detail {
inline void check_discriminant(const Int& d) {
    if (d <= 0 || is_square(d) || (mod_floor(d, 4) != 0 && mod_floor(d, 4) != 1))
        throw std::invalid_argument("discriminant must be positive, non-square, and 0 or 1 mod 4");
}
}  // namespace detail

// All reduced primitive forms of discriminant D, sorted lexicographically.
inline std::vector<BQForm> reduced_forms(const Int& D) {
    detail::check_discriminant(D);
    std::vector<BQForm> out;
    const Int s = isqrt(D);
    for (Int b = 1; b <= s; ++b) {
        if (mod_floor(b - D, 2) != 0) continue;  // b must match D's parity
        const Int num = b * b - D;               // 4ac, negative
        for (Int abs_a = 1; 2 * abs_a < s + b + 1; ++abs_a) {
            const Int lo = 2 * abs_a - b;
            if (lo > 0 && lo * lo >= D) continue;       // need 2|a| < sqrt(D) + b
            const Int hi = 2 * abs_a + b;
            if (D >= hi * hi) continue;                 // need sqrt(D) - b < 2|a|
            if (mod_floor(num, 4 * abs_a) != 0) continue;
            for (const Int& a : {abs_a, Int(-abs_a)}) {
                const BQForm f(a, b, num / (4 * a));
                if (is_primitive(f)) out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Dirichlet composition of primitive forms of equal discriminant.  The first
// form is moved within its class so its leading coefficient is nonzero and
// coprime to that of the second; the result is generally not reduced.
inline BQForm compose(const BQForm& f1, const BQForm& f2) {
    const Int D = f1.disc();
    if (D != f2.disc()) throw std::invalid_argument("forms must share a discriminant");
    if (!is_primitive(f1) || !is_primitive(f2))
        throw std::invalid_argument("composition requires primitive forms");

    // Search coprime (x, y) with f1(x, y) nonzero and coprime to f2's lead.
    Int x = 1, y = 0, val = f1.a;
    [&] {
        for (long r = 0; r <= 50; ++r)
            for (long xi = -r; xi <= r; ++xi)
                for (long yi = -r; yi <= r; ++yi) {
                    if (std::max(std::abs(xi), std::abs(yi)) != r) continue;
                    if (gcd(Int(xi), Int(yi)) != 1) continue;
                    const Int v = f1.a * xi * xi + f1.b * xi * yi + f1.c * yi * yi;
                    if (v == 0 || gcd(v, f2.a) != 1) continue;
                    x = xi, y = yi, val = v;
                    return;
                }
        throw std::logic_error("no representation coprime to the second form found");
    }();

    // Complete (x, y) to a determinant-one matrix [[x, u], [y, v]].
    const XGcd g = xgcd(x, y);
    const Int v = g.x, u = -g.y;
    const Int a1 = val;
    const Int b1 = 2 * f1.a * x * u + f1.b * (x * v + u * y) + 2 * f1.c * y * v;

    const Int m = abs(f2.a);
    const Int n = (f2.b - b1) / 2;
    const Int t = m == 1 ? Int(0) : mod_floor(mod_inverse(a1, m) * n, m);
    const Int B = b1 + 2 * a1 * t;
    const Int A = a1 * f2.a;
    return BQForm(A, B, (B * B - D) / (4 * A));
}

// The rho-cycles of the reduced forms: each cycle starts at its
// lexicographically least member, and cycles are sorted by those members.
inline std::vector<std::vector<BQForm>> class_group_cycles(const Int& D) {
    const std::vector<BQForm> forms = reduced_forms(D);
    std::vector<std::vector<BQForm>> cycles;
    std::vector<BQForm> seen;
    for (const BQForm& start : forms) {
        if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
        std::vector<BQForm> cycle{start};
        for (BQForm f = reduction_step(start); f != start; f = reduction_step(f)) {
            if (!is_reduced(f)) throw std::logic_error("rho left the reduced forms");
            cycle.push_back(f);
        }
        seen.insert(seen.end(), cycle.begin(), cycle.end());
        cycles.push_back(std::move(cycle));
    }
    return cycles;  // already ordered: forms is sorted, each cycle keyed by its least member
}

struct AbelianGroupStructure {
    std::vector<Int> divisors;  // d1 | d2 | ... , each >= 2; empty = trivial
    Int order;                  // product of divisors

    friend bool operator==(const AbelianGroupStructure& lhs, const AbelianGroupStructure& rhs) {
        return lhs.divisors == rhs.divisors && lhs.order == rhs.order;
    }
};

namespace detail {

// Invariant factors of a finite abelian group given by its composition
// table: peel off a cyclic subgroup of maximal order (always a direct
// summand), then recurse on the quotient.
inline std::vector<Int> invariant_factors(std::vector<std::vector<std::size_t>> table,
                                          std::size_t identity) {
    std::vector<Int> divisors;
    while (table.size() > 1) {
        const std::size_t n = table.size();
        std::size_t best = identity;
        std::size_t best_order = 1;
        std::vector<std::size_t> best_cyclic{identity};
        for (std::size_t g = 0; g < n; ++g) {
            std::vector<std::size_t> cyclic{identity};
            std::size_t p = g;
            while (p != identity) {
                cyclic.push_back(p);
                p = table[p][g];
            }
            if (cyclic.size() > best_order) {
                best_order = cyclic.size();
                best = g;
                best_cyclic = std::move(cyclic);
            }
        }
        (void)best;
        divisors.insert(divisors.begin(), Int(best_order));

        // Quotient by the cyclic subgroup: canonical coset label = least member.
        std::vector<std::size_t> coset(n);
        for (std::size_t e = 0; e < n; ++e) {
            std::size_t least = e;
            for (const std::size_t h : best_cyclic) least = std::min(least, table[e][h]);
            coset[e] = least;
        }
        std::vector<std::size_t> reps;
        for (std::size_t e = 0; e < n; ++e)
            if (coset[e] == e) reps.push_back(e);
        std::vector<std::size_t> index_of(n, 0);
        for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = i;

        std::vector<std::vector<std::size_t>> quotient(reps.size(),
                                                       std::vector<std::size_t>(reps.size()));
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = 0; j < reps.size(); ++j)
                quotient[i][j] = index_of[coset[table[reps[i]][reps[j]]]];
        identity = index_of[coset[identity]];
        table = std::move(quotient);
    }
    return divisors;
}

}  // namespace detail

inline AbelianGroupStructure narrow_class_group(const Int& D) {
    const auto cycles = class_group_cycles(D);
    const std::size_t h = cycles.size();

    const auto cycle_index = [&](const BQForm& f) {
        const BQForm r = reduce(f);
        for (std::size_t i = 0; i < h; ++i)
            if (std::find(cycles[i].begin(), cycles[i].end(), r) != cycles[i].end()) return i;
        throw std::logic_error("reduced form not found in any cycle");
    };

    const Int b0 = mod_floor(D, 2);
    const std::size_t identity = cycle_index(BQForm(1, b0, (b0 * b0 - D) / 4));

    std::vector<std::vector<std::size_t>> table(h, std::vector<std::size_t>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            table[i][j] = cycle_index(compose(cycles[i].front(), cycles[j].front()));

    std::vector<Int> divisors = detail::invariant_factors(std::move(table), identity);
    Int order = 1;
    for (const Int& d : divisors) order *= d;
    return {std::move(divisors), order};
}

// Discriminant of the primitive minimal polynomial of theta.
inline Int order_discriminant(const QuadSurd& theta) {
    const QuadPoly p = theta.minimal_poly();
    return p.B() * p.B() - 4 * p.A() * p.C();
}

// The same discriminant decomposed against the fundamental one, plus a flag
// recording whether Z + Z*theta is multiplicatively closed (leading
// coefficient one), in which case it really is the order of that discriminant.
struct OrderInfo {
    Int discriminant;
    Int fundamental_discriminant;
    Int conductor;
    bool monogenic;
};

inline OrderInfo order_info(const QuadSurd& theta) {
    const Int d = order_discriminant(theta);
    const SquareSplit sp = split_square(d);
    Int fund, cond;
    if (mod_floor(sp.squarefree, 4) == 1) {
        fund = sp.squarefree;
        cond = sp.root;
    } else {
        fund = 4 * sp.squarefree;
        cond = sp.root / 2;
    }
    return {d, fund, cond, theta.minimal_poly().A() == 1};
}

// Direct sum Cl + Cl of the narrow class group with itself: divisor list
// duplicated in place, order squared.
inline AbelianGroupStructure sha_group(const QuadSurd& theta) {
    const AbelianGroupStructure cl = narrow_class_group(order_discriminant(theta));
    std::vector<Int> divisors;
    divisors.reserve(2 * cl.divisors.size());
    for (const Int& d : cl.divisors) {
        divisors.push_back(d);
        divisors.push_back(d);
    }
    std::sort(divisors.begin(), divisors.end());
    return {std::move(divisors), cl.order * cl.order};
}

}  // namespace pellfrac
