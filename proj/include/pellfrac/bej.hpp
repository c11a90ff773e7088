#pragma once

#include "pellfrac/cfrac.hpp"
#include "pellfrac/errors.hpp"
#include "pellfrac/integers.hpp"
#include "pellfrac/mpoly.hpp"
#include "pellfrac/surd.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pellfrac {

// Integer point candidate (y1..yN; x1..xk) for a variety of signature (N, k).
struct VarietyPoint {
    std::vector<Int> y;
    std::vector<Int> x;
};

// The affine variety of signature (N, k) attached to a fixed integral
// quadratic A t^2 + B t + C: three polynomial equations in (y1..yN, x1..xk)
// expressing that the symbolic equivalence matrix E fixes a root of the
// quadratic, namely
//   A(E22 - E11) - B*E21,   -A*E12 - C*E21,   -B*E12 - C*(E22 - E11).
// Integer solutions correspond to periodic continued fractions of the
// quadratic's roots with signature (N, k).
class BejSystem {
public:
    BejSystem(std::size_t n_pre, std::size_t k_period, QuadPoly coeffs)
        : n_(n_pre), k_(k_period), coeffs_(std::move(coeffs)) {
        const MPolyMat2 e = symbolic_equivalence_matrix(n_, k_);
        ctx_ = e.m11.context();
        e21_ = e.m21;
        e22_ = e.m22;
        const Int& a = coeffs_.A();
        const Int& b = coeffs_.B();
        const Int& c = coeffs_.C();
        eqs_[0] = a * (e.m22 - e.m11) - b * e.m21;
        eqs_[1] = -(a * e.m12) - c * e.m21;
        eqs_[2] = -(b * e.m12) - c * (e.m22 - e.m11);
    }

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const QuadPoly& coeffs() const { return coeffs_; }
    const VarContext& context() const { return ctx_; }
    const std::array<MPoly, 3>& equations() const { return eqs_; }
    const MPoly& e21() const { return e21_; }
    const MPoly& e22() const { return e22_; }

private:
    std::size_t n_, k_;
    QuadPoly coeffs_;
    VarContext ctx_;
    std::array<MPoly, 3> eqs_;
    MPoly e21_, e22_;
};

inline BejSystem build_system(std::size_t n_pre, std::size_t k_period, const QuadPoly& coeffs) {
    return BejSystem(n_pre, k_period, coeffs);
}

// Variant with symbolic coefficients: the same three equations over the
// context (A, B, C, y1..yN, x1..xk) with A, B, C as variables.
struct SymbolicSystem {
    VarContext ctx;
    std::array<MPoly, 3> equations;
    MPolyMat2 e;
};

inline SymbolicSystem build_system_symbolic(std::size_t n_pre, std::size_t k_period) {
    std::vector<std::string> names{"A", "B", "C"};
    for (std::size_t i = 1; i <= n_pre; ++i) names.push_back("y" + std::to_string(i));
    for (std::size_t j = 1; j <= k_period; ++j) names.push_back("x" + std::to_string(j));
    const VarContext ctx = make_context(std::move(names));
    const MPolyMat2 e = symbolic_equivalence_matrix_over(ctx, 3, n_pre, 3 + n_pre, k_period);
    const MPoly a = MPoly::variable(ctx, 0);
    const MPoly b = MPoly::variable(ctx, 1);
    const MPoly c = MPoly::variable(ctx, 2);
    return SymbolicSystem{ctx,
                          {a * (e.m22 - e.m11) - b * e.m21,
                           -(a * e.m12) - c * e.m21,
                           -(b * e.m12) - c * (e.m22 - e.m11)},
                          e};
}

namespace detail {
inline std::vector<Int> concatenated(const BejSystem& sys, const VarietyPoint& p) {
    if (p.y.size() != sys.n() || p.x.size() != sys.k())
        throw std::invalid_argument("variety point: arity does not match the system signature");
    std::vector<Int> pt = p.y;
    pt.insert(pt.end(), p.x.begin(), p.x.end());
    return pt;
}
}  // namespace detail

// True iff all three defining equations vanish at the point.
inline bool is_member(const BejSystem& sys, const VarietyPoint& p) {
    const std::vector<Int> pt = detail::concatenated(sys, p);
    for (const MPoly& eq : sys.equations())
        if (eq.evaluate(pt) != 0) return false;
    return true;
}

// Image (E21, E22) of a variety point under the projection onto the conic
//   C x^2 - B xy + A y^2 = (-1)^k A.
inline std::pair<Int, Int> fiber_projection(const BejSystem& sys, const VarietyPoint& p) {
    if (!is_member(sys, p))
        throw std::domain_error("fiber projection: the point does not lie on the variety");
    const std::vector<Int> pt = detail::concatenated(sys, p);
    return {sys.e21().evaluate(pt), sys.e22().evaluate(pt)};
}

// One connected component of the signature-(1,2) variety, or a parametrized
// family matched by component_of.
struct ComponentDescription {
    std::string kind;            // zero-tail | free-x2 | parametrized | degenerate-repeated-root
    std::string parametrization;
    std::size_t dimension = 0;
    std::vector<std::pair<std::string, Rat>> parameters;  // family parameters when matched
};

// Component list of the signature-(1,2) variety for coefficients (A, B, C),
// possibly degenerate (A = 0 or a square discriminant are allowed; the
// coefficients only must not all vanish):
//   A = 0 != B          -> one component  [y1; (0, 0)]
//   A = B = 0 != C      -> one component  [y1; (0, x2)]
//   A != 0, B^2 != 4AC  -> two components: [y1; (0, 0)] and the parametrized family
//   A != 0, B^2 = 4AC   -> three: the two above plus [-B/(2*A); (x1, 0)]
inline std::vector<ComponentDescription> classify_v12(const Int& a, const Int& b, const Int& c) {
    if (a == 0 && b == 0 && c == 0)
        throw std::invalid_argument("component classification: coefficients must not all be zero");
    const ComponentDescription zero_tail{"zero-tail", "[y1; (0, 0)]", 1, {}};
    if (a == 0 && b != 0) return {zero_tail};
    if (a == 0) return {ComponentDescription{"free-x2", "[y1; (0, x2)]", 2, {}}};
    const ComponentDescription parametrized{
        "parametrized", "[y1; (-(2*A*y1 + B)/(A*y1^2 + B*y1 + C), (2*A*y1 + B)/A)]", 1, {}};
    if (b * b == 4 * a * c)
        return {zero_tail, parametrized,
                ComponentDescription{"degenerate-repeated-root", "[-B/(2*A); (x1, 0)]", 1, {}}};
    return {zero_tail, parametrized};
}

// Family membership for a quadratic irrational whose expansion has signature
// (1, 2), writing the expansion as [b1; (a1, a2)]:
//   two-parameter family [u*v; (2*u, 2*u*v)] = sqrt(v*(u^2*v + 1)):
//     requires a2 = 2*b1 and a1 | 2*b1; then u = a1/2 (half-integers allowed,
//     all entries stay integral) and v = 2*b1/a1; dimension 2.
//   one-parameter family [u - 1; (1, u - 2)] = (u + sqrt(u^2 - 4))/2:
//     requires a1 = 1 and a2 = b1 - 1; then u = b1 + 1; dimension 1 for odd u.
//     Even u belongs to the two-parameter family with (u/2, -1), dimension 2.
// The two-parameter match takes precedence.  Degenerate components with zero
// entries can never match a genuine expansion (all period digits are >= 1).
inline ComponentDescription component_of(const QuadSurd& th) {
    const PeriodicCF cf = expand(th);
    if (cf.signature() != std::pair<std::size_t, std::size_t>{1, 2})
        throw signature_mismatch("component matching: expansion signature is not (1, 2)");
    const Int& b1 = cf.preperiod()[0];
    const Int& a1 = cf.period()[0];
    const Int& a2 = cf.period()[1];

    if (b1 >= 1 && a2 == 2 * b1 && (2 * b1) % a1 == 0) {
        const Rat u = Rat(a1) / 2;
        const Rat v(2 * b1 / a1);
        return {"parametrized", "[u*v; (2*u, 2*u*v)] = sqrt(v*(u^2*v + 1))", 2, {{"u", u}, {"v", v}}};
    }
    if (a1 == 1 && a2 == b1 - 1) {
        const Int u = b1 + 1;
        if (u % 2 != 0)
            return {"parametrized", "[u - 1; (1, u - 2)] = (u + sqrt(u^2 - 4))/2", 1, {{"u", Rat(u)}}};
        // Even u: the value is a member of the two-parameter family with
        // parameters (u/2, -1), so the containing component has dimension 2.
        return {"parametrized", "[u*v; (2*u, 2*u*v)] = sqrt(v*(u^2*v + 1))", 2,
                {{"u", Rat(u / 2)}, {"v", Rat(-1)}}};
    }
    throw no_known_family("component matching: expansion fits no known parametrized family");
}

}  // namespace pellfrac
