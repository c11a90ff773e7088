#pragma once

// Families theta_x = (a + b*sqrt(x))/c sampled around a base value, exact
// polynomial fits of their digit entries, a Zariski-dimension estimator by
// degree-bounded implicitization, and the resulting arithmetic complexity
// and predicted rank.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pellfrac/bej.hpp"
#include "pellfrac/cfrac.hpp"
#include "pellfrac/errors.hpp"
#include "pellfrac/surd.hpp"

namespace pellfrac {

struct EulerFamily {
    QuadSurd base;
    Int a, b, c;                                     // theta_x = (a + b*sqrt(x))/c
    std::vector<std::pair<Int, PeriodicCF>> samples;  // ascending x, common signature
};

// Expand (a + b*sqrt(x))/c for the nearest non-square x on each side of the
// base radicand and keep those sharing the base expansion's signature.
inline EulerFamily sample_family(const QuadSurd& theta, std::size_t window) {
    if (window < 3) throw std::invalid_argument("window must be at least 3");
    const auto sig = expand(theta).signature();

    std::vector<Int> xs;
    for (Int x = theta.d() - 1; x >= 2 && xs.size() < window; --x)
        if (!is_square(x)) xs.push_back(x);
    std::reverse(xs.begin(), xs.end());
    xs.push_back(theta.d());
    std::size_t above = 0;
    for (Int x = theta.d() + 1; above < window; ++x)
        if (!is_square(x)) {
            xs.push_back(x);
            ++above;
        }

    EulerFamily family{theta, theta.a(), theta.b(), theta.c(), {}};
    for (const Int& x : xs) {
        const PeriodicCF cf = expand(QuadSurd(theta.a(), theta.b(), theta.c(), x));
        if (cf.signature() == sig) family.samples.emplace_back(x, cf);
    }
    if (family.samples.size() < 3)
        throw no_stable_signature("fewer than 3 samples share the base signature");
    return family;
}

// Integer polynomial as coefficients in ascending degree; empty means zero.
using IntPolynomial = std::vector<Int>;

inline Int eval_polynomial(const IntPolynomial& p, const Int& t) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

namespace detail {

inline std::vector<Int> digit_tuple(const PeriodicCF& cf) {
    std::vector<Int> out(cf.preperiod());
    out.insert(out.end(), cf.period().begin(), cf.period().end());
    return out;
}

}  // namespace detail

// For each digit position, interpolate a polynomial of degree <= max_deg in
// the 1-based sample index through the first max_deg + 1 samples; accept only
// if all coefficients are integers and every held-out sample agrees.
inline std::optional<std::vector<IntPolynomial>> fit_entry_polynomials(const EulerFamily& family,
                                                                       std::size_t max_deg) {
    const std::size_t m = family.samples.size();
    if (m < max_deg + 2) throw std::invalid_argument("need at least max_deg + 2 samples");

    const std::size_t positions = detail::digit_tuple(family.samples.front().second).size();
    for (const auto& [x, cf] : family.samples)
        if (detail::digit_tuple(cf).size() != positions)
            throw std::invalid_argument("samples must share one signature");

    std::vector<IntPolynomial> fits;
    for (std::size_t pos = 0; pos < positions; ++pos) {
        std::vector<Int> values;
        values.reserve(m);
        for (const auto& [x, cf] : family.samples) values.push_back(detail::digit_tuple(cf)[pos]);

        // Lagrange interpolation through (t, values[t-1]) for t = 1..max_deg+1.
        std::vector<Rat> coeffs(max_deg + 1, Rat(0));
        for (std::size_t j = 0; j <= max_deg; ++j) {
            std::vector<Rat> basis{Rat(1)};
            Rat denom(1);
            for (std::size_t i = 0; i <= max_deg; ++i) {
                if (i == j) continue;
                basis.resize(basis.size() + 1, Rat(0));
                for (std::size_t k = basis.size(); k-- > 1;)
                    basis[k] = basis[k - 1] - Rat(static_cast<long>(i + 1)) * basis[k];
                basis[0] *= -Rat(static_cast<long>(i + 1));
                denom *= Rat(static_cast<long>(j)) - static_cast<long>(i);
            }
            const Rat scale = Rat(values[j]) / denom;
            for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
        }

        IntPolynomial poly;
        for (const Rat& c : coeffs) {
            if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
            poly.push_back(Int(boost::multiprecision::numerator(c)));
        }
        while (!poly.empty() && poly.back() == 0) poly.pop_back();

        for (std::size_t j = 0; j < m; ++j)
            if (eval_polynomial(poly, Int(static_cast<long>(j + 1))) != values[j])
                return std::nullopt;
        fits.push_back(std::move(poly));
    }
    return fits;
}

struct DimensionEstimate {
    std::size_t dim;
    std::size_t degree_bound;
    std::size_t sample_count;
    std::size_t relation_count;
    std::string method;
};

namespace detail {

// Exponent tuples with total degree <= max_deg, constant first, in ascending
// total degree so that degree-one monomials precede everything quadratic.
inline std::vector<std::vector<unsigned>> monomial_exponents(std::size_t n, std::size_t max_deg) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(n, 0);
    const auto gen = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    for (unsigned d = 0; d <= max_deg; ++d) {
        const std::size_t before = out.size();
        gen(gen, 0, d);
        // keep only exact total degree d from this pass
        out.erase(std::remove_if(out.begin() + static_cast<std::ptrdiff_t>(before), out.end(),
                                 [&](const std::vector<unsigned>& e) {
                                     unsigned s = 0;
                                     for (unsigned v : e) s += v;
                                     return s != d;
                                 }),
                  out.end());
    }
    return out;
}

// Basis of the nullspace of the row space of `rows` (i.e. vectors v with
// rows * v = 0), via exact reduced row echelon form.
inline std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows,
                                               std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Rat inv = Rat(1) / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rat f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (const std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

// Count independent degree-bounded polynomial relations among the points and
// eliminate every coordinate expressible as a function of the others through
// a relation linear in that coordinate; the dimension estimate is the number
// of coordinates left.
inline DimensionEstimate estimate_dimension(const std::vector<std::vector<Int>>& points,
                                            std::size_t max_deg) {
    if (points.size() < 3) throw std::invalid_argument("need at least 3 points");
    const std::size_t n = points.front().size();
    if (n == 0) throw std::invalid_argument("points must have positive arity");
    for (const auto& p : points)
        if (p.size() != n) throw std::invalid_argument("points must share one arity");

    const std::set<std::vector<Int>> distinct(points.begin(), points.end());
    if (distinct.size() == 2)
        throw std::invalid_argument("degenerate input: exactly two distinct points");

    const auto mons = detail::monomial_exponents(n, max_deg);
    std::vector<std::vector<Rat>> rows;
    rows.reserve(distinct.size());
    for (const auto& p : distinct) {
        std::vector<Rat> row;
        row.reserve(mons.size());
        for (const auto& e : mons) {
            Int v = 1;
            for (std::size_t i = 0; i < n; ++i)
                for (unsigned k = 0; k < e[i]; ++k) v *= p[i];
            row.emplace_back(v);
        }
        rows.push_back(std::move(row));
    }
    const auto kernel = detail::nullspace(std::move(rows), mons.size());

    // Index of the pure degree-one monomial of each variable.
    std::vector<std::size_t> pure(n, mons.size());
    for (std::size_t m = 0; m < mons.size(); ++m) {
        unsigned total = 0, where = 0;
        for (std::size_t i = 0; i < n; ++i) {
            total += mons[m][i];
            if (mons[m][i] != 0) where = static_cast<unsigned>(i);
        }
        if (total == 1) pure[where] = m;
    }

    // The echelon-form kernel basis expresses each dependent coordinate over
    // later-column (higher-index) pivots, so scan variables in ascending
    // order: a coordinate's defining relation then only references
    // still-active variables.
    std::vector<bool> eliminated(n, false);
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            for (const auto& vec : kernel) {
                if (vec[pure[v]] == 0) continue;
                bool usable = true;
                for (std::size_t m = 0; m < mons.size() && usable; ++m) {
                    if (m == pure[v] || vec[m] == 0) continue;
                    if (mons[m][v] != 0) usable = false;  // v must appear only linearly, alone
                    for (std::size_t w = 0; w < n && usable; ++w)
                        if (mons[m][w] != 0 && eliminated[w]) usable = false;
                }
                if (usable) {
                    eliminated[v] = true;
                    progress = true;
                    break;
                }
            }
        }
    }

    std::size_t dim = n;
    for (const bool e : eliminated) dim -= e ? 1 : 0;
    return {dim, max_deg, points.size(), kernel.size(), "implicitization"};
}

struct ComplexityReport {
    std::size_t pre_len;
    std::size_t period_len;
    std::string method;  // "family-match" or "implicitization"
    std::size_t dimension;
    std::size_t complexity;
    std::size_t predicted_rank;
    std::vector<std::pair<std::string, Rat>> family_parameters;
    std::size_t samples_used;
};

namespace detail {

inline ComplexityReport finish_report(ComplexityReport rep, std::size_t dim) {
    rep.dimension = dim;
    rep.complexity = dim;
    rep.predicted_rank = dim - 1;
    return rep;
}

}  // namespace detail

// Arithmetic complexity of theta: the dimension of the variety component its
// expansion lies on.  Signature (1,2) values are classified by exact family
// matching; other signatures first try a value-level match of the minimal
// polynomial against the known one- and two-parameter families, then fall
// back to sampled implicitization with windows escalating from `window`.
inline ComplexityReport complexity_report(const QuadSurd& theta, std::size_t max_deg = 2,
                                          std::size_t window = 40) {
    const PeriodicCF cf = expand(theta);
    ComplexityReport rep;
    rep.pre_len = cf.signature().first;
    rep.period_len = cf.signature().second;
    rep.family_parameters = {};
    rep.samples_used = 0;

    if (rep.pre_len == 1 && rep.period_len == 2) {
        const ComponentDescription comp = component_of(theta);
        rep.method = "family-match";
        rep.family_parameters = comp.parameters;
        return detail::finish_report(std::move(rep), comp.dimension);
    }

    const QuadPoly mp = theta.minimal_poly();
    if (theta.sign() > 0) {
        if (mp.A() == 1 && mp.C() == 1 && -mp.B() >= 3 && theta == mp.root()) {
            // theta = (u + sqrt(u^2-4))/2 with u = -B >= 3.
            const Int u = -mp.B();
            rep.method = "family-match";
            if (mod_floor(u, 2) == 1) {
                rep.family_parameters = {{"u", Rat(u)}};
                return detail::finish_report(std::move(rep), 1);
            }
            rep.family_parameters = {{"u", Rat(u) / 2}, {"v", Rat(-1)}};
            return detail::finish_report(std::move(rep), 2);
        }
        if (mp.A() == 1 && mp.B() == 0) {
            // theta = sqrt(m): member of the two-parameter family when
            // m = w^2 + v with v | 2w, via u = w/v.
            const Int m = -mp.C();
            const Int w = isqrt(m);
            const Int v = m - w * w;
            if (v >= 1 && mod_floor(2 * w, v) == 0) {
                rep.method = "family-match";
                rep.family_parameters = {{"u", Rat(w) / v}, {"v", Rat(v)}};
                return detail::finish_report(std::move(rep), 2);
            }
        }
    }

    for (const std::size_t w : {window, 2 * window, 4 * window, 8 * window}) {
        EulerFamily family{theta, 0, 1, 1, {}};
        try {
            family = sample_family(theta, w);
        } catch (const no_stable_signature&) {
            continue;
        }

        std::vector<std::vector<Int>> points;
        points.reserve(family.samples.size());
        for (const auto& [x, sample_cf] : family.samples)
            points.push_back(detail::digit_tuple(sample_cf));

        if (family.samples.size() >= max_deg + 2) {
            if (const auto fits = fit_entry_polynomials(family, max_deg)) {
                // Extend the sweep along the fitted parametrization.
                for (std::size_t t = family.samples.size() + 1;
                     t <= family.samples.size() + max_deg + 4; ++t) {
                    std::vector<Int> extra;
                    extra.reserve(fits->size());
                    for (const IntPolynomial& p : *fits)
                        extra.push_back(eval_polynomial(p, Int(static_cast<long>(t))));
                    points.push_back(std::move(extra));
                }
            }
        }

        const DimensionEstimate est = estimate_dimension(points, max_deg);
        rep.method = est.method;
        rep.samples_used = family.samples.size();
        return detail::finish_report(std::move(rep), est.dim);
    }
    throw no_stable_signature("no sampling window produced a stable family");
}

inline std::size_t complexity(const QuadSurd& theta, std::size_t max_deg = 2) {
    return complexity_report(theta, max_deg).complexity;
}

inline std::size_t predicted_rank(const QuadSurd& theta, std::size_t max_deg = 2) {
    return complexity_report(theta, max_deg).predicted_rank;
}

}  // namespace pellfrac
