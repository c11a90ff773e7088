#pragma once

#include "pellfrac/integers.hpp"
#include "pellfrac/mat2.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pellfrac {

// Shared, immutable list of variable names defining the ambient polynomial
// ring.  Polynomials over contexts with equal name lists are compatible.
using VarContext = std::shared_ptr<const std::vector<std::string>>;

inline VarContext make_context(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// Graded lexicographic monomial order: compare total degree first, then
// exponents left to right (earlier variables are more significant).
struct GradedLex {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned da = 0, db = 0;
        for (const unsigned e : a) da += e;
        for (const unsigned e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial with exact integer coefficients.  Stored as
// a map from exponent vectors to nonzero coefficients in ascending graded-lex
// order; rendered in descending order (leading term first).
class MPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Int, GradedLex>;

    // Zero polynomial over no particular ring; compatible with every context.
    MPoly() = default;

    explicit MPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

    static MPoly constant(VarContext ctx, Int value) {
        MPoly p(std::move(ctx));
        if (value != 0) {
            if (!p.ctx_) throw std::invalid_argument("polynomial constant: nonzero constant needs a context");
            p.terms_.emplace(Exponents(p.arity(), 0u), std::move(value));
        }
        return p;
    }

    static MPoly variable(VarContext ctx, std::size_t index) {
        MPoly p(std::move(ctx));
        if (!p.ctx_ || index >= p.ctx_->size())
            throw std::invalid_argument("polynomial variable: index out of range for the context");
        Exponents e(p.arity(), 0u);
        e[index] = 1u;
        p.terms_.emplace(std::move(e), Int(1));
        return p;
    }

    const VarContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t arity() const { return ctx_ ? ctx_->size() : 0; }

    unsigned total_degree() const {  // degree of the zero polynomial is 0 here
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (const unsigned x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(arity(), 0u));
    }

    Int constant_value() const {  // value of a constant polynomial
        if (terms_.empty()) return Int(0);
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    friend MPoly operator+(const MPoly& p, const MPoly& q) {
        MPoly r(merged_context(p, q));
        r.terms_ = p.terms_;
        for (const auto& [e, c] : q.terms_) r.add_term(e, c);
        return r;
    }

    friend MPoly operator-(const MPoly& p, const MPoly& q) {
        MPoly r(merged_context(p, q));
        r.terms_ = p.terms_;
        for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
        return r;
    }

    MPoly operator-() const {
        MPoly r(ctx_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& p, const MPoly& q) {
        MPoly r(merged_context(p, q));
        const std::size_t n = r.arity();
        for (const auto& [ea, ca] : p.terms_) {
            for (const auto& [eb, cb] : q.terms_) {
                Exponents e(n, 0u);
                for (std::size_t i = 0; i < n; ++i)
                    e[i] = (i < ea.size() ? ea[i] : 0u) + (i < eb.size() ? eb[i] : 0u);
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend MPoly operator*(const MPoly& p, const Int& s) {
        MPoly r(p.ctx_);
        if (s == 0) return r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    friend MPoly operator*(const Int& s, const MPoly& p) { return p * s; }

    friend bool operator==(const MPoly& p, const MPoly& q) {
        if (!compatible(p, q)) return false;
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const MPoly& p, const MPoly& q) { return !(p == q); }

    // Exact value at an integer point (arity must match the context).
    Int evaluate(const std::vector<Int>& point) const {
        if (ctx_ && point.size() != ctx_->size())
            throw std::invalid_argument("polynomial evaluation: point arity does not match the variable count");
        Int total = 0;
        for (const auto& [e, c] : terms_) {
            Int term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned j = 0; j < e[i]; ++j) term *= point[i];
            total += term;
        }
        return total;
    }

    // Canonical rendering, leading term first: "x1*x2 - 2*y1*x1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Int& coef = it->second;
            if (first) {
                if (coef < 0) os << '-';
                first = false;
            } else {
                os << (coef < 0 ? " - " : " + ");
            }
            const Int mag = abs(coef);
            bool printed = false;
            bool has_vars = false;
            for (const unsigned e : it->first) has_vars = has_vars || e > 0;
            if (mag != 1 || !has_vars) {
                os << mag;
                printed = true;
            }
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                const unsigned e = it->first[i];
                if (e == 0) continue;
                if (printed) os << '*';
                os << (*ctx_)[i];
                if (e > 1) os << '^' << e;
                printed = true;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

private:
    static bool compatible(const MPoly& p, const MPoly& q) {
        if (!p.ctx_ || !q.ctx_ || p.ctx_ == q.ctx_) return true;
        return *p.ctx_ == *q.ctx_;
    }

    static VarContext merged_context(const MPoly& p, const MPoly& q) {
        if (!compatible(p, q))
            throw std::invalid_argument("polynomial arithmetic: variable contexts differ");
        return p.ctx_ ? p.ctx_ : q.ctx_;
    }

    void add_term(const Exponents& e, Int c) {
        if (c == 0) return;
        const auto [it, inserted] = terms_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VarContext ctx_;
    TermMap terms_;
};

inline MPoly pow(const MPoly& p, unsigned e) {
    MPoly r = MPoly::constant(p.context(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

using MPolyMat2 = Mat2x2<MPoly>;

inline MPolyMat2 mpoly_identity(const VarContext& ctx) {
    return {MPoly::constant(ctx, 1), MPoly(ctx), MPoly(ctx), MPoly::constant(ctx, 1)};
}

// Symbolic digit matrix [[v, 1], [1, 0]] for the context variable at `index`.
inline MPolyMat2 symbolic_digit_matrix(const VarContext& ctx, std::size_t index) {
    return {MPoly::variable(ctx, index), MPoly::constant(ctx, 1), MPoly::constant(ctx, 1), MPoly(ctx)};
}

// Symbolic E = P * Q * P^{-1} over an arbitrary context: the preperiod
// variables sit at indices y_first .. y_first+N-1 and the period variables at
// x_first .. x_first+k-1.  det P = (-1)^N is itself a polynomial identity, so
// P^{-1} = det(P) * adj(P) stays integral; det(P) is computed, not assumed.
inline MPolyMat2 symbolic_equivalence_matrix_over(const VarContext& ctx, std::size_t y_first,
                                                  std::size_t n_pre, std::size_t x_first,
                                                  std::size_t k_period) {
    if (k_period < 1) throw std::invalid_argument("symbolic equivalence matrix: period length must be >= 1");
    MPolyMat2 p = mpoly_identity(ctx);
    for (std::size_t i = 0; i < n_pre; ++i) p = p * symbolic_digit_matrix(ctx, y_first + i);
    MPolyMat2 q = mpoly_identity(ctx);
    for (std::size_t j = 0; j < k_period; ++j) q = q * symbolic_digit_matrix(ctx, x_first + j);
    const MPoly det_p = p.det();  // the constant (-1)^N
    const MPolyMat2 adj = p.adjugate();
    const MPolyMat2 inv = {adj.m11 * det_p, adj.m12 * det_p, adj.m21 * det_p, adj.m22 * det_p};
    return p * q * inv;
}

// Context y1..yN, x1..xk used for the standard symbolic equivalence matrix.
inline VarContext yx_context(std::size_t n_pre, std::size_t k_period) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n_pre; ++i) names.push_back("y" + std::to_string(i));
    for (std::size_t j = 1; j <= k_period; ++j) names.push_back("x" + std::to_string(j));
    return make_context(std::move(names));
}

inline MPolyMat2 symbolic_equivalence_matrix(std::size_t n_pre, std::size_t k_period) {
    const VarContext ctx = yx_context(n_pre, k_period);
    return symbolic_equivalence_matrix_over(ctx, 0, n_pre, n_pre, k_period);
}

}  // namespace pellfrac
