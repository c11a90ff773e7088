#pragma once

// Parsers for the textual input forms used by the command-line tool:
// quadratic surds as "a b c d" quadruples or radical expressions like
// "sqrt(11)", "3*sqrt(5)/2", "(3+sqrt(5))/2", "-2+3*sqrt(7)"; periodic
// continued fractions as "[b1,...,bN; (a1,...,ak)]".  Both parsers invert
// the corresponding str() renderings exactly.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pellfrac/cfrac.hpp"
#include "pellfrac/surd.hpp"

namespace pellfrac {

namespace detail {

inline bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline Int parse_int(const std::string& s) {
    if (!is_integer_token(s)) throw std::invalid_argument("expected an integer, got \"" + s + "\"");
    return s[0] == '+' ? Int(s.substr(1)) : Int(s);
}

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        out.push_back(s.substr(start, comma - start));
        if (out.back().empty()) throw std::invalid_argument("empty list entry");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string strip_spaces(const std::string& text) {
    std::string s;
    for (const char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    return s;
}

}  // namespace detail

// Accepts "a b c d" with whitespace separation, or an expression built from
// sqrt(D) with optional integer offset, coefficient, and denominator.
inline QuadSurd parse_surd(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) throw std::invalid_argument("empty surd input");
    if (tokens.size() == 4) {
        bool all_int = true;
        for (const std::string& t : tokens) all_int = all_int && detail::is_integer_token(t);
        if (all_int)
            return QuadSurd(detail::parse_int(tokens[0]), detail::parse_int(tokens[1]),
                            detail::parse_int(tokens[2]), detail::parse_int(tokens[3]));
    }

    std::string s = detail::strip_spaces(text);

    // Optional top-level denominator "/c".
    Int c = 1;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0) {
            c = detail::parse_int(s.substr(i + 1));
            s = s.substr(0, i);
            break;
        }
    }

    // Strip one pair of enclosing parentheses when they wrap everything.
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int d2 = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++d2;
            else if (s[i] == ')') --d2;
            if (d2 == 0) {
                wraps = false;
                break;
            }
        }
        if (wraps) s = s.substr(1, s.size() - 2);
    }

    const std::size_t sq = s.find("sqrt(");
    if (sq == std::string::npos || s.empty() || s.back() != ')')
        throw std::invalid_argument("surd expression must contain sqrt(D)");
    const Int d = detail::parse_int(s.substr(sq + 5, s.size() - sq - 6));

    // Prefix: "", "-", "B*", "a+", "a-", "a+B*", or "a-B*".
    const std::string prefix = s.substr(0, sq);
    Int a = 0, b = 1;
    if (!prefix.empty()) {
        std::size_t split = std::string::npos;
        for (std::size_t i = prefix.size(); i-- > 1;)
            if ((prefix[i] == '+' || prefix[i] == '-') &&
                std::isdigit(static_cast<unsigned char>(prefix[i - 1]))) {
                split = i;
                break;
            }
        std::string bpart = prefix;
        if (split != std::string::npos) {
            a = detail::parse_int(prefix.substr(0, split));
            bpart = prefix.substr(split);  // keeps the sign
        }
        if (bpart.empty() || bpart == "+") b = 1;
        else if (bpart == "-") b = -1;
        else if (bpart.back() == '*') b = detail::parse_int(bpart.substr(0, bpart.size() - 1));
        else throw std::invalid_argument("malformed coefficient before sqrt");
    }
    return QuadSurd(a, b, c, d);
}

// Accepts "[b1,...,bN; (a1,...,ak)]"; the preperiod (and its semicolon) may
// be absent for purely periodic expansions, e.g. "[(1, 2)]".
inline PeriodicCF parse_cf(const std::string& text) {
    const std::string s = detail::strip_spaces(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("continued fraction must look like [b1,...; (a1,...)]");
    const std::string body = s.substr(1, s.size() - 2);

    const std::size_t semi = body.find(';');
    const std::string prepart = semi == std::string::npos ? "" : body.substr(0, semi);
    const std::string perpart = semi == std::string::npos ? body : body.substr(semi + 1);
    if (perpart.find(';') != std::string::npos)
        throw std::invalid_argument("more than one ';' in continued fraction");
    if (perpart.size() < 2 || perpart.front() != '(' || perpart.back() != ')')
        throw std::invalid_argument("period must be parenthesized");

    std::vector<Int> pre, per;
    for (const std::string& t : detail::split_csv(prepart)) pre.push_back(detail::parse_int(t));
    for (const std::string& t : detail::split_csv(perpart.substr(1, perpart.size() - 2)))
        per.push_back(detail::parse_int(t));
    return PeriodicCF(std::move(pre), std::move(per));
}

}  // namespace pellfrac
