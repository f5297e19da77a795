#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/common.hpp"
#include "schubert/monomial.hpp"

namespace schubert {

// Multivariate polynomial over Z with exact coefficients. Terms are kept in
// decreasing evaluation order, so begin() is always the leading term.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, TermOrderGreater>;

    Polynomial() = default;

    Polynomial(const Int& constant) { add_term(Monomial::one(), constant); }
    Polynomial(long constant) : Polynomial(Int(constant)) {}
    Polynomial(int constant) : Polynomial(Int(constant)) {}

    explicit Polynomial(const Monomial& m, Int coefficient = 1) { add_term(m, coefficient); }

    static Polynomial variable(int index) { return Polynomial(Monomial::variable(index)); }

    bool is_zero() const { return terms_.empty(); }

    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        return r += o;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        return r -= o;
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Int& c) const {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    // Leading term in the evaluation order; the zero polynomial has none.
    std::pair<Monomial, Int> leading_term() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
        return *terms_.begin();
    }

    Monomial leading_monomial() const { return leading_term().first; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [m, c] : terms_)
            if (m.total_degree() != degree) return false;
        return true;
    }

    bool operator==(const Polynomial&) const = default;

private:
    TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& f) { return f.scaled(c); }

// Text form: "3*x1^2*x2 - 7*x5*x7". Terms print in decreasing plain-lex
// order on (k_1, k_2, ...); unit coefficients are suppressed.
inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Int>> ts(f.terms().begin(), f.terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return display_greater(a.first, b.first); });
    std::string s;
    bool first = true;
    for (const auto& [m, c] : ts) {
        bool neg = c < 0;
        Int mag = abs(c);
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (mag != 1 || m.is_one()) {
            s += mag.get_str();
            if (!m.is_one()) s += "*";
        }
        if (!m.is_one()) s += to_string(m);
    }
    return s;
}

// Parses the printer's format back (and is tolerant about whitespace and
// term order). Throws ParseError with the offending position.
inline Polynomial parse_polynomial(const std::string& s) {
    Polynomial result;
    std::size_t p = 0;
    detail::skip_ws(s, p);
    if (p == s.size()) throw ParseError("empty polynomial", p);
    bool first = true;
    while (p < s.size()) {
        int sign = 1;
        detail::skip_ws(s, p);
        if (!first) {
            if (s[p] == '+')
                ++p;
            else if (s[p] == '-') {
                sign = -1;
                ++p;
            } else
                throw ParseError("expected '+' or '-' between terms", p);
        } else if (s[p] == '+' || s[p] == '-') {
            if (s[p] == '-') sign = -1;
            ++p;
        }
        first = false;

        Int coeff = 1;
        std::vector<int> exps;
        bool any_factor = false;
        for (;;) {
            detail::skip_ws(s, p);
            if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
                coeff *= Int(detail::parse_digits(s, p, "integer"), 10);
                any_factor = true;
            } else if (p < s.size() && s[p] == 'x') {
                std::size_t xpos = p;
                ++p;
                std::string idx = detail::parse_digits(s, p, "variable index");
                int index = std::stoi(idx);
                if (index < 1) throw ParseError("variable index must be >= 1", xpos);
                int e = 1;
                if (p < s.size() && s[p] == '^') {
                    ++p;
                    e = std::stoi(detail::parse_digits(s, p, "exponent"));
                }
                if (exps.size() < static_cast<std::size_t>(index)) exps.resize(index, 0);
                exps[index - 1] += e;
                any_factor = true;
            } else {
                throw ParseError("expected integer or variable", p);
            }
            detail::skip_ws(s, p);
            if (p < s.size() && s[p] == '*') {
                ++p;
                continue;
            }
            break;
        }
        if (!any_factor) throw ParseError("empty term", p);
        result.add_term(Monomial(std::move(exps)), sign * coeff);
        detail::skip_ws(s, p);
    }
    return result;
}

// A bare monomial such as "x3*x4" or "1".
inline Monomial parse_monomial(const std::string& s) {
    Polynomial f = parse_polynomial(s);
    if (f.term_count() != 1) throw ParseError("expected a single monomial", 0);
    auto [m, c] = f.leading_term();
    if (c != 1) throw ParseError("monomial must have coefficient 1", 0);
    return m;
}

} // namespace schubert
