#pragma once

#include "schubert/polynomial.hpp"
#include "schubert/word.hpp"

namespace schubert {

// The s_i action: interchange x_i and x_{i+1}. An involution.
inline Polynomial swap_action(int i, const Polynomial& f) {
    Polynomial r;
    for (const auto& [m, c] : f.terms()) r.add_term(m.swapped(i), c);
    return r;
}

// The divided difference d_i(f) = (f - s_i f) / (x_i - x_{i+1}), evaluated
// termwise via the closed form for d_i(x_i^t x_{i+1}^l):
//   t > l:  x_i^{t-1} x_{i+1}^l + ... + x_i^l x_{i+1}^{t-1}
//   t = l:  0
//   t < l:  -(x_i^t x_{i+1}^{l-1} + ... + x_i^{l-1} x_{i+1}^t)
// carried over the untouched variables.
inline Polynomial divided_difference(int i, const Polynomial& f) {
    if (i < 1) throw std::invalid_argument("operator index must be >= 1");
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        int t = m.exponent(i);
        int l = m.exponent(i + 1);
        if (t == l) continue;
        std::vector<int> base = m.exponents();
        if (base.size() < static_cast<std::size_t>(i) + 1) base.resize(i + 1, 0);
        int lo = std::min(t, l), hi = std::max(t, l);
        Int coeff = t > l ? c : -c;
        for (int a = lo; a <= hi - 1; ++a) {
            base[static_cast<std::size_t>(i) - 1] = a;
            base[static_cast<std::size_t>(i)] = hi - 1 - a + lo;
            r.add_term(Monomial(base), coeff);
        }
    }
    return r;
}

// d_u = d_{i_1} d_{i_2} ... d_{i_t}, applied right to left. Zero whenever the
// word is not reduced.
inline Polynomial divided_difference_word(const Word& w, const Polynomial& f) {
    Polynomial r = f;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        r = divided_difference(*it, r);
        if (r.is_zero()) break;
    }
    return r;
}

// x_1^{n-1} x_2^{n-2} ... x_{n-1}, the top Schubert polynomial of rank n.
inline Polynomial staircase_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<int> e(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i <= n - 1; ++i) e[static_cast<std::size_t>(i) - 1] = n - i;
    return Polynomial(Monomial(std::move(e)));
}

inline Monomial staircase_monomial(int n) { return staircase_polynomial(n).leading_monomial(); }

} // namespace schubert
