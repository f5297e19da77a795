#pragma once

#include <cassert>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "schubert/schubert.hpp"

namespace schubert {

// Index conversion between the divided-difference word u and the permutation
// w = w_0^n u^{-1}; the two directions are mutually inverse at fixed rank.
inline CanonicalForm dword_to_perm(const CanonicalForm& u, int n) {
    if (u.trimmed().rank() > n) throw std::invalid_argument("rank too small for index");
    return multiply(longest_element(n), inverse(u));
}

inline CanonicalForm perm_to_dword(const CanonicalForm& w, int n) { return complement(w, n); }

// The Schubert polynomial named by its leading monomial. The value does not
// depend on the ambient rank, so results are shared through a process-wide
// cache; the value is computed outside the lock and inserting the same value
// twice is harmless.
inline Polynomial schubert_of_monomial(const Monomial& W) {
    static std::mutex mu;
    static std::map<Monomial, Polynomial, TermOrderGreater> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(W); it != cache.end()) return it->second;
    }
    int n = W.min_staircase_rank();
    Polynomial result = schubert_dword_direct(phi_inverse(W, n), n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(W, std::move(result)).first->second;
}

// A finite Z-combination of Schubert polynomials, keyed by the leading
// monomial of each one. Keys are rank-stable, so expansions computed at
// different ambient ranks compare directly.
class SchubertExpansion {
public:
    using TermMap = std::map<Monomial, Int, TermOrderGreater>;

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SchubertExpansion& operator+=(const SchubertExpansion& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }

    SchubertExpansion& add_scaled(const SchubertExpansion& o, const Int& factor) {
        for (const auto& [m, c] : o.terms_) add(m, c * factor);
        return *this;
    }

    // Smallest rank whose staircase set holds every index.
    int ambient_rank() const {
        int n = 1;
        for (const auto& [m, c] : terms_) n = std::max(n, m.min_staircase_rank());
        return n;
    }

    bool operator==(const SchubertExpansion&) const = default;

private:
    TermMap terms_;
};

// Sum of coefficient times Schubert polynomial; exact reconstruction of
// whatever the expansion was computed from.
inline Polynomial reconstruct(const SchubertExpansion& e) {
    Polynomial f;
    for (const auto& [m, c] : e.terms()) f += c * schubert_of_monomial(m);
    return f;
}

// ---------------------------------------------------------------------------
// Monk's formula: S_{s_k} S_w = sum of S_{w t_{p,q}} over p <= k < q with the
// length going up by exactly one. Candidates with q > max(rank, k) + 1 would
// leave a fixed point between the swapped values and cannot gain length 1,
// which makes the sum finite.
// ---------------------------------------------------------------------------

inline SchubertExpansion monk(int k, const CanonicalForm& w_perm) {
    if (k < 1) throw std::invalid_argument("variable index must be >= 1");
    OneLine w = to_one_line(w_perm.trimmed());
    int bound = std::max(w.rank(), k) + 1;
    w = w.widened(bound);
    long lw = inversions(w);
    SchubertExpansion out;
    for (int p = 1; p <= k; ++p)
        for (int q = k + 1; q <= bound; ++q) {
            OneLine v = w;
            std::swap(v.image[static_cast<std::size_t>(p) - 1],
                      v.image[static_cast<std::size_t>(q) - 1]);
            if (inversions(v) != lw + 1) continue;
            CanonicalForm vperm = from_one_line(v).trimmed();
            int n = vperm.rank();
            out.add(leading_monomial_formula(perm_to_dword(vperm, n), n), 1);
        }
    return out;
}

inline SchubertExpansion monk_of_monomial(int k, const Monomial& W) {
    static std::mutex mu;
    static std::map<std::pair<int, Monomial>, SchubertExpansion> cache;
    auto key = std::make_pair(k, W);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    int n = W.min_staircase_rank();
    SchubertExpansion result = monk(k, dword_to_perm(phi_inverse(W, n), n));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

// ---------------------------------------------------------------------------
// Algorithm 1: peel leading terms. Every Schubert polynomial is monic at its
// leading monomial, and subtraction only introduces order-smaller monomials,
// so the loop terminates.
// ---------------------------------------------------------------------------

inline SchubertExpansion expand_in_schubert_basis(const Polynomial& f) {
    SchubertExpansion out;
    if (f.is_zero()) return out;
    int n = 1;
    for (const auto& [m, c] : f.terms()) n = std::max(n, m.min_staircase_rank());
    Polynomial rem = f;
    bool have_prev = false;
    Monomial prev;
    while (!rem.is_zero()) {
        auto [w_mono, c] = rem.leading_term();
        assert(w_mono.in_staircase(n)); // the span never escapes the staircase set
        if (have_prev) assert(term_order_less(w_mono, prev)); // termination metric
        prev = w_mono;
        have_prev = true;
        rem -= c * schubert_of_monomial(w_mono);
        out.add(w_mono, c);
    }
    return out;
}

// Product of two Schubert polynomials expanded through the polynomial ring.
inline SchubertExpansion multiply_alg1(const Monomial& u, const Monomial& v) {
    return expand_in_schubert_basis(schubert_of_monomial(u) * schubert_of_monomial(v));
}

// ---------------------------------------------------------------------------
// Algorithm 2: recursion on the smaller-degree factor with Monk's formula as
// the base case; no polynomial multiplication at all.
// ---------------------------------------------------------------------------

enum class PivotChoice { SmallestVariable, LargestVariable };

namespace detail {

using ExpansionMemo = std::map<std::pair<Monomial, Monomial>, SchubertExpansion>;

inline SchubertExpansion alg2_rec(Monomial a, Monomial b, PivotChoice pivot,
                                  ExpansionMemo& memo) {
    // keep the recursion pivot on the smaller factor
    if (a.total_degree() > b.total_degree() ||
        (a.total_degree() == b.total_degree() && term_order_less(b, a)))
        std::swap(a, b);
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    SchubertExpansion result;
    int t = a.total_degree();
    if (t == 0) {
        result.add(b, 1);
    } else if (t == 1) {
        result = monk_of_monomial(a.width(), b); // a = x_k with k = width
    } else if (a.width() == 1) {
        // a = x_1^t splits off one factor of S_{x_1} exactly
        SchubertExpansion sub = alg2_rec(Monomial::variable(1, t - 1), b, pivot, memo);
        for (const auto& [z, c] : sub.terms()) result.add_scaled(monk_of_monomial(1, z), c);
    } else {
        int k = 0;
        if (pivot == PivotChoice::SmallestVariable) {
            for (k = 1; a.exponent(k) == 0; ++k) {}
        } else {
            k = a.width();
        }
        Monomial rest = *a.divided_by(Monomial::variable(k));
        // S_a = S_{x_k} S_rest - sum of the strictly smaller Monk terms
        SchubertExpansion corrections = monk_of_monomial(k, rest);
        assert(corrections.coefficient(a) == 1);
        SchubertExpansion sub = alg2_rec(rest, b, pivot, memo);
        for (const auto& [z, c] : sub.terms()) result.add_scaled(monk_of_monomial(k, z), c);
        for (const auto& [w, c] : corrections.terms()) {
            if (w == a) continue;
            assert(term_order_less(w, a));
            result.add_scaled(alg2_rec(w, b, pivot, memo), -c);
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace detail

inline SchubertExpansion multiply_alg2(const Monomial& u, const Monomial& v,
                                       PivotChoice pivot = PivotChoice::SmallestVariable) {
    detail::ExpansionMemo memo;
    return detail::alg2_rec(u, v, pivot, memo);
}

} // namespace schubert
