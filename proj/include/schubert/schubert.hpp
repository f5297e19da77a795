#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schubert/divided.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/word.hpp"

namespace schubert {

// ---------------------------------------------------------------------------
// Direct evaluators
// ---------------------------------------------------------------------------

// d_u applied to the rank-n staircase. This is the defining computation and
// serves as the oracle for both closed formulas below.
inline Polynomial schubert_dword_direct(const CanonicalForm& u, int n) {
    if (u.trimmed().rank() > n) throw std::invalid_argument("rank too small for index");
    return divided_difference_word(u.word(), staircase_polynomial(n));
}

// The Schubert polynomial of the permutation w, i.e. d_{[w^{-1} w_0^n]}
// applied to the staircase. Stable under widening n.
inline Polynomial schubert_direct(const CanonicalForm& w, int n) {
    return schubert_dword_direct(complement(w, n), n);
}

// ---------------------------------------------------------------------------
// Right-normed operator products
// ---------------------------------------------------------------------------

enum class DeltaTag { Id, Divided, Swap };

// Evaluates delta_t(x_t . delta_{t+1}(x_{t+1} . ( ... delta_last(x_last)))),
// where tags[k] acts at index start+k. The result is always zero or a single
// monic monomial with 0/1 exponents.
inline Polynomial right_normed_eval(const std::vector<DeltaTag>& tags, int start) {
    Polynomial acc(1);
    for (std::size_t k = tags.size(); k-- > 0;) {
        int q = start + static_cast<int>(k);
        acc = Polynomial(Monomial::variable(q)) * acc;
        switch (tags[k]) {
        case DeltaTag::Id: break;
        case DeltaTag::Divided: acc = divided_difference(q, acc); break;
        case DeltaTag::Swap: acc = swap_action(q, acc); break;
        }
        if (acc.is_zero()) break;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Formula P: recursion over subsets J of the nonempty-block positions
// ---------------------------------------------------------------------------

namespace detail {

inline Polynomial formula_p_level(const std::vector<int>& iv,
                                  std::map<std::vector<int>, Polynomial>& memo) {
    if (iv.empty()) return Polynomial(1);
    if (auto it = memo.find(iv); it != memo.end()) return it->second;

    int r = static_cast<int>(iv.size()) + 1; // current element lives in S_r
    std::vector<int> admissible;             // {l in [1, r-2] : i_l <= l}
    for (int l = 1; l <= r - 2; ++l)
        if (iv[static_cast<std::size_t>(l) - 1] <= l) admissible.push_back(l);

    Polynomial total;
    for (std::size_t mask = 0; mask < (std::size_t{1} << admissible.size()); ++mask) {
        std::vector<bool> in_j(static_cast<std::size_t>(r), false);
        for (std::size_t b = 0; b < admissible.size(); ++b)
            if (mask & (std::size_t{1} << b)) in_j[static_cast<std::size_t>(admissible[b])] = true;

        // delta_q = s_q on J, otherwise d_q when block q is nonempty, else id
        std::vector<DeltaTag> tags(static_cast<std::size_t>(r) - 1);
        for (int q = 1; q <= r - 1; ++q) {
            if (in_j[static_cast<std::size_t>(q)])
                tags[static_cast<std::size_t>(q) - 1] = DeltaTag::Swap;
            else
                tags[static_cast<std::size_t>(q) - 1] =
                    iv[static_cast<std::size_t>(q) - 1] <= q ? DeltaTag::Divided : DeltaTag::Id;
        }
        Polynomial x_factor = right_normed_eval(tags, 1);
        if (x_factor.is_zero()) continue;

        // substituted word: block s_{q,i_q} moves to s_{r_q,i_q}, r_q = q on J
        // and q-1 off it (s_{0,i} is the empty block)
        std::vector<int> letters;
        for (int q = 1; q <= r - 1; ++q) {
            int rq = in_j[static_cast<std::size_t>(q)] ? q : q - 1;
            for (int s = rq; s >= iv[static_cast<std::size_t>(q) - 1]; --s) letters.push_back(s);
        }
        std::size_t len = letters.size();
        CanonicalForm sub = rewrite_to_canonical(Word(std::move(letters), std::max(r - 1, 1)));
        if (sub.length() != static_cast<long>(len)) continue; // not reduced

        total += x_factor * formula_p_level(sub.blocks(), memo);
    }
    memo.emplace(iv, total);
    return total;
}

} // namespace detail

inline Polynomial formula_p(const CanonicalForm& u, int n) {
    if (u.trimmed().rank() > n) throw std::invalid_argument("rank too small for index");
    std::map<std::vector<int>, Polynomial> memo;
    return detail::formula_p_level(u.trimmed().widened(n).blocks(), memo);
}

// ---------------------------------------------------------------------------
// The q tables behind formula Q and the leading-monomial formula
// ---------------------------------------------------------------------------

// For each row r: the strictly decreasing chain q_{r,1} > q_{r,2} > ... where
// q_{r,j} is the largest q < q_{r,j-1} with i_r - j in [i_q, q] (q_{r,0} = r).
struct QData {
    std::vector<std::vector<int>> rows; // rows[r-1] = {q_{r,1}, ..., q_{r,m_r}}

    int m(int r) const { return static_cast<int>(rows[static_cast<std::size_t>(r) - 1].size()); }
    int q(int r, int j) const { return rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(j) - 1]; }
};

namespace detail {

inline std::vector<int> q_row(const std::vector<int>& iv, int r) {
    std::vector<int> row;
    int prev = r; // q_{r,0}
    int target = iv[static_cast<std::size_t>(r) - 1] - 1;
    for (;;) {
        int found = 0;
        for (int j = prev - 1; j >= 1; --j) {
            int ij = iv[static_cast<std::size_t>(j) - 1];
            if (ij <= target && target <= j) {
                found = j;
                break;
            }
        }
        if (found == 0) break;
        row.push_back(found);
        prev = found;
        --target;
    }
    return row;
}

} // namespace detail

inline QData q_data(const CanonicalForm& u) {
    QData qd;
    const std::vector<int>& iv = u.blocks();
    qd.rows.reserve(iv.size());
    for (int r = 1; r <= static_cast<int>(iv.size()); ++r) qd.rows.push_back(detail::q_row(iv, r));
    return qd;
}

// ---------------------------------------------------------------------------
// Formula Q: recursion over T-vectors deleting one letter per marked block
// ---------------------------------------------------------------------------

namespace detail {

inline Polynomial formula_q_level(const std::vector<int>& iv,
                                  std::map<std::vector<int>, Polynomial>& memo) {
    if (iv.empty()) return Polynomial(1);
    if (auto it = memo.find(iv); it != memo.end()) return it->second;

    int r = static_cast<int>(iv.size()) + 1;
    int top = r - 1;
    int itop = iv[static_cast<std::size_t>(top) - 1];
    std::vector<int> row = q_row(iv, top); // q_{top,1} > q_{top,2} > ...
    int m = static_cast<int>(row.size());

    Polynomial total;
    // t_j ranges over [itop - j, q_{top,j} + 1]; enumerate the product set
    std::vector<int> t(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) t[static_cast<std::size_t>(j) - 1] = itop - j;
    for (;;) {
        // substituted word over blocks 1 .. top-1, deleting s_{t_j} from block
        // q_{top,j} whenever t_j <= q_{top,j}
        std::vector<int> letters;
        for (int b = 1; b <= top - 1; ++b) {
            int bottom = iv[static_cast<std::size_t>(b) - 1];
            if (bottom > b) continue;
            int del = 0;
            for (int j = 1; j <= m; ++j)
                if (row[static_cast<std::size_t>(j) - 1] == b &&
                    t[static_cast<std::size_t>(j) - 1] <= b)
                    del = t[static_cast<std::size_t>(j) - 1];
            for (int s = b; s >= bottom; --s)
                if (s != del) letters.push_back(s);
        }
        std::size_t len = letters.size();
        CanonicalForm sub = rewrite_to_canonical(Word(std::move(letters), std::max(r - 1, 1)));
        if (sub.length() == static_cast<long>(len)) {
            Monomial x = variable_range(1, itop - m - 1);
            for (int j = 1; j <= m; ++j)
                if (t[static_cast<std::size_t>(j) - 1] > row[static_cast<std::size_t>(j) - 1])
                    x = x * Monomial::variable(1 + row[static_cast<std::size_t>(j) - 1]);
            total += Polynomial(x) * formula_q_level(sub.blocks(), memo);
        }

        // next T-vector
        int j = 1;
        while (j <= m) {
            int& tj = t[static_cast<std::size_t>(j) - 1];
            if (tj < row[static_cast<std::size_t>(j) - 1] + 1) {
                ++tj;
                break;
            }
            tj = itop - j;
            ++j;
        }
        if (j > m) break;
    }
    memo.emplace(iv, total);
    return total;
}

} // namespace detail

inline Polynomial formula_q(const CanonicalForm& u, int n) {
    if (u.trimmed().rank() > n) throw std::invalid_argument("rank too small for index");
    std::map<std::vector<int>, Polynomial> memo;
    return detail::formula_q_level(u.trimmed().widened(n).blocks(), memo);
}

// ---------------------------------------------------------------------------
// Closed-form leading monomial, and the bijection between S_n and the
// staircase monomials
// ---------------------------------------------------------------------------

// X_j = X[1, i_j - m_j - 1] * prod_k x_{1 + q_{j,k}}; the leading monomial of
// d_u applied to the staircase is X_{n-1} ... X_1, always with coefficient 1.
inline Monomial leading_monomial_formula(const CanonicalForm& u, int n) {
    if (u.trimmed().rank() > n) throw std::invalid_argument("rank too small for index");
    CanonicalForm uw = u.trimmed().widened(n);
    QData qd = q_data(uw);
    Monomial result;
    for (int j = 1; j <= n - 1; ++j) {
        Monomial xj = variable_range(1, uw.block(j) - qd.m(j) - 1);
        for (int k = 1; k <= qd.m(j); ++k) xj = xj * Monomial::variable(1 + qd.q(j, k));
        result = result * xj;
    }
    return result;
}

inline Monomial phi(const CanonicalForm& u, int n) { return leading_monomial_formula(u, n); }

// For W with weakly decreasing exponents, the word v_m ... v_1 built from
// P_k = {p : n - p - j_p >= k}, v_k = s_{p_{k,last}} ... s_{p_{k,first}};
// applying its divided differences to the staircase yields exactly W.
inline Word divide_degree_bigger(const Monomial& W, int n) {
    if (!W.in_staircase(n)) throw std::invalid_argument("monomial outside the staircase set");
    for (int p = 1; p + 1 <= n - 1; ++p)
        if (W.exponent(p) < W.exponent(p + 1))
            throw std::invalid_argument("exponents must be weakly decreasing");
    std::vector<std::vector<int>> p_sets; // p_sets[k-1] = P_k, ascending
    for (int k = 1;; ++k) {
        std::vector<int> pk;
        for (int p = 1; p <= n - 1; ++p)
            if (n - p - W.exponent(p) >= k) pk.push_back(p);
        if (pk.empty()) break;
        p_sets.push_back(std::move(pk));
    }
    std::vector<int> letters;
    for (std::size_t k = p_sets.size(); k-- > 0;)
        for (std::size_t idx = p_sets[k].size(); idx-- > 0;) letters.push_back(p_sets[k][idx]);
    return Word(std::move(letters), n);
}

// One sorting step towards weakly decreasing exponents: returns the word
// v_{t+1} = s_{k-1,t+1} and the monomial whose Schubert polynomial has W_t as
// the leading monomial of d_{v_{t+1}} applied to it.
inline std::pair<Word, Monomial> move_one_index(const Monomial& W, int t, int n) {
    if (!W.in_staircase(n)) throw std::invalid_argument("monomial outside the staircase set");
    if (t < 0 || t > n - 2) throw std::invalid_argument("step index out of range");
    auto j = [&](int p) { return W.exponent(p); };
    int best = 0, best_val = -1;
    for (int k = t + 1; k <= n - 1; ++k)
        if (j(k) + k > best_val) {
            best_val = j(k) + k;
            best = k;
        }
    // precondition: j_1+1 >= j_2+2 >= ... >= j_t+t >= max over [t+1, n-1]
    for (int p = 1; p + 1 <= t; ++p)
        if (j(p) + p < j(p + 1) + p + 1)
            throw std::invalid_argument("prefix not sorted for this step");
    if (t >= 1 && j(t) + t < best_val)
        throw std::invalid_argument("prefix not sorted for this step");

    std::vector<int> letters;
    for (int s = best - 1; s >= t + 1; --s) letters.push_back(s);

    std::vector<int> e(static_cast<std::size_t>(n) - 1, 0);
    for (int p = 1; p <= n - 1; ++p) e[static_cast<std::size_t>(p) - 1] = j(p);
    e[static_cast<std::size_t>(t)] = j(best) + best - t - 1;
    for (int l = t + 2; l <= best; ++l) e[static_cast<std::size_t>(l) - 1] = j(l - 1);
    return {Word(std::move(letters), n), Monomial(std::move(e))};
}

// The constructive inverse of phi: sort W by move_one_index, peel the sorted
// result with divide_degree_bigger, and canonicalize the concatenated word.
inline CanonicalForm phi_inverse(const Monomial& W, int n) {
    if (!W.in_staircase(n)) throw std::invalid_argument("monomial outside the staircase set");
    if (n == 1) return CanonicalForm::identity(1);
    Monomial cur = W;
    std::vector<int> letters;
    for (int t = 0; t <= n - 3; ++t) {
        auto [v, next] = move_one_index(cur, t, n);
        letters.insert(letters.end(), v.letters.begin(), v.letters.end());
        cur = next;
    }
    Word tail = divide_degree_bigger(cur, n);
    letters.insert(letters.end(), tail.letters.begin(), tail.letters.end());
    return rewrite_to_canonical(Word(std::move(letters), n)).widened(n);
}

} // namespace schubert
