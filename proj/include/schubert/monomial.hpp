#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "schubert/common.hpp"

namespace schubert {

// A commutative word x_1^{k_1} ... x_w^{k_w}. Trailing zero exponents are
// trimmed on construction, so monomials built at different ambient ranks
// compare equal whenever they denote the same word.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
        for (int e : exp_)
            if (e < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
        trim();
    }

    static Monomial one() { return Monomial{}; }

    static Monomial variable(int index, int exponent = 1) {
        if (index < 1) throw std::invalid_argument("variable index must be >= 1");
        std::vector<int> e(static_cast<std::size_t>(index), 0);
        e.back() = exponent;
        return Monomial(std::move(e));
    }

    // deg_{x_index}; zero beyond the stored width
    int exponent(int index) const {
        if (index < 1) throw std::invalid_argument("variable index must be >= 1");
        auto i = static_cast<std::size_t>(index);
        return i <= exp_.size() ? exp_[i - 1] : 0;
    }

    int width() const { return static_cast<int>(exp_.size()); }

    int total_degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

    bool is_one() const { return exp_.empty(); }

    const std::vector<int>& exponents() const { return exp_; }

    Monomial operator*(const Monomial& o) const {
        std::vector<int> e(std::max(exp_.size(), o.exp_.size()), 0);
        for (std::size_t i = 0; i < exp_.size(); ++i) e[i] += exp_[i];
        for (std::size_t i = 0; i < o.exp_.size(); ++i) e[i] += o.exp_[i];
        return Monomial(std::move(e));
    }

    // Componentwise difference; empty when any exponent would go negative.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        std::vector<int> e(std::max(exp_.size(), o.exp_.size()), 0);
        for (std::size_t i = 0; i < exp_.size(); ++i) e[i] = exp_[i];
        for (std::size_t i = 0; i < o.exp_.size(); ++i) {
            e[i] -= o.exp_[i];
            if (e[i] < 0) return std::nullopt;
        }
        return Monomial(std::move(e));
    }

    // Exchange the exponents of x_i and x_{i+1}.
    Monomial swapped(int i) const {
        if (i < 1) throw std::invalid_argument("swap index must be >= 1");
        std::vector<int> e = exp_;
        if (e.size() < static_cast<std::size_t>(i) + 1) e.resize(static_cast<std::size_t>(i) + 1, 0);
        std::swap(e[static_cast<std::size_t>(i) - 1], e[static_cast<std::size_t>(i)]);
        return Monomial(std::move(e));
    }

    // Membership in the staircase set: k_i + i <= rank for every i.
    bool in_staircase(int rank) const { return min_staircase_rank() <= rank; }

    // Smallest rank whose staircase set contains this monomial (1 for the unit).
    int min_staircase_rank() const {
        int n = 1;
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > 0) n = std::max(n, exp_[i] + static_cast<int>(i) + 1);
        return n;
    }

    bool operator==(const Monomial&) const = default;

    // container ordering only; the mathematical orders live below
    bool operator<(const Monomial& o) const { return exp_ < o.exp_; }

private:
    void trim() {
        while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
    }

    std::vector<int> exp_;
};

// The evaluation order: a monomial is larger when the tuple
// (total degree, k_top, ..., k_1) is lexicographically larger.
// Keys add under multiplication, so the order is translation-invariant.
inline bool term_order_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (int idx = std::max(a.width(), b.width()); idx >= 1; --idx) {
        int ea = a.exponent(idx), eb = b.exponent(idx);
        if (ea != eb) return ea < eb;
    }
    return false;
}

struct TermOrderGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return term_order_less(b, a); }
};

// Display order: plain lexicographic on (k_1, k_2, ...). Only used when
// printing, so that sums read in the usual x_1-first way.
inline bool display_greater(const Monomial& a, const Monomial& b) {
    for (int idx = 1, w = std::max(a.width(), b.width()); idx <= w; ++idx) {
        int ea = a.exponent(idx), eb = b.exponent(idx);
        if (ea != eb) return ea > eb;
    }
    return false;
}

inline std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int idx = 1; idx <= m.width(); ++idx) {
        int e = m.exponent(idx);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(idx);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// x_lo * x_{lo+1} * ... * x_hi, the unit when the range is empty.
inline Monomial variable_range(int lo, int hi) {
    if (lo > hi) return Monomial::one();
    if (lo < 1) throw std::invalid_argument("variable index must be >= 1");
    std::vector<int> e(static_cast<std::size_t>(hi), 0);
    for (int i = lo; i <= hi; ++i) e[static_cast<std::size_t>(i) - 1] = 1;
    return Monomial(std::move(e));
}

} // namespace schubert
