#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "schubert/common.hpp"

namespace schubert {

// A free word in the generators s_1, ..., s_{rank-1}. The empty word is the
// identity.
struct Word {
    std::vector<int> letters; // 1-based generator indices
    int rank = 1;             // ambient n

    Word() = default;

    explicit Word(std::vector<int> ls, int ambient_rank = 0) : letters(std::move(ls)) {
        int need = 1;
        for (int t : letters) {
            if (t < 1) throw std::invalid_argument("generator index must be >= 1");
            need = std::max(need, t + 1);
        }
        rank = ambient_rank == 0 ? need : ambient_rank;
        if (rank < need) throw std::invalid_argument("letter out of range for ambient rank");
    }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
};

inline Word concat(const Word& a, const Word& b) {
    std::vector<int> ls = a.letters;
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return Word(std::move(ls), std::max(a.rank, b.rank));
}

// -------------------------------------------------------------------------
// Rewriting with the confluent relation set
//   (1) s_i s_i -> 1
//   (2) s_i s_j -> s_j s_i          (i > j+1)
//   (3) s_{i,j} s_i -> s_{i-1} s_{i,j}   (i > j, s_{i,j} = s_i s_{i-1} ... s_j)
// Every step decreases the word in degree-lex order, and the set is
// confluent, so any fair application order reaches the same normal form.
// -------------------------------------------------------------------------

namespace detail {

struct RuleMatch {
    std::size_t pos = 0;
    int rule = 0;        // 1, 2 or 3
    std::size_t run = 0; // rule 3: letters in the descending run s_{i,j}
};

// At most one rule can fire at a given position, so a position fully
// determines the match.
inline bool match_at(const std::vector<int>& w, std::size_t p, RuleMatch& out) {
    if (p + 1 >= w.size()) return false;
    if (w[p] == w[p + 1]) {
        out = {p, 1, 0};
        return true;
    }
    if (w[p] > w[p + 1] + 1) {
        out = {p, 2, 0};
        return true;
    }
    if (w[p] == w[p + 1] + 1) {
        // descending run w[p..q]; fire on the shortest prefix followed by w[p]
        std::size_t q = p + 1;
        for (;;) {
            if (q + 1 < w.size() && w[q + 1] == w[p]) {
                out = {p, 3, q - p + 1};
                return true;
            }
            if (q + 1 < w.size() && w[q + 1] == w[q] - 1)
                ++q;
            else
                return false;
        }
    }
    return false;
}

inline void apply_match(std::vector<int>& w, const RuleMatch& m) {
    switch (m.rule) {
    case 1:
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(m.pos),
                w.begin() + static_cast<std::ptrdiff_t>(m.pos) + 2);
        break;
    case 2:
        std::swap(w[m.pos], w[m.pos + 1]);
        break;
    case 3: {
        // s_i s_{i-1} ... s_j s_i  ->  s_{i-1} s_i s_{i-1} ... s_j
        int i = w[m.pos];
        std::vector<int> repl;
        repl.reserve(m.run + 1);
        repl.push_back(i - 1);
        for (int v = i; v >= i - static_cast<int>(m.run) + 1; --v) repl.push_back(v);
        std::copy(repl.begin(), repl.end(), w.begin() + static_cast<std::ptrdiff_t>(m.pos));
        break;
    }
    default:
        assert(false);
    }
}

} // namespace detail

enum class RewriteStrategy { LeftmostInnermost, RightmostInnermost };

// Fully rewrites the letter sequence to its normal form. The picker selects
// which applicable position fires next; any choice yields the same result.
inline std::vector<int> normalize_letters(
    std::vector<int> w,
    const std::function<std::size_t(const std::vector<std::size_t>&)>& pick) {
    for (;;) {
        std::vector<std::size_t> candidates;
        detail::RuleMatch m;
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (detail::match_at(w, p, m)) candidates.push_back(p);
        if (candidates.empty()) return w;
        std::size_t p = candidates[pick(candidates)];
        detail::match_at(w, p, m);
        detail::apply_match(w, m);
    }
}

inline std::vector<int> normalize_letters(std::vector<int> w, RewriteStrategy strategy) {
    detail::RuleMatch m;
    for (;;) {
        bool found = false;
        if (strategy == RewriteStrategy::LeftmostInnermost) {
            for (std::size_t p = 0; !found && p + 1 < w.size(); ++p)
                found = detail::match_at(w, p, m);
        } else {
            for (std::size_t p = w.size(); !found && p-- > 0;)
                found = detail::match_at(w, p, m);
        }
        if (!found) return w;
        detail::apply_match(w, m);
    }
}

// -------------------------------------------------------------------------
// Canonical forms: s_{1,i_1} s_{2,i_2} ... s_{n-1,i_{n-1}} with
// 1 <= i_j <= j+1, where i_j = j+1 encodes the empty block.
// -------------------------------------------------------------------------

class CanonicalForm {
public:
    CanonicalForm() = default;

    explicit CanonicalForm(std::vector<int> blocks) : i_(std::move(blocks)) {
        for (std::size_t j = 0; j < i_.size(); ++j)
            if (i_[j] < 1 || i_[j] > static_cast<int>(j) + 2)
                throw std::invalid_argument("canonical block out of range");
    }

    static CanonicalForm identity(int rank) {
        if (rank < 1) throw std::invalid_argument("rank must be >= 1");
        std::vector<int> v(static_cast<std::size_t>(rank) - 1);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = static_cast<int>(j) + 2;
        return CanonicalForm(std::move(v));
    }

    int rank() const { return static_cast<int>(i_.size()) + 1; }

    // i_j for 1 <= j; blocks beyond the stored width are empty
    int block(int j) const {
        if (j < 1) throw std::invalid_argument("block index must be >= 1");
        return j <= static_cast<int>(i_.size()) ? i_[static_cast<std::size_t>(j) - 1] : j + 1;
    }

    const std::vector<int>& blocks() const { return i_; }

    bool is_identity() const {
        for (std::size_t j = 0; j < i_.size(); ++j)
            if (i_[j] != static_cast<int>(j) + 2) return false;
        return true;
    }

    long length() const {
        long len = 0;
        for (std::size_t j = 0; j < i_.size(); ++j)
            if (i_[j] <= static_cast<int>(j) + 1) len += static_cast<int>(j) + 1 - i_[j] + 1;
        return len;
    }

    Word word() const {
        std::vector<int> ls;
        for (std::size_t j = 0; j < i_.size(); ++j)
            for (int s = static_cast<int>(j) + 1; s >= i_[j]; --s) ls.push_back(s);
        return Word(std::move(ls), rank());
    }

    CanonicalForm widened(int rank) const {
        if (rank < this->rank()) throw std::invalid_argument("cannot narrow a canonical form");
        std::vector<int> v = i_;
        for (int j = static_cast<int>(v.size()) + 1; j <= rank - 1; ++j) v.push_back(j + 1);
        return CanonicalForm(std::move(v));
    }

    CanonicalForm trimmed() const {
        std::vector<int> v = i_;
        while (!v.empty() && v.back() == static_cast<int>(v.size()) + 1) v.pop_back();
        return CanonicalForm(std::move(v));
    }

    // The group element is rank-independent, so comparisons ignore trailing
    // empty blocks.
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.trimmed().i_ == b.trimmed().i_;
    }

    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return a.trimmed().i_ < b.trimmed().i_;
    }

private:
    std::vector<int> i_;
};

namespace detail {

// Reads the block vector off a normal-form word.
inline std::vector<int> blocks_of_normal_word(const std::vector<int>& w, int rank) {
    std::vector<int> iv(static_cast<std::size_t>(rank) - 1);
    for (std::size_t j = 0; j < iv.size(); ++j) iv[j] = static_cast<int>(j) + 2;
    std::size_t p = 0;
    int prev_head = 0;
    while (p < w.size()) {
        int head = w[p];
        if (head <= prev_head || head > rank - 1)
            throw std::logic_error("word is not in normal form");
        int bottom = head;
        ++p;
        while (p < w.size() && w[p] == bottom - 1) {
            bottom = w[p];
            ++p;
        }
        iv[static_cast<std::size_t>(head) - 1] = bottom;
        prev_head = head;
    }
    return iv;
}

} // namespace detail

inline CanonicalForm rewrite_to_canonical(const Word& w,
                                          RewriteStrategy strategy =
                                              RewriteStrategy::LeftmostInnermost) {
    std::vector<int> nf = normalize_letters(w.letters, strategy);
    return CanonicalForm(detail::blocks_of_normal_word(nf, w.rank));
}

inline bool is_reduced(const Word& w) {
    return static_cast<long>(w.size()) == rewrite_to_canonical(w).length();
}

inline CanonicalForm multiply(const CanonicalForm& a, const CanonicalForm& b) {
    return rewrite_to_canonical(concat(a.word(), b.word()));
}

inline CanonicalForm inverse(const CanonicalForm& a) {
    Word w = a.word();
    std::reverse(w.letters.begin(), w.letters.end());
    return rewrite_to_canonical(w);
}

// w_0^n = s_{1,1} s_{2,1} ... s_{n-1,1}, the longest element.
inline CanonicalForm longest_element(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    return CanonicalForm(std::vector<int>(static_cast<std::size_t>(n) - 1, 1));
}

// [w^{-1} w_0^n]; requires w to embed into S_n.
inline CanonicalForm complement(const CanonicalForm& w, int n) {
    CanonicalForm t = w.trimmed();
    if (t.rank() > n) throw std::invalid_argument("rank too small for complement");
    return multiply(inverse(t), longest_element(n));
}

// Whether s_t u is reduced, read straight off the normal form: i_{t-1} < i_t
// with the convention i_0 = 1.
inline bool is_left_reduced(int t, const CanonicalForm& u) {
    if (t < 1) throw std::invalid_argument("generator index must be >= 1");
    int prev = t >= 2 ? u.block(t - 1) : 1;
    return prev < u.block(t);
}

// -------------------------------------------------------------------------
// One-line notation. image[k-1] = w(k); composition is (a*b)(x) = a(b(x)),
// so right-multiplying by s_t swaps the entries at positions t, t+1.
// -------------------------------------------------------------------------

struct OneLine {
    std::vector<int> image;

    OneLine() = default;

    explicit OneLine(std::vector<int> img) : image(std::move(img)) {
        std::vector<bool> seen(image.size(), false);
        for (int v : image) {
            if (v < 1 || v > static_cast<int>(image.size()) || seen[static_cast<std::size_t>(v) - 1])
                throw std::invalid_argument("image is not a bijection");
            seen[static_cast<std::size_t>(v) - 1] = true;
        }
    }

    static OneLine identity(int rank) {
        std::vector<int> img(static_cast<std::size_t>(rank));
        std::iota(img.begin(), img.end(), 1);
        return OneLine(std::move(img));
    }

    int rank() const { return static_cast<int>(image.size()); }

    OneLine widened(int rank) const {
        std::vector<int> img = image;
        for (int k = static_cast<int>(img.size()) + 1; k <= rank; ++k) img.push_back(k);
        return OneLine(std::move(img));
    }

    OneLine trimmed() const {
        std::vector<int> img = image;
        while (!img.empty() && img.back() == static_cast<int>(img.size())) img.pop_back();
        return OneLine(std::move(img));
    }

    friend bool operator==(const OneLine& a, const OneLine& b) {
        return a.trimmed().image == b.trimmed().image;
    }
};

inline long inversions(const OneLine& p) {
    long count = 0;
    for (std::size_t a = 0; a < p.image.size(); ++a)
        for (std::size_t b = a + 1; b < p.image.size(); ++b)
            if (p.image[a] > p.image[b]) ++count;
    return count;
}

inline OneLine to_one_line(const CanonicalForm& a, int rank = 0) {
    int n = std::max(rank, a.rank());
    OneLine p = OneLine::identity(n);
    for (int t : a.word().letters)
        std::swap(p.image[static_cast<std::size_t>(t) - 1], p.image[static_cast<std::size_t>(t)]);
    return p;
}

inline CanonicalForm from_one_line(const OneLine& p) {
    std::vector<int> img = p.image;
    std::vector<int> rev;
    for (;;) {
        bool found = false;
        for (std::size_t t = 0; t + 1 < img.size(); ++t)
            if (img[t] > img[t + 1]) {
                rev.push_back(static_cast<int>(t) + 1);
                std::swap(img[t], img[t + 1]);
                found = true;
                break;
            }
        if (!found) break;
    }
    std::reverse(rev.begin(), rev.end());
    int n = std::max(1, static_cast<int>(p.image.size()));
    return rewrite_to_canonical(Word(std::move(rev), n));
}

// -------------------------------------------------------------------------
// Text forms: words "s3 s2 s5", canonical forms "i=(1,1,4,3)",
// one-line images "[2 1 3]".
// -------------------------------------------------------------------------

inline std::string to_string(const Word& w) {
    std::string s;
    for (int t : w.letters) {
        if (!s.empty()) s += " ";
        s += "s" + std::to_string(t);
    }
    return s;
}

inline std::string to_string(const CanonicalForm& a) {
    std::string s = "i=(";
    for (std::size_t j = 0; j < a.blocks().size(); ++j) {
        if (j) s += ",";
        s += std::to_string(a.blocks()[j]);
    }
    return s + ")";
}

inline std::string to_string(const OneLine& p) {
    std::string s = "[";
    for (std::size_t k = 0; k < p.image.size(); ++k) {
        if (k) s += " ";
        s += std::to_string(p.image[k]);
    }
    return s + "]";
}

inline Word parse_word(const std::string& s, int rank = 0) {
    std::vector<int> letters;
    std::size_t p = 0;
    while (p < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[p]))) {
            ++p;
            continue;
        }
        if (s[p] != 's') throw ParseError("expected generator token 's<k>'", p);
        ++p;
        letters.push_back(std::stoi(detail::parse_digits(s, p, "generator index")));
        if (letters.back() < 1) throw ParseError("generator index must be >= 1", p);
    }
    return Word(std::move(letters), rank);
}

inline CanonicalForm parse_canonical(const std::string& s) {
    std::size_t p = 0;
    detail::skip_ws(s, p);
    if (s.compare(p, 3, "i=(") != 0) throw ParseError("expected 'i=('", p);
    p += 3;
    std::vector<int> blocks;
    detail::skip_ws(s, p);
    if (p < s.size() && s[p] == ')') {
        ++p;
    } else {
        for (;;) {
            detail::skip_ws(s, p);
            blocks.push_back(std::stoi(detail::parse_digits(s, p, "block value")));
            detail::skip_ws(s, p);
            if (p < s.size() && s[p] == ',') {
                ++p;
                continue;
            }
            if (p < s.size() && s[p] == ')') {
                ++p;
                break;
            }
            throw ParseError("expected ',' or ')'", p);
        }
    }
    detail::skip_ws(s, p);
    if (p != s.size()) throw ParseError("trailing input after canonical form", p);
    return CanonicalForm(std::move(blocks));
}

inline OneLine parse_one_line(const std::string& s) {
    std::size_t p = 0;
    detail::skip_ws(s, p);
    if (p >= s.size() || s[p] != '[') throw ParseError("expected '['", p);
    ++p;
    std::vector<int> img;
    for (;;) {
        detail::skip_ws(s, p);
        if (p < s.size() && s[p] == ']') {
            ++p;
            break;
        }
        img.push_back(std::stoi(detail::parse_digits(s, p, "image value")));
    }
    detail::skip_ws(s, p);
    if (p != s.size()) throw ParseError("trailing input after one-line form", p);
    return OneLine(std::move(img));
}

} // namespace schubert
