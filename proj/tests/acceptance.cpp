// Acceptance suite: one pass/fail line per criterion, each with its time
// budget checked. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "schubert/all.hpp"

using namespace schubert;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    bool pass = true;
    std::string detail;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(int id_, std::string label_, double budget)
        : id(id_), label(std::move(label_)), budget_seconds(budget) {}

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }

    void finish() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && budget_seconds > 0 && elapsed > budget_seconds) {
            pass = false;
            detail = "exceeded " + std::to_string(budget_seconds) + "s budget";
        }
        std::printf("%s  %d  %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, label.c_str(), elapsed);
        if (!pass) {
            std::printf("      -> %s\n", detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

Polynomial sum_of_variables(int k) {
    Polynomial f;
    for (int i = 1; i <= k; ++i) f += Polynomial::variable(i);
    return f;
}

void criterion_1() {
    Criterion c{1, "formula P reproduces the rank-six table product", 1.0};
    CanonicalForm u = parse_canonical("i=(1,1,1,3)");
    Polynomial expected;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            expected += Polynomial(variable_range(1, 5) * Monomial::variable(i) *
                                   Monomial::variable(j));
    Polynomial got = formula_p(u, 6);
    c.require(got == expected, "formula P value differs");
    c.require(got.term_count() == 6, "expected six monomials");
    c.finish();
}

void criterion_2() {
    Criterion c{2, "formula Q reproduces the rank-five table product", 1.0};
    CanonicalForm u = parse_canonical("i=(1,1,2,2)");
    Polynomial expected;
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j)
            expected += Polynomial(Monomial::variable(i) * Monomial::variable(j));
    c.require(formula_q(u, 5) == expected, "formula Q value differs");
    QData qd = q_data(u);
    c.require(qd.m(4) == 1 && qd.q(4, 1) == 2, "q table differs");
    c.finish();
}

void criteria_3_and_4() {
    Criterion c3{3, "triple agreement on S_5 exhaustively and 200 random S_7 words", 60.0};
    Criterion c4{4, "nonnegative coefficients and monic leading terms across the sweep", 0.0};
    c4.start = c3.start;

    auto check = [&](const CanonicalForm& u, int n) {
        Polynomial direct = schubert_dword_direct(u, n);
        Polynomial p = formula_p(u, n);
        Polynomial q = formula_q(u, n);
        c3.require(direct == p && direct == q,
                   "mismatch at u=" + to_string(u) + " n=" + std::to_string(n));
        for (const auto& [m, coeff] : direct.terms())
            c4.require(coeff >= 0, "negative coefficient at u=" + to_string(u));
        Monomial lead = leading_monomial_formula(u, n);
        c4.require(direct.coefficient(lead) == 1 && direct.leading_monomial() == lead,
                   "leading term not monic at u=" + to_string(u));
    };

    long count = 0;
    verify::for_each_element(5, [&](const CanonicalForm& u) {
        check(u, 5);
        ++count;
    });
    c3.require(count == 120, "S_5 enumeration incomplete");
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) check(verify::random_element(7, rng), 7);

    c3.finish();
    c4.finish();
}

void criterion_5() {
    Criterion c{5, "leading monomials biject onto the 720 staircase monomials of rank six", 30.0};
    std::set<Monomial, TermOrderGreater> seen;
    long count = 0;
    verify::for_each_element(6, [&](const CanonicalForm& u) {
        Monomial w = leading_monomial_formula(u, 6);
        ++count;
        c.require(w.in_staircase(6), "image outside the staircase set at " + to_string(u));
        c.require(seen.insert(w).second, "collision at " + to_string(u));
        c.require(phi_inverse(w, 6) == u, "round trip failed at " + to_string(u));
    });
    c.require(count == 720 && static_cast<long>(seen.size()) == 720, "expected 720 images");
    // |B_x| = 720 independently: count staircase exponent vectors
    long bx = 0;
    std::vector<int> e(5, 0);
    for (;;) {
        ++bx;
        std::size_t i = 0;
        while (i < e.size()) {
            if (e[i] < 6 - static_cast<int>(i) - 1) {
                ++e[i];
                break;
            }
            e[i] = 0;
            ++i;
        }
        if (i == e.size()) break;
    }
    c.require(bx == 720, "staircase set size differs");
    c.finish();
}

void criterion_6() {
    Criterion c{6, "Monk expansion of the degree-one square", 0.0};
    CanonicalForm s2 = rewrite_to_canonical(parse_word("s2"));
    SchubertExpansion e = monk(2, s2);
    c.require(e.size() == 2, "expected two terms");
    CanonicalForm v1 = rewrite_to_canonical(parse_word("s1 s2"));
    CanonicalForm v2 = rewrite_to_canonical(parse_word("s3 s2"));
    c.require(e.coefficient(phi(perm_to_dword(v1, 3), 3)) == 1, "term s1 s2 missing");
    c.require(e.coefficient(phi(perm_to_dword(v2, 4), 4)) == 1, "term s3 s2 missing");
    c.require(reconstruct(e) == parse_polynomial("x1^2 + 2*x1*x2 + x2^2"),
              "reconstruction differs from (x1 + x2)^2");
    c.finish();
}

void criterion_7() {
    Criterion c{7, "degree-one Schubert polynomials through the expansion machinery", 0.0};
    for (int k = 1; k <= 8; ++k) {
        Polynomial got = schubert_of_monomial(Monomial::variable(k));
        c.require(got == sum_of_variables(k), "mismatch at k=" + std::to_string(k));
        SchubertExpansion e = expand_in_schubert_basis(sum_of_variables(k));
        c.require(e.size() == 1 && e.coefficient(Monomial::variable(k)) == 1,
                  "expansion not a single term at k=" + std::to_string(k));
    }
    c.finish();
}

void criterion_8() {
    Criterion c{8, "both structure-constant algorithms on all 576 pairs from S_4", 120.0};
    std::vector<Monomial> indices;
    verify::for_each_element(4, [&](const CanonicalForm& u) { indices.push_back(phi(u, 4)); });
    c.require(indices.size() == 24, "S_4 enumeration incomplete");
    for (const Monomial& a : indices)
        for (const Monomial& b : indices) {
            SchubertExpansion e1 = multiply_alg1(a, b);
            SchubertExpansion e2 = multiply_alg2(a, b);
            c.require(e1 == e2, "algorithms differ at " + to_string(a) + " * " + to_string(b));
            for (const auto& [m, coeff] : e1.terms())
                c.require(coeff >= 0,
                          "negative constant at " + to_string(a) + " * " + to_string(b));
            c.require(reconstruct(e1) == schubert_of_monomial(a) * schubert_of_monomial(b),
                      "reconstruction differs at " + to_string(a) + " * " + to_string(b));
        }
    c.finish();
}

void criterion_9() {
    Criterion c{9, "nilCoxeter and Leibniz property suite, 1000 instances each", 30.0};
    verify::Suite suite = verify::nilcoxeter_suite(1000);
    for (const auto& r : suite) c.require(r.pass, r.name + ": " + r.detail);
    c.finish();
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criteria_3_and_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
