#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schubert/expansion.hpp"
#include "schubert/verify.hpp"

#include "oracles.hpp"

using namespace schubert;

TEST_CASE("index conversion") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(dword_to_perm(CanonicalForm::identity(n), n) == longest_element(n));
        CHECK(dword_to_perm(longest_element(n), n).is_identity());
        CHECK(perm_to_dword(longest_element(n), n).is_identity());
    }
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        CanonicalForm u = verify::random_element(5, rng);
        CanonicalForm w = dword_to_perm(u, 5);
        CHECK(perm_to_dword(w, 5) == u);
        // both index routes name the same polynomial
        CHECK(schubert_direct(w, 5) == schubert_dword_direct(u, 5));
    }
    CHECK_THROWS_AS(dword_to_perm(longest_element(5), 4), std::invalid_argument);
}

TEST_CASE("Monk expansion of the published product") {
    // S_{s_2} * S_{s_2} = S_{s_1 s_2} + S_{s_3 s_2}
    CanonicalForm s2 = rewrite_to_canonical(parse_word("s2"));
    SchubertExpansion e = monk(2, s2);
    CHECK(e.size() == 2);

    CanonicalForm v1 = rewrite_to_canonical(parse_word("s1 s2"));
    CanonicalForm v2 = rewrite_to_canonical(parse_word("s3 s2"));
    Monomial k1 = leading_monomial_formula(perm_to_dword(v1, 3), 3);
    Monomial k2 = leading_monomial_formula(perm_to_dword(v2, 4), 4);
    CHECK(e.coefficient(k1) == 1);
    CHECK(e.coefficient(k2) == 1);

    // and the reconstruction is exactly (x1 + x2)^2
    CHECK(reconstruct(e) == parse_polynomial("x1^2 + 2*x1*x2 + x2^2"));
}

TEST_CASE("Monk base cases") {
    for (int k = 1; k <= 5; ++k) {
        SchubertExpansion e = monk(k, CanonicalForm::identity(2));
        CHECK(e.size() == 1);
        // the only term is the adjacent transposition t_{k,k+1} = s_k
        CanonicalForm sk = rewrite_to_canonical(Word({k}));
        CHECK(e.coefficient(leading_monomial_formula(perm_to_dword(sk, k + 1), k + 1)) == 1);
    }
}

TEST_CASE("Monk against polynomial multiplication over S_4") {
    Polynomial xsum;
    for (int k = 1; k <= 3; ++k) {
        xsum += Polynomial::variable(k);
        verify::for_each_element(4, [&](const CanonicalForm& w) {
            Polynomial lhs = reconstruct(monk(k, w));
            Polynomial rhs = xsum * schubert_direct(w, 6);
            CHECK(lhs == rhs);
        });
    }
}

TEST_CASE("expansion of plain polynomials") {
    CHECK(expand_in_schubert_basis(Polynomial()).empty());

    // a Schubert polynomial expands to itself
    SchubertExpansion self = expand_in_schubert_basis(schubert_of_monomial(parse_monomial("x2*x3")));
    CHECK(self.size() == 1);
    CHECK(self.coefficient(parse_monomial("x2*x3")) == 1);

    // x1^2 is already a Schubert polynomial
    SchubertExpansion sq = expand_in_schubert_basis(parse_polynomial("x1^2"));
    CHECK(sq.size() == 1);
    CHECK(sq.coefficient(parse_monomial("x1^2")) == 1);
    CHECK(schubert_of_monomial(parse_monomial("x1^2")) == parse_polynomial("x1^2"));

    // (x1 + x2)^2 = S_{x1 x2} + S_{x2^2}
    SchubertExpansion e = expand_in_schubert_basis(parse_polynomial("x1^2 + 2*x1*x2 + x2^2"));
    CHECK(e.size() == 2);
    CHECK(e.coefficient(parse_monomial("x1*x2")) == 1);
    CHECK(e.coefficient(parse_monomial("x2^2")) == 1);
    CHECK(schubert_of_monomial(parse_monomial("x2^2")) ==
          parse_polynomial("x1^2 + x1*x2 + x2^2"));

    // non-homogeneous input reconstructs exactly
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f;
        for (int t = 0; t < 4; ++t)
            f.add_term(verify::random_staircase_monomial(5, rng),
                       std::uniform_int_distribution<int>(-5, 5)(rng));
        CHECK(reconstruct(expand_in_schubert_basis(f)) == f);
    }
}

TEST_CASE("degree-one Schubert polynomials") {
    for (int k = 1; k <= 8; ++k) {
        Polynomial expect;
        for (int i = 1; i <= k; ++i) expect += Polynomial::variable(i);
        CHECK(schubert_of_monomial(Monomial::variable(k)) == expect);
    }
}

TEST_CASE("algorithm one basics") {
    // multiplying by the identity passes the other factor through
    SchubertExpansion e = multiply_alg1(Monomial::one(), parse_monomial("x2^2"));
    CHECK(e.size() == 1);
    CHECK(e.coefficient(parse_monomial("x2^2")) == 1);

    // the Monk example through the general algorithm
    SchubertExpansion m = multiply_alg1(Monomial::variable(2), Monomial::variable(2));
    CHECK(m == monk_of_monomial(2, Monomial::variable(2)));

    // the top term is the product of the two indices, with coefficient one
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        Monomial a = phi(verify::random_element(4, rng), 4);
        Monomial b = phi(verify::random_element(4, rng), 4);
        SchubertExpansion prod = multiply_alg1(a, b);
        CHECK(prod.coefficient(a * b) == 1);
        for (const auto& [w, c] : prod.terms()) {
            CHECK(c > 0);
            CHECK(!term_order_less(a * b, w));
        }
    }
}

TEST_CASE("algorithm two base cases") {
    SchubertExpansion e = multiply_alg2(Monomial::variable(1), Monomial::variable(1));
    CHECK(e.size() == 1);
    CHECK(e.coefficient(parse_monomial("x1^2")) == 1);

    CHECK(multiply_alg2(Monomial::variable(2), Monomial::variable(2)) ==
          monk_of_monomial(2, Monomial::variable(2)));

    // pure x_1 powers split off exactly
    CHECK(multiply_alg2(parse_monomial("x1^3"), parse_monomial("x1^2")).size() == 1);
}

TEST_CASE("the algorithms agree on all of S_3 x S_3") {
    std::vector<Monomial> indices;
    verify::for_each_element(3, [&](const CanonicalForm& u) { indices.push_back(phi(u, 3)); });
    for (const Monomial& a : indices)
        for (const Monomial& b : indices) {
            SchubertExpansion e1 = multiply_alg1(a, b);
            SchubertExpansion e2 = multiply_alg2(a, b);
            SchubertExpansion e2l = multiply_alg2(a, b, PivotChoice::LargestVariable);
            CHECK(e1 == e2);
            CHECK(e1 == e2l);
            CHECK(e1 == multiply_alg1(b, a));
            CHECK(reconstruct(e1) == schubert_of_monomial(a) * schubert_of_monomial(b));
            int dsum = a.total_degree() + b.total_degree();
            for (const auto& [w, c] : e1.terms()) {
                CHECK(c > 0);
                CHECK(w.total_degree() == dsum);
            }
        }
}

TEST_CASE("the algorithms agree on random pairs from S_5") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        Monomial a = phi(verify::random_element(5, rng), 5);
        Monomial b = phi(verify::random_element(5, rng), 5);
        CHECK(multiply_alg1(a, b) == multiply_alg2(a, b));
    }
}

TEST_CASE("Grassmannian products match the Littlewood-Richardson rule") {
    // Single-descent indices multiply like Schur polynomials. In three
    // variables the lead of s_lambda is x1^{l3} x2^{l2} x3^{l1}.
    SchubertExpansion a = multiply_alg1(parse_monomial("x2*x3^2"), Monomial::variable(3));
    CHECK(a.size() == 3); // (2,1)*(1) = (3,1) + (2,2) + (2,1,1)
    CHECK(a.coefficient(parse_monomial("x2*x3^3")) == 1);
    CHECK(a.coefficient(parse_monomial("x2^2*x3^2")) == 1);
    CHECK(a.coefficient(parse_monomial("x1*x2*x3^2")) == 1);

    SchubertExpansion b = multiply_alg2(parse_monomial("x2*x3^2"), parse_monomial("x2*x3^2"));
    CHECK(b.size() == 5); // (2,1)^2 = (4,2) + (4,1,1) + (3,3) + 2(3,2,1) + (2,2,2)
    CHECK(b.coefficient(parse_monomial("x2^2*x3^4")) == 1);
    CHECK(b.coefficient(parse_monomial("x1*x2*x3^4")) == 1);
    CHECK(b.coefficient(parse_monomial("x2^3*x3^3")) == 1);
    CHECK(b.coefficient(parse_monomial("x1*x2^2*x3^3")) == 2);
    CHECK(b.coefficient(parse_monomial("x1^2*x2^2*x3^2")) == 1);
}

TEST_CASE("library self-check suites pass") {
    for (const auto& result :
         {verify::rewrite_suite(5), verify::nilcoxeter_suite(200), verify::formulas_suite(4),
          verify::bijection_suite(5), verify::structure_suite(4)})
        for (const auto& property : result) {
            INFO(property.name, ": ", property.detail);
            CHECK(property.pass);
        }
}
