// Command-line surface over the Schubert kernel: compute polynomials by any
// of the three methods, convert between index forms, expand products into
// structure constants, and run the invariant suites.
//
// Exit codes: 0 ok, 2 input error, 3 verification failure.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/all.hpp"

using nlohmann::json;
using namespace schubert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

struct ParsedElement {
    CanonicalForm form;
    bool oneline_input = false;
};

// Index text is sniffed by shape: "i=(...)" canonical form, "[...]" one-line,
// otherwise a generator word (possibly empty).
ParsedElement parse_element(const std::string& text) {
    std::size_t p = 0;
    detail::skip_ws(text, p);
    if (text.compare(p, 3, "i=(") == 0) return {parse_canonical(text), false};
    if (p < text.size() && text[p] == '[') return {from_one_line(parse_one_line(text)), true};
    return {rewrite_to_canonical(parse_word(text)), false};
}

// The divided-difference word naming a Schubert polynomial, under the chosen
// index convention. Returns the word u and the rank n actually used.
std::pair<CanonicalForm, int> resolve_dword(const std::string& text, const std::string& index_by,
                                            int rank_flag) {
    ParsedElement el = parse_element(text);
    if (index_by == "word" && el.oneline_input)
        throw ParseError("one-line input cannot be a divided-difference word", 0);
    bool as_perm = index_by == "perm" || (index_by == "auto" && el.oneline_input);
    CanonicalForm base = el.form.trimmed();
    int n = rank_flag > 0 ? rank_flag : base.rank();
    CanonicalForm u = as_perm ? complement(base, n) : base.widened(n);
    return {u, n};
}

// Any index text as the leading-monomial key: monomials pass through,
// canonical forms and words are divided-difference words, one-line images
// are permutations.
Monomial resolve_monomial_index(const std::string& text) {
    std::size_t p = 0;
    detail::skip_ws(text, p);
    if (text.compare(p, 3, "i=(") == 0) {
        CanonicalForm u = parse_canonical(text);
        return phi(u, u.trimmed().rank());
    }
    if (p < text.size() && text[p] == '[') {
        CanonicalForm w = from_one_line(parse_one_line(text)).trimmed();
        return phi(complement(w, w.rank()), w.rank());
    }
    if (p >= text.size() || text[p] == 's') {
        CanonicalForm u = rewrite_to_canonical(parse_word(text));
        return phi(u, u.trimmed().rank());
    }
    return parse_monomial(text);
}

json coefficient_json(const Int& c) {
    if (c.fits_slong_p()) return json(c.get_si());
    return json(c.get_str());
}

json polynomial_terms_json(const Polynomial& f) {
    std::vector<std::pair<Monomial, Int>> ts(f.terms().begin(), f.terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return display_greater(a.first, b.first); });
    json terms = json::array();
    for (const auto& [m, c] : ts)
        terms.push_back({{"monomial", to_string(m)}, {"coefficient", coefficient_json(c)}});
    return terms;
}

// One line per term, in decreasing order of the leading-monomial key:
// coefficient, monomial, divided-difference word, one-line permutation.
void print_expansion(const SchubertExpansion& e, const std::string& input,
                     const std::string& method, bool as_json) {
    int n = e.ambient_rank();
    if (as_json) {
        json terms = json::array();
        for (const auto& [m, c] : e.terms()) {
            CanonicalForm u = phi_inverse(m, n);
            terms.push_back({{"index_word", to_string(u)},
                             {"index_oneline", to_string(to_one_line(dword_to_perm(u, n), n))},
                             {"monomial", to_string(m)},
                             {"coefficient", coefficient_json(c)}});
        }
        json out = {{"input", input}, {"method", method}, {"rank", n}, {"terms", terms}};
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "n=" << n << "\n";
    for (const auto& [m, c] : e.terms()) {
        CanonicalForm u = phi_inverse(m, n);
        std::cout << c.get_str() << "  " << to_string(m) << "  " << to_string(u) << "  "
                  << to_string(to_one_line(dword_to_perm(u, n), n)) << "\n";
    }
}

int env_rank_cap() {
    const char* v = std::getenv("SCHUBERT_MAX_RANK");
    if (v == nullptr) return 6;
    int cap = std::atoi(v);
    return cap >= 1 ? cap : 6;
}

int run_suites(const std::string& which, int rank_flag, int instances) {
    int cap = env_rank_cap();
    auto capped = [&](int preferred) {
        return std::min(rank_flag > 0 ? rank_flag : preferred, cap);
    };
    verify::Suite all;
    auto append = [&](const verify::Suite& s) { all.insert(all.end(), s.begin(), s.end()); };

    if (which.empty() || which == "rewrite") append(verify::rewrite_suite(capped(6)));
    if (which.empty() || which == "nilcoxeter") append(verify::nilcoxeter_suite(instances));
    if (which.empty() || which == "formulas") append(verify::formulas_suite(capped(4)));
    if (which.empty() || which == "bijection") append(verify::bijection_suite(capped(5)));
    if (which.empty() || which == "structure") append(verify::structure_suite(capped(4)));

    bool ok = true;
    for (const auto& r : all) {
        if (r.pass)
            std::cout << "pass  " << r.name << " (" << r.cases << " cases)\n";
        else {
            std::cout << "FAIL  " << r.name << ": " << r.detail << "\n";
            ok = false;
        }
    }
    return ok ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert polynomial kernel"};
    app.require_subcommand(1);

    std::string arg_index, arg_index2, arg_poly, arg_suite;
    std::string opt_method = "direct";
    std::string opt_mul_method = "1";
    std::string opt_index_by = "auto";
    int opt_rank = 0;
    int opt_k = 1;
    int opt_instances = 1000;
    bool opt_json = false;
    bool opt_verify = false;

    auto* cmd_nf = app.add_subcommand("normal-form", "Rewrite a generator word to normal form");
    cmd_nf->add_option("word", arg_index, "word, e.g. \"s5 s4 s3 s5 s4\"");
    cmd_nf->add_option("-n,--rank", opt_rank, "ambient rank");
    cmd_nf->add_flag("--json", opt_json);

    auto* cmd_sch = app.add_subcommand("schubert", "Evaluate a Schubert polynomial");
    cmd_sch->add_option("index", arg_index, "word, canonical form or one-line index")->required();
    cmd_sch->add_option("--method", opt_method, "direct|P|Q")
        ->check(CLI::IsMember({"direct", "P", "Q", "p", "q"}));
    cmd_sch->add_option("--index-by", opt_index_by, "word|perm|auto")
        ->check(CLI::IsMember({"word", "perm", "auto"}));
    cmd_sch->add_option("-n,--rank", opt_rank, "ambient rank (default: minimal)");
    cmd_sch->add_flag("--verify", opt_verify, "run all three methods and compare");
    cmd_sch->add_flag("--json", opt_json);

    auto* cmd_lead = app.add_subcommand(
        "leading-monomial", "Closed-form leading monomial of a Schubert polynomial");
    cmd_lead->add_option("index", arg_index)->required();
    cmd_lead->add_option("--index-by", opt_index_by)
        ->check(CLI::IsMember({"word", "perm", "auto"}));
    cmd_lead->add_option("-n,--rank", opt_rank);
    cmd_lead->add_flag("--json", opt_json);

    auto* cmd_phi = app.add_subcommand("phi", "The leading-monomial bijection");
    cmd_phi->add_option("index", arg_index)->required();
    cmd_phi->add_option("--index-by", opt_index_by)
        ->check(CLI::IsMember({"word", "perm", "auto"}));
    cmd_phi->add_option("-n,--rank", opt_rank);
    cmd_phi->add_flag("--json", opt_json);

    auto* cmd_phiinv = app.add_subcommand("phi-inverse", "Invert the leading-monomial bijection");
    cmd_phiinv->add_option("monomial", arg_poly, "staircase monomial, e.g. \"x3*x4\"")->required();
    cmd_phiinv->add_option("-n,--rank", opt_rank);
    cmd_phiinv->add_flag("--json", opt_json);

    auto* cmd_monk = app.add_subcommand("monk", "Degree-one product expansion");
    cmd_monk->add_option("-k", opt_k, "variable index")->required();
    cmd_monk->add_option("perm", arg_index, "permutation index")->required();
    cmd_monk->add_flag("--json", opt_json);

    auto* cmd_mul = app.add_subcommand("multiply", "Expand a product of Schubert polynomials");
    cmd_mul->add_option("a", arg_index)->required();
    cmd_mul->add_option("b", arg_index2)->required();
    cmd_mul->add_option("--method", opt_mul_method, "1|2")->check(CLI::IsMember({"1", "2"}));
    cmd_mul->add_flag("--verify", opt_verify, "run both algorithms and compare");
    cmd_mul->add_flag("--json", opt_json);

    auto* cmd_exp = app.add_subcommand("expand", "Expand a polynomial in the Schubert basis");
    cmd_exp->add_option("polynomial", arg_poly, "e.g. \"x1^2 + 2*x1*x2 + x2^2\"")->required();
    cmd_exp->add_flag("--json", opt_json);

    auto* cmd_ver = app.add_subcommand("verify", "Run the invariant suites");
    cmd_ver->add_option("--suite", arg_suite, "rewrite|nilcoxeter|formulas|bijection|structure")
        ->check(CLI::IsMember({"rewrite", "nilcoxeter", "formulas", "bijection", "structure"}));
    cmd_ver->add_option("-n,--rank", opt_rank, "maximum rank for exhaustive sweeps");
    cmd_ver->add_option("--instances", opt_instances, "randomized instances per property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (cmd_nf->parsed()) {
            Word w = parse_word(arg_index, opt_rank);
            CanonicalForm a = rewrite_to_canonical(w);
            if (opt_json) {
                json out = {{"input", arg_index},
                            {"rank", a.rank()},
                            {"canonical", to_string(a)},
                            {"one_line", to_string(to_one_line(a))},
                            {"length", a.length()},
                            {"reduced", static_cast<long>(w.size()) == a.length()}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << to_string(a) << "\n";
            }
            return kExitOk;
        }

        if (cmd_sch->parsed()) {
            auto [u, n] = resolve_dword(arg_index, opt_index_by, opt_rank);
            std::string method = opt_method == "p" ? "P" : opt_method == "q" ? "Q" : opt_method;
            Polynomial direct, p, q;
            if (opt_verify || method == "direct") direct = schubert_dword_direct(u, n);
            if (opt_verify || method == "P") p = formula_p(u, n);
            if (opt_verify || method == "Q") q = formula_q(u, n);
            if (opt_verify && !(direct == p && direct == q)) {
                std::cerr << "verification mismatch for " << to_string(u) << " at rank " << n
                          << "\n";
                return kExitMismatch;
            }
            const Polynomial& result = method == "P" ? p : method == "Q" ? q : direct;
            if (opt_json) {
                json out = {{"input", arg_index},
                            {"method", method},
                            {"rank", n},
                            {"index_word", to_string(u)},
                            {"terms", polynomial_terms_json(result)}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "n=" << n << "\n" << to_string(result) << "\n";
            }
            return kExitOk;
        }

        if (cmd_lead->parsed() || cmd_phi->parsed()) {
            auto [u, n] = resolve_dword(arg_index, opt_index_by, opt_rank);
            Monomial lead = leading_monomial_formula(u, n);
            if (opt_json) {
                json out = {{"input", arg_index},
                            {"rank", n},
                            {"index_word", to_string(u)},
                            {"monomial", to_string(lead)}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "n=" << n << "\n" << to_string(lead) << "\n";
            }
            return kExitOk;
        }

        if (cmd_phiinv->parsed()) {
            Monomial w = parse_monomial(arg_poly);
            int n = opt_rank > 0 ? opt_rank : w.min_staircase_rank();
            CanonicalForm u = phi_inverse(w, n);
            if (opt_json) {
                json out = {{"input", arg_poly},
                            {"rank", n},
                            {"index_word", to_string(u)},
                            {"index_oneline", to_string(to_one_line(dword_to_perm(u, n), n))},
                            {"monomial", to_string(w)}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "n=" << n << "\n" << to_string(u) << "\n";
            }
            return kExitOk;
        }

        if (cmd_monk->parsed()) {
            CanonicalForm w = parse_element(arg_index).form;
            SchubertExpansion e = monk(opt_k, w);
            print_expansion(e, "monk(" + std::to_string(opt_k) + ", " + arg_index + ")", "monk",
                            opt_json);
            return kExitOk;
        }

        if (cmd_mul->parsed()) {
            Monomial a = resolve_monomial_index(arg_index);
            Monomial b = resolve_monomial_index(arg_index2);
            SchubertExpansion e1, e2;
            bool want1 = opt_verify || opt_mul_method == "1";
            bool want2 = opt_verify || opt_mul_method == "2";
            if (want1) e1 = multiply_alg1(a, b);
            if (want2) e2 = multiply_alg2(a, b);
            if (opt_verify && !(e1 == e2)) {
                std::cerr << "algorithm mismatch for " << to_string(a) << " * " << to_string(b)
                          << "\n";
                return kExitMismatch;
            }
            print_expansion(opt_mul_method == "2" ? e2 : e1,
                            to_string(a) + " * " + to_string(b), opt_mul_method, opt_json);
            return kExitOk;
        }

        if (cmd_exp->parsed()) {
            Polynomial f = parse_polynomial(arg_poly);
            print_expansion(expand_in_schubert_basis(f), arg_poly, "expand", opt_json);
            return kExitOk;
        }

        if (cmd_ver->parsed()) return run_suites(arg_suite, opt_rank, opt_instances);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
