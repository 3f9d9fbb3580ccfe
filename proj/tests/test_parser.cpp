#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fmlimit/emit.hpp"
#include "fmlimit/parser.hpp"

using namespace fmlimit;

namespace {

Expr sym(const std::string& n, int i, int j) { return Expr::from_atom(Atom::sym(n, i, j)); }
Expr gam() { return Expr::from_atom(Atom::gamma()); }

}  // namespace

TEST_CASE("sums and coefficients") {
    ExprAst ast = parse("z[1,1] + 2*w[0,0]*gamma");
    REQUIRE(ast.terms.size() == 2);
    CHECK(ast.terms[0].atoms.size() == 1);
    CHECK(ast.terms[1].coeff == Rational(2));
    CHECK(ast.terms[1].atoms.size() == 2);
    CycleB e = ast_to_cycle(ast, 2);
    CHECK(e == normalize(sym("z", 1, 1) + mul(sym("w", 0, 0), gam(), 2).scaled(Rational(2)), 2));
}

TEST_CASE("operator atoms") {
    ExprAst ast = parse("FB(z[3,1])*gamma^2");
    REQUIRE(ast.terms.size() == 1);
    REQUIRE(ast.terms[0].atoms.size() == 2);
    CHECK(ast.terms[0].atoms[0].kind == AtomAst::Kind::Fb);
    CHECK(ast.terms[0].atoms[1].gamma_power == 2);
    CycleB e = ast_to_cycle(ast, 4);
    CHECK(e == mul(fb(sym("z", 3, 1), 4), pow(gam(), 2, 4), 4));
}

TEST_CASE("inv evaluates by weight parity") {
    CHECK(ast_to_cycle(parse("inv(z[2,1])"), 3) == sym("z", 2, 1).scaled(Rational(-1)));
    CHECK(ast_to_cycle(parse("inv(z[2,0] + z[2,1])"), 3) ==
          normalize(sym("z", 2, 0) - sym("z", 2, 1), 3));
}

TEST_CASE("star atoms need bigraded symbols") {
    CycleB e = ast_to_cycle(parse("star(C[3,0],C[3,1])"), 4);
    CHECK(e == star(Atom::sym("C", 3, 0), Atom::sym("C", 3, 1), 4));
    CHECK_THROWS_AS(parse("star(C,D[1,0])"), GradeError);
}

TEST_CASE("bare rationals are multiples of the fundamental class") {
    CHECK(ast_to_cycle(parse("1"), 2) == Expr::unit());
    CHECK(ast_to_cycle(parse("-5/3"), 2) ==
          Expr::unit().scaled(Rational(BigInt(-5), BigInt(3))));
    CHECK(ast_to_cycle(parse("0"), 2).is_zero());
    CHECK(ast_to_cycle(parse("2 - 2"), 3).is_zero());
}

TEST_CASE("parentheses group subexpressions") {
    CycleB e = ast_to_cycle(parse("(z[1,0] + w[1,0])*gamma"), 3);
    CHECK(e == normalize(mul(sym("z", 1, 0), gam(), 3) + mul(sym("w", 1, 0), gam(), 3), 3));
}

TEST_CASE("positions in parse errors") {
    try {
        parse("z[1]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col >= 4);
        CHECK(std::string(e.what()).find("two indices") != std::string::npos);
    }
    try {
        parse("z + w[1,0]");
        FAIL("expected a grade error");
    } catch (const GradeError& e) {
        CHECK(e.col == 1);
    }
    CHECK_THROWS_AS(parse("z[1,0] @"), ParseError);
    CHECK_THROWS_AS(parse("FB(z[1,0]"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("printed classes parse back to themselves") {
    int d = 4;
    CycleB e = normalize(
        fb(sym("w", 2, 1), d).scaled(Rational(BigInt(-1), BigInt(2))) +
            mul(star(Atom::sym("C", 3, 0), Atom::sym("C", 3, 1), d), gam(), d) +
            Expr::unit().scaled(Rational(7)),
        d);
    std::string text = to_text(e);
    CHECK(ast_to_cycle(parse(text), d) == e);
    CHECK(to_text(Expr::zero()) == "0");
}

TEST_CASE("ast round trip on seeded random trees") {
    // the larger seeded sweep runs in the verify harness; this is a smoke set
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        ExprAst ast;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            TermAst term;
            long long num = 1 + static_cast<long long>(rng() % 9);
            term.coeff = Rational(BigInt(rng() % 2 ? num : -num),
                                  BigInt(1 + static_cast<long long>(rng() % 9)));
            int atoms = static_cast<int>(rng() % 3);
            for (int a = 0; a < atoms; ++a) {
                AtomAst atom;
                switch (rng() % 3) {
                    case 0:
                        atom.kind = AtomAst::Kind::Sym;
                        atom.sym = {"z", static_cast<int>(rng() % 4),
                                    static_cast<int>(rng() % 3) - 1};
                        break;
                    case 1:
                        atom.kind = AtomAst::Kind::Gamma;
                        atom.gamma_power = 1 + static_cast<int>(rng() % 3);
                        break;
                    default: {
                        atom.kind = AtomAst::Kind::Fb;
                        ExprAst inner;
                        TermAst it;
                        it.coeff = Rational(1);
                        AtomAst is;
                        is.kind = AtomAst::Kind::Sym;
                        is.sym = {"w", static_cast<int>(rng() % 3), 0};
                        it.atoms.push_back(is);
                        inner.terms.push_back(it);
                        atom.arg = std::make_shared<ExprAst>(inner);
                    }
                }
                term.atoms.push_back(atom);
            }
            ast.terms.push_back(term);
        }
        std::string text = print_ast(ast);
        CHECK(parse(text) == ast);
    }
}

TEST_CASE("json output shape is schema stable") {
    int g = 2, d = 1;
    LimitResult r = limit_fm_alg(sym("z", 1, 1), sym("w", 0, 0), g);
    nlohmann::ordered_json j = to_json(r);
    CHECK(j["g"] == 2);
    CHECK(j["mode"] == "algebraic");
    CHECK(j["a"].is_array());
    CHECK(j["a"][0]["coeff"] == "1/1");
    CHECK(j["a"][0]["atoms"][0]["kind"] == "FB");
    CHECK(j["b"][0]["coeff"] == "-1/1");
    // rationals are exact strings, never numbers
    for (const auto& term : j["b"]) CHECK(term["coeff"].is_string());
    CHECK(to_json(Expr::zero()).dump() == "[]");
    // byte-stable across repeated emission
    CHECK(to_json(r).dump() == to_json(r).dump());
}

TEST_CASE("latex output in both notations") {
    int d = 4;
    CycleB e = mul(fb(sym("w", 2, 1), d), gam(), d).scaled(Rational(BigInt(1), BigInt(2)));
    std::string short_form = to_latex(e, LatexNotation::Short);
    CHECK(short_form.find("F\\left(") != std::string::npos);
    CHECK(short_form.find("\\gamma") != std::string::npos);
    CHECK(short_form.find("\\tfrac{1}{2}") != std::string::npos);
    std::string paper_form = to_latex(e, LatexNotation::Paper);
    CHECK(paper_form.find("F_B\\left(") != std::string::npos);
    CHECK(paper_form.find("c_1(J)") != std::string::npos);
    LimitResult r = limit_fm_alg(sym("z", 1, 0), Expr::zero(), 2);
    std::string full = to_latex(r);
    CHECK(full.find("\\nu_*") != std::string::npos);
    CHECK(full.find("\\eta") != std::string::npos);
}
