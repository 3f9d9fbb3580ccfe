#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fmlimit/limit.hpp"

using namespace fmlimit;

namespace {

Expr sym(const std::string& n, int i, int j) { return Expr::from_atom(Atom::sym(n, i, j)); }
Expr gam() { return Expr::from_atom(Atom::gamma()); }

}  // namespace

TEST_CASE("zero input gives zero limit on every route") {
    for (int g = 1; g <= 4; ++g) {
        LimitResult closed = limit_fm_closed(Expr::zero(), Expr::zero(), g);
        LimitResult direct = limit_fm_direct(Expr::zero(), Expr::zero(), g);
        LimitResult alg = limit_fm_alg(Expr::zero(), Expr::zero(), g);
        CHECK(closed.a.is_zero());
        CHECK(closed.b.is_zero());
        CHECK(direct.same_class(closed));
        CHECK(alg.a.is_zero());
        CHECK(alg.b.is_zero());
    }
}

TEST_CASE("hand-expanded g = 2 closed formula") {
    // only the (0,0) summand and the w.gamma correction survive truncation:
    // a = fb(w), b = -fb(z) - 1/2 fb(w.gamma)
    int g = 2, d = 1;
    CycleB z = sym("z", 1, 1), w = sym("w", 0, 0);
    LimitResult r = limit_fm_closed(z, w, g);
    CHECK(r.a == fb(w, d));
    CycleB want_b =
        normalize(fb(z, d).scaled(Rational(-1)) +
                      fb(mul(w, gam(), d), d).scaled(Rational(BigInt(-1), BigInt(2))),
                  d);
    CHECK(r.b == want_b);
    CHECK(limit_fm_direct(z, w, g).same_class(r));
}

TEST_CASE("algebraic limit is the Fourier pair") {
    int g = 3, d = 2;
    CycleB z = sym("z", 1, 0), w = sym("w", 2, 1);
    LimitResult alg = limit_fm_alg(z, w, g);
    CHECK(alg.a == fb(w, d));
    CHECK(alg.b == fb(z, d).scaled(Rational(-1)));
    CHECK(limit_fm_alg(z, Expr::zero(), g).a.is_zero());
    CHECK(limit_fm_alg(Expr::zero(), w, g).b.is_zero());
    // gamma-carrying input is killed first, so the result has no gamma
    LimitResult alg2 = limit_fm_alg(mul(z, gam(), d), w, g);
    CHECK(alg2.b.is_zero());
}

TEST_CASE("relative dimension one: the base is a point") {
    int g = 1;
    CycleB z = Expr::unit().scaled(Rational(BigInt(3), BigInt(2)));
    CycleB w = Expr::unit().scaled(Rational(5));
    LimitResult direct = limit_fm_direct(z, w, g);
    LimitResult closed = limit_fm_closed(z, w, g);
    CHECK(direct.same_class(closed));
    // on a point the transform atom is the only structure left:
    // (a, b) = (5 FB(1), -3/2 FB(1))
    CycleB fb_unit = fb(Expr::unit(), 0);
    CHECK(direct.a == fb_unit.scaled(Rational(5)));
    CHECK(direct.b == fb_unit.scaled(Rational(BigInt(-3), BigInt(2))));
}

TEST_CASE("closed equals direct on mixed multi-term input") {
    int g = 3, d = 2;
    CycleB z = normalize(sym("z", 1, 1) + mul(sym("z", 1, 0), gam(), d).scaled(Rational(2)), d);
    CycleB w = normalize(sym("w", 2, 2) - sym("w", 0, 0).scaled(Rational(BigInt(1), BigInt(3))), d);
    LimitResult closed = limit_fm_closed(z, w, g);
    LimitResult direct = limit_fm_direct(z, w, g);
    CHECK(direct.same_class(closed));
    LimitResult slow = limit_fm_direct(z, w, g, {.literal_kernel = true});
    CHECK(slow.same_class(closed));
}

TEST_CASE("closed equals direct on random compound classes") {
    std::mt19937_64 rng(55);
    auto soup = [&](int d) {
        Expr e;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Term term{Rational(static_cast<long long>(rng() % 9) - 4), {}};
            int syms = static_cast<int>(rng() % 3);
            for (int s = 0; s < syms; ++s)
                term.atoms.push_back(Atom::sym("s", static_cast<int>(rng() % (d + 1)),
                                               static_cast<int>(rng() % 4)));
            if (rng() % 2) term.atoms.push_back(Atom::gamma());
            if (rng() % 3 == 0) {
                AtomVec arg{Atom::sym("t", static_cast<int>(rng() % (d + 1)),
                                      static_cast<int>(rng() % 2))};
                term.atoms.push_back(Atom::fb(std::move(arg), d));
            }
            e.push_term(std::move(term));
        }
        return normalize(e, d);
    };
    for (int rep = 0; rep < 60; ++rep) {
        int g = 1 + static_cast<int>(rng() % 4);
        int d = g - 1;
        CycleB z = soup(d), w = soup(d);
        LimitResult closed = limit_fm_closed(z, w, g);
        CHECK(limit_fm_direct(z, w, g).same_class(closed));
        CHECK(kill_gamma(closed).same_class(limit_fm_alg(z, w, g)));
    }
}

TEST_CASE("gamma kill") {
    int d = 3;
    CycleB w = sym("w", 1, 0);
    CycleB x = normalize(fb(w, d) + mul(fb(mul(w, gam(), d), d), gam(), d), d);
    CHECK(kill_gamma(x, d) == fb(w, d));
    CHECK(kill_gamma(Expr::zero(), d).is_zero());
    CHECK(kill_gamma(kill_gamma(x, d), d) == kill_gamma(x, d));
}

TEST_CASE("gamma kill collapses the closed formula to the algebraic one") {
    for (int g = 1; g <= 4; ++g)
        for (int i = 0; i <= g - 1; ++i)
            for (int k = 0; k <= g - 1; ++k) {
                CycleB z = sym("z", i, std::min(i, 1)), w = sym("w", k, 0);
                CHECK(kill_gamma(limit_fm_closed(z, w, g)).same_class(limit_fm_alg(z, w, g)));
            }
}

TEST_CASE("only the first summand of the closed formula survives gamma kill") {
    int g = 3, d = 2;
    CycleB z = sym("z", 1, 1), w = sym("w", 1, 0);
    LimitResult alg = limit_fm_alg(z, w, g);
    for (int n = 0; n <= 2 * g - 2; ++n)
        for (int m = 0; m <= n; ++m) {
            auto [ta, tb] = closed_formula_term(z, w, g, n, m);
            CHECK(kill_gamma(ta, d).is_zero());
            if (n == 0 && m == 0)
                CHECK(kill_gamma(tb, d) == alg.b);
            else
                CHECK(kill_gamma(tb, d).is_zero());
        }
}

TEST_CASE("double transform consistency") {
    // (z, w) = (1, 1) at g = 1: two applications give (-1).(inv z, inv w)
    CHECK(double_transform_check(Expr::unit(), Expr::unit(), 1));
    for (int g = 1; g <= 6; ++g)
        for (int i = 0; i <= g - 1; ++i)
            for (int j = 0; j <= std::min(i, 3); ++j)
                CHECK(double_transform_check(sym("z", i, j), sym("w", g - 1 - i, 0), g));
    CHECK(double_transform_check(Expr::zero(), Expr::zero(), 4));
}

TEST_CASE("truncation stability of both routes") {
    int g = 3;
    CycleB z = sym("z", 2, 1), w = sym("w", 1, 1);
    LimitResult closed = limit_fm_closed(z, w, g);
    CHECK(limit_fm_closed(z, w, g, 2).same_class(closed));
    LimitResult direct = limit_fm_direct(z, w, g);
    CHECK(limit_fm_direct(z, w, g, {.exp_slack = 2}).same_class(direct));
}

TEST_CASE("weight parts split the limit") {
    int g = 5, d = 4;
    CycleB z = normalize(sym("z", 3, 0) + sym("z", 3, 1), d);
    LimitResult alg = limit_fm_alg(z, Expr::zero(), g);
    CHECK(normalize(weight_part(alg.b, 0) + weight_part(alg.b, 1), d) == alg.b);
    CHECK(weight_part(alg.b, 0) == fb(sym("z", 3, 0), d).scaled(Rational(-1)));
}

namespace {

// gamma count of a term, including gammas buried in Fourier arguments
int gamma_count(const AtomVec& atoms) {
    int n = 0;
    for (const Atom& a : atoms) {
        if (a.kind() == Atom::Kind::Gamma) ++n;
        n += gamma_count(a.args());
    }
    return n;
}

}  // namespace

TEST_CASE("limit weights are the input weight plus one per inserted gamma") {
    for (int g = 2; g <= 4; ++g)
        for (int j = 0; j <= 1; ++j) {
            CycleB z = sym("z", g - 1, j), w = sym("w", std::max(g - 2, j), j);
            LimitResult r = limit_fm_closed(z, w, g);
            for (const Expr* part : {&r.a, &r.b})
                for (const Term& t : part->terms())
                    CHECK(term_bigrade(t).weight == j + gamma_count(t.atoms));
        }
}

TEST_CASE("nstar at zero") {
    CHECK(nstar(0, sym("z", 1, 0)).is_zero());          // 0^2 = 0
    CHECK(nstar(0, Expr::unit()) == Expr::unit());      // 0^0 = 1
    CHECK_THROWS_AS(nstar(0, sym("z", 0, 1)), DomainError);
}

TEST_CASE("beauville specialization rows") {
    int g = 4;
    std::vector<WeightedClass> zs{{0, sym("pt", 3, 0)}};
    std::vector<WeightedClass> ws{{0, sym("c", 2, 0)}, {1, sym("c", 2, 1)}, {2, sym("c", 2, 2)}};
    auto rows = beauville_specialize(zs, ws, g);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].weight == 0);
    CHECK(rows[0].z == sym("pt", 3, 0));
    CHECK(rows[0].w == sym("c", 2, 0));
    CHECK(rows[1].z.is_zero());
    CHECK(rows[1].w == sym("c", 2, 1));
    CHECK(rows[2].z.is_zero());
    for (const BeauvilleRow& row : rows) CHECK(beauville_roundtrip_ok(row, g));
}

TEST_CASE("beauville rejects misdeclared weights") {
    std::vector<WeightedClass> bad{{1, sym("z", 2, 0)}};
    CHECK_THROWS_AS(beauville_specialize(bad, {}, 4), WeightMismatchError);
    // non-homogeneous component under one declared weight
    std::vector<WeightedClass> mixed{{0, sym("z", 2, 0) + sym("z", 2, 1)}};
    CHECK_THROWS_AS(beauville_specialize(mixed, {}, 4), WeightMismatchError);
}

TEST_CASE("single-component specialization is the identity") {
    int g = 3;
    std::vector<WeightedClass> zs{{0, sym("z", 1, 0)}};
    std::vector<WeightedClass> ws{{0, sym("w", 2, 0)}};
    auto rows = beauville_specialize(zs, ws, g);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].z == sym("z", 1, 0));
    CHECK(rows[0].w == sym("w", 2, 0));
}

TEST_CASE("cubic threefold demo reproduces the published displays") {
    CubicThreefoldDemo demo = demo_cubic_threefold();
    int d = demo.g - 1;
    CHECK(demo.weight1_matches);
    CHECK(demo.weight1_nonzero);
    // phi0 itself: a = fb(w), b = -fb(C0) - fb(C1)
    CHECK(demo.phi0.b ==
          normalize(fb(demo.curve_even, d).scaled(Rational(-1)) +
                        fb(demo.curve_odd, d).scaled(Rational(-1)),
                    d));
    // and the weight bookkeeping of the displayed factors
    CHECK(term_bigrade(fb(demo.curve_even, d).terms()[0]) == Bigrade{1, 0});
    CHECK(term_bigrade(fb(demo.curve_odd, d).terms()[0]) == Bigrade{2, 1});
    CHECK(term_bigrade(demo.expected_w1_a.terms()[0]) == Bigrade{3, 1});
}

TEST_CASE("nodal curve demo reproduces the two-case table") {
    NodalCurveDemo demo = demo_nodal_curve();
    CHECK(demo.table_matches);
    REQUIRE(demo.rows.size() == 3);
    CHECK(demo.rows[0].z == demo.point_class);
    for (size_t i = 1; i < demo.rows.size(); ++i) CHECK(demo.rows[i].z.is_zero());
}
