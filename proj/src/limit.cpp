#include "fmlimit/limit.hpp"

#include <algorithm>
#include <map>

namespace fmlimit {

namespace {

Rational parity_sign(int k) { return Rational((k % 2 + 2) % 2 == 0 ? 1 : -1); }

CycleB gamma_b() { return Expr::from_atom(Atom::gamma()); }

}  // namespace

std::pair<CycleB, CycleB> closed_formula_term(const CycleB& z, const CycleB& w, int g, int n,
                                              int m) {
    int d = g - 1;
    Rational coeff = parity_sign(m) * Rational::factorial_inverse(static_cast<unsigned>(n + 2));
    CycleB wg = mul(w, gamma_b(), d);
    CycleB gm = pow(gamma_b(), static_cast<unsigned>(m), d);

    CycleB a_arg = mul(normalize(z + wg, d), gm, d);
    CycleB a = mul(fb(a_arg, d), pow(gamma_b(), static_cast<unsigned>(n - m + 1), d), d)
                   .scaled(coeff);

    CycleB b_inner = normalize(z.scaled(parity_sign(n + 1) - Rational(1)) - wg, d);
    CycleB b = mul(fb(mul(b_inner, gm, d), d), pow(gamma_b(), static_cast<unsigned>(n - m), d), d)
                   .scaled(coeff);
    return {normalize(a, d), normalize(b, d)};
}

LimitResult limit_fm_closed(const CycleB& z, const CycleB& w, int g, int n_slack) {
    int d = g - 1;
    CycleB a = fb(w, d);
    CycleB b;
    for (int n = 0; n <= 2 * g - 2 + n_slack; ++n)
        for (int m = 0; m <= n; ++m) {
            auto [ta, tb] = closed_formula_term(z, w, g, n, m);
            a = a + ta;
            b = b + tb;
        }
    return {normalize(a, d), normalize(b, d), LimitMode::Rational, g, LimitRoute::Closed};
}

LimitResult limit_fm_alg(const CycleB& z, const CycleB& w, int g) {
    int d = g - 1;
    return {fb(kill_gamma(w, d), d), fb(kill_gamma(z, d), d).scaled(Rational(-1)),
            LimitMode::Algebraic, g, LimitRoute::Closed};
}

LimitResult limit_fm_direct(const CycleB& z, const CycleB& w, int g, DirectOptions opt) {
    int d = g - 1;
    CyclePP x = p1_pull({normalize(z, d), normalize(w, d)});

    CycleV integrand;
    if (!opt.literal_kernel) {
        CyclePP kernel;
        kernel.c[0][0] = exp_ell(d, opt.exp_slack);
        CycleV pulled;
        pulled.main = mul(kernel, x, d);
        integrand = mul(exp_minus_e(g, opt.exp_slack), pulled, d);
    } else {
        // exponentiate tau*(qxq)*ell - E12 - E21 by raw powers on the fibre
        CycleV divisor;
        divisor.main.c[0][0] = Expr::from_atom(Atom::ell());
        divisor.e12.b = Expr::unit().scaled(Rational(-1));
        divisor.e21.b = Expr::unit().scaled(Rational(-1));
        CycleV expd;
        expd.main.c[0][0] = Expr::unit();
        CycleV power = expd;  // divisor^0
        for (int n = 1; n <= 2 * g + opt.exp_slack; ++n) {
            power = mul(power, divisor, d);
            expd = add(expd, scaled(power, Rational::factorial_inverse(static_cast<unsigned>(n))));
        }
        CycleV pulled;
        pulled.main = x;
        integrand = mul(expd, pulled, d);
    }
    CycleP out = p2_push(tau_push(integrand, d), d);
    return {out.z, out.w, LimitMode::Rational, g, LimitRoute::Direct};
}

namespace {

bool atom_has_gamma(const Atom& a) {
    if (a.kind() == Atom::Kind::Gamma) return true;
    for (const Atom& x : a.args())
        if (atom_has_gamma(x)) return true;
    return false;
}

}  // namespace

CycleB kill_gamma(const CycleB& x, int d) {
    Expr r;
    for (const Term& t : x.terms()) {
        bool keep = true;
        for (const Atom& a : t.atoms)
            if (atom_has_gamma(a)) {
                keep = false;
                break;
            }
        if (keep) r.push_term(t);
    }
    return normalize(r, d);
}

LimitResult kill_gamma(const LimitResult& r) {
    int d = r.g - 1;
    return {kill_gamma(r.a, d), kill_gamma(r.b, d), LimitMode::Algebraic, r.g, r.route};
}

bool double_transform_check(const CycleB& z, const CycleB& w, int g) {
    int d = g - 1;
    LimitResult once = limit_fm_alg(z, w, g);
    LimitResult twice = limit_fm_alg(once.a, once.b, g);
    Rational s = parity_sign(g);
    return twice.a == normalize(inv(normalize(z, d)).scaled(s), d) &&
           twice.b == normalize(inv(normalize(w, d)).scaled(s), d);
}

CycleB weight_part(const CycleB& x, int j) {
    Expr r;
    for (const Term& t : x.terms())
        if (term_bigrade(t).weight == j) r.push_term(t);
    return r;
}

std::vector<BeauvilleRow> beauville_specialize(const std::vector<WeightedClass>& z_parts,
                                               const std::vector<WeightedClass>& w_parts, int g) {
    int d = g - 1;
    auto check = [&](const WeightedClass& c) {
        CycleB v = normalize(c.value, d);
        for (const Term& t : v.terms())
            if (term_bigrade(t).weight != c.weight)
                throw WeightMismatchError("component declared weight " +
                                          std::to_string(c.weight) + " is not homogeneous");
        return v;
    };
    std::map<int, BeauvilleRow> rows;
    for (const WeightedClass& c : z_parts) {
        CycleB v = check(c);
        auto& row = rows[c.weight];
        row.weight = c.weight;
        row.z = normalize(row.z + v, d);
    }
    for (const WeightedClass& c : w_parts) {
        CycleB v = check(c);
        auto& row = rows[c.weight];
        row.weight = c.weight;
        row.w = normalize(row.w + v, d);
    }
    std::vector<BeauvilleRow> out;
    out.reserve(rows.size());
    for (auto& [j, row] : rows) out.push_back(std::move(row));
    return out;
}

bool beauville_roundtrip_ok(const BeauvilleRow& row, int g) {
    int d = g - 1;
    LimitResult phi = limit_fm_alg(row.z, row.w, g);
    LimitResult back = limit_fm_alg(inv(phi.a), inv(phi.b), g);
    Rational s = parity_sign(g);
    return back.a.scaled(s) == normalize(row.z, d) && back.b.scaled(s) == normalize(row.w, d);
}

CubicThreefoldDemo demo_cubic_threefold() {
    CubicThreefoldDemo demo;
    const int g = demo.g, d = g - 1;
    Atom c_even = Atom::sym("C", 3, 0);
    Atom c_odd = Atom::sym("C", 3, 1);
    demo.curve_even = Expr::from_atom(c_even);
    demo.curve_odd = Expr::from_atom(c_odd);
    demo.z = normalize(demo.curve_even + demo.curve_odd, d);
    // w = (C*C)/2 expanded bilinearly through the Pontryagin atoms
    CycleB w = star(c_even, c_even, d).scaled(Rational(BigInt(1), BigInt(2))) +
               star(c_even, c_odd, d) +
               star(c_odd, c_odd, d).scaled(Rational(BigInt(1), BigInt(2)));
    demo.w = normalize(w, d);
    demo.phi0 = limit_fm_alg(demo.z, demo.w, g);

    demo.expected_w1_a = mul(fb(demo.curve_even, d), fb(demo.curve_odd, d), d);
    demo.expected_w1_b = fb(demo.curve_odd, d).scaled(Rational(-1));
    CycleB a1 = weight_part(demo.phi0.a, 1), b1 = weight_part(demo.phi0.b, 1);
    demo.weight1_matches = a1 == demo.expected_w1_a && b1 == demo.expected_w1_b;
    demo.weight1_nonzero = !a1.is_zero() || !b1.is_zero();
    return demo;
}

NodalCurveDemo demo_nodal_curve() {
    NodalCurveDemo demo;
    const int g = demo.g, d = g - 1;
    demo.point_class = Expr::from_atom(Atom::sym("pt", d, 0));
    for (int j = 0; j <= 2; ++j)
        demo.curve_parts.push_back({j, Expr::from_atom(Atom::sym("ct", d - 1, j))});
    std::vector<WeightedClass> z_parts{{0, demo.point_class}};
    demo.rows = beauville_specialize(z_parts, demo.curve_parts, g);

    demo.table_matches = true;
    for (const BeauvilleRow& row : demo.rows) {
        CycleB want_z = row.weight == 0 ? demo.point_class : Expr::zero();
        CycleB want_w = demo.curve_parts[static_cast<size_t>(row.weight)].value;
        if (!(row.z == want_z && row.w == want_w)) demo.table_matches = false;
    }
    return demo;
}

}  // namespace fmlimit
