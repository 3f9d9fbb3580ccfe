#include "fmlimit/bundle.hpp"

namespace fmlimit {

namespace {

Rational parity_sign(int k) { return Rational((k % 2 + 2) % 2 == 0 ? 1 : -1); }

CycleBB gamma_bb(int factor) { return Expr::from_atom(Atom::gamma(Space::BB, factor)); }

CycleB gamma_b() { return Expr::from_atom(Atom::gamma()); }

}  // namespace

CycleP add(const CycleP& x, const CycleP& y) { return {x.z + y.z, x.w + y.w}; }

CyclePP add(const CyclePP& x, const CyclePP& y) {
    CyclePP r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.c[i][j] = x.c[i][j] + y.c[i][j];
    return r;
}

CycleE add(const CycleE& x, const CycleE& y) {
    if (x.which != y.which) throw MixedSpaceError("adding classes on different exceptional divisors");
    return {x.which, x.a + y.a, x.b + y.b};
}

CycleV add(const CycleV& x, const CycleV& y) {
    return {add(x.main, y.main), add(x.e12, y.e12), add(x.e21, y.e21)};
}

CycleP scaled(const CycleP& x, const Rational& c) { return {x.z.scaled(c), x.w.scaled(c)}; }

CyclePP scaled(const CyclePP& x, const Rational& c) {
    CyclePP r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.c[i][j] = x.c[i][j].scaled(c);
    return r;
}

CycleE scaled(const CycleE& x, const Rational& c) { return {x.which, x.a.scaled(c), x.b.scaled(c)}; }

CycleV scaled(const CycleV& x, const Rational& c) {
    return {scaled(x.main, c), scaled(x.e12, c), scaled(x.e21, c)};
}

CycleP normalizeP(const CycleP& x, int d) { return {normalize(x.z, d), normalize(x.w, d)}; }

CyclePP normalizePP(const CyclePP& x, int d) {
    CyclePP r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.c[i][j] = normalize(x.c[i][j], d);
    return r;
}

CycleE normalizeE(const CycleE& x, int d) { return {x.which, normalize(x.a, d), normalize(x.b, d)}; }

CycleV normalizeV(const CycleV& x, int d) {
    return {normalizePP(x.main, d), normalizeE(x.e12, d), normalizeE(x.e21, d)};
}

CycleP mul(const CycleP& x, const CycleP& y, int d) {
    CycleB zz = mul(x.z, y.z, d);
    CycleB ww = mul(x.w, y.w, d);
    CycleB w = mul(x.z, y.w, d) + mul(x.w, y.z, d) + mul(ww, gamma_b(), d);
    return {zz, normalize(w, d)};
}

CycleB q_push(const CycleP& x) { return x.w; }

CyclePP p1_pull(const CycleP& x) {
    CyclePP r;
    r.c[0][0] = pull1(x.z);
    r.c[1][0] = pull1(x.w);
    return r;
}

CycleP p2_push(const CyclePP& y, int d) {
    return {q2_push(y.c[1][0], d), q2_push(y.c[1][1], d)};
}

CycleBB qq_push(const CyclePP& y) { return y.c[1][1]; }

CyclePP mul(const CyclePP& x, const CyclePP& y, int d) {
    CyclePP r;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2) {
                    CycleBB base = mul(x.c[a1][a2], y.c[b1][b2], d);
                    if (base.is_zero()) continue;
                    if (a1 + b1 == 2) base = mul(base, gamma_bb(1), d);  // eta1^2 = eta1.gamma1
                    if (a2 + b2 == 2) base = mul(base, gamma_bb(2), d);
                    int e1 = a1 + b1 > 0 ? 1 : 0, e2 = a2 + b2 > 0 ? 1 : 0;
                    r.c[e1][e2] = r.c[e1][e2] + base;
                }
    return normalizePP(r, d);
}

CycleBB phi_k(int k, int d) {
    Expr r;
    for (int m = 0; m <= k - 1; ++m) {
        Term t{parity_sign(m), {}};
        for (int i = 0; i < m; ++i) t.atoms.push_back(Atom::gamma(Space::BB, 1));
        for (int i = 0; i < k - 1 - m; ++i) t.atoms.push_back(Atom::gamma(Space::BB, 2));
        r.push_term(std::move(t));
    }
    return normalize(r, d);
}

CycleE xi_power(ExcDiv which, int k, int d) {
    if (k < 0) throw DomainError("xi_power: negative exponent");
    if (k == 0) return {which, Expr::zero(), Expr::unit()};
    CycleBB g1g2 = mul(gamma_bb(1), gamma_bb(2), d);
    CycleBB a = phi_k(k, d);
    CycleBB b = mul(g1g2, phi_k(k - 1, d), d);
    if (which == ExcDiv::E21) {
        a = a.scaled(parity_sign(k + 1));
        b = b.scaled(parity_sign(k));
    }
    return {which, a, b};
}

namespace {

// xi^2 = rel_a.xi + rel_b from the quadratic relation of the divisor.
void xi_relation(ExcDiv which, int d, CycleBB& rel_a, CycleBB& rel_b) {
    CycleBB g1 = gamma_bb(1), g2 = gamma_bb(2);
    rel_a = which == ExcDiv::E12 ? g2 - g1 : g1 - g2;
    rel_b = mul(g1, g2, d);
}

}  // namespace

CycleE mul(const CycleE& x, const CycleE& y, int d) {
    if (x.which != y.which) throw MixedSpaceError("multiplying across exceptional divisors");
    CycleBB rel_a, rel_b;
    xi_relation(x.which, d, rel_a, rel_b);
    CycleBB aa = mul(x.a, y.a, d);
    CycleBB a = mul(aa, rel_a, d) + mul(x.a, y.b, d) + mul(x.b, y.a, d);
    CycleBB b = mul(aa, rel_b, d) + mul(x.b, y.b, d);
    return {x.which, normalize(a, d), normalize(b, d)};
}

CycleE mul_xi(const CycleE& x, int d) {
    CycleBB rel_a, rel_b;
    xi_relation(x.which, d, rel_a, rel_b);
    return {x.which, normalize(mul(x.a, rel_a, d) + x.b, d), mul(x.a, rel_b, d)};
}

CycleE mul(const CycleBB& r, const CycleE& x, int d) {
    return {x.which, mul(r, x.a, d), mul(r, x.b, d)};
}

CyclePP lambda_push(ExcDiv which, const CycleBB& alpha, int d) {
    CyclePP r;
    r.c[1][1] = normalize(alpha, d);
    if (which == ExcDiv::E12)
        r.c[1][0] = mul(alpha, gamma_bb(2), d).scaled(Rational(-1));
    else
        r.c[0][1] = mul(alpha, gamma_bb(1), d).scaled(Rational(-1));
    return r;
}

CycleBB lambda_restrict(ExcDiv which, const CyclePP& y, int d) {
    if (which == ExcDiv::E12)  // eta1 -> gamma1, eta2 -> 0
        return normalize(y.c[0][0] + mul(y.c[1][0], gamma_bb(1), d), d);
    return normalize(y.c[0][0] + mul(y.c[0][1], gamma_bb(2), d), d);
}

CycleV mul(const CycleV& u, const CycleV& v, int d) {
    CycleV r;
    r.main = mul(u.main, v.main, d);
    auto side = [&](ExcDiv which, const CycleE& ue, const CycleE& ve) {
        CycleE out{which, {}, {}};
        out = add(out, mul(lambda_restrict(which, u.main, d), ve, d));
        out = add(out, mul(lambda_restrict(which, v.main, d), ue, d));
        // eps*(e) . eps*(e') = eps*(-xi . e . e')
        out = add(out, scaled(mul_xi(mul(ue, ve, d), d), Rational(-1)));
        return normalizeE(out, d);
    };
    r.e12 = side(ExcDiv::E12, u.e12, v.e12);
    r.e21 = side(ExcDiv::E21, u.e21, v.e21);
    return r;
}

CycleV e_power(ExcDiv which, int k, int d) {
    if (k < 1) throw DomainError("e_power: exponent must be >= 1");
    CycleV r;
    CycleE xi = xi_power(which, k - 1, d);
    if (which == ExcDiv::E12)
        r.e12 = scaled(xi, parity_sign(k - 1));
    else
        r.e21 = scaled(xi, parity_sign(k - 1));
    return r;
}

CycleV exp_minus_e(int g, int slack) {
    int d = g - 1;
    CycleV r;
    r.main.c[0][0] = Expr::unit();
    for (int k = 1; k <= 2 * g + slack; ++k) {
        // (-1)^k/k! . E^k with E^k = (-1)^(k-1) eps*(xi^(k-1)) gives -1/k!
        Rational c = Rational(-1) * Rational::factorial_inverse(static_cast<unsigned>(k));
        r.e12 = add(r.e12, scaled(xi_power(ExcDiv::E12, k - 1, d), c));
        r.e21 = add(r.e21, scaled(xi_power(ExcDiv::E21, k - 1, d), c));
    }
    return normalizeV(r, d);
}

CyclePP tau_push(const CycleV& v, int d) {
    CyclePP r = v.main;
    r = add(r, lambda_push(ExcDiv::E12, v.e12.a, d));
    r = add(r, lambda_push(ExcDiv::E21, v.e21.a, d));
    return normalizePP(r, d);
}

CyclePP tau_push_xe_closed(const CycleP& x, int k, int g) {
    int d = g - 1;
    CycleB gz = mul(x.w, gamma_b(), d);          // w.gamma
    CycleB zk = normalize(x.z + gz, d);          // z + w.gamma
    CyclePP r;
    for (int m = 0; m <= k - 2; ++m) {
        Rational sgn = parity_sign(m);
        CycleB gm = pow(gamma_b(), static_cast<unsigned>(m), d);
        CycleB g_km2 = pow(gamma_b(), static_cast<unsigned>(k - 2 - m), d);
        CycleB g_km1 = pow(gamma_b(), static_cast<unsigned>(k - 1 - m), d);

        CycleB top = normalize(x.z.scaled(parity_sign(k + 1) - Rational(1)) +
                                   gz.scaled(parity_sign(k + 1)),
                               d);
        r.c[1][1] = r.c[1][1] +
                    mul(pull1(mul(top, gm, d)), pull2(g_km2), d).scaled(sgn);
        r.c[1][0] = r.c[1][0] +
                    mul(pull1(mul(zk, gm, d)), pull2(g_km1), d).scaled(sgn * parity_sign(k));
        r.c[0][1] = r.c[0][1] +
                    mul(pull1(mul(mul(x.z, gamma_b(), d), gm, d)), pull2(g_km2), d).scaled(sgn);
    }
    return normalizePP(r, d);
}

}  // namespace fmlimit
