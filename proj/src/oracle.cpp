#include "fmlimit/oracle.hpp"

#include <bit>

namespace fmlimit {

namespace {

// Parity of moving mask b past mask a into ascending order; masks disjoint.
int wedge_sign(uint32_t a, uint32_t b) {
    int inversions = 0;
    for (uint32_t rest = b; rest;) {
        uint32_t bit = rest & (~rest + 1);
        int pos = std::countr_zero(bit);
        inversions += std::popcount(a >> (pos + 1));
        rest &= rest - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

uint32_t full_mask(int gens) { return gens >= 32 ? 0xffffffffu : (1u << gens) - 1; }

void accumulate(ExtClass& x, uint32_t mask, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = x.coef.try_emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) x.coef.erase(it);
    }
}

}  // namespace

ExtClass ext_zero() { return {}; }

ExtClass ext_unit() { return ext_monomial(0); }

ExtClass ext_monomial(uint32_t mask, Rational c) {
    ExtClass x;
    if (!c.is_zero()) x.coef.emplace(mask, std::move(c));
    return x;
}

ExtClass ext_add(const ExtClass& x, const ExtClass& y) {
    ExtClass r = x;
    for (const auto& [mask, c] : y.coef) accumulate(r, mask, c);
    return r;
}

ExtClass ext_scale(const ExtClass& x, const Rational& c) {
    ExtClass r;
    if (c.is_zero()) return r;
    for (const auto& [mask, v] : x.coef) r.coef.emplace(mask, v * c);
    return r;
}

ExtClass ext_wedge(const ExtClass& x, const ExtClass& y) {
    ExtClass r;
    for (const auto& [ma, ca] : x.coef)
        for (const auto& [mb, cb] : y.coef) {
            if (ma & mb) continue;
            accumulate(r, ma | mb, ca * cb * Rational(wedge_sign(ma, mb)));
        }
    return r;
}

ExtClass theta_class(int d) {
    ExtClass r;
    for (int i = 0; i < d; ++i) r.coef.emplace(3u << (2 * i), Rational(1));
    return r;
}

ProductClass p1_embed(const ExtClass& x, int) { return x; }

ProductClass p2_embed(const ExtClass& x, int d) {
    ProductClass r;
    for (const auto& [mask, c] : x.coef) r.coef.emplace(mask << (2 * d), c);
    return r;
}

ExtClass push_p2(const ProductClass& x, int d) {
    uint32_t top = full_mask(2 * d);
    ExtClass r;
    for (const auto& [mask, c] : x.coef)
        if ((mask & top) == top) r.coef.emplace(mask >> (2 * d), c);
    return r;
}

ProductClass mu_pull(const ExtClass& x, int d) {
    ProductClass r;
    for (const auto& [mask, c] : x.coef) {
        // expand the product over generators of (copy1 + copy2)
        ProductClass term = ext_monomial(0, c);
        for (uint32_t rest = mask; rest;) {
            uint32_t bit = rest & (~rest + 1);
            rest &= rest - 1;
            ProductClass gen = ext_add(ext_monomial(bit), ext_monomial(bit << (2 * d)));
            term = ext_wedge(term, gen);
        }
        r = ext_add(r, term);
    }
    return r;
}

ExtClass mu_push(const ProductClass& x, int d) {
    // adjoint under the orientation: the coefficient on a monomial m_S is
    // fixed by pairing against the complementary monomial
    uint32_t top = full_mask(2 * d);
    ExtClass r;
    for (uint32_t t = 0; t <= top; ++t) {
        ExtClass mt = ext_monomial(t);
        ProductClass probe = ext_wedge(x, mu_pull(mt, d));
        auto it = probe.coef.find(full_mask(4 * d));
        if (it == probe.coef.end()) continue;
        uint32_t s = top & ~t;
        int pairing = wedge_sign(s, t);  // integral of m_s ^ m_t
        accumulate(r, s, it->second * Rational(pairing));
    }
    return r;
}

// Expanding (a' + a'')^(b' + b'') minus both axis thetas leaves the cross
// terms a'^b'' + a''^b', stored in ascending mask order with the reordering
// sign.
ProductClass poincare_class(int d) {
    ProductClass r;
    for (int i = 0; i < d; ++i) {
        uint32_t a1 = 1u << (2 * i), b1 = 2u << (2 * i);
        uint32_t a2 = a1 << (2 * d), b2 = b1 << (2 * d);
        accumulate(r, a1 | b2, Rational(wedge_sign(a1, b2)));
        accumulate(r, a2 | b1, Rational(wedge_sign(a2, b1)));
    }
    return r;
}

ProductClass ext_exp(const ProductClass& x) {
    ProductClass sum = ext_unit();
    ProductClass power = ext_unit();
    for (unsigned n = 1; !power.is_zero(); ++n) {
        power = ext_scale(ext_wedge(power, x), Rational(BigInt(1), BigInt(static_cast<long long>(n))));
        sum = ext_add(sum, power);
    }
    return sum;
}

ExtClass fourier(const ExtClass& x, int d) {
    return push_p2(ext_wedge(ext_exp(poincare_class(d)), p1_embed(x, d)), d);
}

ExtClass ext_inv(const ExtClass& x) {
    ExtClass r;
    for (const auto& [mask, c] : x.coef)
        r.coef.emplace(mask, std::popcount(mask) % 2 == 0 ? c : -c);
    return r;
}

ExtClass pontryagin(const ExtClass& x, const ExtClass& y, int d) {
    return mu_push(ext_wedge(p1_embed(x, d), p2_embed(y, d)), d);
}

namespace {

// gamma = 0 shadows of the bundle structures: eta^2 = 0, xi^2 = 0.
struct NumPP {
    ProductClass c[2][2];
};
struct NumE {
    ProductClass a, b;
};
struct NumV {
    NumPP main;
    NumE e12, e21;
};

NumPP pp_mul(const NumPP& x, const NumPP& y) {
    NumPP r;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2) {
                    if (a1 + b1 > 1 || a2 + b2 > 1) continue;
                    r.c[a1 + b1][a2 + b2] = ext_add(
                        r.c[a1 + b1][a2 + b2], ext_wedge(x.c[a1][a2], y.c[b1][b2]));
                }
    return r;
}

NumE e_mul(const NumE& x, const NumE& y) {
    return {ext_add(ext_wedge(x.a, y.b), ext_wedge(x.b, y.a)), ext_wedge(x.b, y.b)};
}

NumE e_mul_class(const ProductClass& r, const NumE& x) {
    return {ext_wedge(r, x.a), ext_wedge(r, x.b)};
}

NumV v_mul(const NumV& u, const NumV& v) {
    NumV r;
    r.main = pp_mul(u.main, v.main);
    auto side = [&](const NumE& ue, const NumE& ve) {
        const ProductClass& ru = u.main.c[0][0];  // restriction: eta -> 0
        const ProductClass& rv = v.main.c[0][0];
        NumE out = e_mul_class(ru, ve);
        NumE t = e_mul_class(rv, ue);
        out.a = ext_add(out.a, t.a);
        out.b = ext_add(out.b, t.b);
        NumE prod = e_mul(ue, ve);  // times -xi: (a,b) -> (-b, 0)
        out.a = ext_add(out.a, ext_scale(prod.b, Rational(-1)));
        return out;
    };
    r.e12 = side(u.e12, v.e12);
    r.e21 = side(u.e21, v.e21);
    return r;
}

}  // namespace

std::pair<ExtClass, ExtClass> numeric_direct_limit(const ExtClass& z, const ExtClass& w, int d) {
    NumV pulled;
    pulled.main.c[0][0] = ext_wedge(ext_exp(poincare_class(d)), p1_embed(z, d));
    pulled.main.c[1][0] = ext_wedge(ext_exp(poincare_class(d)), p1_embed(w, d));

    NumV expE;
    expE.main.c[0][0] = ext_unit();
    Rational half(BigInt(1), BigInt(2));
    expE.e12 = {ext_scale(ext_unit(), -half), ext_scale(ext_unit(), Rational(-1))};
    expE.e21 = expE.e12;

    NumV integrand = v_mul(expE, pulled);

    NumPP total = integrand.main;  // tau_push: centre classes land in the eta1.eta2 slot
    total.c[1][1] = ext_add(total.c[1][1], ext_add(integrand.e12.a, integrand.e21.a));

    return {push_p2(total.c[1][0], d), push_p2(total.c[1][1], d)};
}

}  // namespace fmlimit
