#include "fmlimit/base.hpp"

namespace fmlimit {

namespace {

Rational parity_sign(int k) { return Rational((k % 2 + 2) % 2 == 0 ? 1 : -1); }

}  // namespace

CycleB fb(const CycleB& x, int d) {
    Expr r;
    for (const Term& t : x.terms()) {
        if (t.atoms.size() == 1 && t.atoms[0].kind() == Atom::Kind::Fb) {
            // fb(fb(y)) = (-1)^d inv(y), applied before anything else so the
            // composition rule never depends on intermediate truncation
            const AtomVec& arg = t.atoms[0].args();
            Term y{t.coeff * parity_sign(d) * parity_sign(term_bigrade({Rational(1), arg}).weight),
                   arg};
            r.push_term(std::move(y));
        } else if (t.atoms.size() == 1 && t.atoms[0].kind() == Atom::Kind::StarP) {
            const AtomVec& arg = t.atoms[0].args();
            Term y{t.coeff, {Atom::fb({arg[0]}, d), Atom::fb({arg[1]}, d)}};
            r.push_term(std::move(y));
        } else {
            r.push_term({t.coeff, {Atom::fb(t.atoms, d)}});
        }
    }
    return normalize(r, d);
}

CycleB inv(const CycleB& x) {
    Expr r;
    for (const Term& t : x.terms())
        r.push_term({t.coeff * parity_sign(term_bigrade(t).weight), t.atoms});
    return r;  // input normal form is preserved term by term
}

CycleB nstar(long long n, const CycleB& x) {
    Expr r;
    for (const Term& t : x.terms()) {
        Bigrade g = term_bigrade(t);
        int e = 2 * g.codim - g.weight;
        Rational factor;
        if (n == 0) {
            if (e < 0) throw DomainError("nstar: 0 to a negative power");
            factor = Rational(e == 0 ? 1 : 0);
        } else {
            factor = Rational(n).pow(e);
        }
        if (factor.is_zero()) continue;
        r.push_term({t.coeff * factor, t.atoms});
    }
    return r;
}

CycleB star(const Atom& left, const Atom& right, int d) {
    return Expr::from_atom(Atom::star(left, right, d));
}

namespace {

CycleBB pull(const CycleB& x, int factor) {
    Expr r;
    for (const Term& t : x.terms()) {
        Term s{t.coeff, {}};
        s.atoms.reserve(t.atoms.size());
        for (const Atom& a : t.atoms) s.atoms.push_back(a.pulled_back(factor));
        r.push_term(std::move(s));
    }
    return r;
}

}  // namespace

CycleBB pull1(const CycleB& x) { return pull(x, 1); }
CycleBB pull2(const CycleB& x) { return pull(x, 2); }

CycleBB exp_ell(int d, int slack) {
    Expr r;
    for (int n = 0; n <= 2 * d + slack; ++n) {
        Term t{Rational::factorial_inverse(static_cast<unsigned>(n)), {}};
        t.atoms.assign(static_cast<size_t>(n), Atom::ell());
        r.push_term(std::move(t));
    }
    return normalize(r, d);
}

CycleB q2_push(const CycleBB& y, int d) {
    Expr out;
    for (const Term& t : y.terms()) {
        int ell_count = 0;
        AtomVec u, v;
        for (const Atom& a : t.atoms) {
            if (a.kind() == Atom::Kind::Ell)
                ++ell_count;
            else if (a.factor() == 1)
                u.push_back(a.into_base());
            else if (a.factor() == 2)
                v.push_back(a.into_base());
            else
                throw MixedSpaceError("q2_push: untagged atom on the self-product");
        }
        Bigrade gu = term_bigrade({Rational(1), u});
        if (ell_count != 2 * (d - gu.codim) + gu.weight) continue;
        Rational c = t.coeff * Rational(BigInt::factorial(static_cast<unsigned>(ell_count)));
        Expr contrib = mul(Expr::from_term({c, std::move(v)}),
                           fb(Expr::from_term({Rational(1), std::move(u)}), d), d);
        out = out + contrib;
    }
    return normalize(out, d);
}

}  // namespace fmlimit
