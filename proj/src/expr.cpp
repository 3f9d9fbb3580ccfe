#include "fmlimit/expr.hpp"

#include <algorithm>

namespace fmlimit {

namespace {
const AtomVec kNoArgs;
}

Atom Atom::sym(std::string name, int codim, int weight, Space space, int factor) {
    if (codim < 0) throw NegativeCodimError("symbol '" + name + "' with negative codim");
    Atom a;
    a.kind_ = Kind::Sym;
    a.space_ = space;
    a.factor_ = factor;
    a.name_ = std::move(name);
    a.grade_ = {codim, weight};
    return a;
}

Atom Atom::gamma(Space space, int factor) {
    Atom a;
    a.kind_ = Kind::Gamma;
    a.space_ = space;
    a.factor_ = factor;
    a.grade_ = {1, 1};
    return a;
}

Atom Atom::ell() {
    Atom a;
    a.kind_ = Kind::Ell;
    a.space_ = Space::BB;
    a.factor_ = 0;
    a.grade_ = {1, 0};
    return a;
}

Atom Atom::fb(AtomVec arg, int ambient_d) {
    Bigrade g;
    for (const Atom& x : arg) {
        if (x.space() != Space::B || x.factor() != 0)
            throw MixedSpaceError("Fourier argument must be a base-space term");
        g = g + x.bigrade();
    }
    Atom a;
    a.kind_ = Kind::Fb;
    a.space_ = Space::B;
    a.grade_ = {ambient_d - g.codim + g.weight, g.weight};
    std::sort(arg.begin(), arg.end());
    a.args_ = std::make_shared<const AtomVec>(std::move(arg));
    return a;
}

Atom Atom::star(const Atom& left, const Atom& right, int ambient_d) {
    if (left.kind() != Kind::Sym || right.kind() != Kind::Sym)
        throw DomainError("star expects two named symbols");
    Bigrade g = left.bigrade() + right.bigrade();
    if (g.codim - ambient_d < 0)
        throw NegativeCodimError("star class would have negative codim");
    Atom a;
    a.kind_ = Kind::StarP;
    a.space_ = Space::B;
    a.grade_ = {g.codim - ambient_d, g.weight};
    AtomVec args{left, right};
    if (cmp(args[1], args[0]) < 0) std::swap(args[0], args[1]);  // commutative
    a.args_ = std::make_shared<const AtomVec>(std::move(args));
    return a;
}

const AtomVec& Atom::args() const { return args_ ? *args_ : kNoArgs; }

Atom Atom::pulled_back(int factor) const {
    if (kind_ == Kind::Ell) throw MixedSpaceError("the Poincare class has no pullback tag");
    Atom a = *this;
    a.space_ = Space::BB;
    a.factor_ = factor;
    return a;
}

Atom Atom::into_base() const {
    Atom a = *this;
    a.space_ = Space::B;
    a.factor_ = 0;
    return a;
}

int Atom::cmp(const Atom& a, const Atom& b) {
    if (a.space_ != b.space_) return a.space_ < b.space_ ? -1 : 1;
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
    if (a.factor_ != b.factor_) return a.factor_ < b.factor_ ? -1 : 1;
    if (int c = a.name_.compare(b.name_); c != 0) return c < 0 ? -1 : 1;
    if (a.grade_ != b.grade_) return a.grade_ < b.grade_ ? -1 : 1;
    return cmp(a.args(), b.args());
}

int Atom::cmp(const AtomVec& a, const AtomVec& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        if (int c = cmp(a[i], b[i]); c != 0) return c;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

Expr Expr::from_rational(const Rational& r) {
    Expr e;
    if (!r.is_zero()) e.terms_.push_back({r, {}});
    return e;
}

Expr Expr::from_atom(Atom a) {
    Expr e;
    e.terms_.push_back({Rational(1), {std::move(a)}});
    return e;
}

Expr Expr::from_term(Term t) {
    Expr e;
    if (!t.coeff.is_zero()) e.terms_.push_back(std::move(t));
    return e;
}

bool Expr::operator==(const Expr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff) return false;
        if (Atom::cmp(terms_[i].atoms, o.terms_[i].atoms) != 0) return false;
    }
    return true;
}

Expr Expr::operator+(const Expr& o) const {
    Expr r = *this;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    return r;
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator-() const { return scaled(Rational(-1)); }

Expr Expr::scaled(const Rational& c) const {
    Expr r;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
}

Bigrade term_bigrade(const Term& t) {
    Bigrade g;
    for (const Atom& a : t.atoms) g = g + a.bigrade();
    return g;
}

void check_single_space(const Term& t) {
    for (size_t i = 1; i < t.atoms.size(); ++i)
        if (t.atoms[i].space() != t.atoms[0].space())
            throw MixedSpaceError("term mixes atoms from different spaces");
}

namespace {

bool atom_codim_negative(const AtomVec& atoms) {
    for (const Atom& a : atoms)
        if (a.bigrade().codim < 0) return true;
    return false;
}

int ambient_bound(const Term& t, int d) {
    if (t.atoms.empty()) return d;  // pure scalars live in codim 0 anyway
    return t.atoms[0].space() == Space::B ? d : 2 * d;
}

// On the self-product each tagged slice is a pullback from the base, so a
// slice of codim > d is the pullback of zero and kills the whole term.
bool factor_slice_truncated(const Term& t, int d) {
    if (t.atoms.empty() || t.atoms[0].space() != Space::BB) return false;
    int codim[3] = {0, 0, 0};
    for (const Atom& a : t.atoms) codim[a.factor()] += a.bigrade().codim;
    return codim[1] > d || codim[2] > d;
}

}  // namespace

Expr normalize(const Expr& e, int ambient_d) {
    std::vector<Term> work;
    work.reserve(e.terms().size());
    for (const Term& t : e.terms()) {
        if (t.coeff.is_zero()) continue;
        check_single_space(t);
        Term s = t;
        std::sort(s.atoms.begin(), s.atoms.end());
        Bigrade g = term_bigrade(s);
        if (g.codim > ambient_bound(s, ambient_d)) continue;
        if (g.codim < 0 || atom_codim_negative(s.atoms)) continue;
        if (factor_slice_truncated(s, ambient_d)) continue;
        work.push_back(std::move(s));
    }
    std::sort(work.begin(), work.end(),
              [](const Term& a, const Term& b) { return Atom::cmp(a.atoms, b.atoms) < 0; });
    std::vector<Term> merged;
    for (Term& t : work) {
        if (!merged.empty() && Atom::cmp(merged.back().atoms, t.atoms) == 0)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    Expr out;
    for (Term& t : merged)
        if (!t.coeff.is_zero()) out.push_term(std::move(t));
    return out;
}

Expr mul(const Expr& a, const Expr& b, int ambient_d) {
    Expr r;
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms()) {
            Term t;
            t.coeff = ta.coeff * tb.coeff;
            t.atoms = ta.atoms;
            t.atoms.insert(t.atoms.end(), tb.atoms.begin(), tb.atoms.end());
            r.push_term(std::move(t));
        }
    return normalize(r, ambient_d);
}

Expr pow(const Expr& a, unsigned n, int ambient_d) {
    Expr r = Expr::unit();
    for (unsigned i = 0; i < n; ++i) r = mul(r, a, ambient_d);
    return r;
}

namespace {

bool atom_weight_valid(const Atom& a, int d) {
    switch (a.kind()) {
        case Atom::Kind::Sym: {
            Bigrade g = a.bigrade();
            return g.weight <= g.codim && g.weight >= g.codim - d;
        }
        case Atom::Kind::Fb:
        case Atom::Kind::StarP: {
            for (const Atom& x : a.args())
                if (!atom_weight_valid(x, d)) return false;
            Bigrade g = a.bigrade();
            return g.weight <= g.codim && g.weight >= g.codim - d;
        }
        default:
            return true;  // gamma (1,1) and ell (1,0) are always in-window
    }
}

}  // namespace

bool weight_valid(const Expr& e, int ambient_d) {
    for (const Term& t : e.terms())
        for (const Atom& a : t.atoms)
            if (!atom_weight_valid(a, ambient_d)) return false;
    return true;
}

Expr strict_drop(const Expr& e, int ambient_d) {
    Expr r;
    for (const Term& t : e.terms()) {
        bool ok = true;
        for (const Atom& a : t.atoms)
            if (!atom_weight_valid(a, ambient_d)) {
                ok = false;
                break;
            }
        if (ok) r.push_term(t);
    }
    return normalize(r, ambient_d);
}

}  // namespace fmlimit
