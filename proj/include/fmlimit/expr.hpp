#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmlimit/rational.hpp"

namespace fmlimit {

// The two spaces whose classes are held as plain term sums. Everything else
// (the P^1-bundle, its square, the exceptional divisors, the blown-up special
// fibre) is represented structurally as tuples of these.
enum class Space : uint8_t { B, BB };

struct Bigrade {
    int codim = 0;
    int weight = 0;
    bool operator==(const Bigrade&) const = default;
    auto operator<=>(const Bigrade&) const = default;
    Bigrade operator+(const Bigrade& o) const { return {codim + o.codim, weight + o.weight}; }
};

class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class MixedSpaceError : public Error {
    using Error::Error;
};
class NegativeCodimError : public Error {
    using Error::Error;
};
class WeightMismatchError : public Error {
    using Error::Error;
};
class DomainError : public Error {
    using Error::Error;
};

class Atom;
using AtomVec = std::vector<Atom>;

// One multiplicative generator of a cycle class. Five kinds:
//   Sym    named symbol with a fixed bigrade
//   Gamma  the first Chern class of the gluing bundle, bigrade (1,1)
//   Fb     an unevaluated Fourier image of a monic product of B-atoms;
//          the bigrade shift (i,j) -> (d-i+j, j) is frozen in at build time
//   StarP  an unevaluated Pontryagin product of two symbols
//   Ell    the Poincare class on the self-product, bigrade (1,0)
// On the self-product, `factor` tags which projection an atom is pulled back
// along (1 or 2); base-space atoms carry factor 0. Powers are repetition: a
// squared gamma is two Gamma atoms in the term.
class Atom {
public:
    enum class Kind : uint8_t { Sym, Gamma, Fb, StarP, Ell };

    static Atom sym(std::string name, int codim, int weight, Space space = Space::B,
                    int factor = 0);
    static Atom gamma(Space space = Space::B, int factor = 0);
    static Atom ell();
    // `arg` is the monic argument term (sorted B-atoms); ambient_d fixes the
    // bigrade. Codim may come out negative; callers normalize that to zero.
    static Atom fb(AtomVec arg, int ambient_d);
    static Atom star(const Atom& left, const Atom& right, int ambient_d);

    Kind kind() const { return kind_; }
    Space space() const { return space_; }
    int factor() const { return factor_; }
    const std::string& name() const { return name_; }
    Bigrade bigrade() const { return grade_; }
    const AtomVec& args() const;

    // Same atom transported to the other space along projection `factor`.
    Atom pulled_back(int factor) const;
    Atom into_base() const;

    bool operator==(const Atom& o) const { return cmp(*this, o) == 0; }
    bool operator<(const Atom& o) const { return cmp(*this, o) < 0; }

    // Total order: space, kind, factor, then name/bigrade, then recursion
    // into operator arguments. This is the order normal forms are sorted by.
    static int cmp(const Atom& a, const Atom& b);
    static int cmp(const AtomVec& a, const AtomVec& b);

private:
    Kind kind_ = Kind::Sym;
    Space space_ = Space::B;
    int factor_ = 0;
    Bigrade grade_;
    std::string name_;
    std::shared_ptr<const AtomVec> args_;  // Fb: argument term; StarP: {left,right}
};

struct Term {
    Rational coeff;
    AtomVec atoms;  // sorted under Atom::cmp once normalized
};

// A finite sum of terms. Normal form: atoms sorted within each term, terms
// sorted by their atom vectors, like terms merged, zero coefficients and
// dimension-truncated terms removed. All engine equality is equality of
// normal forms.
class Expr {
public:
    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr unit() { return from_rational(Rational(1)); }
    static Expr from_rational(const Rational& r);
    static Expr from_atom(Atom a);
    static Expr from_term(Term t);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Expr& o) const;

    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator-() const;
    Expr scaled(const Rational& c) const;

    // Raw term append; the result must be normalized before use.
    void push_term(Term t) { terms_.push_back(std::move(t)); }

private:
    std::vector<Term> terms_;
};

// Bigrade of a term (sum over its atoms).
Bigrade term_bigrade(const Term& t);

// Throws MixedSpaceError unless all atoms agree; the empty term is neutral.
void check_single_space(const Term& t);

// Canonical form over base dimension d: sorts, merges, applies dimension
// truncation (bound d on B, 2d on the self-product) and drops terms holding
// an atom of negative codim. Idempotent.
Expr normalize(const Expr& e, int ambient_d);

Expr mul(const Expr& a, const Expr& b, int ambient_d);
Expr pow(const Expr& a, unsigned n, int ambient_d);

inline bool equal(const Expr& a, const Expr& b) { return a == b; }

// True when every symbol-level bigrade satisfies i-d <= j <= i; formal
// symbols outside that window represent classes that vanish for weight
// reasons. strict_drop removes their terms.
bool weight_valid(const Expr& e, int ambient_d);
Expr strict_drop(const Expr& e, int ambient_d);

}  // namespace fmlimit
