#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "fmlimit/rational.hpp"

namespace fmlimit {

// Exterior-algebra model of the cohomology of a principally polarized
// abelian variety of dimension d: 2d anticommuting generators
// a_1, b_1, ..., a_d, b_d stored as bitmask monomials (bit 2i = a_{i+1},
// bit 2i+1 = b_{i+1}) with exact rational coefficients. The orientation is
// integral(a_1 b_1 ... a_d b_d) = 1, i.e. the coefficient of the full mask
// in ascending generator order. The product space B x B uses 4d generators,
// second factor shifted up by 2d.
struct ExtClass {
    std::map<uint32_t, Rational> coef;

    bool is_zero() const { return coef.empty(); }
    bool operator==(const ExtClass&) const = default;
};

using ProductClass = ExtClass;

ExtClass ext_zero();
ExtClass ext_unit();
ExtClass ext_monomial(uint32_t mask, Rational c = Rational(1));
ExtClass ext_add(const ExtClass& x, const ExtClass& y);
ExtClass ext_scale(const ExtClass& x, const Rational& c);
ExtClass ext_wedge(const ExtClass& x, const ExtClass& y);

// theta = sum_i a_i b_i.
ExtClass theta_class(int d);

// Embeddings into the product space and integration back out.
ProductClass p1_embed(const ExtClass& x, int d);
ProductClass p2_embed(const ExtClass& x, int d);
// Integration over the first factor: keeps monomials whose first-factor part
// is the full top form.
ExtClass push_p2(const ProductClass& x, int d);

// Group-law pullback: each generator maps to its two copies summed.
ProductClass mu_pull(const ExtClass& x, int d);
// Adjoint of mu_pull under the fixed orientation.
ExtClass mu_push(const ProductClass& x, int d);

// mu* theta - p1* theta - p2* theta; degree 2, vanishes on both axes.
ProductClass poincare_class(int d);

// Exponential of a nilpotent even class.
ProductClass ext_exp(const ProductClass& x);

// fourier(x) = push_p2(exp(poincare) ^ p1* x).
ExtClass fourier(const ExtClass& x, int d);

// Pullback along -1: negates odd-degree generators.
ExtClass ext_inv(const ExtClass& x);

// Pontryagin product mu_push(p1* x ^ p2* y).
ExtClass pontryagin(const ExtClass& x, const ExtClass& y, int d);

// Numeric replay of the direct specialization pipeline with gamma = 0:
// returns the (a, b) pair, expected to equal (fourier(w), -fourier(z)).
std::pair<ExtClass, ExtClass> numeric_direct_limit(const ExtClass& z, const ExtClass& w, int d);

}  // namespace fmlimit
