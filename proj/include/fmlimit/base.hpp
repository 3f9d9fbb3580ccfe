#pragma once

#include "fmlimit/expr.hpp"

namespace fmlimit {

// Classes on the abelian base B (dimension d) and on B x B (dimension 2d).
// CycleBB sums have the shape  q1*(u) . q2*(v) . ell^n  with u, v on B.
using CycleB = Expr;
using CycleBB = Expr;

// Fourier transform on B, kept uninterpreted except for linearity, the
// bigrade shift (i,j) -> (d-i+j, j), the double-transform rule
// fb(fb(y)) = (-1)^d inv(y) and fb(star(x,y)) = fb(x).fb(y).
CycleB fb(const CycleB& x, int d);

// Pullback along multiplication by -1: homogeneous (i,j) scales by (-1)^j.
CycleB inv(const CycleB& x);

// Pullback along multiplication by n: homogeneous (i,j) scales by n^(2i-j).
CycleB nstar(long long n, const CycleB& x);

// Pontryagin product of two named symbols, as an opaque atom of bigrade
// (i+k-d, j+l). Throws NegativeCodimError when i+k < d.
CycleB star(const Atom& left, const Atom& right, int d);

// q_i-pullbacks from B to B x B.
CycleBB pull1(const CycleB& x);
CycleBB pull2(const CycleB& x);

// The exponential of the Poincare class, truncated exactly:
// sum_{n=0}^{2d+slack} ell^n / n!  (everything past 2d dies by dimension).
CycleBB exp_ell(int d, int slack = 0);

// Pushforward along the second projection against the Poincare kernel.
// A term q1*(u).q2*(v).ell^n with u homogeneous of bigrade (i,j) survives
// exactly when n = 2(d-i)+j and contributes n! . v . fb(u); every other
// ell-power vanishes because the Fourier image sits in a single codimension.
CycleB q2_push(const CycleBB& y, int d);

}  // namespace fmlimit
