#pragma once

#include <utility>
#include <vector>

#include "fmlimit/bundle.hpp"

namespace fmlimit {

enum class LimitMode : uint8_t { Rational, Algebraic };
enum class LimitRoute : uint8_t { Closed, Direct };

// The limit of the Fourier transform of a cycle whose specialization is
// nu*(q*z + q*w.eta): the pair (a, b) with limit nu*(q*a + q*b.eta).
struct LimitResult {
    CycleB a, b;
    LimitMode mode = LimitMode::Rational;
    int g = 1;
    LimitRoute route = LimitRoute::Closed;

    bool same_class(const LimitResult& o) const { return a == o.a && b == o.b; }
};

// One (n, m) summand of the closed formula, as its (a, b) contribution.
std::pair<CycleB, CycleB> closed_formula_term(const CycleB& z, const CycleB& w, int g, int n,
                                              int m);

// The closed formula:
//   a = fb(w) + sum_{n=0}^{2g-2+slack} sum_{m=0}^{n} (-1)^m/(n+2)!
//         . fb((z + w.gamma).gamma^m) . gamma^(n-m+1)
//   b = sum (-1)^m/(n+2)! . fb((((-1)^(n+1)-1).z - w.gamma).gamma^m) . gamma^(n-m)
LimitResult limit_fm_closed(const CycleB& z, const CycleB& w, int g, int n_slack = 0);

// The algebraic-equivalence limit (fb(w), -fb(z)) (gamma-free inputs taken
// gamma-killed first, so the result never carries a gamma).
LimitResult limit_fm_alg(const CycleB& z, const CycleB& w, int g);

struct DirectOptions {
    int exp_slack = 0;        // extra terms on the exponential bounds
    bool literal_kernel = false;  // exponentiate the divisor sum by repeated products
};

// The push-pull evaluation through the blown-up special fibre:
// p2* tau* ( e^{tau*(qxq)*ell - E12 - E21} . tau* p1*(q*z + q*w.eta) ).
LimitResult limit_fm_direct(const CycleB& z, const CycleB& w, int g, DirectOptions opt = {});

// Drops every term containing a gamma, including gammas buried in Fourier
// arguments. Idempotent.
CycleB kill_gamma(const CycleB& x, int d);
LimitResult kill_gamma(const LimitResult& r);

// Checks that applying the algebraic limit twice returns
// (-1)^g.(inv(z), inv(w)).
bool double_transform_check(const CycleB& z, const CycleB& w, int g);

struct WeightedClass {
    int weight = 0;
    CycleB value;
};

struct BeauvilleRow {
    int weight = 0;
    CycleB z, w;
};

// Per-weight specialization rows (z^(j), w^(j)). Throws WeightMismatchError
// when a supplied component is not homogeneous of its declared weight.
std::vector<BeauvilleRow> beauville_specialize(const std::vector<WeightedClass>& z_parts,
                                               const std::vector<WeightedClass>& w_parts, int g);

// The derivation route through the transform: inv, then the algebraic
// limit, then the (-1)^g factor must reproduce the row.
bool beauville_roundtrip_ok(const BeauvilleRow& row, int g);

// Terms of a fixed total weight.
CycleB weight_part(const CycleB& x, int j);

struct CubicThreefoldDemo {
    int g = 5;
    CycleB curve_even, curve_odd;  // the two Beauville pieces of the curve class
    CycleB z, w;
    LimitResult phi0;
    CycleB expected_w1_a, expected_w1_b;  // the published weight-1 component
    bool weight1_matches = false;
    bool weight1_nonzero = false;  // Fourier-side verdict under the odd-piece hypothesis
};
CubicThreefoldDemo demo_cubic_threefold();

struct NodalCurveDemo {
    int g = 4;
    std::vector<WeightedClass> curve_parts;  // components of the normalized curve class
    CycleB point_class;
    std::vector<BeauvilleRow> rows;
    bool table_matches = false;  // rows equal ([pt], c0) at weight 0 and (0, cj) otherwise
};
NodalCurveDemo demo_nodal_curve();

}  // namespace fmlimit
