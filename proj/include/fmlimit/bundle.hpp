#pragma once

#include "fmlimit/base.hpp"

namespace fmlimit {

// Class q*z + q*w.eta on the P^1-bundle P over B, under the presentation
// CH*(P) = CH*(B)[eta]/(eta^2 - eta.q*gamma).
struct CycleP {
    CycleB z;  // pullback part
    CycleB w;  // eta-coefficient
    bool operator==(const CycleP&) const = default;
};

// Class sum c[e1][e2].(qxq)* . eta1^e1 . eta2^e2 on P x P; eta_i^2 is
// rewritten to eta_i.gamma_i eagerly, so only exponents 0/1 are stored.
struct CyclePP {
    CycleBB c[2][2];
    bool operator==(const CyclePP&) const = default;
};

enum class ExcDiv : uint8_t { E12, E21 };

// Class pi*(a).xi + pi*(b) on one exceptional divisor, coordinates over
// B x B. The quadratic relation keeps xi-degree <= 1.
struct CycleE {
    ExcDiv which = ExcDiv::E12;
    CycleBB a;  // xi-coefficient
    CycleBB b;
    bool operator==(const CycleE&) const = default;
};

// Class tau*(main) + eps12*(e12) + eps21*(e21) on the blown-up special
// fibre; the two exceptional divisors are disjoint.
struct CycleV {
    CyclePP main;
    CycleE e12{ExcDiv::E12, {}, {}};
    CycleE e21{ExcDiv::E21, {}, {}};
    bool operator==(const CycleV&) const = default;
};

CycleP add(const CycleP& x, const CycleP& y);
CyclePP add(const CyclePP& x, const CyclePP& y);
CycleE add(const CycleE& x, const CycleE& y);
CycleV add(const CycleV& x, const CycleV& y);
CycleP scaled(const CycleP& x, const Rational& c);
CyclePP scaled(const CyclePP& x, const Rational& c);
CycleE scaled(const CycleE& x, const Rational& c);
CycleV scaled(const CycleV& x, const Rational& c);

CycleP normalizeP(const CycleP& x, int d);
CyclePP normalizePP(const CyclePP& x, int d);
CycleE normalizeE(const CycleE& x, int d);
CycleV normalizeV(const CycleV& x, int d);

// (z1,w1).(z2,w2) = (z1 z2, z1 w2 + w1 z2 + w1 w2 gamma).
CycleP mul(const CycleP& x, const CycleP& y, int d);

// P^1-bundle pushforward: q*(q*z) = 0, q*(q*w.eta) = w.
CycleB q_push(const CycleP& x);

// p1*(q*z + q*w.eta) = (qxq)*q1*z + (qxq)*q1*w . eta1.
CyclePP p1_pull(const CycleP& x);

// Components without eta1 push to zero; with eta1 they push through the
// kernel selection rule of q2_push, landing in the z / w part as eta2 is
// absent / present.
CycleP p2_push(const CyclePP& y, int d);

// Pushforward along q x q; only the eta1.eta2 component survives.
CycleBB qq_push(const CyclePP& y);

CyclePP mul(const CyclePP& x, const CyclePP& y, int d);

// phi_k = sum_{m=0}^{k-1} (-1)^m gamma1^m gamma2^(k-1-m); phi_0 = 0.
CycleBB phi_k(int k, int d);

// Closed forms of xi powers on E12 / E21 (k >= 0):
//   xi12^k = phi_k . xi + gamma1 gamma2 phi_{k-1}
//   xi21^k = (-1)^(k+1) phi_k . xi + (-1)^k gamma1 gamma2 phi_{k-1}
CycleE xi_power(ExcDiv which, int k, int d);

CycleE mul(const CycleE& x, const CycleE& y, int d);
CycleE mul_xi(const CycleE& x, int d);           // multiply by xi
CycleE mul(const CycleBB& r, const CycleE& x, int d);

// Inclusion pushforward of a class on the centre identified with B x B:
// (qxq)*alpha . (eta1 eta2 - eta_i . gamma_j).
CyclePP lambda_push(ExcDiv which, const CycleBB& alpha, int d);

// Restriction of a P x P class to the centre: eta1 -> gamma1, eta2 -> 0 on
// E12 (and symmetrically on E21), the rest passes through.
CycleBB lambda_restrict(ExcDiv which, const CyclePP& y, int d);

// Intersection product on the blown-up fibre. Uses the excess-intersection
// rule eps*(E) = -xi on each divisor and E12.E21 = 0.
CycleV mul(const CycleV& u, const CycleV& v, int d);

// E^k as a fibre class: E_ij^k = (-1)^(k-1) eps_ij*(xi^(k-1)), k >= 1.
CycleV e_power(ExcDiv which, int k, int d);

// exp(-E12 - E21) truncated at k = 2g (+ slack; extra terms vanish).
CycleV exp_minus_e(int g, int slack = 0);

// Blow-down pushforward: tau*(tau* y) = y and the fibre classes land via
// lambda_push of their xi-coefficients (pi*(xi) = 1, pi*(1) = 0).
CyclePP tau_push(const CycleV& v, int d);

// The closed-form value of tau*(tau* p1*(x) . (E12^k + E21^k)) for k >= 1;
// identically zero at k = 1.
CyclePP tau_push_xe_closed(const CycleP& x, int k, int g);

}  // namespace fmlimit
