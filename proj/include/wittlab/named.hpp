#pragma once

#include "wittlab/uea.hpp"

namespace wittlab::elements {

/// q(t) = t^2 - t and y(t) = (t - 1/2) q(t), over any coefficient argument.
PolyCoeff q_of(const PolyCoeff& t);
PolyCoeff y_of(const PolyCoeff& t);
Rat q_of(const Rat& v);
Rat y_of(const Rat& v);

/// Step element S = 2 e_2 (2 e_0 - 1) - 3 e_1^2.
const UEAElt& S();

/// Casimir element Q = e_0^2 - e_0 - e_1 e_{-1}.
const UEAElt& Q();

/// Z = (1/2)(e_1 e_0 - e_2 e_{-1} - e_1), the ad(e_{-1})-preimage of Q.
const UEAElt& Z();

/// Q^{e_2} = 3 e_1^2 - 2 e_2 (2 e_0 + 1) + e_3 e_{-1}.
const UEAElt& Qe2();

/// Y = Q (e_0 - 1/2) - Z e_{-1}.
const UEAElt& Y();

/// Canonical ad(e_{-1})-preimage of Y inside the degree-3 top component,
/// normalized by a zero coefficient on e_3 e_{-1}^2.
const UEAElt& Y1();

/// g = e_1 e_5 - 4 e_2 e_4 + 3 e_3^2 + 2 e_6.
const UEAElt& g_sw();

/// h_0 = e_1 e_3 - e_2^2 - e_4.
const UEAElt& h0_sw();

/// h_1 = e_1 e_2^2 - e_1^2 e_3 + 2(lambda-1) e_2 e_3 - (2 lambda - 3) e_1 e_4
///       - (lambda-1)(lambda-2) e_5, with formal lambda coefficients.
const UEAElt& h1_sw();

/// X = Z (Y - (lambda-1/2) Q) - (Q - q(lambda)) (Y1 - (lambda-1/2) Z),
/// with formal lambda coefficients and the canonical Y1 representative.
UEAElt X_el();

/// Same with an arbitrary ad(e_{-1})-preimage of Y substituted for Y1.
UEAElt X_el_with(const UEAElt& y1);

/// Omega^{(m)}_{k,s} = sum_{a=0}^m (-1)^a binom(m,a) e_{k-a} e_{s+a}.
/// Requires k+1-m >= 0 and s+1 >= 0.
UEAElt omega(int m, int k, int s);

}  // namespace wittlab::elements
