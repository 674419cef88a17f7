#include "wittlab/named.hpp"

#include "wittlab/slices.hpp"

namespace wittlab::elements {

PolyCoeff q_of(const PolyCoeff& t) { return t * t - t; }
PolyCoeff y_of(const PolyCoeff& t) { return (t - PolyCoeff(Rat(1, 2))) * q_of(t); }
Rat q_of(const Rat& v) { return v * v - v; }
Rat y_of(const Rat& v) { return (v - Rat(1, 2)) * q_of(v); }

namespace {
UEAElt gen(GenIndex n) { return UEAElt::gen(n); }
PolyCoeff half() { return PolyCoeff(Rat(1, 2)); }
}  // namespace

const UEAElt& S() {
  static const UEAElt v = PolyCoeff(2) * (gen(2) * (PolyCoeff(2) * gen(0) - UEAElt::one())) -
                          PolyCoeff(3) * (gen(1) * gen(1));
  return v;
}

const UEAElt& Q() {
  static const UEAElt v = gen(0) * gen(0) - gen(0) - gen(1) * gen(-1);
  return v;
}

const UEAElt& Z() {
  static const UEAElt v = half() * (gen(1) * gen(0) - gen(2) * gen(-1) - gen(1));
  return v;
}

const UEAElt& Qe2() {
  static const UEAElt v = PolyCoeff(3) * (gen(1) * gen(1)) -
                          PolyCoeff(2) * (gen(2) * (PolyCoeff(2) * gen(0) + UEAElt::one())) +
                          gen(3) * gen(-1);
  return v;
}

const UEAElt& Y() {
  static const UEAElt v = Q() * (gen(0) - PolyCoeff(Rat(1, 2)) * UEAElt::one()) - Z() * gen(-1);
  return v;
}

const UEAElt& Y1() {
  static const UEAElt v = [] {
    // Solve ad(e_{-1}) v = Y in the weight-1 slice of the degree-3 top
    // component, then normalize the e_3 e_{-1}^2 coefficient to zero.
    const Slice domain = Slice::make(3, 1, SliceFilter::sym_image(3));
    const Slice codomain = Slice::make(3, 0);
    const RatMat m = ad_matrix(UEAElt::gen(-1), domain, codomain);
    const auto x = solve(m, codomain.coords(Y()));
    if (!x) throw std::logic_error("Y1: no ad(e_{-1})-preimage of Y in the slice");
    UEAElt v0 = domain.from_coords(*x);
    const UEAElt shift = Qe2() * gen(-1);
    const Rat c = v0.coeff(PBWMono({3, -1, -1})).constant_value() /
                  shift.coeff(PBWMono({3, -1, -1})).constant_value();
    return v0 - PolyCoeff(c) * shift;
  }();
  return v;
}

const UEAElt& g_sw() {
  static const UEAElt v = gen(1) * gen(5) - PolyCoeff(4) * (gen(2) * gen(4)) +
                          PolyCoeff(3) * (gen(3) * gen(3)) + PolyCoeff(2) * gen(6);
  return v;
}

const UEAElt& h0_sw() {
  static const UEAElt v = gen(1) * gen(3) - gen(2) * gen(2) - gen(4);
  return v;
}

const UEAElt& h1_sw() {
  static const UEAElt v = [] {
    const PolyCoeff lam = PolyCoeff::lambda();
    UEAElt r = gen(1) * gen(2) * gen(2) - gen(1) * gen(1) * gen(3);
    r += (PolyCoeff(2) * (lam - PolyCoeff(1))) * (gen(2) * gen(3));
    r -= (PolyCoeff(2) * lam - PolyCoeff(3)) * (gen(1) * gen(4));
    r -= ((lam - PolyCoeff(1)) * (lam - PolyCoeff(2))) * gen(5);
    return r;
  }();
  return v;
}

UEAElt X_el_with(const UEAElt& y1) {
  const PolyCoeff lam = PolyCoeff::lambda();
  const PolyCoeff lh = lam - half();
  const UEAElt a = Y() - lh * Q();
  const UEAElt b = y1 - lh * Z();
  return Z() * a - (Q() - q_of(lam) * UEAElt::one()) * b;
}

UEAElt X_el() { return X_el_with(Y1()); }

UEAElt omega(int m, int k, int s) {
  if (m < 0 || k + 1 - m < 0 || s + 1 < 0)
    throw std::invalid_argument("omega: requires m >= 0, k+1-m >= 0, s+1 >= 0");
  UEAElt r;
  for (int a = 0; a <= m; ++a) {
    const Rat c = (a % 2 == 0 ? Rat(1) : Rat(-1)) * binomial(m, a);
    r += nf_word({k - a, s + a}, PolyCoeff(c));
  }
  return r;
}

}  // namespace wittlab::elements
