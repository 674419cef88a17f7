#pragma once

#include <map>
#include <string>

#include "wittlab/uea.hpp"

namespace wittlab {

/// Normal-ordered Weyl monomial x^{x_pow} d^{d_pow}.
struct WeylMono {
  int x_pow = 0;
  int d_pow = 0;
  friend auto operator<=>(const WeylMono&, const WeylMono&) = default;
};

/// Polynomial differential operator in normal order (x-powers left of d-powers).
class WeylElt {
public:
  WeylElt() = default;
  static WeylElt zero() { return WeylElt(); }
  static WeylElt one() { return mono({0, 0}, PolyCoeff(1)); }
  static WeylElt x(int p = 1) { return mono({p, 0}, PolyCoeff(1)); }
  static WeylElt d(int p = 1) { return mono({0, p}, PolyCoeff(1)); }
  static WeylElt mono(const WeylMono& m, const PolyCoeff& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylMono, PolyCoeff>& terms() const { return terms_; }
  PolyCoeff coeff(const WeylMono& m) const;
  void add_term(const WeylMono& m, const PolyCoeff& c);

  bool depends_on_lambda() const;
  bool depends_on_Lambda() const;

  WeylElt operator-() const;
  WeylElt& operator+=(const WeylElt& o);
  WeylElt& operator-=(const WeylElt& o);
  friend WeylElt operator+(WeylElt a, const WeylElt& b) { return a += b; }
  friend WeylElt operator-(WeylElt a, const WeylElt& b) { return a -= b; }
  friend WeylElt operator*(const PolyCoeff& c, const WeylElt& a);
  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.terms_ == b.terms_; }

  /// Terms as "c * x^a d^b", sorted by (a+b desc, a desc), joined with " + ".
  std::string str() const;

private:
  std::map<WeylMono, PolyCoeff> terms_;
};

/// Normal-ordered product, via d^b x^a = sum_j j! C(b,j) C(a,j) x^{a-j} d^{b-j}.
WeylElt weyl_mul(const WeylElt& u, const WeylElt& v);

/// Specialization choice for the density parameter.
struct LambdaSpec {
  enum class Kind { rational, formal_lambda, formal_Lambda };
  Kind kind = Kind::rational;
  Rat value;  // meaningful for Kind::rational

  static LambdaSpec at(const Rat& v) { return {Kind::rational, v}; }
  static LambdaSpec formal_lambda() { return {Kind::formal_lambda, Rat(0)}; }
  static LambdaSpec formal_Lambda() { return {Kind::formal_Lambda, Rat(0)}; }

  PolyCoeff coeff() const;
  friend bool operator==(const LambdaSpec&, const LambdaSpec&) = default;
};

/// Tensor density representation: e_n -> x^{n+1} d + lam (n+1) x^n,
/// extended to an algebra morphism. Rejects elements whose coefficients
/// already involve the indeterminate the spec introduces.
WeylElt rep(const UEAElt& t, const LambdaSpec& spec);

/// Action on the formal monomial x^mu: d acts by mu x^{mu-1}, x by mu+1.
/// Returns the finitely supported exponent->coefficient map.
std::map<Rat, PolyCoeff> apply(const WeylElt& w, const Rat& mu);

/// Top component of the total (Lambda, d) filtration. Rejects lambda-dependent
/// coefficients.
WeylElt lam_deg_symbol(const WeylElt& w);

}  // namespace wittlab
