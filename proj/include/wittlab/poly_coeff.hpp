#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "wittlab/rational.hpp"

namespace wittlab {

/// Exponent pair (deg in lambda, deg in Lambda).
struct PolyExp {
  unsigned lam = 0;
  unsigned Lam = 0;
  friend auto operator<=>(const PolyExp&, const PolyExp&) = default;
};

/// Sparse polynomial in the two fixed indeterminates lambda and Lambda,
/// with exact rational coefficients. Zero terms are never stored.
class PolyCoeff {
public:
  PolyCoeff() = default;
  PolyCoeff(int n) { if (n != 0) terms_[{0, 0}] = Rat(n); }
  PolyCoeff(long n) { if (n != 0) terms_[{0, 0}] = Rat(n); }
  PolyCoeff(const Rat& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }

  static PolyCoeff lambda() { return monomial(1, 0, Rat(1)); }
  static PolyCoeff Lambda() { return monomial(0, 1, Rat(1)); }
  static PolyCoeff monomial(unsigned dl, unsigned dL, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == PolyExp{0, 0});
  }
  /// Throws unless is_constant().
  Rat constant_value() const;

  bool depends_on_lambda() const;
  bool depends_on_Lambda() const;

  const std::map<PolyExp, Rat>& terms() const { return terms_; }
  Rat coeff(unsigned dl, unsigned dL) const;

  PolyCoeff operator-() const;
  PolyCoeff& operator+=(const PolyCoeff& o);
  PolyCoeff& operator-=(const PolyCoeff& o);
  friend PolyCoeff operator+(PolyCoeff a, const PolyCoeff& b) { return a += b; }
  friend PolyCoeff operator-(PolyCoeff a, const PolyCoeff& b) { return a -= b; }
  friend PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b);
  PolyCoeff& operator*=(const PolyCoeff& o) { return *this = *this * o; }

  friend bool operator==(const PolyCoeff& a, const PolyCoeff& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyCoeff& a, const PolyCoeff& b) { return !(a == b); }

  /// Partial evaluation: substitute lambda and/or Lambda by rationals.
  PolyCoeff eval(std::optional<Rat> at_lambda, std::optional<Rat> at_Lambda) const;

  /// Split into Lambda-homogeneous parts, keyed by Lambda-degree.
  std::map<unsigned, PolyCoeff> split_by_Lambda_degree() const;

  /// Canonical rendering, e.g. "lambda^2 - lambda", "1/2", "0".
  std::string str() const;

private:
  void add_term(const PolyExp& e, const Rat& c);
  std::map<PolyExp, Rat> terms_;
};

}  // namespace wittlab
