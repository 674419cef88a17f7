#pragma once

#include <map>
#include <string>
#include <vector>

#include "wittlab/poly_coeff.hpp"

namespace wittlab {

/// Basis index n of the vector field e_n = x^{n+1} d/dx; admissible n >= -1.
using GenIndex = int;

constexpr GenIndex kMinIndex = -1;

inline void check_index(GenIndex n) {
  if (n < kMinIndex) throw std::invalid_argument("generator index below -1");
}

/// Distinguished subspaces of the algebra, as index predicates.
/// span_e1_em1 is a plain linear span, not a subalgebra.
enum class SubalgebraId { projective_a, affine_b, constant_c, span_e1_em1, full };

bool subalgebra_contains(SubalgebraId s, GenIndex n);
std::string subalgebra_name(SubalgebraId s);

/// Element of the Lie algebra of polynomial vector fields on the line.
class LieElt {
public:
  LieElt() = default;
  static LieElt gen(GenIndex n, PolyCoeff c = PolyCoeff(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<GenIndex, PolyCoeff>& terms() const { return terms_; }

  LieElt operator-() const;
  LieElt& operator+=(const LieElt& o);
  LieElt& operator-=(const LieElt& o);
  friend LieElt operator+(LieElt a, const LieElt& b) { return a += b; }
  friend LieElt operator-(LieElt a, const LieElt& b) { return a -= b; }
  friend LieElt operator*(const PolyCoeff& c, const LieElt& x);
  friend bool operator==(const LieElt& a, const LieElt& b) { return a.terms_ == b.terms_; }

  void add_term(GenIndex n, const PolyCoeff& c);

  /// "e_n" rendering, e.g. "2 e_0 + e_1".
  std::string str() const;

private:
  std::map<GenIndex, PolyCoeff> terms_;
};

/// [e_m, e_n] = (n - m) e_{m+n}; zero when m == n.
LieElt bracket_basis(GenIndex m, GenIndex n);

/// Bilinear extension of bracket_basis.
LieElt bracket(const LieElt& x, const LieElt& y);

}  // namespace wittlab
