#pragma once

#include <map>
#include <string>
#include <vector>

#include "wittlab/slices.hpp"
#include "wittlab/weyl.hpp"

namespace wittlab {

/// A module whose annihilator slices can be computed exactly.
///   poly(v)      : density module on polynomials at rational parameter v
///   universal    : density module over the formal central parameter
///   neg_poly(v)  : the negative-exponent quotient module
///   offset(a, v) : exponents in a + Z for non-integral rational a
///   aug_plus(v)  : trivial module adjoined to poly(v); v = 0, 1 rejected
struct ModuleSpec {
  enum class Kind { poly, universal, neg_poly, offset, aug_plus };
  Kind kind = Kind::poly;
  Rat lambda;    // poly, neg_poly, offset, aug_plus
  Rat offset_a;  // offset only

  static ModuleSpec poly(const Rat& v) { return {Kind::poly, v, Rat(0)}; }
  static ModuleSpec universal() { return {Kind::universal, Rat(0), Rat(0)}; }
  static ModuleSpec neg_poly(const Rat& v) { return {Kind::neg_poly, v, Rat(0)}; }
  static ModuleSpec offset(const Rat& a, const Rat& v);
  static ModuleSpec aug_plus(const Rat& v);

  std::string str() const;
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

/// Coefficient of the empty monomial: the action on the trivial module.
PolyCoeff counit(const UEAElt& t);

/// Exact coordinates of the module action of t, suitable for kernel and rank
/// computations. Keys identify Weyl-operator coordinates (with the formal
/// parameter degree), sample-exponent values, or the counit coordinate.
struct ActionKey {
  int tag;  // >= 0: Lambda-degree of a Weyl coordinate; -1: counit; -2: sample
  int x_pow = 0, d_pow = 0;  // Weyl coordinates
  Rat sample, exponent;      // sample-based coordinates
  friend bool operator<(const ActionKey& a, const ActionKey& b);
};
std::map<ActionKey, Rat> action_coords(const ModuleSpec& m, const UEAElt& t, int sample_span);

/// Matrix of the module action on a list of elements (columns = elements).
/// sample_span controls how many formal exponents are probed for the
/// sample-based module kinds; k + |mu| + 1 determines a (degree <= k,
/// weight mu) operator, and callers pass that bound.
RatMat action_matrix(const ModuleSpec& m, const std::vector<UEAElt>& elts, int sample_span);

/// Annihilator slice: exact kernel of the module action on the slice.
Subspace ann_slice(const ModuleSpec& m, int k, int mu,
                   SubalgebraId ambient = SubalgebraId::full);

/// Two-sided ideal slices within degree <= k: the fixed point of one-sided
/// multiplications by the e_n, with weights tracked up to W_top.
std::map<int, Subspace> ideal_buckets(const std::vector<UEAElt>& gens, int k, int W_top);

/// The (degree <= k, weight mu) slice of the two-sided ideal generated by
/// gens (each of degree <= k).
Subspace ideal_slice(const std::vector<UEAElt>& gens, int k, int mu);

}  // namespace wittlab
