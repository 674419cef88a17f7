#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "wittlab/linalg.hpp"
#include "wittlab/uea.hpp"

namespace wittlab {

/// Basis selector for a (degree <= k, weight = mu) slice.
struct SliceFilter {
  enum class Kind { full, sym_image, subalgebra };
  Kind kind = Kind::full;
  int sym_degree = 0;                             // for sym_image
  SubalgebraId sub = SubalgebraId::full;          // for subalgebra

  static SliceFilter full() { return {}; }
  static SliceFilter sym_image(int j) { return {Kind::sym_image, j, SubalgebraId::full}; }
  static SliceFilter subalgebra(SubalgebraId s) { return {Kind::subalgebra, 0, s}; }
  friend bool operator==(const SliceFilter&, const SliceFilter&) = default;
};

/// All PBW monomials of exact degree d and weight mu whose indices satisfy
/// the predicate of `sub`, in canonical (ascending lex) order.
std::vector<PBWMono> pbw_monomials(int d, int mu, SubalgebraId sub = SubalgebraId::full);

/// Finite slice of the enveloping algebra with its canonical ordered basis.
/// For sym_image(j) the basis lists degree-j multisets; coordinates are taken
/// through sym-decomposition.
class Slice {
public:
  static Slice make(int k, int mu, SliceFilter filter = SliceFilter::full());

  int degree_bound() const { return k_; }
  int weight() const { return mu_; }
  const SliceFilter& filter() const { return filter_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<PBWMono>& basis() const { return basis_; }

  /// Position of a basis monomial, or -1.
  int position(const PBWMono& m) const;

  /// Basis vector as an algebra element (sym_j applied under sym_image).
  UEAElt element(int i) const;

  /// Exact coordinates; throws if t does not lie in the slice span or has
  /// non-constant coefficients.
  RatVec coords(const UEAElt& t) const;

  UEAElt from_coords(const RatVec& v) const;

  friend bool operator==(const Slice& a, const Slice& b) {
    return a.k_ == b.k_ && a.mu_ == b.mu_ && a.filter_ == b.filter_;
  }

private:
  int k_ = 0, mu_ = 0;
  SliceFilter filter_;
  std::vector<PBWMono> basis_;
  std::map<PBWMono, int> pos_;
};

/// Subspace of a slice, held as a canonical reduced row echelon matrix.
/// Equality of subspaces is bit-exact matrix identity.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(Slice s);
  static Subspace span(const Slice& s, const std::vector<UEAElt>& gens);
  static Subspace from_rows(const Slice& s, RatMat rows);  // rref applied

  const Slice& slice() const { return slice_; }
  const RatMat& rows() const { return rows_; }
  int dim() const { return static_cast<int>(rows_.rows()); }

  bool contains(const UEAElt& t) const;
  bool contains_vec(const RatVec& v) const { return in_rowspace(rows_, v); }
  UEAElt basis_elt(int i) const { return slice_.from_coords(rows_.row(i).transpose()); }

  /// Returns true if the span grew.
  bool insert(const UEAElt& t);

  std::vector<std::string> rendered_basis() const;

private:
  Slice slice_{Slice::make(0, 0)};
  RatMat rows_{0, 1};
};

void require_same_slice(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool equal(const Subspace& a, const Subspace& b);

/// Re-express the part of s lying in U_d as a subspace of the smaller slice.
/// Relies on the degree-d slice basis being a prefix of the degree-k one.
Subspace restrict_to_degree(const Subspace& s, int d);

/// Kernel of ad(e_{-1}) on the slice: lowest weight vectors.
Subspace lws(int k, int mu, SliceFilter filter = SliceFilter::full());

/// Kernel of ad(e_1): highest weight vectors.
Subspace hws(int k, int mu, SliceFilter filter = SliceFilter::full());

/// ad(e_0)^2 t - ad(e_0) t - ad(e_1) ad(e_{-1}) t.
UEAElt casimir_ad(const UEAElt& t);

/// Matrix of a linear map on a slice (columns indexed by the domain basis,
/// rows by the codomain full slice of the stated weight).
RatMat ad_matrix(const UEAElt& x, const Slice& domain, const Slice& codomain);

/// Smallest subspace family containing the generators and stable under
/// ad(e_n) for -1 <= n <= W - weight, within degree <= k; weights above W
/// are discarded. Buckets are full-filter subspaces keyed by weight.
std::map<int, Subspace> submodule_closure(const std::vector<UEAElt>& gens, int k, int W);

/// Counting functions: 't' and 'w' are binomial weight-space counts,
/// 'p' and 'q' count partitions of n with parts in [1,k] resp. [2,k].
long counts(char id, int k, int n);

}  // namespace wittlab
