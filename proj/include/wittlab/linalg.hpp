#pragma once

#include <Eigen/Core>

#include <optional>

#include "wittlab/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<wittlab::Rat> : GenericNumTraits<wittlab::Rat> {
  typedef wittlab::Rat Real;
  typedef wittlab::Rat NonInteger;
  typedef wittlab::Rat Nested;
  static inline Real epsilon() { return wittlab::Rat(0); }
  static inline Real dummy_precision() { return wittlab::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen

namespace wittlab {

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Canonical reduced row echelon form: pivots 1, pivot columns fully cleared,
/// rows ordered by pivot column, zero rows dropped. Row spaces are equal iff
/// the canonical forms are identical.
RatMat rref(RatMat m);

Eigen::Index rank(const RatMat& m);

/// Rows span {x : m x = 0}; result in canonical rref form.
RatMat kernel(const RatMat& m);

/// Intersection of the row spaces of two rref matrices with equal column count.
RatMat intersect_rows(const RatMat& a, const RatMat& b);

/// Membership of v in the row space of an rref matrix.
bool in_rowspace(const RatMat& r, RatVec v);

/// One solution x of m x = b, if any.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

/// Stack rows of a on top of rows of b.
RatMat vstack(const RatMat& a, const RatMat& b);

}  // namespace wittlab
