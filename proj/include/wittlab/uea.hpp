#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "wittlab/witt.hpp"

namespace wittlab {

/// PBW monomial e_{n_1} e_{n_2} ... e_{n_d} with n_1 >= n_2 >= ... >= n_d >= -1.
/// Also used as the canonical representation of a commutative multiset of
/// generator indices (the key type of SymElt).
class PBWMono {
public:
  PBWMono() = default;
  explicit PBWMono(std::vector<GenIndex> sorted_nonincreasing);

  static PBWMono one() { return PBWMono(); }
  static PBWMono gen(GenIndex n) { return PBWMono({n}); }

  int degree() const { return static_cast<int>(idx_.size()); }
  int weight() const;
  const std::vector<GenIndex>& indices() const { return idx_; }
  bool is_one() const { return idx_.empty(); }

  /// Multiset union (commutative product of multisets).
  PBWMono merged(const PBWMono& o) const;

  /// Ordering: degree asc, then ascending lexicographic on the index list.
  friend bool operator<(const PBWMono& a, const PBWMono& b);
  friend bool operator==(const PBWMono& a, const PBWMono& b) { return a.idx_ == b.idx_; }

  /// "e_2 e_0^2 e_-1"; empty monomial renders as "1".
  std::string str() const;

private:
  std::vector<GenIndex> idx_;
};

namespace detail {
template <class Derived>
class TermMap {
public:
  bool is_zero() const { return terms_.empty(); }
  const std::map<PBWMono, PolyCoeff>& terms() const { return terms_; }

  PolyCoeff coeff(const PBWMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? PolyCoeff() : it->second;
  }

  void add_term(const PBWMono& m, const PolyCoeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int degree() const {  // degree of 0 is 0 by convention
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool depends_on_lambda() const {
    for (const auto& [m, c] : terms_)
      if (c.depends_on_lambda()) return true;
    return false;
  }
  bool depends_on_Lambda() const {
    for (const auto& [m, c] : terms_)
      if (c.depends_on_Lambda()) return true;
    return false;
  }

  Derived operator-() const {
    Derived r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  Derived& operator+=(const Derived& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return static_cast<Derived&>(*this);
  }
  Derived& operator-=(const Derived& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return static_cast<Derived&>(*this);
  }
  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend bool operator==(const TermMap& a, const TermMap& b) { return a.terms_ == b.terms_; }

protected:
  std::map<PBWMono, PolyCoeff> terms_;
};
}  // namespace detail

/// Element of the universal enveloping algebra in PBW normal form.
class UEAElt : public detail::TermMap<UEAElt> {
public:
  UEAElt() = default;

  static UEAElt zero() { return UEAElt(); }
  static UEAElt one() { return mono(PBWMono::one(), PolyCoeff(1)); }
  static UEAElt gen(GenIndex n) { check_index(n); return mono(PBWMono::gen(n), PolyCoeff(1)); }
  static UEAElt mono(const PBWMono& m, const PolyCoeff& c);
  static UEAElt from_lie(const LieElt& x);

  /// Coefficient of the empty monomial.
  PolyCoeff constant_term() const { return coeff(PBWMono::one()); }

  /// Split into weight-homogeneous parts.
  std::map<int, UEAElt> weight_split() const;

  /// Substitute lambda and/or Lambda in all coefficients.
  UEAElt eval(std::optional<Rat> at_lambda, std::optional<Rat> at_Lambda) const;

  friend UEAElt operator*(const UEAElt& a, const UEAElt& b);
  friend UEAElt operator*(const PolyCoeff& c, const UEAElt& a);
  UEAElt& operator*=(const UEAElt& o) { return *this = *this * o; }

  /// Terms sorted by (degree desc, weight asc, lexicographic indices).
  std::string str() const;
};

/// Element of the symmetric algebra; keys are commutative multisets.
class SymElt : public detail::TermMap<SymElt> {
public:
  SymElt() = default;
  static SymElt mono(const PBWMono& m, const PolyCoeff& c);

  bool is_homogeneous(int k) const;
  friend SymElt operator*(const SymElt& a, const SymElt& b);
  friend SymElt operator*(const PolyCoeff& c, const SymElt& a);
  std::string str() const;
};

/// PBW normal form of the word e_{w_0} e_{w_1} ... (arbitrary index order),
/// by the rewrite e_a e_b -> e_b e_a + (b-a) e_{a+b} for a < b.
UEAElt nf_word(const std::vector<GenIndex>& word, const PolyCoeff& c = PolyCoeff(1));

UEAElt mul(const UEAElt& a, const UEAElt& b);

/// Adjoint action ad(x)(t) = x t - t x.
UEAElt ad(const UEAElt& x, const UEAElt& t);
UEAElt ad_pow(const UEAElt& x, unsigned p, const UEAElt& t);

/// Transpose anti-involution: (X_1 ... X_k)^T = (-1)^k X_k ... X_1.
UEAElt transpose(const UEAElt& t);

/// Degree-k top symbol; rejects deg(t) > k.
SymElt proj_top(const UEAElt& t, int k);

/// Symmetrizer on a degree-k homogeneous symmetric element: averages each
/// multiset over all orderings of its factors. Rejects inhomogeneous input.
UEAElt sym_k(const SymElt& s, int k);

/// t = sum_j sym_j(component[j]); computed by peeling top symbols.
std::vector<SymElt> sym_decompose(const UEAElt& t);

/// Derivation action of e_n on the symmetric algebra.
SymElt ad_sym(GenIndex n, const SymElt& s);

}  // namespace wittlab
