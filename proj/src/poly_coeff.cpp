#include "wittlab/poly_coeff.hpp"

#include <sstream>
#include <vector>

namespace wittlab {

PolyCoeff PolyCoeff::monomial(unsigned dl, unsigned dL, const Rat& c) {
  PolyCoeff p;
  if (!c.is_zero()) p.terms_[{dl, dL}] = c;
  return p;
}

Rat PolyCoeff::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::invalid_argument("PolyCoeff: not a constant: " + str());
  return terms_.begin()->second;
}

bool PolyCoeff::depends_on_lambda() const {
  for (const auto& [e, c] : terms_)
    if (e.lam > 0) return true;
  return false;
}

bool PolyCoeff::depends_on_Lambda() const {
  for (const auto& [e, c] : terms_)
    if (e.Lam > 0) return true;
  return false;
}

Rat PolyCoeff::coeff(unsigned dl, unsigned dL) const {
  auto it = terms_.find({dl, dL});
  return it == terms_.end() ? Rat(0) : it->second;
}

void PolyCoeff::add_term(const PolyExp& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyCoeff PolyCoeff::operator-() const {
  PolyCoeff r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

PolyCoeff& PolyCoeff::operator+=(const PolyCoeff& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyCoeff& PolyCoeff::operator-=(const PolyCoeff& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b) {
  PolyCoeff r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.lam + eb.lam, ea.Lam + eb.Lam}, ca * cb);
  return r;
}

PolyCoeff PolyCoeff::eval(std::optional<Rat> at_lambda, std::optional<Rat> at_Lambda) const {
  PolyCoeff r;
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    PolyExp out = e;
    if (at_lambda && e.lam > 0) {
      for (unsigned i = 0; i < e.lam; ++i) v *= *at_lambda;
      out.lam = 0;
    }
    if (at_Lambda && e.Lam > 0) {
      for (unsigned i = 0; i < e.Lam; ++i) v *= *at_Lambda;
      out.Lam = 0;
    }
    r.add_term(out, v);
  }
  return r;
}

std::map<unsigned, PolyCoeff> PolyCoeff::split_by_Lambda_degree() const {
  std::map<unsigned, PolyCoeff> out;
  for (const auto& [e, c] : terms_) out[e.Lam].add_term(e, c);
  return out;
}

std::string PolyCoeff::str() const {
  if (terms_.empty()) return "0";
  // Sort: total degree descending, then lambda-degree descending.
  std::vector<std::pair<PolyExp, Rat>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    unsigned ta = a.first.lam + a.first.Lam, tb = b.first.lam + b.first.Lam;
    if (ta != tb) return ta > tb;
    if (a.first.lam != b.first.lam) return a.first.lam > b.first.lam;
    return a.first.Lam > b.first.Lam;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rat a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool has_var = e.lam > 0 || e.Lam > 0;
    if (!has_var || a != Rat(1)) {
      os << a.str();
      if (has_var) os << " ";
    }
    if (e.lam > 0) {
      os << "lambda";
      if (e.lam > 1) os << "^" << e.lam;
      if (e.Lam > 0) os << " ";
    }
    if (e.Lam > 0) {
      os << "Lambda";
      if (e.Lam > 1) os << "^" << e.Lam;
    }
    first = false;
  }
  return os.str();
}

}  // namespace wittlab
