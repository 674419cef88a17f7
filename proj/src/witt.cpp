#include "wittlab/witt.hpp"

#include <sstream>

namespace wittlab {

bool subalgebra_contains(SubalgebraId s, GenIndex n) {
  switch (s) {
    case SubalgebraId::projective_a: return n == -1 || n == 0 || n == 1;
    case SubalgebraId::affine_b: return n == -1 || n == 0;
    case SubalgebraId::constant_c: return n == -1;
    case SubalgebraId::span_e1_em1: return n == -1 || n == 1;
    case SubalgebraId::full: return n >= kMinIndex;
  }
  return false;
}

std::string subalgebra_name(SubalgebraId s) {
  switch (s) {
    case SubalgebraId::projective_a: return "a";
    case SubalgebraId::affine_b: return "b";
    case SubalgebraId::constant_c: return "c";
    case SubalgebraId::span_e1_em1: return "span{e_-1,e_1}";
    case SubalgebraId::full: return "full";
  }
  return "?";
}

LieElt LieElt::gen(GenIndex n, PolyCoeff c) {
  check_index(n);
  LieElt x;
  x.add_term(n, c);
  return x;
}

void LieElt::add_term(GenIndex n, const PolyCoeff& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(n, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieElt LieElt::operator-() const {
  LieElt r;
  for (const auto& [n, c] : terms_) r.terms_[n] = -c;
  return r;
}

LieElt& LieElt::operator+=(const LieElt& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

LieElt& LieElt::operator-=(const LieElt& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

LieElt operator*(const PolyCoeff& c, const LieElt& x) {
  LieElt r;
  for (const auto& [n, v] : x.terms_) r.add_term(n, c * v);
  return r;
}

std::string LieElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << " + ";
    if (c.is_constant() && c.constant_value() == Rat(1)) {
      os << "e_" << n;
    } else if (c.is_constant()) {
      os << c.constant_value().str() << " e_" << n;
    } else {
      os << "(" << c.str() << ") e_" << n;
    }
    first = false;
  }
  return os.str();
}

LieElt bracket_basis(GenIndex m, GenIndex n) {
  check_index(m);
  check_index(n);
  if (m == n) return LieElt();
  return LieElt::gen(m + n, PolyCoeff(Rat(n - m)));
}

LieElt bracket(const LieElt& x, const LieElt& y) {
  LieElt r;
  for (const auto& [m, cm] : x.terms())
    for (const auto& [n, cn] : y.terms()) {
      if (m == n) continue;
      r.add_term(m + n, cm * cn * PolyCoeff(Rat(n - m)));
    }
  return r;
}

}  // namespace wittlab
