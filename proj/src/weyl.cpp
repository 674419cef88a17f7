#include "wittlab/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace wittlab {

WeylElt WeylElt::mono(const WeylMono& m, const PolyCoeff& c) {
  WeylElt w;
  w.add_term(m, c);
  return w;
}

PolyCoeff WeylElt::coeff(const WeylMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? PolyCoeff() : it->second;
}

void WeylElt::add_term(const WeylMono& m, const PolyCoeff& c) {
  if (c.is_zero()) return;
  if (m.x_pow < 0 || m.d_pow < 0) throw std::invalid_argument("WeylMono: negative power");
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool WeylElt::depends_on_lambda() const {
  for (const auto& [m, c] : terms_)
    if (c.depends_on_lambda()) return true;
  return false;
}

bool WeylElt::depends_on_Lambda() const {
  for (const auto& [m, c] : terms_)
    if (c.depends_on_Lambda()) return true;
  return false;
}

WeylElt WeylElt::operator-() const {
  WeylElt r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

WeylElt& WeylElt::operator+=(const WeylElt& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElt& WeylElt::operator-=(const WeylElt& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElt operator*(const PolyCoeff& c, const WeylElt& a) {
  WeylElt r;
  for (const auto& [m, mc] : a.terms()) r.add_term(m, c * mc);
  return r;
}

std::string WeylElt::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<WeylMono, PolyCoeff>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int ta = a.first.x_pow + a.first.d_pow, tb = b.first.x_pow + b.first.d_pow;
    if (ta != tb) return ta > tb;
    return a.first.x_pow > b.first.x_pow;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    if (!first) os << " + ";
    if (c.is_constant()) os << c.constant_value().str();
    else os << "(" << c.str() << ")";
    os << " * x^" << m.x_pow << " d^" << m.d_pow;
    first = false;
  }
  return os.str();
}

WeylElt weyl_mul(const WeylElt& u, const WeylElt& v) {
  WeylElt r;
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms()) {
      const PolyCoeff c = cu * cv;
      const int b = mu.d_pow, a = mv.x_pow;
      const int top = std::min(a, b);
      for (int j = 0; j <= top; ++j) {
        const Rat w = factorial(j) * binomial(b, j) * binomial(a, j);
        r.add_term({mu.x_pow + a - j, b - j + mv.d_pow}, c * PolyCoeff(w));
      }
    }
  return r;
}

PolyCoeff LambdaSpec::coeff() const {
  switch (kind) {
    case Kind::rational: return PolyCoeff(value);
    case Kind::formal_lambda: return PolyCoeff::lambda();
    case Kind::formal_Lambda: return PolyCoeff::Lambda();
  }
  return PolyCoeff();
}

namespace {

WeylElt rep_gen(GenIndex n, const LambdaSpec& spec) {
  WeylElt r = WeylElt::mono({n + 1, 1}, PolyCoeff(1));
  r += WeylElt::mono({n, 0}, spec.coeff() * PolyCoeff(Rat(n + 1)));
  return r;
}

}  // namespace

WeylElt rep(const UEAElt& t, const LambdaSpec& spec) {
  if (spec.kind == LambdaSpec::Kind::formal_Lambda && t.depends_on_Lambda())
    throw std::invalid_argument("rep: coefficients already involve Lambda");
  if (spec.kind == LambdaSpec::Kind::formal_lambda && t.depends_on_lambda())
    throw std::invalid_argument("rep: coefficients already involve lambda");
  WeylElt r;
  for (const auto& [m, c] : t.terms()) {
    WeylElt w = WeylElt::one();
    for (GenIndex n : m.indices()) w = weyl_mul(w, rep_gen(n, spec));
    r += c * w;
  }
  return r;
}

std::map<Rat, PolyCoeff> apply(const WeylElt& w, const Rat& mu) {
  std::map<Rat, PolyCoeff> out;
  for (const auto& [m, c] : w.terms()) {
    const Rat f = falling(mu, m.d_pow);
    if (f.is_zero()) continue;
    const Rat ex = mu - Rat(m.d_pow) + Rat(m.x_pow);
    auto [it, fresh] = out.emplace(ex, c * PolyCoeff(f));
    if (!fresh) {
      it->second += c * PolyCoeff(f);
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

WeylElt lam_deg_symbol(const WeylElt& w) {
  if (w.depends_on_lambda())
    throw std::invalid_argument("lam_deg_symbol: lambda-dependent coefficients");
  int top = 0;
  bool any = false;
  for (const auto& [m, c] : w.terms())
    for (const auto& [dL, part] : c.split_by_Lambda_degree()) {
      top = any ? std::max(top, static_cast<int>(dL) + m.d_pow)
                : static_cast<int>(dL) + m.d_pow;
      any = true;
    }
  WeylElt r;
  if (!any) return r;
  for (const auto& [m, c] : w.terms())
    for (const auto& [dL, part] : c.split_by_Lambda_degree())
      if (static_cast<int>(dL) + m.d_pow == top) r.add_term(m, part);
  return r;
}

}  // namespace wittlab
