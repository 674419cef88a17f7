#pragma once

#include <random>
#include <sstream>

#include "wittlab/checks.hpp"
#include "wittlab/machine.hpp"
#include "wittlab/named.hpp"

namespace wittlab::checks {

void register_core(std::vector<CheckDef>& out);
void register_u2(std::vector<CheckDef>& out);
void register_u3(std::vector<CheckDef>& out);
void register_dims(std::vector<CheckDef>& out);
void register_theorems(std::vector<CheckDef>& out);
void register_related(std::vector<CheckDef>& out);

/// Deterministic generator for property-style checks.
class Rng {
public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  int geti(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }

  Rat rat() {
    int num = geti(-9, 9);
    int den = geti(1, 4);
    return Rat(num, den);
  }

  Rat nonzero_rat() {
    Rat r = rat();
    while (r.is_zero()) r = rat();
    return r;
  }

  PolyCoeff poly(int max_deg = 2) {
    PolyCoeff p;
    const int terms = geti(1, 3);
    for (int i = 0; i < terms; ++i)
      p += PolyCoeff::monomial(static_cast<unsigned>(geti(0, max_deg)),
                               static_cast<unsigned>(geti(0, max_deg)), rat());
    return p;
  }

  std::vector<GenIndex> word(int max_len, int max_idx) {
    std::vector<GenIndex> w(static_cast<size_t>(geti(0, max_len)));
    for (auto& i : w) i = geti(-1, max_idx);
    return w;
  }

  PBWMono mono(int deg, int max_idx) {
    std::vector<GenIndex> w(static_cast<size_t>(deg));
    for (auto& i : w) i = geti(-1, max_idx);
    std::sort(w.begin(), w.end(), std::greater<GenIndex>());
    return PBWMono(std::move(w));
  }

  UEAElt uea(int max_deg, int max_idx, int terms) {
    UEAElt t;
    for (int i = 0; i < terms; ++i)
      t += UEAElt::mono(mono(geti(0, max_deg), max_idx), PolyCoeff(rat()));
    return t;
  }

  LieElt lie(int max_idx, int terms) {
    LieElt x;
    for (int i = 0; i < terms; ++i) x.add_term(geti(-1, max_idx), PolyCoeff(rat()));
    return x;
  }

private:
  std::mt19937_64 g_;
};

inline std::string eq_witness(const std::string& label, const std::string& got,
                              const std::string& want) {
  return label + ": got " + got + ", want " + want;
}

inline void expect_eq(CheckContext& c, const UEAElt& got, const UEAElt& want,
                      const std::string& label) {
  c.require(got == want, eq_witness(label, got.str(), want.str()));
}

inline void expect_eq(CheckContext& c, const WeylElt& got, const WeylElt& want,
                      const std::string& label) {
  c.require(got == want, eq_witness(label, got.str(), want.str()));
}

inline void expect_equal_subspace(CheckContext& c, const Subspace& got, const Subspace& want,
                                  const std::string& label) {
  if (equal(got, want)) return;
  std::ostringstream os;
  os << label << ": got dim " << got.dim() << " span {";
  for (const auto& s : got.rendered_basis()) os << " " << s << ";";
  os << " }, want dim " << want.dim() << " span {";
  for (const auto& s : want.rendered_basis()) os << " " << s << ";";
  os << " }";
  c.require(false, os.str());
}

/// e_{-1}^2 as an element.
inline UEAElt em1_sq() { return mul(UEAElt::gen(-1), UEAElt::gen(-1)); }

}  // namespace wittlab::checks
