#include "checks_internal.hpp"

namespace wittlab::checks {

using namespace wittlab::elements;

namespace {

void sw_g_to_qe2(CheckContext& c) {
  expect_eq(c, ad_pow(UEAElt::gen(-1), 4, g_sw()), PolyCoeff(24) * Qe2(),
            "ad(e_-1)^4 g");
}

void sw_h0_to_z(CheckContext& c) {
  expect_eq(c, ad_pow(UEAElt::gen(-1), 3, h0_sw()), PolyCoeff(-24) * Z(), "ad(e_-1)^3 h_0");
}

void sw_h1_identity(CheckContext& c) {
  const PolyCoeff lam = PolyCoeff::lambda();
  const UEAElt want = PolyCoeff(720) * mul(Q() - q_of(lam) * UEAElt::one(), UEAElt::gen(0)) -
                      PolyCoeff(480) * (Y() - (lam - PolyCoeff(Rat(1, 2))) * Q());
  expect_eq(c, ad_pow(UEAElt::gen(-1), 5, h1_sw()), want,
            "ad(e_-1)^5 h_1 as a polynomial identity in lambda");
}

void sw_symmetric_membership(CheckContext& c) {
  for (const auto* named : {&g_sw(), &h0_sw()}) {
    const auto comps = sym_decompose(*named);
    for (size_t j = 0; j + 1 < comps.size(); ++j)
      c.require(comps[j].is_zero(), "quadratic generator has a stray degree-" +
                                        std::to_string(j) + " component");
  }
  // h_1 symmetrizes to a cubic with specific quadratic and linear corrections.
  const PolyCoeff lam = PolyCoeff::lambda();
  const auto comps = sym_decompose(h1_sw());
  c.require(comps.size() == 4, "h_1 does not have degree 3");
  SymElt want3;
  want3 += SymElt::mono(PBWMono({2, 2, 1}), PolyCoeff(1));
  want3 += SymElt::mono(PBWMono({3, 1, 1}), PolyCoeff(-1));
  SymElt want2;
  want2 += SymElt::mono(PBWMono({3, 2}), PolyCoeff(2) * (lam - PolyCoeff(Rat(1, 2))));
  want2 += SymElt::mono(PBWMono({4, 1}), PolyCoeff(-2) * (lam - PolyCoeff(Rat(1, 2))));
  SymElt want1 = SymElt::mono(PBWMono({5}), -(q_of(lam) - PolyCoeff(Rat(1, 3))));
  c.require(comps[3] == want3, "cubic component of h_1: " + comps[3].str());
  c.require(comps[2] == want2, "quadratic component of h_1: " + comps[2].str());
  c.require(comps[1] == want1, "linear component of h_1: " + comps[1].str());
  c.require(comps[0].is_zero(), "constant component of h_1: " + comps[0].str());
  c.note("g and h_0 are symmetric quadratics; h_1 matches its symmetrized form");
}

void bf_recursion(CheckContext& c) {
  const int kmax = std::min(8, c.cfg().max_weight);
  const int smax = kmax;
  int verified = 0;
  for (int m = 0; m <= 6; ++m)
    for (int k = m - 1; k <= kmax; ++k)
      for (int s = -1; s <= smax; ++s) {
        if (k + 1 - m < 0) continue;
        const UEAElt lhs = ad(UEAElt::gen(-1), omega(m, k, s));
        UEAElt rhs;
        if (k + 1 - m > 0) rhs += PolyCoeff(Rat(k + 1 - m)) * omega(m, k - 1, s);
        if (s + 1 > 0) rhs += PolyCoeff(Rat(s + 1)) * omega(m, k, s - 1);
        ++verified;
        if (!(lhs == rhs)) {
          c.require(false, "recursion fails at (m,k,s)=(" + std::to_string(m) + "," +
                               std::to_string(k) + "," + std::to_string(s) + ")");
          return;
        }
      }
  c.note(std::to_string(verified) + " admissible triples verified");
}

void bf_odd_vanishing(CheckContext& c) {
  expect_eq(c, omega(3, 2, -1), UEAElt::zero(), "Omega^(3)_{2,-1}");
  expect_eq(c, omega(5, 4, -1), UEAElt::zero(), "Omega^(5)_{4,-1}");
}

void bf_even_lwv(CheckContext& c) {
  expect_eq(c, omega(2, 1, -1), PolyCoeff(-2) * Q(), "Omega^(2)_{1,-1}");
  for (int m = 4; m <= 6; m += 2) {
    const UEAElt om = omega(m, m - 1, -1);
    const UEAElt step = ad_pow(S(), static_cast<unsigned>(m / 2), em1_sq());
    c.require(!om.is_zero(), "Omega^(" + std::to_string(m) + ")_{m-1,-1} vanishes");
    const Slice s = Slice::make(2, m - 2);
    const Subspace both = Subspace::span(s, {om, step});
    c.require(both.dim() == 1, "Omega^(" + std::to_string(m) +
                                   ")_{m-1,-1} is not proportional to the step orbit element");
  }
  c.note("even cases are nonzero multiples of ad(S)^{m/2} e_{-1}^2");
}

void bf_h_omega_span(CheckContext& c) {
  const int W = c.cfg().max_weight;
  for (int l = 0; l <= 2; ++l) {
    const auto h = l == 0
                       ? submodule_closure({Z()}, 2, W)
                       : submodule_closure({ad_pow(S(), static_cast<unsigned>(l) + 1, em1_sq())},
                                           2, W);
    // The m = 1 family is excluded: those combinations leave the degree-2
    // symmetric component.
    const int m_lo = std::max(2, 2 * l + 1);
    for (int mu = 2 * l - 2; mu <= W; ++mu) {
      std::vector<UEAElt> omegas;
      for (int m = m_lo; m <= mu + 2; ++m)
        for (int k = m - 1; k <= mu + 1; ++k) {
          const int s = mu - k;
          if (s < -1) continue;
          omegas.push_back(omega(m, k, s));
        }
      const Subspace want = h.count(mu) ? h.at(mu) : Subspace(Slice::make(2, mu));
      const Subspace got = Subspace::span(Slice::make(2, mu), omegas);
      expect_equal_subspace(c, got, want,
                            "span of the Omega family at l=" + std::to_string(l) +
                                ", mu=" + std::to_string(mu));
    }
  }
  c.note("Omega spans match the module tails for l in {0, 1, 2}");
}

}  // namespace

void register_related(std::vector<CheckDef>& out) {
  out.push_back({"related-sw", "g-to-Qe2", "ad(e_-1)^4 g = 24 Q^{e_2}", sw_g_to_qe2});
  out.push_back({"related-sw", "h0-to-Z", "ad(e_-1)^3 h_0 = -24 Z", sw_h0_to_z});
  out.push_back({"related-sw", "h1-identity",
                 "ad(e_-1)^5 h_1 = 720 (Q - q) e_0 - 480 (Y - (lambda - 1/2) Q)",
                 sw_h1_identity});
  out.push_back({"related-sw", "symmetric-membership",
                 "g, h_0, h_1 decompose into their stated symmetric components",
                 sw_symmetric_membership});
  out.push_back({"related-bf", "omega-recursion",
                 "ad(e_-1) Omega = (k+1-m) Omega_{k-1,s} + (s+1) Omega_{k,s-1}", bf_recursion});
  out.push_back({"related-bf", "omega-odd-vanishing",
                 "Omega^(m)_{m-1,-1} = 0 for odd m >= 3", bf_odd_vanishing});
  out.push_back({"related-bf", "omega-even-lwv",
                 "Omega^(2)_{1,-1} = -2Q; even cases are step-orbit multiples", bf_even_lwv});
  out.push_back({"related-bf", "H-omega-span",
                 "the Omega families span the module tails weight by weight", bf_h_omega_span});
}

}  // namespace wittlab::checks
