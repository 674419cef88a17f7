#include <algorithm>

#include "checks_internal.hpp"

namespace wittlab::checks {

using namespace wittlab::elements;

namespace {

void report_machine(CheckContext& c, const MachineResult& res) {
  for (const auto& n : res.notes) c.note(n);
  for (const auto& f : res.failures) c.require(false, f);
}

// ---- Theorem I0: annihilator of the parameter-0 module ----

MachineConfig i0_config(const RunConfig& cfg) {
  MachineConfig m;
  m.label = "degree-2 cross-section for F[0]";
  m.degrees = {2};
  m.J = {SubalgebraId::constant_c};
  m.pattern = JPattern::c_pattern;
  m.i_kind = MachineConfig::IKind::closure_gens;
  m.i_gens = {Z()};
  m.module = ModuleSpec::poly(Rat(0));
  m.max_degree = std::max(4, cfg.max_degree);
  m.max_weight = cfg.max_weight;
  return m;
}

void i0_machine(CheckContext& c) { report_machine(c, machine_check(i0_config(c.cfg()))); }

void i0_ann_eq_ideal(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const ModuleSpec f0 = ModuleSpec::poly(Rat(0));
  // Soundness of the generator.
  expect_eq(c, rep(Z(), LambdaSpec::at(Rat(0))), WeylElt::zero(), "Z annihilates F[0]");
  for (int k = 0; k <= 1; ++k)
    for (int mu = -k; mu <= W; ++mu)
      c.require(ann_slice(f0, k, mu).dim() == 0,
                "degree <= 1 annihilator not trivial at weight " + std::to_string(mu));
  for (int k = 2; k <= 4; ++k) {
    const int mu_hi = k <= 3 ? W : std::min(W, 4);
    const int mu_lo = k <= 3 ? -k : std::max(-k, -4);
    const auto ideal = ideal_buckets({Z()}, k, mu_hi + k);
    for (int mu = mu_lo; mu <= mu_hi; ++mu) {
      const Subspace want = ann_slice(f0, k, mu);
      const Subspace got =
          ideal.count(mu) ? ideal.at(mu) : Subspace(Slice::make(k, mu));
      expect_equal_subspace(c, got, want,
                            "ideal of Z vs annihilator at k=" + std::to_string(k) +
                                ", mu=" + std::to_string(mu));
    }
  }
  c.note("slices k <= 3 across the weight range, k = 4 for |mu| <= 4");
}

void i0_f1_eq_f0(CheckContext& c) {
  const int W = c.cfg().max_weight;
  for (int k = 2; k <= std::min(3, c.cfg().max_degree); ++k)
    for (int mu = -k; mu <= W; ++mu)
      expect_equal_subspace(c, ann_slice(ModuleSpec::poly(Rat(1)), k, mu),
                            ann_slice(ModuleSpec::poly(Rat(0)), k, mu),
                            "annihilators of F[1] and F[0] at k=" + std::to_string(k) +
                                ", mu=" + std::to_string(mu));
  c.note("the two degenerate parameters have identical annihilator slices");
}

// ---- Theorem I2: annihilator of the universal module ----

WeylElt symbol_formula_no_en(int k0, int km1) {
  WeylElt w;
  for (int l = 0; l <= k0; ++l)
    w.add_term({k0 - l, k0 + km1 - l},
               PolyCoeff::monomial(0, static_cast<unsigned>(l), binomial(k0, l)));
  return w;
}

WeylElt symbol_formula_en(int n, int k0, int km1) {
  WeylElt w;
  w.add_term({n + k0 + 1, k0 + km1 + 1}, PolyCoeff(1));
  w.add_term({n, km1}, PolyCoeff::monomial(0, static_cast<unsigned>(k0) + 1, Rat(n + 1)));
  for (int l = 1; l <= k0; ++l)
    w.add_term({n + k0 - l + 1, k0 + km1 - l + 1},
               PolyCoeff::monomial(0, static_cast<unsigned>(l),
                                   binomial(k0, l) + Rat(n + 1) * binomial(k0, l - 1)));
  return w;
}

void i2_symbols_formula(CheckContext& c) {
  for (int k0 = 0; k0 <= 3; ++k0)
    for (int km1 = 0; km1 <= 3; ++km1) {
      std::vector<GenIndex> idx;
      for (int i = 0; i < k0; ++i) idx.push_back(0);
      for (int i = 0; i < km1; ++i) idx.push_back(-1);
      const UEAElt mono = UEAElt::mono(PBWMono(idx), PolyCoeff(1));
      expect_eq(c, lam_deg_symbol(rep(mono, LambdaSpec::formal_Lambda())),
                symbol_formula_no_en(k0, km1),
                "symbol of e_0^" + std::to_string(k0) + " e_-1^" + std::to_string(km1));
      for (int n = 1; n <= 4; ++n) {
        std::vector<GenIndex> jdx = {n};
        jdx.insert(jdx.end(), idx.begin(), idx.end());
        const UEAElt m2 = UEAElt::mono(PBWMono(jdx), PolyCoeff(1));
        expect_eq(c, lam_deg_symbol(rep(m2, LambdaSpec::formal_Lambda())),
                  symbol_formula_en(n, k0, km1),
                  "symbol of e_" + std::to_string(n) + " e_0^" + std::to_string(k0) +
                      " e_-1^" + std::to_string(km1));
      }
    }
  c.note("both displayed symbol formulas for n <= 4, k_0 <= 3, k_{-1} <= 3");
}

void i2_symbol_independence(CheckContext& c) {
  const int kmax = std::min(3, c.cfg().max_degree);
  for (int k = 1; k <= kmax; ++k)
    for (int mu = -k; mu <= c.cfg().max_weight; ++mu) {
      std::vector<WeylElt> symbols;
      for (const auto& m : pbw_monomials(k, mu))
        if (pattern_matches(JPattern::b_pattern, m))
          symbols.push_back(lam_deg_symbol(rep(UEAElt::mono(m, PolyCoeff(1)),
                                               LambdaSpec::formal_Lambda())));
      if (symbols.empty()) continue;
      // Vectorize over (x, d, Lambda-degree) coordinates.
      std::map<std::tuple<int, int, unsigned>, int> keys;
      for (const auto& s : symbols)
        for (const auto& [m, coeff] : s.terms())
          for (const auto& [dL, part] : coeff.split_by_Lambda_degree())
            keys.emplace(std::make_tuple(m.x_pow, m.d_pow, dL), 0);
      int idx = 0;
      for (auto& [key, i] : keys) i = idx++;
      RatMat a(static_cast<Eigen::Index>(keys.size()),
               static_cast<Eigen::Index>(symbols.size()));
      a.setConstant(Rat(0));
      for (size_t j = 0; j < symbols.size(); ++j)
        for (const auto& [m, coeff] : symbols[j].terms())
          for (const auto& [dL, part] : coeff.split_by_Lambda_degree())
            a(keys[std::make_tuple(m.x_pow, m.d_pow, dL)], static_cast<Eigen::Index>(j)) =
                part.constant_value();
      c.require(rank(a) == static_cast<Eigen::Index>(symbols.size()),
                "symbols dependent at degree " + std::to_string(k) + ", weight " +
                    std::to_string(mu));
    }
  c.note("symbols of the cross-section monomials are independent per slice");
}

MachineConfig i2_config(const RunConfig& cfg) {
  MachineConfig m;
  m.label = "degree-2 cross-section for the universal module";
  m.degrees = {2};
  m.J = {SubalgebraId::affine_b};
  m.pattern = JPattern::b_pattern;
  m.i_kind = MachineConfig::IKind::closure_gens;
  m.i_gens = {Qe2()};
  m.module = ModuleSpec::universal();
  m.max_degree = cfg.max_degree;
  m.max_weight = cfg.max_weight;
  return m;
}

void i2_machine(CheckContext& c) { report_machine(c, machine_check(i2_config(c.cfg()))); }

void i2_ann_eq_h2(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const ModuleSpec uni = ModuleSpec::universal();
  expect_eq(c, rep(Qe2(), LambdaSpec::formal_Lambda()), WeylElt::zero(),
            "Q^{e_2} annihilates the universal module");
  for (int k = 0; k <= 1; ++k)
    for (int mu = -k; mu <= W; ++mu)
      c.require(ann_slice(uni, k, mu).dim() == 0,
                "universal annihilator nonzero in degree <= 1 at weight " + std::to_string(mu));
  const auto closure = submodule_closure({Qe2()}, 2, W);
  for (int k = 2; k <= std::min(3, c.cfg().max_degree); ++k) {
    const auto ideal = ideal_buckets({Qe2()}, k, W + k);
    for (int mu = -k; mu <= W; ++mu) {
      const Subspace ann = ann_slice(uni, k, mu);
      const Subspace got = ideal.count(mu) ? ideal.at(mu) : Subspace(Slice::make(k, mu));
      expect_equal_subspace(c, got, ann,
                            "ideal of Q^{e_2} vs universal annihilator at k=" +
                                std::to_string(k) + ", mu=" + std::to_string(mu));
      if (mu < 2)
        c.require(ann.dim() == 0,
                  "universal annihilator nonzero below weight 2 at k=" + std::to_string(k));
      if (k == 2) {
        const Subspace cl =
            closure.count(mu) ? closure.at(mu) : Subspace(Slice::make(2, mu));
        expect_equal_subspace(c, cl, ann,
                              "closure of Q^{e_2} vs universal annihilator at mu=" +
                                  std::to_string(mu));
      }
    }
  }
  c.note("annihilator = ideal of Q^{e_2} (k <= 3), = its module closure at k = 2");
}

// ---- Theorem Il: annihilators at generic parameter ----

MachineConfig il_config(const RunConfig& cfg, const Rat& v) {
  MachineConfig m;
  m.label = "degree-(2,3) cross-section for C+F[" + v.str() + "]";
  m.degrees = {2, 3};
  m.J = {SubalgebraId::affine_b, SubalgebraId::constant_c};
  m.pattern = JPattern::il_pattern;
  m.i_kind = MachineConfig::IKind::ann_of_module;
  m.module = ModuleSpec::aug_plus(v);
  m.max_degree = std::max(3, cfg.max_degree);
  m.max_weight = cfg.max_weight;
  return m;
}

void il_machine(CheckContext& c) {
  for (const Rat& v : c.cfg().lambda_samples) {
    report_machine(c, machine_check(il_config(c.cfg(), v)));
    c.note("multidegree conditions verified at lambda=" + v.str());
  }
}

void il_ann_eq_ideal(CheckContext& c) {
  const int W = c.cfg().max_weight;
  for (const Rat& v : c.cfg().lambda_samples) {
    const ModuleSpec f = ModuleSpec::poly(v);
    const UEAElt qgen = Q() - PolyCoeff(q_of(v)) * UEAElt::one();
    const UEAElt ygen = Y() - PolyCoeff(y_of(v)) * UEAElt::one();
    expect_eq(c, rep(qgen, LambdaSpec::at(v)), WeylElt::zero(), "Q - q annihilates");
    expect_eq(c, rep(ygen, LambdaSpec::at(v)), WeylElt::zero(), "Y - y annihilates");
    for (int k = 0; k <= 1; ++k)
      for (int mu = -k; mu <= W; ++mu)
        c.require(ann_slice(f, k, mu).dim() == 0,
                  "annihilator nonzero in degree <= 1 at lambda=" + v.str());
    {
      const auto ideal2 = ideal_buckets({qgen}, 2, W + 2);
      for (int mu = -2; mu <= W; ++mu) {
        const Subspace got =
            ideal2.count(mu) ? ideal2.at(mu) : Subspace(Slice::make(2, mu));
        expect_equal_subspace(c, got, ann_slice(f, 2, mu),
                              "degree-2 ideal vs annihilator at lambda=" + v.str() +
                                  ", mu=" + std::to_string(mu));
      }
    }
    {
      const auto ideal3 = ideal_buckets({qgen, ygen}, 3, W + 3);
      for (int mu = -3; mu <= W; ++mu) {
        const Subspace got =
            ideal3.count(mu) ? ideal3.at(mu) : Subspace(Slice::make(3, mu));
        expect_equal_subspace(c, got, ann_slice(f, 3, mu),
                              "degree-3 ideal vs annihilator at lambda=" + v.str() +
                                  ", mu=" + std::to_string(mu));
      }
    }
  }
  c.note("annihilator slices equal the ideal of {Q - q, Y - y} for every sample");
}

void il_aug_ideal_eq(CheckContext& c) {
  const int W = c.cfg().max_weight;
  for (const Rat& v : c.cfg().lambda_samples) {
    const ModuleSpec aug = ModuleSpec::aug_plus(v);
    const UEAElt g1 = Qe2();
    const UEAElt g2 = mul(Q() - PolyCoeff(q_of(v)) * UEAElt::one(), UEAElt::gen(-1));
    const UEAElt g3 = Y() - (PolyCoeff(v) - PolyCoeff(Rat(1, 2))) * Q();
    for (const auto* g : {&g1, &g2, &g3}) {
      c.require(rep(*g, LambdaSpec::at(v)).is_zero(), "generator does not annihilate F");
      c.require(counit(*g).is_zero(), "generator has nonzero counit");
    }
    {
      const auto ideal2 = ideal_buckets({g1}, 2, W + 2);
      for (int mu = -2; mu <= W; ++mu) {
        const Subspace got =
            ideal2.count(mu) ? ideal2.at(mu) : Subspace(Slice::make(2, mu));
        expect_equal_subspace(c, got, ann_slice(aug, 2, mu),
                              "degree-2 augmented annihilator at lambda=" + v.str() +
                                  ", mu=" + std::to_string(mu));
      }
    }
    {
      const auto ideal3 = ideal_buckets({g1, g2, g3}, 3, W + 3);
      for (int mu = -3; mu <= W; ++mu) {
        const Subspace got =
            ideal3.count(mu) ? ideal3.at(mu) : Subspace(Slice::make(3, mu));
        expect_equal_subspace(c, got, ann_slice(aug, 3, mu),
                              "degree-3 augmented annihilator at lambda=" + v.str() +
                                  ", mu=" + std::to_string(mu));
      }
    }
  }
  c.note("augmented annihilator = ideal of {Q^{e_2}, (Q-q) e_-1, Y - (lambda-1/2) Q}");
}

void il_i3_decomposition(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const Rat v(2);
  const ModuleSpec aug = ModuleSpec::aug_plus(v);
  const PolyCoeff lh = PolyCoeff(v) - PolyCoeff(Rat(1, 2));
  std::vector<UEAElt> k_gens;
  for (GenIndex n = -1; n <= W; ++n)
    k_gens.push_back(mul(Q() - PolyCoeff(q_of(v)) * UEAElt::one(), UEAElt::gen(n)));
  const auto a = submodule_closure(k_gens, 3, W);
  const auto b = submodule_closure({Y() - lh * Q()}, 3, W);
  const auto d = submodule_closure({mul(Qe2(), UEAElt::gen(-1))}, 3, W);
  const auto h = submodule_closure({Qe2()}, 3, W);
  const int mu_cap = std::max(0, W - 3);
  for (int mu = -mu_cap; mu <= mu_cap; ++mu) {
    Subspace rhs(Slice::make(3, mu));
    for (const auto* fam : {&a, &b, &d, &h})
      if (fam->count(mu)) rhs = sum(rhs, fam->at(mu));
    expect_equal_subspace(c, rhs, ann_slice(aug, 3, mu),
                          "augmented annihilator decomposition at mu=" + std::to_string(mu));
  }
  c.note("annihilator slices split into the four stated families at lambda=2, |mu| <= " +
         std::to_string(mu_cap));
}

void il_x_element(CheckContext& c) {
  const PolyCoeff lam = PolyCoeff::lambda();
  const PolyCoeff lh = lam - PolyCoeff(Rat(1, 2));
  const UEAElt target = q_of(lam) * (Y() - lh * Q());
  const UEAElt x = X_el();
  expect_eq(c, ad(UEAElt::gen(-1), x), target, "ad(e_-1) X = q(lambda)(Y - (lambda-1/2) Q)");
  // Independence of the preimage choice: shift along the lowest weight line.
  const UEAElt shifted = X_el_with(Y1() + mul(Qe2(), UEAElt::gen(-1)));
  expect_eq(c, ad(UEAElt::gen(-1), shifted), target, "X identity for a shifted preimage");
  expect_eq(c, ad(UEAElt::gen(-1), Y1()), Y(), "Y1 is an ad(e_-1)-preimage of Y");
  c.require(Y1().coeff(PBWMono({3, -1, -1})).is_zero(),
            "Y1 normalization coefficient not zero");
  for (const Rat& v : c.cfg().lambda_samples) {
    const UEAElt got = ad(UEAElt::gen(-1), x.eval(v, std::nullopt));
    expect_eq(c, got, target.eval(v, std::nullopt), "X identity at lambda=" + v.str());
  }
  c.note("verified symbolically in lambda and at every sample");
}

void il_deg2_coincidence(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const int mu_cap = std::min(6, W);
  for (const Rat& v : c.cfg().lambda_samples) {
    for (int mu = -mu_cap; mu <= mu_cap; ++mu)
      expect_equal_subspace(c, ann_slice(ModuleSpec::poly(Rat(1) - v), 2, mu),
                            ann_slice(ModuleSpec::poly(v), 2, mu),
                            "degree-2 annihilators at lambda and 1-lambda, mu=" +
                                std::to_string(mu));
  }
  c.note("degree-2 annihilator slices cannot distinguish lambda from 1 - lambda");
}

void il_deg3_witness(CheckContext& c) {
  for (const Rat& v : c.cfg().lambda_samples) {
    if (v == Rat(1) - v) {
      c.note("lambda=" + v.str() + " is self-paired; sign witness not applicable");
      continue;
    }
    const UEAElt yv = Y() - PolyCoeff(y_of(v)) * UEAElt::one();
    const UEAElt yv1 = Y() + PolyCoeff(y_of(v)) * UEAElt::one();  // = Y - y(1-lambda)
    const Subspace ann_v = ann_slice(ModuleSpec::poly(v), 3, 0);
    const Subspace ann_1v = ann_slice(ModuleSpec::poly(Rat(1) - v), 3, 0);
    c.require(ann_v.contains(yv), "Y - y(lambda) missing at lambda=" + v.str());
    c.require(ann_1v.contains(yv1), "Y + y(lambda) missing at 1-lambda=" + (Rat(1) - v).str());
    c.require(!ann_v.contains(yv1), "Y + y(lambda) should separate the annihilators");
    c.require(!equal(ann_v, ann_1v),
              "degree-3 annihilator slices coincide at lambda=" + v.str());
  }
  c.note("the sign of y(lambda) separates the degree-3 slices for unequal pairs");
}

void il_deg3_necessity(CheckContext& c) {
  for (const Rat& v : c.cfg().lambda_samples) {
    const UEAElt qgen = Q() - PolyCoeff(q_of(v)) * UEAElt::one();
    const UEAElt ygen = Y() - PolyCoeff(y_of(v)) * UEAElt::one();
    const Subspace deg2_ideal = ideal_slice({qgen}, 3, 0);
    const Subspace ann = ann_slice(ModuleSpec::poly(v), 3, 0);
    c.require(ann.contains(ygen), "Y - y not in the annihilator at lambda=" + v.str());
    c.require(!deg2_ideal.contains(ygen),
              "Y - y lies in the ideal of the degree-2 part at lambda=" + v.str());
    const Subspace joined = sum(deg2_ideal, Subspace::span(deg2_ideal.slice(), {ygen}));
    expect_equal_subspace(c, joined, ann,
                          "degree-2 ideal plus Y - y fills the slice at lambda=" + v.str());
  }
  c.note("generation genuinely requires degree 3 at every sample");
}

void il_degenerate_contrast(CheckContext& c) {
  const Subspace a0 = ann_slice(ModuleSpec::poly(Rat(0)), 2, 1);
  c.require(a0.dim() == 1 && a0.contains(Z()),
            "degenerate annihilator at weight 1 is not the line of Z");
  c.require(ann_slice(ModuleSpec::poly(Rat(2)), 2, 1).dim() == 0,
            "generic annihilator has an unexpected weight-1 degree-2 element");
  c.note("weight-1 degree-2 slice separates the degenerate and generic parameters");
}

void il_rep_row(CheckContext& c) {
  const PolyCoeff qlam = q_of(PolyCoeff::lambda());
  for (GenIndex n = 0; n <= 6; ++n) {
    const UEAElt t = mul(UEAElt::gen(n), UEAElt::gen(0)) - UEAElt::gen(n) -
                     mul(UEAElt::gen(n + 1), UEAElt::gen(-1));
    expect_eq(c, rep(t, LambdaSpec::formal_lambda()),
              WeylElt::mono({n, 0}, qlam * PolyCoeff(Rat(n + 1))),
              "row identity at n=" + std::to_string(n));
  }
  c.note("e_n e_0 - e_n - e_{n+1} e_-1 acts by q(lambda)(n+1) x^n");
}

// ---- sl2 restriction ----

void sl2_machine(CheckContext& c) {
  MachineConfig m;
  m.label = "degree-2 cross-section for F[2] under the projective subalgebra";
  m.degrees = {2};
  m.J = {SubalgebraId::span_e1_em1};
  m.pattern = JPattern::sl2_pattern;
  m.i_kind = MachineConfig::IKind::explicit_span;
  m.i_gens = {Q() - PolyCoeff(q_of(Rat(2))) * UEAElt::one()};
  m.module = ModuleSpec::poly(Rat(2));
  m.max_degree = std::max(4, c.cfg().max_degree);
  m.max_weight = 4;
  m.ambient = SubalgebraId::projective_a;
  report_machine(c, machine_check(m));
}

}  // namespace

void register_theorems(std::vector<CheckDef>& out) {
  out.push_back({"thm-i0", "machine-conditions",
                 "single-degree cross-section conditions for the parameter-0 module",
                 i0_machine});
  out.push_back({"thm-i0", "ann-eq-ideal",
                 "annihilator slices of F[0] equal the ideal slices of Z", i0_ann_eq_ideal});
  out.push_back({"thm-i0", "F1-eq-F0", "F[1] and F[0] have the same annihilator slices",
                 i0_f1_eq_f0});
  out.push_back({"thm-i2", "symbols-formula",
                 "(Lambda, d)-symbols of the cross-section monomials match the closed forms",
                 i2_symbols_formula});
  out.push_back({"thm-i2", "symbol-independence",
                 "cross-section symbols are linearly independent per slice",
                 i2_symbol_independence});
  out.push_back({"thm-i2", "machine-conditions",
                 "single-degree cross-section conditions for the universal module", i2_machine});
  out.push_back({"thm-i2", "ann-eq-H2",
                 "universal annihilator = ideal of Q^{e_2}, zero below weight 2", i2_ann_eq_h2});
  out.push_back({"thm-il", "machine-conditions",
                 "multidegree cross-section conditions for the augmented modules", il_machine});
  out.push_back({"thm-il", "ann-eq-ideal",
                 "annihilator slices equal the ideal of {Q - q(lambda), Y - y(lambda)}",
                 il_ann_eq_ideal});
  out.push_back({"thm-il", "aug-ideal-eq",
                 "augmented annihilator equals the ideal of its three generators",
                 il_aug_ideal_eq});
  out.push_back({"thm-il", "i3-decomposition",
                 "augmented annihilator slices split into the four module families",
                 il_i3_decomposition});
  out.push_back({"thm-il", "x-element",
                 "ad(e_-1) X = q(lambda)(Y - (lambda - 1/2) Q), preimage-independent",
                 il_x_element});
  out.push_back({"thm-il", "deg2-coincidence",
                 "degree-2 annihilator slices agree for lambda and 1 - lambda",
                 il_deg2_coincidence});
  out.push_back({"thm-il", "deg3-witness",
                 "Y - y(lambda) versus Y + y(lambda) separates the degree-3 slices",
                 il_deg3_witness});
  out.push_back({"thm-il", "deg3-necessity",
                 "the degree-2 part does not generate: Y - y is new in degree 3",
                 il_deg3_necessity});
  out.push_back({"thm-il", "degenerate-contrast",
                 "weight-1 degree-2 annihilator separates parameter 0 from 2",
                 il_degenerate_contrast});
  out.push_back({"thm-il", "rep-row-identity",
                 "e_n e_0 - e_n - e_{n+1} e_-1 acts by q(lambda)(n+1) x^n", il_rep_row});
  out.push_back({"sl2-verma", "machine-conditions",
                 "cross-section conditions for the restriction to the projective subalgebra",
                 sl2_machine});
}

}  // namespace wittlab::checks
