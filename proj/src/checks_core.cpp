#include <algorithm>

#include "checks_internal.hpp"

namespace wittlab::checks {

namespace {

void rat_normalized(CheckContext& c) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rat a = rng.rat(), b = rng.rat();
    Rat r;
    switch (rng.geti(0, 2)) {
      case 0: r = a + b; break;
      case 1: r = a * b; break;
      default: r = b.is_zero() ? a : a / b; break;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    c.require(g == 1, "gcd(num, den) != 1 for " + r.str());
    c.require(r.den() > 0, "denominator not positive for " + r.str());
    c.require(Rat::parse(r.str()) == r, "parse round-trip failed for " + r.str());
  }
  c.require(Rat::parse("-3/6") == Rat(-1, 2), "parse -3/6");
  c.note("200 random operations normalized");
}

void poly_eval_hom(CheckContext& c) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const PolyCoeff p = rng.poly(), q = rng.poly();
    const Rat vl = rng.rat(), vL = rng.rat();
    const auto ev = [&](const PolyCoeff& t) { return t.eval(vl, vL).constant_value(); };
    c.require(ev(p + q) == ev(p) + ev(q), "eval not additive: " + p.str() + ", " + q.str());
    c.require(ev(p * q) == ev(p) * ev(q), "eval not multiplicative: " + p.str() + ", " + q.str());
  }
  c.note("100 random evaluation points");
}

void bracket_oracle(CheckContext& c) {
  // Validate the structure constants against operator commutators: the
  // differential-operator model is built directly, not through the bracket.
  for (GenIndex m = -1; m <= 8; ++m)
    for (GenIndex n = -1; n <= 8; ++n) {
      const WeylElt em = WeylElt::mono({m + 1, 1}, PolyCoeff(1));
      const WeylElt en = WeylElt::mono({n + 1, 1}, PolyCoeff(1));
      const WeylElt comm = weyl_mul(em, en) - weyl_mul(en, em);
      WeylElt want;
      if (m != n) want = WeylElt::mono({m + n + 1, 1}, PolyCoeff(Rat(n - m)));
      expect_eq(c, comm, want,
                "operator commutator at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      const LieElt b = bracket_basis(m, n);
      LieElt want_b;
      if (m != n) want_b = LieElt::gen(m + n, PolyCoeff(Rat(n - m)));
      c.require(b == want_b, "bracket_basis mismatch at (" + std::to_string(m) + "," +
                                 std::to_string(n) + ")");
    }
  c.note("all pairs with indices <= 8");
}

void bracket_antisymmetry(CheckContext& c) {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const LieElt x = rng.lie(8, 3), y = rng.lie(8, 3);
    c.require(bracket(x, y) == -bracket(y, x), "antisymmetry: " + x.str() + ", " + y.str());
    c.require(bracket(x, x).is_zero(), "bracket(x, x) != 0: " + x.str());
  }
  c.note("50 random pairs");
}

void bracket_jacobi(CheckContext& c) {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const LieElt x = rng.lie(8, 2), y = rng.lie(8, 2), z = rng.lie(8, 2);
    const LieElt j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
    c.require(j.is_zero(), "jacobi failed: " + x.str() + "; " + y.str() + "; " + z.str());
  }
  c.note("50 random triples");
}

void euler_weights(CheckContext& c) {
  for (GenIndex n = -1; n <= 10; ++n) {
    const LieElt got = bracket(LieElt::gen(0), LieElt::gen(n));
    const LieElt want = LieElt::gen(n, PolyCoeff(Rat(n)));
    c.require(got == want, "[e_0, e_" + std::to_string(n) + "] != n e_n");
  }
}

void pbw_confluence(CheckContext& c) {
  Rng rng(15);
  int tested = 0;
  while (tested < 100) {
    std::vector<GenIndex> w = rng.word(5, 6);
    if (w.size() < 2) continue;
    ++tested;
    const size_t i = static_cast<size_t>(rng.geti(0, static_cast<int>(w.size()) - 2));
    // e_a e_b = e_b e_a + (b - a) e_{a+b} applied at position i before reducing.
    std::vector<GenIndex> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    std::vector<GenIndex> contracted;
    contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<long>(i));
    contracted.push_back(w[i] + w[i + 1]);
    contracted.insert(contracted.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    const UEAElt lhs = nf_word(w);
    const UEAElt rhs = nf_word(swapped) + nf_word(contracted, PolyCoeff(Rat(w[i + 1] - w[i])));
    c.require(lhs == rhs, "confluence failed for a length-" + std::to_string(w.size()) + " word");
  }
  c.note("100 random words, length <= 5, indices <= 6");
}

void mul_associativity(CheckContext& c) {
  Rng rng(16);
  for (int i = 0; i < 50; ++i) {
    const UEAElt a = rng.uea(2, 5, 2), b = rng.uea(2, 5, 2), x = rng.uea(2, 5, 2);
    expect_eq(c, mul(mul(a, b), x), mul(a, mul(b, x)), "associativity");
  }
  c.note("50 random degree <= 2 triples");
}

void graded_commutativity(CheckContext& c) {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    // Weight-homogeneous elements: scaled single-weight sums.
    UEAElt a, b;
    const int wa = rng.geti(-2, 4), wb = rng.geti(-2, 4);
    const int ka = rng.geti(1, 2), kb = rng.geti(1, 2);
    for (const auto& m : pbw_monomials(ka, wa)) a += UEAElt::mono(m, PolyCoeff(rng.rat()));
    for (const auto& m : pbw_monomials(kb, wb)) b += UEAElt::mono(m, PolyCoeff(rng.rat()));
    const SymElt lhs = proj_top(a, ka) * proj_top(b, kb);
    const SymElt rhs = proj_top(mul(a, b), ka + kb);
    c.require(lhs == rhs, "graded commutativity at degrees (" + std::to_string(ka) + "," +
                              std::to_string(kb) + ")");
  }
  c.note("40 random weight-homogeneous pairs");
}

void sym_right_inverse(CheckContext& c) {
  Rng rng(18);
  for (int i = 0; i < 40; ++i) {
    const int k = rng.geti(2, 3);
    SymElt s;
    for (int t = 0; t < 3; ++t) s += SymElt::mono(rng.mono(k, 5), PolyCoeff(rng.rat()));
    const SymElt back = proj_top(sym_k(s, k), k);
    c.require(back == s, "proj_top(sym_k(s)) != s at degree " + std::to_string(k));
  }
  c.note("40 random symmetric elements of degrees 2 and 3");
}

void transpose_involution(CheckContext& c) {
  Rng rng(19);
  for (int i = 0; i < 30; ++i) {
    const UEAElt a = rng.uea(3, 5, 3), b = rng.uea(2, 5, 2);
    expect_eq(c, transpose(transpose(a)), a, "involution");
    expect_eq(c, transpose(mul(a, b)), mul(transpose(b), transpose(a)), "anti-automorphism");
  }
  for (int i = 0; i < 20; ++i) {
    const int k = rng.geti(1, 3);
    SymElt s;
    for (int t = 0; t < 2; ++t) s += SymElt::mono(rng.mono(k, 5), PolyCoeff(rng.rat()));
    const UEAElt u = sym_k(s, k);
    const UEAElt want = k % 2 == 0 ? u : -u;
    expect_eq(c, transpose(u), want, "parity on the symmetrized component");
  }
  c.note("involution, anti-automorphism, parity on sym images");
}

void transpose_ad_invariant(CheckContext& c) {
  Rng rng(20);
  for (int i = 0; i < 30; ++i) {
    const UEAElt x = UEAElt::from_lie(rng.lie(5, 2));
    const UEAElt t = rng.uea(3, 5, 3);
    expect_eq(c, transpose(ad(x, t)), ad(x, transpose(t)), "ad-invariance of transpose");
  }
  c.note("30 random pairs");
}

void sym_formulas(CheckContext& c) {
  for (GenIndex a = -1; a <= 4; ++a)
    for (GenIndex b = -1; b <= 4; ++b) {
      {
        UEAElt want = sym_k(SymElt::mono(PBWMono::gen(a).merged(PBWMono::gen(b)), PolyCoeff(1)), 2);
        if (a != b)
          want += sym_k(SymElt::mono(PBWMono::gen(a + b), PolyCoeff(Rat(b - a, 2))), 1);
        expect_eq(c, mul(UEAElt::gen(a), UEAElt::gen(b)), want,
                  "quadratic symmetrizer formula at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
      }
      {
        const PBWMono abb = PBWMono::gen(a).merged(PBWMono::gen(b)).merged(PBWMono::gen(b));
        UEAElt want = sym_k(SymElt::mono(abb, PolyCoeff(1)), 3);
        if (b != a)
          want += sym_k(SymElt::mono(PBWMono::gen(b).merged(PBWMono::gen(a + b)),
                                     PolyCoeff(Rat(b - a))), 2);
        const Rat cubic = Rat(-a) * Rat(b - a) / Rat(6);
        if (!cubic.is_zero())
          want += sym_k(SymElt::mono(PBWMono::gen(a + 2 * b), PolyCoeff(cubic)), 1);
        const UEAElt got = mul(UEAElt::gen(a), mul(UEAElt::gen(b), UEAElt::gen(b)));
        expect_eq(c, got, want,
                  "cubic symmetrizer formula at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
      }
    }
  c.note("all pairs -1 <= a, b <= 4");
}

void weight_split_check(CheckContext& c) {
  Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const UEAElt t = rng.uea(3, 5, 4);
    UEAElt total;
    for (const auto& [w, part] : t.weight_split()) {
      total += part;
      expect_eq(c, ad(UEAElt::gen(0), part), PolyCoeff(Rat(w)) * part,
                "weight part at " + std::to_string(w));
    }
    expect_eq(c, total, t, "weight parts do not sum back");
  }
  c.note("30 random elements");
}

void rep_morphism(CheckContext& c) {
  Rng rng(22);
  const std::vector<LambdaSpec> specs = {LambdaSpec::at(Rat(2)), LambdaSpec::formal_lambda(),
                                         LambdaSpec::formal_Lambda()};
  for (int i = 0; i < 50; ++i) {
    const UEAElt a = rng.uea(2, 4, 2), b = rng.uea(2, 4, 2);
    const auto& spec = specs[static_cast<size_t>(i % 3)];
    expect_eq(c, rep(mul(a, b), spec), weyl_mul(rep(a, spec), rep(b, spec)), "morphism");
  }
  c.note("50 random degree <= 2 pairs across rational and formal parameters");
}

void rep_weight_shift(CheckContext& c) {
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    const int w = rng.geti(-2, 4);
    UEAElt t;
    for (const auto& m : pbw_monomials(rng.geti(1, 3), w)) t += UEAElt::mono(m, PolyCoeff(rng.rat()));
    if (t.is_zero()) continue;
    const Rat mu = rng.rat();
    const auto img = apply(rep(t, LambdaSpec::at(Rat(1, 3))), mu);
    for (const auto& [ex, coeff] : img)
      c.require(ex == mu + Rat(w), "weight-" + std::to_string(w) +
                                       " element moved exponent " + mu.str() + " to " + ex.str());
  }
  c.note("30 random weight-homogeneous elements");
}

void rep_filtration_bound(CheckContext& c) {
  Rng rng(24);
  for (int i = 0; i < 30; ++i) {
    const UEAElt t = rng.uea(3, 5, 3);
    const WeylElt w = rep(t, LambdaSpec::formal_Lambda());
    for (const auto& [m, coeff] : w.terms())
      for (const auto& [dL, part] : coeff.split_by_Lambda_degree())
        c.require(static_cast<int>(dL) + m.d_pow <= t.degree(),
                  "total (Lambda, d) degree exceeds element degree");
  }
  c.note("30 random degree <= 3 elements");
}

void weyl_defining(CheckContext& c) {
  expect_eq(c, weyl_mul(WeylElt::d(), WeylElt::x()),
            WeylElt::mono({1, 1}, PolyCoeff(1)) + WeylElt::one(), "d x = x d + 1");
  expect_eq(c, weyl_mul(WeylElt::d(2), WeylElt::x()),
            WeylElt::mono({1, 2}, PolyCoeff(1)) + PolyCoeff(2) * WeylElt::d(), "d^2 x");
  expect_eq(c, weyl_mul(WeylElt::x(2), WeylElt::d(2)), WeylElt::mono({2, 2}, PolyCoeff(1)),
            "x^2 d^2 already ordered");
  Rng rng(25);
  for (int i = 0; i < 30; ++i) {
    auto w = [&] {
      WeylElt u;
      for (int t = 0; t < 2; ++t)
        u.add_term({rng.geti(0, 3), rng.geti(0, 3)}, PolyCoeff(rng.rat()));
      return u;
    };
    const WeylElt a = w(), b = w(), d = w();
    expect_eq(c, weyl_mul(weyl_mul(a, b), d), weyl_mul(a, weyl_mul(b, d)),
              "weyl_mul associativity");
  }
  c.note("defining relation and 30 associativity triples");
}

void lwv_action_form(CheckContext& c) {
  for (int k = 2; k <= std::min(3, c.cfg().max_degree); ++k)
    for (int n = -k; n <= c.cfg().max_weight; ++n) {
      const Subspace l = lws(k, n);
      for (int i = 0; i < l.dim(); ++i) {
        const WeylElt w = rep(l.basis_elt(i), LambdaSpec::formal_Lambda());
        if (n > 0) {
          c.require(w.is_zero(), "positive-weight lowest weight element acts nonzero at weight " +
                                     std::to_string(n) + ": " + w.str());
        } else {
          for (const auto& [m, coeff] : w.terms())
            c.require(m.x_pow == 0 && m.d_pow == -n,
                      "action of weight-" + std::to_string(n) +
                          " lowest weight element is not a multiple of d^|n|: " + w.str());
        }
      }
    }
  c.note("lowest weight elements at degrees 2..3 across the weight range");
}

void zero_sum_preservation(CheckContext& c) {
  Rng rng(26);
  for (int i = 0; i < 40; ++i) {
    const int k = rng.geti(1, 3), w = rng.geti(-k, 5);
    const auto monos = pbw_monomials(k, w);
    if (monos.size() < 2) continue;
    // Random weight-homogeneous combination with coefficients summing to zero.
    SymElt s;
    Rat sum(0);
    for (size_t j = 0; j + 1 < monos.size(); ++j) {
      const Rat r = rng.rat();
      sum += r;
      s += SymElt::mono(monos[j], PolyCoeff(r));
    }
    s += SymElt::mono(monos.back(), PolyCoeff(-sum));
    const SymElt img = ad_sym(-1, s);
    Rat img_sum(0);
    for (const auto& [m, coeff] : img.terms()) img_sum += coeff.constant_value();
    c.require(img_sum.is_zero(), "zero-sum combination not preserved at degree " +
                                     std::to_string(k) + ", weight " + std::to_string(w));
    // ad_sym agrees with the adjoint action through the symmetrizer.
    const GenIndex n = rng.geti(-1, 3);
    expect_eq(c, sym_k(ad_sym(n, s), k), ad(UEAElt::gen(n), sym_k(s, k)),
              "ad_sym vs adjoint action through sym");
  }
  c.note("40 random zero-sum weight-homogeneous combinations");
}

void transpose_duality(CheckContext& c) {
  const std::vector<Rat> vs = {Rat(0), Rat(2), Rat(1, 2)};
  const int kmax = std::min(3, c.cfg().max_degree);
  const int mu_max = std::max(0, c.cfg().max_weight - 2);
  for (const Rat& v : vs)
    for (int k = 2; k <= kmax; ++k)
      for (int mu = -mu_max; mu <= mu_max; ++mu) {
        const Subspace a = ann_slice(ModuleSpec::poly(v), k, mu);
        std::vector<UEAElt> transposed;
        for (int i = 0; i < a.dim(); ++i) transposed.push_back(transpose(a.basis_elt(i)));
        const Subspace lhs = Subspace::span(Slice::make(k, mu), transposed);
        const Subspace rhs = ann_slice(ModuleSpec::poly(Rat(1) - v), k, mu);
        expect_equal_subspace(c, lhs, rhs,
                              "transpose duality at lambda=" + v.str() + ", k=" +
                                  std::to_string(k) + ", mu=" + std::to_string(mu));
      }
  c.note("lambda in {0, 2, 1/2}, k <= " + std::to_string(kmax) + ", |mu| <= " +
         std::to_string(mu_max));
}

void module_variant_agreement(CheckContext& c) {
  const std::vector<Rat> vs = {Rat(0), Rat(2)};
  const int kmax = std::min(3, c.cfg().max_degree);
  const int mu_max = std::max(0, c.cfg().max_weight - 2);
  for (const Rat& v : vs)
    for (int k = 2; k <= kmax; ++k)
      for (int mu = -mu_max; mu <= mu_max; ++mu) {
        const Subspace a = ann_slice(ModuleSpec::poly(v), k, mu);
        const Subspace b = ann_slice(ModuleSpec::neg_poly(v), k, mu);
        const Subspace d = ann_slice(ModuleSpec::offset(Rat(1, 2), v), k, mu);
        expect_equal_subspace(c, b, a, "negative-monomial module at lambda=" + v.str() +
                                           ", k=" + std::to_string(k) + ", mu=" + std::to_string(mu));
        expect_equal_subspace(c, d, a, "offset module at lambda=" + v.str() + ", k=" +
                                           std::to_string(k) + ", mu=" + std::to_string(mu));
      }
  c.note("polynomial, negative, and offset realizations agree; |mu| <= " +
         std::to_string(mu_max));
}

}  // namespace

void register_core(std::vector<CheckDef>& out) {
  auto add = [&](const std::string& name, const std::string& desc, auto fn) {
    out.push_back({"core", name, desc, fn});
  };
  add("rat-normalized", "rational arithmetic stays in lowest terms with positive denominators",
      rat_normalized);
  add("poly-eval-hom", "polynomial evaluation is a ring homomorphism on random inputs",
      poly_eval_hom);
  add("bracket-oracle",
      "structure constants [e_m, e_n] = (n-m) e_{m+n} match operator commutators",
      bracket_oracle);
  add("bracket-antisymmetry", "bracket is antisymmetric on random elements",
      bracket_antisymmetry);
  add("bracket-jacobi", "Jacobi identity on random triples", bracket_jacobi);
  add("euler-weights", "[e_0, e_n] = n e_n for -1 <= n <= 10", euler_weights);
  add("pbw-confluence", "normal form is invariant under single rewrite steps", pbw_confluence);
  add("mul-associativity", "product of normal forms is associative", mul_associativity);
  add("graded-commutativity", "top symbols multiply commutatively", graded_commutativity);
  add("sym-right-inverse", "top symbol of sym_k is the identity on S^k", sym_right_inverse);
  add("transpose-involution",
      "transpose is an involutive anti-automorphism acting by (-1)^k on sym images",
      transpose_involution);
  add("transpose-ad-invariant", "transpose commutes with the adjoint action",
      transpose_ad_invariant);
  add("sym-formulas",
      "e_a e_b and e_a e_b^2 equal their symmetrized expansions for -1 <= a, b <= 4",
      sym_formulas);
  add("weight-split", "weight parts are ad(e_0) eigenvectors and sum back", weight_split_check);
  add("rep-morphism", "the density action is an algebra morphism into the Weyl algebra",
      rep_morphism);
  add("rep-weight-shift", "weight-w elements shift monomial exponents by w", rep_weight_shift);
  add("rep-filtration-bound",
      "degree <= k elements act by operators of total (Lambda, d) degree <= k",
      rep_filtration_bound);
  add("weyl-defining", "d x = x d + 1 and normal-ordered products associate", weyl_defining);
  add("lwv-action-form",
      "lowest weight elements act by 0 (weight > 0) or multiples of d^|n| (weight <= 0)",
      lwv_action_form);
  add("zero-sum-preservation",
      "ad(e_{-1}) preserves zero-coefficient-sum symmetric combinations", zero_sum_preservation);
  add("transpose-duality",
      "transpose of the annihilator slice of F[v] is the annihilator slice of F[1-v]",
      transpose_duality);
  add("module-variant-agreement",
      "annihilator slices agree across polynomial, negative, and offset realizations",
      module_variant_agreement);
}

}  // namespace wittlab::checks
