#include <algorithm>

#include "checks_internal.hpp"

namespace wittlab::checks {

using namespace wittlab::elements;

namespace {

// ---- u2 ----

void step_to_casimir(CheckContext& c) {
  expect_eq(c, PolyCoeff(Rat(-1, 48)) * ad(S(), em1_sq()), Q(), "-(1/48) ad(S) e_{-1}^2");
}

void step_sq_to_qe2(CheckContext& c) {
  expect_eq(c, PolyCoeff(Rat(-1, 96)) * ad_pow(S(), 2, em1_sq()), Qe2(),
            "-(1/96) ad(S)^2 e_{-1}^2");
  expect_eq(c, ad(UEAElt::gen(2), Q()), Qe2(), "ad(e_2) Q");
}

void ad_z_eq_q(CheckContext& c) {
  expect_eq(c, ad(UEAElt::gen(-1), Z()), Q(), "ad(e_-1) Z");
}

void ad_e1_q(CheckContext& c) {
  expect_eq(c, ad(UEAElt::gen(1), Q()), UEAElt::zero(), "ad(e_1) Q");
  expect_eq(c, ad(UEAElt::gen(-1), Q()), UEAElt::zero(), "ad(e_-1) Q");
  expect_eq(c, ad(UEAElt::gen(0), Q()), UEAElt::zero(), "ad(e_0) Q");
}

void qe2_lowest_weight(CheckContext& c) {
  expect_eq(c, ad(UEAElt::gen(-1), Qe2()), UEAElt::zero(), "ad(e_-1) Q^{e_2}");
  const auto parts = Qe2().weight_split();
  c.require(parts.size() == 1 && parts.count(2) == 1, "Q^{e_2} is not weight-2 homogeneous");
}

void transpose_qz(CheckContext& c) {
  expect_eq(c, transpose(Q()), Q(), "Q^T");
  expect_eq(c, transpose(Z()), Z(), "Z^T");
}

void rep_q(CheckContext& c) {
  const PolyCoeff lam = PolyCoeff::lambda();
  expect_eq(c, rep(Q(), LambdaSpec::formal_lambda()),
            WeylElt::mono({0, 0}, q_of(lam)), "formal action of Q");
  for (const Rat& v : c.cfg().lambda_samples)
    expect_eq(c, rep(Q(), LambdaSpec::at(v)), WeylElt::mono({0, 0}, PolyCoeff(q_of(v))),
              "action of Q at lambda=" + v.str());
}

void rep_z(CheckContext& c) {
  expect_eq(c, rep(Z(), LambdaSpec::formal_lambda()),
            WeylElt::mono({1, 0}, q_of(PolyCoeff::lambda())), "formal action of Z");
}

void casimir_sym2(CheckContext& c) {
  expect_eq(c, casimir_ad(em1_sq()), PolyCoeff(6) * em1_sq(), "eigenvalue on e_{-1}^2");
  expect_eq(c, casimir_ad(UEAElt::one()), UEAElt::zero(), "eigenvalue on 1");
  expect_eq(c, casimir_ad(Qe2()), PolyCoeff(2) * Qe2(), "eigenvalue on Q^{e_2}");
  for (int mu = -2; mu <= c.cfg().max_weight; ++mu) {
    const Slice s = Slice::make(2, mu, SliceFilter::sym_image(2));
    if (s.dim() == 0) continue;
    RatMat m(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i) m.col(i) = s.coords(casimir_ad(s.element(i)));
    std::vector<Rat> eigenvalues;
    for (int l = -1; 2 * l <= mu; ++l) eigenvalues.push_back(q_of(Rat(2 * l)));
    RatMat prod = RatMat::Identity(s.dim(), s.dim());
    Eigen::Index total = 0;
    for (const Rat& ev : eigenvalues) {
      RatMat shifted = m;
      for (int i = 0; i < s.dim(); ++i) shifted(i, i) -= ev;
      const Eigen::Index dim_ker = kernel(shifted).rows();
      c.require(dim_ker >= 1,
                "missing eigenvalue " + ev.str() + " at weight " + std::to_string(mu));
      total += dim_ker;
      prod = prod * shifted;
    }
    bool zero = true;
    for (int i = 0; i < s.dim() && zero; ++i)
      for (int j = 0; j < s.dim(); ++j)
        if (!prod(i, j).is_zero()) { zero = false; break; }
    c.require(zero, "minimal polynomial does not split at weight " + std::to_string(mu));
    c.require(total == s.dim(),
              "eigenspace dimensions do not fill the slice at weight " + std::to_string(mu));
  }
  c.note("diagonalizable with eigenvalues q(2l) on every degree-2 symmetric slice");
}

// Weight-space dimension of the direct sum over l >= lmin of density modules
// at parameter 2l.
int density_sum_dim(int lmin, int w) {
  int d = 0;
  for (int l = lmin; 2 * l <= w; ++l) ++d;
  return d;
}

void h0_closure(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const auto buckets = submodule_closure({Z()}, 2, W);
  for (int w = -2; w <= W; ++w) {
    const int dim = buckets.count(w) ? buckets.at(w).dim() : 0;
    c.require(dim == density_sum_dim(0, w),
              "closure of Z has dimension " + std::to_string(dim) + " at weight " +
                  std::to_string(w));
  }
  expect_equal_subspace(c, buckets.at(0), Subspace::span(Slice::make(2, 0), {Q()}),
                        "weight-0 part of the closure of Z");
  c.require(buckets.at(1).contains(Z()), "Z missing from its own closure at weight 1");
  c.note("dimensions match the direct sum over l >= 0 of density modules at 2l");
}

void h2_closure(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const auto buckets = submodule_closure({Qe2()}, 2, W);
  for (int w = -2; w <= W; ++w) {
    const int dim = buckets.count(w) ? buckets.at(w).dim() : 0;
    c.require(dim == density_sum_dim(1, w),
              "closure of Q^{e_2} has dimension " + std::to_string(dim) + " at weight " +
                  std::to_string(w));
    if (w < 2)
      c.require(dim == 0, "closure of Q^{e_2} nonzero below weight 2");
  }
  c.note("zero below weight 2; dimensions match the direct sum over l >= 1");
}

void full_closure_sym2(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const auto buckets = submodule_closure({em1_sq()}, 2, W);
  for (int w = -2; w <= W; ++w) {
    std::vector<UEAElt> sym_basis;
    const Slice s2 = Slice::make(2, w, SliceFilter::sym_image(2));
    for (int i = 0; i < s2.dim(); ++i) sym_basis.push_back(s2.element(i));
    const Subspace want = Subspace::span(Slice::make(2, w), sym_basis);
    const Subspace got = buckets.count(w) ? buckets.at(w) : Subspace(Slice::make(2, w));
    expect_equal_subspace(c, got, want,
                          "closure of e_{-1}^2 at weight " + std::to_string(w));
    c.require(got.dim() == static_cast<int>(counts('p', 2, w + 2)),
              "dimension differs from the partition count at weight " + std::to_string(w));
  }
  c.note("closure of e_{-1}^2 is the whole degree-2 symmetric component");
}

void z_unique_preimage(CheckContext& c) {
  c.require(lws(2, 1).dim() == 0, "unexpected weight-1 lowest weight element in degree <= 2");
  const Slice domain = Slice::make(2, 1);
  const Slice codomain = Slice::make(2, 0);
  const RatMat m = ad_matrix(UEAElt::gen(-1), domain, codomain);
  const auto x = solve(m, codomain.coords(Q()));
  c.require(x.has_value(), "no ad(e_-1)-preimage of Q in the degree-2 weight-1 slice");
  if (x) expect_eq(c, domain.from_coords(*x), Z(), "the unique preimage of Q");
}

void uniserial_evidence(CheckContext& c) {
  const int W = c.cfg().max_weight;
  // Candidate submodule families of the degree-2 symmetric component.
  std::vector<std::map<int, Subspace>> candidates;
  std::vector<std::string> names;
  candidates.push_back(submodule_closure({em1_sq()}, 2, W));
  names.push_back("whole component");
  candidates.push_back(submodule_closure({Q()}, 2, W));
  names.push_back("line of Q plus weight >= 2 part");
  for (int l = 0; 2 * l <= W; ++l) {
    candidates.push_back(submodule_closure({ad_pow(S(), static_cast<unsigned>(l) + 1, em1_sq())}, 2, W));
    names.push_back("tail from weight " + std::to_string(2 * l));
  }
  auto matches = [&](const std::map<int, Subspace>& got, const std::map<int, Subspace>& cand) {
    for (int w = -2; w <= W; ++w) {
      const bool g = got.count(w) && got.at(w).dim() > 0;
      const bool k = cand.count(w) && cand.at(w).dim() > 0;
      if (g != k) return false;
      if (g && !equal(got.at(w), cand.at(w))) return false;
    }
    return true;
  };
  Rng rng(31);
  int sampled = 0;
  for (int trial = 0; sampled < 20; ++trial) {
    const int w = rng.geti(-2, 6);
    // Mix plain slice samples with samples from the candidate families.
    UEAElt t;
    const int source = trial % 3;
    if (source == 0) {
      const Slice s = Slice::make(2, w, SliceFilter::sym_image(2));
      if (s.dim() == 0) continue;
      for (int i = 0; i < s.dim(); ++i)
        t += PolyCoeff(rng.rat()) * s.element(i);
    } else {
      const auto& fam = candidates[static_cast<size_t>(rng.geti(0, static_cast<int>(candidates.size()) - 1))];
      if (!fam.count(w) || fam.at(w).dim() == 0) continue;
      const Subspace& sub = fam.at(w);
      for (int i = 0; i < sub.dim(); ++i)
        t += PolyCoeff(rng.rat()) * sub.basis_elt(i);
    }
    if (t.is_zero()) continue;
    ++sampled;
    const auto closure = submodule_closure({t}, 2, W);
    bool found = false;
    for (size_t i = 0; i < candidates.size() && !found; ++i)
      found = matches(closure, candidates[i]);
    c.require(found, "closure of a sampled element is none of the expected submodules (weight " +
                         std::to_string(w) + ")");
  }
  c.note("20 sampled closures, each one of the expected chain members");
}

// ---- u3 ----

void y_transpose(CheckContext& c) { expect_eq(c, transpose(Y()), -Y(), "Y^T"); }

void y_in_u3(CheckContext& c) {
  const auto comps = sym_decompose(Y());
  c.require(comps.size() == 4, "Y does not have degree 3");
  for (int j = 0; j <= 2; ++j)
    c.require(comps[static_cast<size_t>(j)].is_zero(),
              "Y has a nonzero degree-" + std::to_string(j) + " symmetric component");
}

void ad_e1_y(CheckContext& c) {
  expect_eq(c, ad(UEAElt::gen(1), Y()), PolyCoeff(Rat(1, 2)) * mul(Qe2(), UEAElt::gen(-1)),
            "ad(e_1) Y");
}

void rep_y(CheckContext& c) {
  expect_eq(c, rep(Y(), LambdaSpec::formal_Lambda()),
            WeylElt::mono({0, 0}, y_of(PolyCoeff::Lambda())), "universal action of Y");
  expect_eq(c, rep(Y(), LambdaSpec::formal_lambda()),
            WeylElt::mono({0, 0}, y_of(PolyCoeff::lambda())), "formal action of Y");
}

void rep_qe2_zero(CheckContext& c) {
  expect_eq(c, rep(Qe2(), LambdaSpec::formal_Lambda()), WeylElt::zero(),
            "universal action of Q^{e_2}");
}

void lwv_action_table(CheckContext& c) {
  const PolyCoeff qL = q_of(PolyCoeff::Lambda()), yL = y_of(PolyCoeff::Lambda());
  const UEAElt em1 = UEAElt::gen(-1);
  const std::vector<std::pair<UEAElt, WeylElt>> table = {
      {mul(em1, em1_sq()), WeylElt::d(3)},
      {em1_sq(), WeylElt::d(2)},
      {em1, WeylElt::d(1)},
      {mul(Q(), em1), WeylElt::mono({0, 1}, qL)},
      {UEAElt::one(), WeylElt::one()},
      {Q(), WeylElt::mono({0, 0}, qL)},
      {Y(), WeylElt::mono({0, 0}, yL)},
      {mul(Qe2(), em1), WeylElt::zero()},
  };
  for (size_t i = 0; i < table.size(); ++i)
    expect_eq(c, rep(table[i].first, LambdaSpec::formal_Lambda()), table[i].second,
              "action table entry " + std::to_string(i));
  // The table spans the low lowest-weight spaces of the degree <= 3 filtration.
  const std::vector<std::pair<int, std::vector<UEAElt>>> by_weight = {
      {-3, {table[0].first}}, {-2, {table[1].first}},
      {-1, {table[2].first, table[3].first}},
      {0, {table[4].first, table[5].first, table[6].first}},
      {1, {table[7].first}}};
  for (const auto& [w, elts] : by_weight) {
    const Subspace want = Subspace::span(Slice::make(3, w), elts);
    expect_equal_subspace(c, lws(3, w), want,
                          "lowest weight space at weight " + std::to_string(w));
  }
  c.note("eight basis elements act by the stated operators and span the low spaces");
}

void casimir_sym3_jordan(CheckContext& c) {
  const Slice s = Slice::make(3, 1, SliceFilter::sym_image(3));
  RatMat m(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) m.col(i) = s.coords(casimir_ad(s.element(i)));
  RatMat power = RatMat::Identity(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) power = power * m;
  const RatMat gen0 = kernel(power);   // generalized 0-eigenspace
  c.require(gen0.rows() == 2, "generalized 0-eigenspace has dimension " +
                                  std::to_string(gen0.rows()));
  const RatMat m2 = m * m;
  bool square_kills = true, linear_kills = true;
  for (Eigen::Index i = 0; i < gen0.rows(); ++i) {
    const RatVec v = gen0.row(i).transpose();
    const RatVec mv = m * v, m2v = m2 * v;
    for (Eigen::Index j = 0; j < mv.size(); ++j) {
      if (!m2v(j).is_zero()) square_kills = false;
      if (!mv(j).is_zero()) linear_kills = false;
    }
  }
  c.require(square_kills, "casimir^2 does not annihilate the generalized 0-eigenspace");
  c.require(!linear_kills, "casimir acts semisimply on the weight-1 degree-3 symmetric slice");
}

void k_minus1_family(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const PolyCoeff third(Rat(1, 3));
  const UEAElt qm = Q() - third * UEAElt::one();
  expect_eq(c, ad(UEAElt::gen(-1), mul(qm, UEAElt::gen(-1))), UEAElt::zero(),
            "(Q - 1/3) e_{-1} is a lowest weight element");
  for (GenIndex n = -1; n <= W; ++n) {
    const UEAElt vn = mul(qm, UEAElt::gen(n));
    const auto comps = sym_decompose(vn);
    for (size_t j = 0; j + 1 < comps.size(); ++j)
      c.require(comps[j].is_zero() || j == 3,
                "(Q - 1/3) e_" + std::to_string(n) + " has stray symmetric components");
    // Projective-subalgebra stability of the family.
    for (GenIndex mgen = -1; mgen <= 1; ++mgen) {
      if (n + mgen < -1) continue;
      const UEAElt got = ad(UEAElt::gen(mgen), vn);
      const UEAElt want = PolyCoeff(Rat(n - mgen)) * mul(qm, UEAElt::gen(n + mgen));
      expect_eq(c, got, want, "projective action on (Q - 1/3) e_" + std::to_string(n));
    }
  }
  c.note("(Q - 1/3) Vec: degree-3 component, projective-stable, lowest weight at -1");
}

void l_action(CheckContext& c) {
  const int W = c.cfg().max_weight;
  const auto l1 = submodule_closure({mul(Qe2(), UEAElt::gen(-1))}, 3, W);
  for (const auto& [w, sub] : l1)
    for (int i = 0; i < sub.dim(); ++i) {
      const WeylElt img = rep(sub.basis_elt(i), LambdaSpec::formal_Lambda());
      c.require(img.is_zero(), "closure of Q^{e_2} e_{-1} acts nonzero at weight " +
                                   std::to_string(w) + ": " + img.str());
    }
  const auto l0 = submodule_closure({Y()}, 3, W);
  const PolyCoeff yL = y_of(PolyCoeff::Lambda());
  const Rat y2 = y_of(Rat(2));
  c.require(l0.count(0) == 1 && l0.at(0).dim() >= 1, "closure of Y has no weight-0 part");
  for (int i = 0; i < l0.at(0).dim(); ++i) {
    const WeylElt img = rep(l0.at(0).basis_elt(i), LambdaSpec::formal_Lambda());
    bool ok = true;
    PolyCoeff coeff;
    for (const auto& [m, cc] : img.terms()) {
      if (m.x_pow != 0 || m.d_pow != 0) ok = false;
      coeff = cc;
    }
    // Proportional to y(Lambda): cross-multiply against the value at 2.
    ok = ok && (coeff * PolyCoeff(y2) == PolyCoeff(coeff.eval(std::nullopt, Rat(2)).constant_value()) * yL);
    c.require(ok, "weight-0 closure of Y does not act by multiples of y(Lambda): " + img.str());
  }
  c.note("closure of Q^{e_2} e_{-1} annihilates; weight-0 closure of Y acts by y(Lambda)");
}

}  // namespace

void register_u2(std::vector<CheckDef>& out) {
  auto add = [&](const std::string& name, const std::string& desc, auto fn) {
    out.push_back({"u2", name, desc, fn});
  };
  add("S-to-Q", "Q = -(1/48) ad(S) e_{-1}^2", step_to_casimir);
  add("S2-to-Qe2", "Q^{e_2} = -(1/96) ad(S)^2 e_{-1}^2 = ad(e_2) Q", step_sq_to_qe2);
  add("ad-Z-eq-Q", "ad(e_-1) Z = Q", ad_z_eq_q);
  add("ad-e1-Q", "Q is invariant under the projective subalgebra", ad_e1_q);
  add("Qe2-lowest-weight", "Q^{e_2} is a weight-2 lowest weight element", qe2_lowest_weight);
  add("transpose-QZ", "Q and Z are transpose-invariant", transpose_qz);
  add("rep-Q", "Q acts by q(lambda) = lambda^2 - lambda", rep_q);
  add("rep-Z", "Z acts by q(lambda) x", rep_z);
  add("casimir-sym2-eigen",
      "the Casimir operator is diagonalizable with eigenvalues q(2l) on degree-2 symmetric slices",
      casimir_sym2);
  add("H0-closure", "the module closure of Z has the weight dimensions of sum_{l>=0} F_{2l}",
      h0_closure);
  add("H2-closure", "the module closure of Q^{e_2} vanishes below weight 2", h2_closure);
  add("full-closure-sym2", "e_{-1}^2 generates the whole degree-2 symmetric component",
      full_closure_sym2);
  add("Z-unique-preimage", "Z is the unique ad(e_-1)-preimage of Q in the degree-2 slice",
      z_unique_preimage);
  add("uniserial-evidence",
      "sampled submodule closures all land in the expected chain of submodules",
      uniserial_evidence);
}

void register_u3(std::vector<CheckDef>& out) {
  auto add = [&](const std::string& name, const std::string& desc, auto fn) {
    out.push_back({"u3", name, desc, fn});
  };
  add("Y-transpose", "Y^T = -Y", y_transpose);
  add("Y-in-U3", "Y lies in the degree-3 symmetric component", y_in_u3);
  add("ad-e1-Y", "ad(e_1) Y = (1/2) Q^{e_2} e_{-1}", ad_e1_y);
  add("rep-Y", "Y acts by y(lambda) = (lambda - 1/2) q(lambda)", rep_y);
  add("rep-Qe2-zero", "Q^{e_2} annihilates the universal density module", rep_qe2_zero);
  add("lwv-action-table",
      "the eight low lowest-weight elements act by d^3, d^2, d, q d, 1, q, y, 0",
      lwv_action_table);
  add("casimir-sym3-jordan",
      "the Casimir operator has a rank-one nilpotent part on the weight-1 degree-3 slice",
      casimir_sym3_jordan);
  add("K-minus1", "(Q - 1/3) Vec is a projective-stable degree-3 family", k_minus1_family);
  add("L-action",
      "the closure of Q^{e_2} e_{-1} annihilates the universal module; Y's closure acts by y",
      l_action);
}

}  // namespace wittlab::checks
