#include <doctest.h>

#include "wittlab/machine.hpp"
#include "wittlab/named.hpp"

using namespace wittlab;
using namespace wittlab::elements;

namespace {
UEAElt e(GenIndex n) { return UEAElt::gen(n); }
}  // namespace

TEST_CASE("counit examples") {
  CHECK(counit(UEAElt::one() + e(0)) == PolyCoeff(1));
  CHECK(counit(Q()).is_zero());
  const UEAElt t = Q() - q_of(PolyCoeff::lambda()) * UEAElt::one();
  CHECK(counit(t) == -q_of(PolyCoeff::lambda()));
}

TEST_CASE("module spec validation") {
  CHECK_THROWS_AS(ModuleSpec::aug_plus(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(ModuleSpec::aug_plus(Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(ModuleSpec::offset(Rat(2), Rat(0)), std::invalid_argument);
  CHECK(ModuleSpec::poly(Rat(2)).str() == "F[2]");
}

TEST_CASE("annihilator slice examples") {
  {
    const Subspace a = ann_slice(ModuleSpec::poly(Rat(0)), 2, 1);
    CHECK(a.dim() == 1);
    CHECK(a.contains(Z()));
  }
  {
    const Subspace a = ann_slice(ModuleSpec::poly(Rat(2)), 2, 0);
    CHECK(a.dim() == 1);
    CHECK(a.contains(Q() - PolyCoeff(2) * UEAElt::one()));
  }
  for (int mu = -4; mu <= 4; ++mu)
    CHECK(ann_slice(ModuleSpec::poly(Rat(2)), 1, mu).dim() == 0);
  {
    const auto h2 = submodule_closure({Qe2()}, 2, 8);
    for (int mu = 2; mu <= 8; ++mu) {
      const Subspace a = ann_slice(ModuleSpec::universal(), 2, mu);
      REQUIRE(h2.count(mu) == 1);
      CHECK(equal(a, h2.at(mu)));
    }
  }
}

TEST_CASE("annihilators of the sample-based module variants") {
  for (const Rat v : {Rat(0), Rat(2)}) {
    for (int mu = -2; mu <= 3; ++mu) {
      const Subspace a = ann_slice(ModuleSpec::poly(v), 2, mu);
      CHECK(equal(a, ann_slice(ModuleSpec::neg_poly(v), 2, mu)));
      CHECK(equal(a, ann_slice(ModuleSpec::offset(Rat(1, 2), v), 2, mu)));
    }
  }
}

TEST_CASE("augmented module annihilator adds the counit condition") {
  // Q - q(2) kills F[2] but not the trivial summand.
  const UEAElt qgen = Q() - PolyCoeff(q_of(Rat(2))) * UEAElt::one();
  const Subspace plain = ann_slice(ModuleSpec::poly(Rat(2)), 2, 0);
  const Subspace aug = ann_slice(ModuleSpec::aug_plus(Rat(2)), 2, 0);
  CHECK(plain.contains(qgen));
  CHECK(!aug.contains(qgen));
  CHECK(aug.dim() == plain.dim() - 1);
}

TEST_CASE("ideal slice examples") {
  {
    const Subspace s = ideal_slice({Z()}, 2, 1);
    CHECK(s.dim() == 1);
    CHECK(s.contains(Z()));
  }
  {
    const Subspace s = ideal_slice({Qe2()}, 3, 1);
    CHECK(s.contains(mul(Qe2(), e(-1))));
  }
  for (int mu = -6; mu <= 6; ++mu) {
    const Subspace lhs = ideal_slice({Z()}, 3, mu);
    const Subspace rhs = ann_slice(ModuleSpec::poly(Rat(0)), 3, mu);
    CHECK(lhs.dim() == rhs.dim());
    CHECK(equal(lhs, rhs));
  }
  CHECK_THROWS_AS(ideal_slice({Y()}, 2, 0), std::invalid_argument);
}

TEST_CASE("ideal generators are sound for their modules") {
  CHECK(rep(Z(), LambdaSpec::at(Rat(0))).is_zero());
  CHECK(rep(Qe2(), LambdaSpec::formal_Lambda()).is_zero());
  for (const Rat v : {Rat(2), Rat(-1), Rat(1, 2), Rat(1, 3)}) {
    CHECK(rep(Q() - PolyCoeff(q_of(v)) * UEAElt::one(), LambdaSpec::at(v)).is_zero());
    CHECK(rep(Y() - PolyCoeff(y_of(v)) * UEAElt::one(), LambdaSpec::at(v)).is_zero());
  }
}

TEST_CASE("machine check on the degenerate-parameter configuration") {
  MachineConfig m;
  m.label = "unit-test cross-section";
  m.degrees = {2};
  m.J = {SubalgebraId::constant_c};
  m.pattern = JPattern::c_pattern;
  m.i_kind = MachineConfig::IKind::closure_gens;
  m.i_gens = {Z()};
  m.module = ModuleSpec::poly(Rat(0));
  m.max_degree = 3;
  m.max_weight = 5;
  const MachineResult res = machine_check(m);
  for (const auto& f : res.failures) MESSAGE(f);
  CHECK(res.pass);
}

TEST_CASE("machine config validation") {
  MachineConfig m;
  m.degrees = {2, 3};
  m.J = {SubalgebraId::constant_c, SubalgebraId::affine_b};  // not descending
  m.pattern = JPattern::il_pattern;
  m.module = ModuleSpec::poly(Rat(2));
  m.max_degree = 3;
  m.max_weight = 4;
  CHECK_THROWS_AS(machine_check(m), std::invalid_argument);
  m.J = {SubalgebraId::affine_b, SubalgebraId::constant_c};
  m.max_degree = 2;  // too small for d_r = 3
  CHECK_THROWS_AS(machine_check(m), std::invalid_argument);
}

TEST_CASE("pattern predicates") {
  CHECK(pattern_matches(JPattern::c_pattern, PBWMono::one()));
  CHECK(pattern_matches(JPattern::c_pattern, PBWMono({4, -1, -1})));
  CHECK(!pattern_matches(JPattern::c_pattern, PBWMono({4, 0})));
  CHECK(pattern_matches(JPattern::b_pattern, PBWMono({4, 0, -1})));
  CHECK(!pattern_matches(JPattern::b_pattern, PBWMono({4, 1})));
  CHECK(pattern_matches(JPattern::il_pattern, PBWMono({4, 0})));
  CHECK(!pattern_matches(JPattern::il_pattern, PBWMono({4, 0, -1})));
  CHECK(pattern_matches(JPattern::sl2_pattern, PBWMono({1, 1, 0, -1})));
  CHECK(!pattern_matches(JPattern::sl2_pattern, PBWMono({1, 0, 0, -1})));
  CHECK(!pattern_matches(JPattern::sl2_pattern, PBWMono({2, -1})));
}
