#include <doctest.h>

#include <random>

#include "wittlab/weyl.hpp"
#include "wittlab/witt.hpp"

using namespace wittlab;

namespace {

// Differential-operator oracle: e_n modelled directly as x^{n+1} d, composed
// with the Weyl product. Built without reference to bracket_basis.
WeylElt field(GenIndex n) { return WeylElt::mono({n + 1, 1}, PolyCoeff(1)); }

}  // namespace

TEST_CASE("structure constants validated by the operator oracle") {
  for (GenIndex m = -1; m <= 8; ++m)
    for (GenIndex n = -1; n <= 8; ++n) {
      const WeylElt comm = weyl_mul(field(m), field(n)) - weyl_mul(field(n), field(m));
      WeylElt want;
      if (m != n) want = WeylElt::mono({m + n + 1, 1}, PolyCoeff(Rat(n - m)));
      CHECK(comm == want);
    }
}

TEST_CASE("basis bracket examples") {
  CHECK(bracket_basis(-1, 1) == LieElt::gen(0, PolyCoeff(2)));
  for (GenIndex n = -1; n <= 10; ++n)
    CHECK(bracket_basis(0, n) == LieElt::gen(n, PolyCoeff(Rat(n))));
  CHECK(bracket_basis(3, 3).is_zero());
  CHECK_THROWS_AS(bracket_basis(-2, 0), std::invalid_argument);
}

TEST_CASE("bilinear bracket examples") {
  const LieElt x = LieElt::gen(-1) + LieElt::gen(0);
  const LieElt want = LieElt::gen(0, PolyCoeff(2)) + LieElt::gen(1);
  CHECK(bracket(x, LieElt::gen(1)) == want);
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(LieElt(), LieElt::gen(4)).is_zero());
}

TEST_CASE("antisymmetry and Jacobi on random elements") {
  std::mt19937_64 g(17);
  auto ri = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  auto rnd = [&] {
    LieElt x;
    for (int t = 0; t < 3; ++t) x.add_term(ri(-1, 8), PolyCoeff(Rat(ri(-5, 5), ri(1, 3))));
    return x;
  };
  for (int i = 0; i < 50; ++i) {
    const LieElt x = rnd(), y = rnd(), z = rnd();
    CHECK(bracket(x, y) == -bracket(y, x));
    const LieElt jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                       bracket(z, bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("subalgebra predicates") {
  CHECK(subalgebra_contains(SubalgebraId::projective_a, 1));
  CHECK(!subalgebra_contains(SubalgebraId::projective_a, 2));
  CHECK(subalgebra_contains(SubalgebraId::affine_b, -1));
  CHECK(!subalgebra_contains(SubalgebraId::affine_b, 1));
  CHECK(subalgebra_contains(SubalgebraId::constant_c, -1));
  CHECK(!subalgebra_contains(SubalgebraId::constant_c, 0));
  CHECK(subalgebra_contains(SubalgebraId::span_e1_em1, 1));
  CHECK(!subalgebra_contains(SubalgebraId::span_e1_em1, 0));
}

TEST_CASE("rendering") {
  CHECK(LieElt::gen(2).str() == "e_2");
  CHECK((LieElt::gen(0, PolyCoeff(2)) + LieElt::gen(1)).str() == "2 e_0 + e_1");
}
