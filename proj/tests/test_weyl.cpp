#include <doctest.h>

#include <random>

#include "wittlab/named.hpp"
#include "wittlab/weyl.hpp"

using namespace wittlab;
using namespace wittlab::elements;

TEST_CASE("normal ordering examples") {
  CHECK(weyl_mul(WeylElt::d(), WeylElt::x()) ==
        WeylElt::mono({1, 1}, PolyCoeff(1)) + WeylElt::one());
  CHECK(weyl_mul(WeylElt::x(2), WeylElt::d(2)) == WeylElt::mono({2, 2}, PolyCoeff(1)));
  CHECK(weyl_mul(WeylElt::d(2), WeylElt::x()) ==
        WeylElt::mono({1, 2}, PolyCoeff(1)) + PolyCoeff(2) * WeylElt::d());
}

TEST_CASE("representation of generators and named elements") {
  CHECK(rep(UEAElt::gen(-1), LambdaSpec::at(Rat(5))) == WeylElt::d());
  CHECK(rep(UEAElt::gen(-1), LambdaSpec::formal_Lambda()) == WeylElt::d());
  CHECK(rep(Q(), LambdaSpec::formal_lambda()) ==
        WeylElt::mono({0, 0}, q_of(PolyCoeff::lambda())));
  CHECK(rep(Z(), LambdaSpec::formal_lambda()) ==
        WeylElt::mono({1, 0}, q_of(PolyCoeff::lambda())));
  CHECK(rep(Y(), LambdaSpec::formal_Lambda()) ==
        WeylElt::mono({0, 0}, y_of(PolyCoeff::Lambda())));
  CHECK(rep(Qe2(), LambdaSpec::formal_Lambda()).is_zero());
}

TEST_CASE("indeterminate clashes are rejected") {
  const UEAElt lam_elt = PolyCoeff::lambda() * UEAElt::gen(0);
  CHECK_THROWS_AS(rep(lam_elt, LambdaSpec::formal_lambda()), std::invalid_argument);
  const UEAElt Lam_elt = PolyCoeff::Lambda() * UEAElt::gen(0);
  CHECK_THROWS_AS(rep(Lam_elt, LambdaSpec::formal_Lambda()), std::invalid_argument);
  // Mixed roles are allowed.
  CHECK(!rep(lam_elt, LambdaSpec::formal_Lambda()).is_zero());
}

TEST_CASE("representation is an algebra morphism on random pairs") {
  std::mt19937_64 g(29);
  auto ri = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  auto rnd = [&] {
    UEAElt t;
    for (int i = 0; i < 2; ++i) {
      std::vector<GenIndex> w(static_cast<size_t>(ri(0, 2)));
      for (auto& x : w) x = ri(-1, 4);
      std::sort(w.begin(), w.end(), std::greater<GenIndex>());
      t += UEAElt::mono(PBWMono(std::move(w)), PolyCoeff(Rat(ri(-4, 4), ri(1, 3))));
    }
    return t;
  };
  for (int i = 0; i < 50; ++i) {
    const UEAElt a = rnd(), b = rnd();
    const LambdaSpec spec =
        i % 2 == 0 ? LambdaSpec::at(Rat(ri(-3, 3), ri(1, 2))) : LambdaSpec::formal_Lambda();
    CHECK(rep(mul(a, b), spec) == weyl_mul(rep(a, spec), rep(b, spec)));
  }
}

TEST_CASE("application to formal monomials") {
  CHECK(apply(WeylElt::d(), Rat(0)).empty());
  {
    const auto img = apply(WeylElt::mono({1, 1}, PolyCoeff(1)), Rat(7, 3));
    REQUIRE(img.size() == 1);
    CHECK(img.at(Rat(7, 3)) == PolyCoeff(Rat(7, 3)));
  }
  {
    // Generator at n = 2, parameter 3, applied to x^{1/2}.
    const auto img = apply(rep(UEAElt::gen(2), LambdaSpec::at(Rat(3))), Rat(1, 2));
    REQUIRE(img.size() == 1);
    CHECK(img.at(Rat(5, 2)) == PolyCoeff(Rat(19, 2)));
  }
}

TEST_CASE("filtration symbols") {
  {
    const WeylElt s = lam_deg_symbol(rep(UEAElt::gen(0), LambdaSpec::formal_Lambda()));
    WeylElt want = WeylElt::mono({1, 1}, PolyCoeff(1));
    want += WeylElt::mono({0, 0}, PolyCoeff::Lambda());
    CHECK(s == want);
  }
  for (GenIndex n = 1; n <= 4; ++n) {
    const WeylElt s = lam_deg_symbol(rep(UEAElt::gen(n), LambdaSpec::formal_Lambda()));
    WeylElt want = WeylElt::mono({n + 1, 1}, PolyCoeff(1));
    want += WeylElt::mono({n, 0}, PolyCoeff::Lambda() * PolyCoeff(Rat(n + 1)));
    CHECK(s == want);
  }
  CHECK(lam_deg_symbol(WeylElt::x(3)) == WeylElt::x(3));
  CHECK_THROWS_AS(lam_deg_symbol(WeylElt::mono({0, 0}, PolyCoeff::lambda())),
                  std::invalid_argument);
}

TEST_CASE("weight homogeneous elements shift exponents by their weight") {
  const UEAElt t = mul(UEAElt::gen(2), UEAElt::gen(-1));  // weight 1
  const auto img = apply(rep(t, LambdaSpec::at(Rat(1, 3))), Rat(3, 2));
  for (const auto& [ex, c] : img) CHECK(ex == Rat(5, 2));
}

TEST_CASE("operator rendering") {
  const WeylElt w = WeylElt::mono({2, 1}, PolyCoeff(1)) + WeylElt::mono({1, 0}, PolyCoeff(Rat(3)));
  CHECK(w.str() == "1 * x^2 d^1 + 3 * x^1 d^0");
  CHECK(WeylElt::zero().str() == "0");
}
