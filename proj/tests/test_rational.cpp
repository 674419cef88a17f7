#include <doctest.h>

#include <random>

#include "wittlab/poly_coeff.hpp"

using namespace wittlab;

TEST_CASE("rationals stay canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(3, -6).num() == -1);
  CHECK(Rat(3, -6).den() == 2);
  CHECK((Rat(1, 3) + Rat(2, 3)) == Rat(1));
  CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(Rat::parse("1/2") == Rat(1, 2));
  CHECK(Rat::parse("-3") == Rat(-3));
  CHECK(Rat::parse("+4/6") == Rat(2, 3));
  CHECK(Rat::parse("0") == Rat(0));
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK(Rat(7, 3).str() == "7/3");
  CHECK(Rat(-4).str() == "-4");
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == Rat(10));
  CHECK(binomial(3, 5) == Rat(0));
  CHECK(binomial(3, -1) == Rat(0));
  CHECK(factorial(6) == Rat(720));
  CHECK(falling(Rat(1, 2), 2) == Rat(-1, 4));
}

TEST_CASE("polynomial arithmetic examples") {
  const PolyCoeff lam = PolyCoeff::lambda();
  const PolyCoeff Lam = PolyCoeff::Lambda();

  CHECK((lam * lam + (-(lam * lam))).is_zero());

  // (lambda - 1/2)(lambda^2 - lambda), expanded by hand.
  const PolyCoeff prod = (lam - PolyCoeff(Rat(1, 2))) * (lam * lam - lam);
  PolyCoeff want = PolyCoeff::monomial(3, 0, Rat(1));
  want += PolyCoeff::monomial(2, 0, Rat(-3, 2));
  want += PolyCoeff::monomial(1, 0, Rat(1, 2));
  CHECK(prod == want);

  const PolyCoeff p = lam * Lam + PolyCoeff(Rat(2));
  CHECK(p * PolyCoeff(1) == p);
}

TEST_CASE("polynomial evaluation examples") {
  const PolyCoeff lam = PolyCoeff::lambda();
  const PolyCoeff Lam = PolyCoeff::Lambda();
  const PolyCoeff q = lam * lam - lam;

  CHECK(q.eval(Rat(2), std::nullopt).constant_value() == Rat(2));
  CHECK(q.eval(Rat(0), std::nullopt).is_zero());

  const PolyCoeff yL = (Lam - PolyCoeff(Rat(1, 2))) * (Lam * Lam - Lam);
  CHECK(yL.eval(std::nullopt, Rat(3)).constant_value() == Rat(15));

  // Partial substitution leaves the other indeterminate alone.
  const PolyCoeff mixed = lam * Lam;
  const PolyCoeff after = mixed.eval(Rat(3), std::nullopt);
  CHECK(after == PolyCoeff(Rat(3)) * Lam);
}

TEST_CASE("evaluation is a ring homomorphism on random input") {
  std::mt19937_64 g(7);
  auto ri = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  auto rnd = [&] {
    PolyCoeff p;
    for (int t = 0; t < 3; ++t)
      p += PolyCoeff::monomial(static_cast<unsigned>(ri(0, 2)), static_cast<unsigned>(ri(0, 2)),
                               Rat(ri(-5, 5), ri(1, 3)));
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    const PolyCoeff p = rnd(), q = rnd();
    const Rat a(ri(-4, 4), ri(1, 3)), b(ri(-4, 4), ri(1, 3));
    auto ev = [&](const PolyCoeff& t) { return t.eval(a, b).constant_value(); };
    CHECK(ev(p + q) == ev(p) + ev(q));
    CHECK(ev(p * q) == ev(p) * ev(q));
  }
}

TEST_CASE("rendering is canonical") {
  const PolyCoeff lam = PolyCoeff::lambda();
  CHECK((lam * lam - lam).str() == "lambda^2 - lambda");
  CHECK(PolyCoeff(Rat(1, 2)).str() == "1/2");
  CHECK(PolyCoeff().str() == "0");
  CHECK((PolyCoeff(Rat(2)) * lam * PolyCoeff::Lambda()).str() == "2 lambda Lambda");
}
