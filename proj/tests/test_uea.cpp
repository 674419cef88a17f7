#include <doctest.h>

#include <random>

#include "wittlab/named.hpp"
#include "wittlab/uea.hpp"

using namespace wittlab;
using namespace wittlab::elements;

namespace {
UEAElt e(GenIndex n) { return UEAElt::gen(n); }
UEAElt em1_sq() { return mul(e(-1), e(-1)); }
}  // namespace

TEST_CASE("pbw monomial basics") {
  const PBWMono m({2, 0, 0, -1});
  CHECK(m.degree() == 4);
  CHECK(m.weight() == 1);
  CHECK(m.str() == "e_2 e_0^2 e_-1");
  CHECK(PBWMono::one().str() == "1");
  CHECK_THROWS_AS(PBWMono({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PBWMono({-2}), std::invalid_argument);
}

TEST_CASE("normal form examples") {
  CHECK(nf_word({-1, 1}) == mul(e(1), e(-1)) + PolyCoeff(2) * e(0));
  {
    UEAElt want = UEAElt::mono(PBWMono({1, -1}), PolyCoeff(1));
    want += PolyCoeff(2) * e(0);
    CHECK(nf_word({-1, 1}) == want);
  }
  {
    UEAElt want = UEAElt::mono(PBWMono({2, -1}), PolyCoeff(1));
    want += PolyCoeff(3) * e(1);
    CHECK(nf_word({-1, 2}) == want);
  }
  {
    UEAElt want = UEAElt::mono(PBWMono({1, 0, -1}), PolyCoeff(1));
    want += UEAElt::mono(PBWMono({1, -1}), PolyCoeff(1));
    CHECK(nf_word({0, 1, -1}) == want);
  }
}

TEST_CASE("normal form is confluent under single rewrite steps") {
  std::mt19937_64 g(23);
  auto ri = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  int tested = 0;
  while (tested < 100) {
    std::vector<GenIndex> w(static_cast<size_t>(ri(2, 5)));
    for (auto& i : w) i = ri(-1, 6);
    ++tested;
    const size_t i = static_cast<size_t>(ri(0, static_cast<int>(w.size()) - 2));
    std::vector<GenIndex> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    std::vector<GenIndex> contracted(w.begin(), w.begin() + static_cast<long>(i));
    contracted.push_back(w[i] + w[i + 1]);
    contracted.insert(contracted.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    CHECK(nf_word(w) ==
          nf_word(swapped) + nf_word(contracted, PolyCoeff(Rat(w[i + 1] - w[i]))));
  }
}

TEST_CASE("product examples") {
  CHECK(mul(e(1), e(-1)) == UEAElt::mono(PBWMono({1, -1}), PolyCoeff(1)));
  CHECK(mul(e(-1), e(1)) ==
        UEAElt::mono(PBWMono({1, -1}), PolyCoeff(1)) + PolyCoeff(2) * e(0));
  CHECK(mul(Q(), Q()).coeff(PBWMono({0, 0, 0, 0})) == PolyCoeff(1));
}

TEST_CASE("adjoint action examples") {
  CHECK(ad(e(-1), Z()) == Q());
  CHECK(ad(S(), em1_sq()) == PolyCoeff(-48) * Q());
  CHECK(ad_pow(S(), 2, em1_sq()) == PolyCoeff(-96) * Qe2());
  CHECK(ad(e(1), Q()).is_zero());
}

TEST_CASE("transpose examples") {
  CHECK(transpose(Q()) == Q());
  CHECK(transpose(Z()) == Z());
  CHECK(transpose(Y()) == -Y());
  {
    UEAElt want = UEAElt::mono(PBWMono({1, 0}), PolyCoeff(1)) + e(1);
    CHECK(transpose(mul(e(1), e(0))) == want);
  }
}

TEST_CASE("projection and symmetrizer examples") {
  {
    const SymElt s = proj_top(mul(e(1), e(-1)) + PolyCoeff(2) * e(0), 2);
    CHECK(s == SymElt::mono(PBWMono({1, -1}), PolyCoeff(1)));
  }
  {
    const SymElt s = proj_top(Q(), 2);
    SymElt want = SymElt::mono(PBWMono({0, 0}), PolyCoeff(1));
    want -= SymElt::mono(PBWMono({1, -1}), PolyCoeff(1));
    CHECK(s == want);
  }
  CHECK(proj_top(e(0), 2).is_zero());
  CHECK_THROWS_AS(proj_top(Q(), 1), std::invalid_argument);

  CHECK(sym_k(SymElt::mono(PBWMono({1, -1}), PolyCoeff(1)), 2) ==
        UEAElt::mono(PBWMono({1, -1}), PolyCoeff(1)) + e(0));
  CHECK(sym_k(SymElt::mono(PBWMono({3}), PolyCoeff(1)), 1) == e(3));
  CHECK(sym_k(SymElt::mono(PBWMono({0, 0}), PolyCoeff(1)), 2) == mul(e(0), e(0)));
  CHECK_THROWS_AS(sym_k(SymElt::mono(PBWMono({1}), PolyCoeff(1)), 2), std::invalid_argument);
}

TEST_CASE("symmetric decomposition examples") {
  {
    const auto comps = sym_decompose(Q());
    REQUIRE(comps.size() == 3);
    SymElt want = SymElt::mono(PBWMono({0, 0}), PolyCoeff(1));
    want -= SymElt::mono(PBWMono({1, -1}), PolyCoeff(1));
    CHECK(comps[2] == want);
    CHECK(comps[1].is_zero());
    CHECK(comps[0].is_zero());
  }
  {
    const auto comps = sym_decompose(Y());
    REQUIRE(comps.size() == 4);
    CHECK(comps[2].is_zero());
    CHECK(comps[1].is_zero());
    CHECK(comps[0].is_zero());
  }
  {
    const auto comps = sym_decompose(e(0));
    REQUIRE(comps.size() == 2);
    CHECK(comps[1] == SymElt::mono(PBWMono({0}), PolyCoeff(1)));
  }
}

TEST_CASE("weight split examples") {
  {
    const auto parts = Q().weight_split();
    REQUIRE(parts.size() == 1);
    CHECK(parts.at(0) == Q());
  }
  {
    const auto parts = (e(1) + e(-1)).weight_split();
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1) == e(1));
    CHECK(parts.at(-1) == e(-1));
  }
  {
    const auto parts = Qe2().weight_split();
    REQUIRE(parts.size() == 1);
    CHECK(parts.at(2) == Qe2());
  }
}

TEST_CASE("named element values") {
  CHECK(Q() == mul(e(0), e(0)) - e(0) - mul(e(1), e(-1)));
  CHECK(omega(2, 1, -1) == PolyCoeff(-2) * Q());
  CHECK(omega(3, 2, -1).is_zero());
  CHECK_THROWS_AS(omega(3, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(omega(2, 1, -2), std::invalid_argument);
  CHECK(ad(e(-1), Y1()) == Y());
  CHECK(Y1().coeff(PBWMono({3, -1, -1})).is_zero());
}

TEST_CASE("rendering follows the canonical term order") {
  CHECK(Q().str() == "e_0^2 - e_1 e_-1 - e_0");
  CHECK(UEAElt::one().str() == "1");
  CHECK(UEAElt::zero().str() == "0");
  const UEAElt mixed = (PolyCoeff::lambda() - PolyCoeff(1)) * e(2);
  CHECK(mixed.str() == "(lambda - 1) e_2");
}
