#include <doctest.h>

#include <algorithm>
#include <functional>

#include "wittlab/named.hpp"
#include "wittlab/slices.hpp"

using namespace wittlab;
using namespace wittlab::elements;

namespace {

UEAElt e(GenIndex n) { return UEAElt::gen(n); }
UEAElt em1_sq() { return mul(e(-1), e(-1)); }

// Brute-force enumeration oracle: all tuples in [-1, cap]^d, kept if sorted
// non-increasing with the right weight.
std::vector<PBWMono> enumerate_oracle(int d, int mu) {
  std::vector<PBWMono> out;
  const int cap = mu + d + 1;
  std::vector<GenIndex> t(static_cast<size_t>(d), -1);
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == t.size()) {
      int w = 0;
      bool sorted = true;
      for (size_t i = 0; i < t.size(); ++i) {
        w += t[i];
        if (i + 1 < t.size() && t[i] < t[i + 1]) sorted = false;
      }
      if (sorted && w == mu) out.push_back(PBWMono(t));
      return;
    }
    for (GenIndex v = -1; v <= cap; ++v) {
      t[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const PBWMono& a, const PBWMono& b) { return a.indices() < b.indices(); });
  return out;
}

// Partition counting oracle by direct enumeration.
long partitions_oracle(int n, int lo, int hi) {
  std::function<long(int, int)> rec = [&](int left, int maxpart) -> long {
    if (left == 0) return 1;
    long total = 0;
    for (int p = std::min(maxpart, left); p >= lo; --p) total += rec(left - p, p);
    return total;
  };
  return rec(n, hi);
}

}  // namespace

TEST_CASE("slice bases match the enumeration oracle") {
  for (int k = 0; k <= 3; ++k)
    for (int mu = -3; mu <= 5; ++mu) {
      const Slice s = Slice::make(k, mu);
      std::vector<PBWMono> oracle;
      for (int d = 0; d <= k; ++d)
        for (auto& m : enumerate_oracle(d, mu)) oracle.push_back(std::move(m));
      REQUIRE(s.dim() == static_cast<int>(oracle.size()));
      // Same monomials, degree-ascending then lexicographic.
      for (int d = 0, i = 0; d <= k; ++d)
        for (const auto& m : enumerate_oracle(d, mu)) CHECK(s.basis()[static_cast<size_t>(i++)] == m);
    }
}

TEST_CASE("slice basis examples") {
  {
    const Slice s = Slice::make(2, -2);
    REQUIRE(s.dim() == 1);
    CHECK(s.basis()[0] == PBWMono({-1, -1}));
  }
  {
    const Slice s = Slice::make(2, 0);
    REQUIRE(s.dim() == 4);
    CHECK(s.basis()[0] == PBWMono::one());
    CHECK(s.basis()[1] == PBWMono({0}));
    CHECK(s.basis()[2] == PBWMono({0, 0}));
    CHECK(s.basis()[3] == PBWMono({1, -1}));
  }
  {
    const Slice s = Slice::make(1, 3);
    REQUIRE(s.dim() == 1);
    CHECK(s.basis()[0] == PBWMono({3}));
  }
}

TEST_CASE("subalgebra and symmetric filters") {
  const Slice a2 = Slice::make(2, 0, SliceFilter::subalgebra(SubalgebraId::projective_a));
  CHECK(a2.dim() == 4);  // 1, e_0, e_0^2, e_1 e_-1
  const Slice sym2 = Slice::make(2, 0, SliceFilter::sym_image(2));
  CHECK(sym2.dim() == 2);  // {0,0}, {1,-1}
  CHECK(sym2.coords(Q()).size() == 2);
  CHECK_THROWS_AS(sym2.coords(e(0)), std::invalid_argument);
}

TEST_CASE("coordinates round-trip") {
  const Slice s = Slice::make(2, 0);
  const RatVec v = s.coords(Q());
  CHECK(s.from_coords(v) == Q());
  CHECK_THROWS_AS(s.coords(e(3)), std::invalid_argument);
}

TEST_CASE("lowest and highest weight spaces") {
  {
    const Subspace l = lws(2, 0);
    CHECK(l.dim() == 2);
    CHECK(l.contains(UEAElt::one()));
    CHECK(l.contains(Q()));
  }
  {
    const Subspace l = lws(3, 1);
    CHECK(l.dim() == 1);
    CHECK(l.contains(mul(Qe2(), e(-1))));
  }
  for (int l = -1; l <= 5; ++l)
    CHECK(lws(2, 2 * l, SliceFilter::sym_image(2)).dim() == 1);
  CHECK(hws(1, 5).dim() == 0);
  {
    const Subspace h = hws(2, 0, SliceFilter::sym_image(2));
    CHECK(h.dim() >= 1);
    CHECK(h.contains(Q()));
  }
  CHECK(hws(3, 3, SliceFilter::sym_image(3)).dim() == 1);
  CHECK(hws(3, 1, SliceFilter::sym_image(3)).dim() == 1);
}

TEST_CASE("casimir examples") {
  CHECK(casimir_ad(em1_sq()) == PolyCoeff(6) * em1_sq());
  CHECK(casimir_ad(UEAElt::one()).is_zero());
  CHECK(casimir_ad(Qe2()) == PolyCoeff(2) * Qe2());
}

TEST_CASE("subspace operations") {
  const Slice s = Slice::make(2, 0);
  const Subspace a = Subspace::span(s, {Q()});
  const Subspace b = Subspace::span(s, {PolyCoeff(3) * Q()});
  CHECK(equal(a, b));
  const Subspace u = Subspace::span(s, {UEAElt::one(), Q()});
  const Subspace v = Subspace::span(s, {Q(), e(0)});
  const Subspace w = intersect(u, v);
  CHECK(w.dim() == 1);
  CHECK(w.contains(Q()));
  CHECK(sum(u, v).dim() == 3);
  const Subspace other = Subspace::span(Slice::make(2, 1), {Z()});
  CHECK_THROWS_AS(intersect(a, other), std::invalid_argument);
  CHECK_THROWS_AS((void)equal(a, other), std::invalid_argument);
}

TEST_CASE("restrict_to_degree keeps the low-degree part") {
  const Slice s = Slice::make(2, 0);
  const Subspace mixed = Subspace::span(s, {Q(), e(0), UEAElt::one()});
  const Subspace low = restrict_to_degree(mixed, 1);
  CHECK(low.dim() == 2);  // 1 and e_0; Q needs degree 2
  CHECK(low.contains(e(0)));
  CHECK(low.contains(UEAElt::one()));
}

TEST_CASE("submodule closure of Z matches the stacked density dimensions") {
  const auto buckets = submodule_closure({Z()}, 2, 8);
  for (int w = -2; w <= 8; ++w) {
    int want = 0;
    for (int l = 0; 2 * l <= w; ++l) ++want;
    const int got = buckets.count(w) ? buckets.at(w).dim() : 0;
    CHECK(got == want);
  }
  CHECK(equal(buckets.at(0), Subspace::span(Slice::make(2, 0), {Q()})));
  CHECK(buckets.at(1).contains(Z()));
}

TEST_CASE("submodule closure of Qe2 vanishes below weight 2") {
  const auto buckets = submodule_closure({Qe2()}, 2, 8);
  for (int w = -2; w < 2; ++w)
    CHECK((buckets.count(w) ? buckets.at(w).dim() : 0) == 0);
  CHECK(buckets.at(2).dim() == 1);
}

TEST_CASE("submodule closure of e_-1^2 fills the symmetric component") {
  const auto buckets = submodule_closure({em1_sq()}, 2, 8);
  for (int w = -2; w <= 8; ++w) {
    const Slice sym2 = Slice::make(2, w, SliceFilter::sym_image(2));
    const int got = buckets.count(w) ? buckets.at(w).dim() : 0;
    CHECK(got == sym2.dim());
  }
}

TEST_CASE("counting functions") {
  CHECK(counts('t', 3, 2) == 3);
  CHECK(counts('q', 4, 6) == 3);
  CHECK(counts('p', 4, 0) == 1);
  CHECK(counts('w', 3, 2) == 6);
  CHECK_THROWS_AS(counts('x', 3, 2), std::invalid_argument);
  for (int k = 1; k <= 6; ++k)
    for (int n = 0; n <= 12; ++n) {
      CHECK(counts('p', k, n) == partitions_oracle(n, 1, k));
      CHECK(counts('q', k, n) == partitions_oracle(n, 2, k));
    }
}
