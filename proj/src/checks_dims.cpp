#include "checks_internal.hpp"

namespace wittlab::checks {

using namespace wittlab::elements;

namespace {

void lws_sym2(CheckContext& c) {
  for (int l = -1; l <= 5; ++l) {
    const Subspace s = lws(2, 2 * l, SliceFilter::sym_image(2));
    c.require(s.dim() == 1, "lowest weight space at weight " + std::to_string(2 * l) +
                                " has dimension " + std::to_string(s.dim()));
    const UEAElt step = ad_pow(S(), static_cast<unsigned>(l + 1), em1_sq());
    c.require(!step.is_zero(), "step element vanishes at l=" + std::to_string(l));
    c.require(s.contains(step),
              "ad(S)^{l+1} e_{-1}^2 is not the lowest weight line at weight " +
                  std::to_string(2 * l));
  }
  c.note("one lowest weight line at each even weight -2..10, spanned by the step orbit");
}

void lws_u3(CheckContext& c) {
  const std::vector<int> want = {1, 1, 2, 3, 1, 2};
  for (int w = -3; w <= 2; ++w) {
    const int dim = lws(3, w).dim();
    c.require(dim == want[static_cast<size_t>(w + 3)],
              "lowest weight dimension at weight " + std::to_string(w) + " is " +
                  std::to_string(dim) + ", expected " +
                  std::to_string(want[static_cast<size_t>(w + 3)]));
  }
  c.note("dimensions (1,1,2,3,1,2) at weights -3..2 in the degree <= 3 filtration");
}

void hws_sym3(CheckContext& c) {
  for (int mu = -3; mu <= c.cfg().max_weight; ++mu) {
    const int dim = hws(3, mu, SliceFilter::sym_image(3)).dim();
    const int want = (mu == 3 || mu == 1) ? 1 : 0;
    c.require(dim == want, "highest weight dimension at weight " + std::to_string(mu) +
                               " is " + std::to_string(dim));
  }
  c.note("exactly two highest weight lines, at weights 3 and 1");
}

void partition_identities(CheckContext& c) {
  for (int k = 1; k <= 6; ++k)
    for (int n = 0; n <= 12; ++n) {
      const long p = counts('p', k, n);
      const long pm = n > 0 ? counts('p', k, n - 1) : 0;
      c.require(p - pm == counts('q', k, n),
                "p - q identity fails at k=" + std::to_string(k) + ", n=" + std::to_string(n));
    }
  c.require(counts('q', 4, 6) == 3, "q_4(6) != 3");
  c.require(counts('p', 3, 0) == 1, "p_k(0) != 1");
  c.note("k <= 6, n <= 12");
}

void tensor_identities(CheckContext& c) {
  for (int k = 2; k <= 6; ++k)
    for (int n = 0; n <= 12; ++n) {
      const long w = counts('w', k, n);
      const long wm = n > 0 ? counts('w', k, n - 1) : 0;
      c.require(w - wm == counts('t', k, n),
                "w - t identity fails at k=" + std::to_string(k) + ", n=" + std::to_string(n));
    }
  c.require(counts('t', 3, 2) == 3, "t_3(2) != 3");
  c.note("k in 2..6, n <= 12");
}

void sym_slice_dims(CheckContext& c) {
  for (int k = 2; k <= 3; ++k)
    for (int n = 0; n <= 10; ++n) {
      const Slice s = Slice::make(k, n - k, SliceFilter::sym_image(k));
      c.require(s.dim() == static_cast<int>(counts('p', k, n)),
                "symmetric slice dimension mismatch at k=" + std::to_string(k) +
                    ", n=" + std::to_string(n));
    }
  c.note("degree-k symmetric slices have the partition dimensions p_k(n)");
}

void ad_surjectivity(CheckContext& c) {
  for (int k = 2; k <= 3; ++k)
    for (int mu = -k + 1; mu <= c.cfg().max_weight; ++mu) {
      const Slice domain = Slice::make(k, mu, SliceFilter::sym_image(k));
      const Slice codomain = Slice::make(k, mu - 1);
      const Eigen::Index r = rank(ad_matrix(UEAElt::gen(-1), domain, codomain));
      const int target = Slice::make(k, mu - 1, SliceFilter::sym_image(k)).dim();
      c.require(r == target, "ad(e_-1) not surjective on the degree-" + std::to_string(k) +
                                 " symmetric slice at weight " + std::to_string(mu));
    }
  c.note("ad(e_-1) maps each symmetric slice onto the next one down");
}

}  // namespace

void register_dims(std::vector<CheckDef>& out) {
  auto add = [&](const std::string& name, const std::string& desc, auto fn) {
    out.push_back({"dims", name, desc, fn});
  };
  add("lws-sym2", "one lowest weight line per even weight in the degree-2 symmetric component",
      lws_sym2);
  add("lws-U3", "lowest weight dimensions (1,1,2,3,1,2) at weights -3..2", lws_u3);
  add("hws-sym3", "two highest weight lines in the degree-3 symmetric component", hws_sym3);
  add("partition-identities", "p_k(n) - p_k(n-1) = q_k(n)", partition_identities);
  add("tensor-identities", "w_k(n) - w_k(n-1) = t_k(n)", tensor_identities);
  add("sym-slice-dims", "symmetric slice dimensions match partition counts", sym_slice_dims);
  add("ad-surjectivity", "ad(e_-1) is surjective between adjacent symmetric slices",
      ad_surjectivity);
}

}  // namespace wittlab::checks
