#include "wittlab/annihilator.hpp"

#include <sstream>

namespace wittlab {

ModuleSpec ModuleSpec::offset(const Rat& a, const Rat& v) {
  if (a.is_integer())
    throw std::invalid_argument("ModuleSpec::offset: offset must be non-integral");
  return {Kind::offset, v, a};
}

ModuleSpec ModuleSpec::aug_plus(const Rat& v) {
  if (v == Rat(0) || v == Rat(1))
    throw std::invalid_argument("ModuleSpec::aug_plus: lambda must differ from 0 and 1");
  return {Kind::aug_plus, v, Rat(0)};
}

std::string ModuleSpec::str() const {
  switch (kind) {
    case Kind::poly: return "F[" + lambda.str() + "]";
    case Kind::universal: return "F[Lambda]";
    case Kind::neg_poly: return "F-[" + lambda.str() + "]";
    case Kind::offset: return "F[" + offset_a.str() + "+Z," + lambda.str() + "]";
    case Kind::aug_plus: return "C+F[" + lambda.str() + "]";
  }
  return "?";
}

PolyCoeff counit(const UEAElt& t) { return t.constant_term(); }

bool operator<(const ActionKey& a, const ActionKey& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  if (a.x_pow != b.x_pow) return a.x_pow < b.x_pow;
  if (a.d_pow != b.d_pow) return a.d_pow < b.d_pow;
  if (a.sample != b.sample) return a.sample < b.sample;
  return a.exponent < b.exponent;
}

namespace {

void add_weyl_coords(const WeylElt& w, std::map<ActionKey, Rat>& out) {
  for (const auto& [m, c] : w.terms())
    for (const auto& [dL, part] : c.split_by_Lambda_degree()) {
      const Rat v = part.constant_value();
      if (!v.is_zero()) out[{static_cast<int>(dL), m.x_pow, m.d_pow, Rat(0), Rat(0)}] = v;
    }
}

void add_sample_coords(const WeylElt& w, const std::vector<Rat>& samples,
                       std::map<ActionKey, Rat>& out) {
  for (const Rat& mu : samples)
    for (const auto& [ex, c] : apply(w, mu)) {
      const Rat v = c.constant_value();
      if (!v.is_zero()) out[{-2, 0, 0, mu, ex}] = v;
    }
}

}  // namespace

std::map<ActionKey, Rat> action_coords(const ModuleSpec& m, const UEAElt& t, int sample_span) {
  std::map<ActionKey, Rat> out;
  switch (m.kind) {
    case ModuleSpec::Kind::poly:
      add_weyl_coords(rep(t, LambdaSpec::at(m.lambda)), out);
      break;
    case ModuleSpec::Kind::universal:
      add_weyl_coords(rep(t, LambdaSpec::formal_Lambda()), out);
      break;
    case ModuleSpec::Kind::aug_plus: {
      add_weyl_coords(rep(t, LambdaSpec::at(m.lambda)), out);
      const Rat c = counit(t).constant_value();
      if (!c.is_zero()) out[{-1, 0, 0, Rat(0), Rat(0)}] = c;
      break;
    }
    case ModuleSpec::Kind::neg_poly: {
      std::vector<Rat> samples;
      for (int j = 1; j <= sample_span; ++j) samples.push_back(Rat(-j));
      add_sample_coords(rep(t, LambdaSpec::at(m.lambda)), samples, out);
      break;
    }
    case ModuleSpec::Kind::offset: {
      std::vector<Rat> samples;
      for (int j = -sample_span; j <= sample_span; ++j) samples.push_back(m.offset_a + Rat(j));
      add_sample_coords(rep(t, LambdaSpec::at(m.lambda)), samples, out);
      break;
    }
  }
  return out;
}

RatMat action_matrix(const ModuleSpec& m, const std::vector<UEAElt>& elts, int sample_span) {
  std::vector<std::map<ActionKey, Rat>> cols;
  cols.reserve(elts.size());
  std::map<ActionKey, int> key_index;
  for (const auto& t : elts) {
    cols.push_back(action_coords(m, t, sample_span));
    for (const auto& [key, v] : cols.back()) key_index.emplace(key, 0);
  }
  int r = 0;
  for (auto& [key, idx] : key_index) idx = r++;
  RatMat a(r, static_cast<Eigen::Index>(elts.size()));
  a.setConstant(Rat(0));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [key, v] : cols[j]) a(key_index[key], static_cast<Eigen::Index>(j)) = v;
  return a;
}

Subspace ann_slice(const ModuleSpec& m, int k, int mu, SubalgebraId ambient) {
  const SliceFilter filter = ambient == SubalgebraId::full
                                 ? SliceFilter::full()
                                 : SliceFilter::subalgebra(ambient);
  const Slice s = Slice::make(k, mu, filter);
  std::vector<UEAElt> elts;
  elts.reserve(static_cast<size_t>(s.dim()));
  for (int i = 0; i < s.dim(); ++i) elts.push_back(s.element(i));
  const int span = k + std::abs(mu) + 1;
  const RatMat a = action_matrix(m, elts, span);
  return Subspace::from_rows(s, kernel(a));
}

std::map<int, Subspace> ideal_buckets(const std::vector<UEAElt>& gens, int k, int W_top) {
  std::map<int, Subspace> buckets;
  auto bucket = [&](int w) -> Subspace& {
    auto it = buckets.find(w);
    if (it == buckets.end()) it = buckets.emplace(w, Subspace(Slice::make(k, w))).first;
    return it->second;
  };
  for (const auto& g : gens) {
    if (g.degree() > k) throw std::invalid_argument("ideal_buckets: generator degree > k");
    for (const auto& [w, part] : g.weight_split())
      if (w <= W_top) bucket(w).insert(part);
  }
  // Fixed point under t -> ad(e_n) t (stays in U_k) and, for elements of
  // degree <= k-1, one-sided products e_n t and t e_n. This captures the
  // full (e_n V + V e_n) intersected with U_k: any such element splits as
  // ad(e_n) p + r e_n with p, r in V and deg(r) <= k-1.
  std::map<int, Subspace> done_full, done_low;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<int> weights = [&] {
      std::vector<int> ws;
      for (const auto& [w, sub] : buckets)
        if (sub.dim() > 0) ws.push_back(w);
      return ws;
    }();
    for (int w : weights) {
      const Subspace V = bucket(w);
      auto df = done_full.find(w);
      auto insert_products = [&](const UEAElt& v, bool low) {
        for (GenIndex n = -1; n <= W_top - w; ++n) {
          const UEAElt en = UEAElt::gen(n);
          UEAElt adv = ad(en, v);
          if (!adv.is_zero() && !low && bucket(w + n).insert(adv)) grew = true;
          if (low) {
            UEAElt l = mul(en, v), r = mul(v, en);
            if (!l.is_zero() && bucket(w + n).insert(l)) grew = true;
            if (!r.is_zero() && bucket(w + n).insert(r)) grew = true;
          }
        }
      };
      for (int i = 0; i < V.dim(); ++i) {
        const RatVec row = V.rows().row(i).transpose();
        if (df != done_full.end() && df->second.contains_vec(row)) continue;
        insert_products(V.basis_elt(i), false);
      }
      done_full[w] = V;
      const Subspace L = restrict_to_degree(V, std::max(k - 1, 0));
      auto dl = done_low.find(w);
      for (int i = 0; i < L.dim(); ++i) {
        const RatVec row = L.rows().row(i).transpose();
        if (dl != done_low.end() && dl->second.contains_vec(row)) continue;
        insert_products(L.basis_elt(i), true);
      }
      done_low[w] = L;
    }
  }
  return buckets;
}

Subspace ideal_slice(const std::vector<UEAElt>& gens, int k, int mu) {
  auto buckets = ideal_buckets(gens, k, std::max(mu, 0) + k);
  auto it = buckets.find(mu);
  if (it == buckets.end()) return Subspace(Slice::make(k, mu));
  return it->second;
}

}  // namespace wittlab
