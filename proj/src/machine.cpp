#include "wittlab/machine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wittlab {

bool pattern_matches(JPattern p, const PBWMono& m) {
  const auto& idx = m.indices();
  auto all_tail = [&](size_t from, auto pred) {
    for (size_t i = from; i < idx.size(); ++i)
      if (!pred(idx[i])) return false;
    return true;
  };
  switch (p) {
    case JPattern::c_pattern:
      if (all_tail(0, [](GenIndex i) { return i == -1; })) return true;
      return !idx.empty() && idx[0] >= 0 && all_tail(1, [](GenIndex i) { return i == -1; });
    case JPattern::b_pattern:
      if (all_tail(0, [](GenIndex i) { return i == 0 || i == -1; })) return true;
      return !idx.empty() && idx[0] >= 1 &&
             all_tail(1, [](GenIndex i) { return i == 0 || i == -1; });
    case JPattern::il_pattern:
      if (all_tail(0, [](GenIndex i) { return i == -1; })) return true;
      if (!idx.empty() && idx[0] >= 0 && all_tail(1, [](GenIndex i) { return i == -1; }))
        return true;
      return idx.size() == 2 && idx[0] >= 0 && idx[1] == 0;
    case JPattern::sl2_pattern: {
      int zeros = 0;
      for (GenIndex i : idx) {
        if (i < -1 || i > 1) return false;
        if (i == 0) ++zeros;
      }
      return zeros <= 1;
    }
  }
  return false;
}

namespace {

int count_in(SubalgebraId s, const PBWMono& m) {
  int c = 0;
  for (GenIndex i : m.indices())
    if (subalgebra_contains(s, i)) ++c;
  return c;
}

std::string mono_list(const std::vector<PBWMono>& ms) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < ms.size(); ++i) os << (i ? ", " : "") << ms[i].str();
  os << "}";
  return os.str();
}

}  // namespace

MachineResult machine_check(const MachineConfig& cfg) {
  MachineResult res;
  auto fail = [&](const std::string& w) {
    res.pass = false;
    res.failures.push_back(w);
  };

  if (cfg.degrees.empty() || cfg.degrees.size() != cfg.J.size())
    throw std::invalid_argument("machine_check: degrees/J size mismatch");
  for (size_t s = 0; s + 1 < cfg.degrees.size(); ++s) {
    if (cfg.degrees[s] >= cfg.degrees[s + 1])
      throw std::invalid_argument("machine_check: degrees must be strictly ascending");
    // J spaces must descend by containment (checked on the ambient index range).
    for (GenIndex i = -1; i <= cfg.max_weight + cfg.max_degree; ++i)
      if (subalgebra_contains(cfg.J[s + 1], i) && !subalgebra_contains(cfg.J[s], i))
        throw std::invalid_argument("machine_check: J spaces not descending");
  }
  const int d1 = cfg.degrees.front(), dr = cfg.degrees.back();
  const int k_cut = cfg.max_degree, W = cfg.max_weight;
  if (d1 < 1 || k_cut < dr)
    throw std::invalid_argument("machine_check: cutoff too small for the stated degrees");

  const SubalgebraId amb = cfg.ambient;
  const SliceFilter amb_filter =
      amb == SubalgebraId::full ? SliceFilter::full() : SliceFilter::subalgebra(amb);
  const int mu_hi = amb == SubalgebraId::full ? W : std::min(W, k_cut);
  const int mu_lo = -k_cut;
  const int span_bound = k_cut + std::max(std::abs(mu_lo), std::abs(mu_hi)) + 1;

  // I-slice provider.
  std::map<int, Subspace> closure;
  if (cfg.i_kind == MachineConfig::IKind::closure_gens)
    closure = submodule_closure(cfg.i_gens, k_cut, W);
  auto I_slice = [&](int d, int mu) -> Subspace {
    switch (cfg.i_kind) {
      case MachineConfig::IKind::closure_gens: {
        auto it = closure.find(mu);
        if (it == closure.end()) return Subspace(Slice::make(d, mu));
        return restrict_to_degree(it->second, d);
      }
      case MachineConfig::IKind::ann_of_module:
        return ann_slice(cfg.module, d, mu, amb);
      case MachineConfig::IKind::explicit_span: {
        const Slice s = Slice::make(d, mu, amb_filter);
        std::vector<UEAElt> parts;
        for (const auto& g : cfg.i_gens)
          for (const auto& [w, part] : g.weight_split())
            if (w == mu && part.degree() <= d) parts.push_back(part);
        return Subspace::span(s, parts);
      }
    }
    return Subspace(Slice::make(d, mu));
  };

  // I subseteq Ann(V) cap U_{d_r}.
  for (int mu = mu_lo; mu <= mu_hi; ++mu) {
    const Subspace I = I_slice(dr, mu);
    for (int i = 0; i < I.dim(); ++i) {
      const UEAElt v = I.basis_elt(i);
      if (!action_coords(cfg.module, v, span_bound).empty())
        fail("I not annihilated at weight " + std::to_string(mu) + ": " + v.str());
    }
  }

  // (a) module action injective on the pattern span.
  for (int mu = mu_lo; mu <= mu_hi; ++mu) {
    const Slice s = Slice::make(k_cut, mu, amb_filter);
    std::vector<UEAElt> patt;
    for (const auto& m : s.basis())
      if (pattern_matches(cfg.pattern, m)) patt.push_back(UEAElt::mono(m, PolyCoeff(1)));
    if (patt.empty()) continue;
    const RatMat a = action_matrix(cfg.module, patt, span_bound);
    if (rank(a) != static_cast<Eigen::Index>(patt.size()))
      fail("(a) action not injective on pattern span at weight " + std::to_string(mu));
  }

  // (b) every monomial of degree < d_1 matches the pattern.
  for (int d = 0; d < d1; ++d)
    for (int mu = -d; mu <= mu_hi; ++mu)
      for (const auto& m : pbw_monomials(d, mu, amb))
        if (!pattern_matches(cfg.pattern, m))
          fail("(b) low-degree monomial outside pattern: " + m.str());

  // (c) degree-k pattern symbols match S^{k-d1+1}(J_s) S^{d1-1}(g).
  for (int k = d1; k <= k_cut; ++k) {
    size_t stage = 0;
    while (stage + 1 < cfg.degrees.size() && cfg.degrees[stage + 1] <= k) ++stage;
    const SubalgebraId Js = cfg.J[stage];
    for (int mu = -k; mu <= mu_hi; ++mu) {
      std::vector<PBWMono> lhs, rhs;
      for (const auto& m : pbw_monomials(k, mu, amb)) {
        if (pattern_matches(cfg.pattern, m)) lhs.push_back(m);
        if (count_in(Js, m) >= k - d1 + 1) rhs.push_back(m);
      }
      if (!(lhs == rhs))
        fail("(c) symbol families differ at degree " + std::to_string(k) + ", weight " +
             std::to_string(mu) + ": pattern " + mono_list(lhs) + " vs J-span " + mono_list(rhs));
    }
  }

  // (d) I symbols complement the J part of S^{d_s}(g).
  for (size_t stage = 0; stage < cfg.degrees.size(); ++stage) {
    const int d = cfg.degrees[stage];
    const SubalgebraId Js = cfg.J[stage];
    for (int mu = -d; mu <= mu_hi; ++mu) {
      const auto multisets = pbw_monomials(d, mu, amb);
      std::map<PBWMono, int> pos;
      for (size_t i = 0; i < multisets.size(); ++i) pos[multisets[i]] = static_cast<int>(i);
      const Subspace I = I_slice(d, mu);
      RatMat ibar(I.dim(), static_cast<Eigen::Index>(multisets.size()));
      ibar.setConstant(Rat(0));
      RatMat ibar_nonj = ibar;
      for (int i = 0; i < I.dim(); ++i) {
        const SymElt top = proj_top(I.basis_elt(i), d);
        for (const auto& [m, c] : top.terms()) {
          ibar(i, pos.at(m)) = c.constant_value();
          if (count_in(Js, m) == 0) ibar_nonj(i, pos.at(m)) = c.constant_value();
        }
      }
      RatMat jrows(0, static_cast<Eigen::Index>(multisets.size()));
      {
        std::vector<Eigen::Index> sel;
        for (size_t i = 0; i < multisets.size(); ++i)
          if (count_in(Js, multisets[i]) >= d - d1 + 1) sel.push_back(static_cast<Eigen::Index>(i));
        jrows = RatMat(static_cast<Eigen::Index>(sel.size()),
                       static_cast<Eigen::Index>(multisets.size()));
        jrows.setConstant(Rat(0));
        for (size_t i = 0; i < sel.size(); ++i) jrows(static_cast<Eigen::Index>(i), sel[i]) = Rat(1);
      }
      if (rank(vstack(ibar, jrows)) != static_cast<Eigen::Index>(multisets.size()))
        fail("(d) symbols of I do not complement the J part at degree " + std::to_string(d) +
             ", weight " + std::to_string(mu));
      if (stage == 0 && rank(ibar_nonj) != I.dim())
        fail("(d) J-coset symbol map not injective on I at weight " + std::to_string(mu));
    }
  }

  // (e) I cap U_{d_s - 1} = I cap U_{d_{s-1}} for later stages.
  for (size_t stage = 1; stage < cfg.degrees.size(); ++stage) {
    const int dlo = cfg.degrees[stage - 1], dhi = cfg.degrees[stage] - 1;
    for (int mu = -dhi; mu <= mu_hi; ++mu) {
      const Subspace big = I_slice(dhi, mu);
      const Subspace small = I_slice(dlo, mu);
      // Embed the smaller slice subspace by zero-extending its coordinates.
      const Slice target = Slice::make(dhi, mu, amb_filter);
      RatMat rows(small.dim(), target.dim());
      rows.setConstant(Rat(0));
      rows.leftCols(small.slice().dim()) = small.rows();
      if (!equal(big, Subspace::from_rows(target, std::move(rows))))
        fail("(e) I slices differ between degrees " + std::to_string(dlo) + " and " +
             std::to_string(dhi) + " at weight " + std::to_string(mu));
    }
  }

  // Ann cap U_{d1 - 1} vanishes.
  for (int mu = -(d1 - 1); mu <= mu_hi; ++mu) {
    const Subspace a = ann_slice(cfg.module, d1 - 1, mu, amb);
    if (a.dim() != 0)
      fail("annihilator meets U_" + std::to_string(d1 - 1) + " at weight " + std::to_string(mu));
  }

  // Cross-section: Ann oplus span(pattern) = U on every slice.
  for (int mu = mu_lo; mu <= mu_hi; ++mu) {
    const Slice s = Slice::make(k_cut, mu, amb_filter);
    const Subspace ann = ann_slice(cfg.module, k_cut, mu, amb);
    std::vector<UEAElt> patt;
    for (const auto& m : s.basis())
      if (pattern_matches(cfg.pattern, m)) patt.push_back(UEAElt::mono(m, PolyCoeff(1)));
    const Subspace jspan = Subspace::span(s, patt);
    const int both = intersect(ann, jspan).dim();
    if (both != 0)
      fail("cross-section overlaps annihilator at weight " + std::to_string(mu));
    if (ann.dim() + jspan.dim() != s.dim())
      fail("cross-section not complementary at weight " + std::to_string(mu) + ": " +
           std::to_string(ann.dim()) + " + " + std::to_string(jspan.dim()) +
           " != " + std::to_string(s.dim()));
  }

  res.notes.push_back(cfg.label + ": slices at degree <= " + std::to_string(k_cut) +
                      ", weights in [" + std::to_string(mu_lo) + ", " + std::to_string(mu_hi) +
                      "]");
  return res;
}

}  // namespace wittlab
