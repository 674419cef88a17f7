#include "wittlab/slices.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace wittlab {

namespace {

void emit_monomials(int slots, int weight_left, GenIndex max_idx, SubalgebraId sub,
                    std::vector<GenIndex>& acc, std::vector<PBWMono>& out) {
  if (slots == 0) {
    if (weight_left == 0) out.push_back(PBWMono(acc));
    return;
  }
  // Remaining slots-1 indices are >= -1, so this one is <= weight_left + slots - 1.
  const GenIndex hi = std::min(max_idx, weight_left + slots - 1);
  for (GenIndex i = hi; i >= kMinIndex; --i) {
    if (!subalgebra_contains(sub, i)) continue;
    if (weight_left - i < -(slots - 1)) continue;
    acc.push_back(i);
    emit_monomials(slots - 1, weight_left - i, i, sub, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<PBWMono> pbw_monomials(int d, int mu, SubalgebraId sub) {
  std::vector<PBWMono> out;
  if (d < 0) return out;
  std::vector<GenIndex> acc;
  emit_monomials(d, mu, mu + d, sub, acc, out);
  // Canonical order: ascending lexicographic on the index lists.
  std::sort(out.begin(), out.end(),
            [](const PBWMono& a, const PBWMono& b) { return a.indices() < b.indices(); });
  return out;
}

Slice Slice::make(int k, int mu, SliceFilter filter) {
  if (k < 0) throw std::invalid_argument("Slice: negative degree bound");
  Slice s;
  s.k_ = k;
  s.mu_ = mu;
  s.filter_ = filter;
  switch (filter.kind) {
    case SliceFilter::Kind::full:
    case SliceFilter::Kind::subalgebra: {
      const SubalgebraId sub =
          filter.kind == SliceFilter::Kind::full ? SubalgebraId::full : filter.sub;
      for (int d = 0; d <= k; ++d)
        for (auto& m : pbw_monomials(d, mu, sub)) s.basis_.push_back(std::move(m));
      break;
    }
    case SliceFilter::Kind::sym_image: {
      if (filter.sym_degree < 0 || filter.sym_degree > k)
        throw std::invalid_argument("Slice: sym_image degree outside [0, k]");
      s.basis_ = pbw_monomials(filter.sym_degree, mu, SubalgebraId::full);
      break;
    }
  }
  for (size_t i = 0; i < s.basis_.size(); ++i) s.pos_[s.basis_[i]] = static_cast<int>(i);
  return s;
}

int Slice::position(const PBWMono& m) const {
  auto it = pos_.find(m);
  return it == pos_.end() ? -1 : it->second;
}

UEAElt Slice::element(int i) const {
  const PBWMono& m = basis_.at(static_cast<size_t>(i));
  if (filter_.kind == SliceFilter::Kind::sym_image)
    return sym_k(SymElt::mono(m, PolyCoeff(1)), filter_.sym_degree);
  return UEAElt::mono(m, PolyCoeff(1));
}

RatVec Slice::coords(const UEAElt& t) const {
  RatVec v(dim());
  v.setConstant(Rat(0));
  if (filter_.kind == SliceFilter::Kind::sym_image) {
    const auto comps = sym_decompose(t);
    for (size_t j = 0; j < comps.size(); ++j) {
      if (comps[j].is_zero()) continue;
      if (static_cast<int>(j) != filter_.sym_degree)
        throw std::invalid_argument("Slice::coords: element not in the sym_image component");
      for (const auto& [m, c] : comps[j].terms()) {
        const int p = position(m);
        if (p < 0) throw std::invalid_argument("Slice::coords: multiset outside slice");
        v(p) = c.constant_value();
      }
    }
    return v;
  }
  for (const auto& [m, c] : t.terms()) {
    const int p = position(m);
    if (p < 0) throw std::invalid_argument("Slice::coords: monomial outside slice: " + m.str());
    v(p) = c.constant_value();
  }
  return v;
}

UEAElt Slice::from_coords(const RatVec& v) const {
  if (v.size() != dim()) throw std::invalid_argument("Slice::from_coords: size mismatch");
  UEAElt t;
  for (int i = 0; i < dim(); ++i) {
    if (v(i).is_zero()) continue;
    t += PolyCoeff(v(i)) * element(i);
  }
  return t;
}

Subspace::Subspace(Slice s) : slice_(std::move(s)), rows_(0, slice_.dim()) {}

Subspace Subspace::span(const Slice& s, const std::vector<UEAElt>& gens) {
  RatMat m(static_cast<Eigen::Index>(gens.size()), s.dim());
  for (size_t i = 0; i < gens.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = s.coords(gens[i]).transpose();
  return from_rows(s, std::move(m));
}

Subspace Subspace::from_rows(const Slice& s, RatMat rows) {
  if (rows.rows() > 0 && rows.cols() != s.dim())
    throw std::invalid_argument("Subspace: row width does not match slice");
  Subspace sub(s);
  sub.rows_ = rref(std::move(rows));
  return sub;
}

bool Subspace::contains(const UEAElt& t) const { return in_rowspace(rows_, slice_.coords(t)); }

bool Subspace::insert(const UEAElt& t) {
  RatVec v = slice_.coords(t);
  if (in_rowspace(rows_, v)) return false;
  RatMat m(rows_.rows() + 1, slice_.dim());
  if (rows_.rows() > 0) m.topRows(rows_.rows()) = rows_;
  m.row(rows_.rows()) = v.transpose();
  rows_ = rref(std::move(m));
  return true;
}

std::vector<std::string> Subspace::rendered_basis() const {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(dim()));
  for (int i = 0; i < dim(); ++i) out.push_back(basis_elt(i).str());
  return out;
}

void require_same_slice(const Subspace& a, const Subspace& b) {
  if (!(a.slice() == b.slice()))
    throw std::invalid_argument("subspace operands live in different slices");
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_slice(a, b);
  return Subspace::from_rows(a.slice(), vstack(a.rows(), b.rows()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_slice(a, b);
  RatMat m = intersect_rows(a.rows(), b.rows());
  if (m.cols() != a.slice().dim()) m = RatMat(0, a.slice().dim());
  return Subspace::from_rows(a.slice(), std::move(m));
}

bool equal(const Subspace& a, const Subspace& b) {
  require_same_slice(a, b);
  return a.rows() == b.rows();
}

Subspace restrict_to_degree(const Subspace& s, int d) {
  const Slice& big = s.slice();
  if (big.filter().kind != SliceFilter::Kind::full &&
      big.filter().kind != SliceFilter::Kind::subalgebra)
    throw std::invalid_argument("restrict_to_degree: needs a monomial-basis slice");
  const SliceFilter f = big.filter();
  const Slice small = Slice::make(d, big.weight(), f);
  const int p = small.dim();
  // Degree-ascending enumeration makes the small basis a prefix of the big one.
  for (int i = 0; i < p; ++i)
    if (!(big.basis()[static_cast<size_t>(i)] == small.basis()[static_cast<size_t>(i)]))
      throw std::logic_error("restrict_to_degree: basis prefix mismatch");
  if (s.dim() == 0) return Subspace(small);
  const Eigen::Index n = big.dim();
  // Combinations of rows with zero coordinates beyond the prefix.
  RatMat tail = s.rows().rightCols(n - p);
  RatMat combos = kernel(tail.transpose());
  RatMat out(combos.rows(), p);
  out.setConstant(Rat(0));
  for (Eigen::Index i = 0; i < combos.rows(); ++i)
    for (Eigen::Index j = 0; j < s.rows().rows(); ++j)
      for (Eigen::Index c = 0; c < p; ++c) out(i, c) += combos(i, j) * s.rows()(j, c);
  return Subspace::from_rows(small, std::move(out));
}

RatMat ad_matrix(const UEAElt& x, const Slice& domain, const Slice& codomain) {
  RatMat m(codomain.dim(), domain.dim());
  m.setConstant(Rat(0));
  for (int i = 0; i < domain.dim(); ++i)
    m.col(i) = codomain.coords(ad(x, domain.element(i)));
  return m;
}

Subspace lws(int k, int mu, SliceFilter filter) {
  const Slice domain = Slice::make(k, mu, filter);
  const Slice codomain = Slice::make(k, mu - 1);
  const RatMat m = ad_matrix(UEAElt::gen(-1), domain, codomain);
  return Subspace::from_rows(domain, kernel(m));
}

Subspace hws(int k, int mu, SliceFilter filter) {
  const Slice domain = Slice::make(k, mu, filter);
  const Slice codomain = Slice::make(k, mu + 1);
  const RatMat m = ad_matrix(UEAElt::gen(1), domain, codomain);
  return Subspace::from_rows(domain, kernel(m));
}

UEAElt casimir_ad(const UEAElt& t) {
  const UEAElt e0 = UEAElt::gen(0), e1 = UEAElt::gen(1), em1 = UEAElt::gen(-1);
  return ad(e0, ad(e0, t)) - ad(e0, t) - ad(e1, ad(em1, t));
}

std::map<int, Subspace> submodule_closure(const std::vector<UEAElt>& gens, int k, int W) {
  std::map<int, Subspace> buckets;
  auto bucket = [&](int w) -> Subspace& {
    auto it = buckets.find(w);
    if (it == buckets.end())
      it = buckets.emplace(w, Subspace(Slice::make(k, w))).first;
    return it->second;
  };
  std::deque<UEAElt> todo;
  for (const auto& g : gens) {
    if (g.degree() > k) throw std::invalid_argument("submodule_closure: generator degree > k");
    for (const auto& [w, part] : g.weight_split()) {
      if (w > W) continue;
      if (bucket(w).insert(part)) todo.push_back(part);
    }
  }
  while (!todo.empty()) {
    const UEAElt t = std::move(todo.front());
    todo.pop_front();
    const int w = t.terms().begin()->first.weight();
    for (GenIndex n = -1; n <= W - w; ++n) {
      UEAElt u = ad(UEAElt::gen(n), t);
      if (u.is_zero()) continue;
      if (bucket(w + n).insert(u)) todo.push_back(std::move(u));
    }
  }
  return buckets;
}

long counts(char id, int k, int n) {
  if (k < 1) throw std::invalid_argument("counts: k must be >= 1");
  switch (id) {
    case 't':
      return binomial(n + k - 2, k - 2).num().get_si();
    case 'w':
      return binomial(n + k - 1, k - 1).num().get_si();
    case 'p':
    case 'q': {
      if (n < 0) return 0;
      const int lo = id == 'p' ? 1 : 2;
      // parts[m] = number of partitions of m with all part sizes in [lo, k]
      std::vector<long> parts(static_cast<size_t>(n) + 1, 0);
      parts[0] = 1;
      for (int part = lo; part <= k; ++part)
        for (int m = part; m <= n; ++m) parts[static_cast<size_t>(m)] += parts[static_cast<size_t>(m - part)];
      return parts[static_cast<size_t>(n)];
    }
    default:
      throw std::invalid_argument("counts: id must be one of t, q, p, w");
  }
}

}  // namespace wittlab
