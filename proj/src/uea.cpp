#include "wittlab/uea.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace wittlab {

PBWMono::PBWMono(std::vector<GenIndex> idx) : idx_(std::move(idx)) {
  for (size_t i = 0; i < idx_.size(); ++i) {
    check_index(idx_[i]);
    if (i + 1 < idx_.size() && idx_[i] < idx_[i + 1])
      throw std::invalid_argument("PBWMono: indices not non-increasing");
  }
}

int PBWMono::weight() const {
  return std::accumulate(idx_.begin(), idx_.end(), 0);
}

PBWMono PBWMono::merged(const PBWMono& o) const {
  std::vector<GenIndex> v;
  v.reserve(idx_.size() + o.idx_.size());
  std::merge(idx_.begin(), idx_.end(), o.idx_.begin(), o.idx_.end(), std::back_inserter(v),
             std::greater<GenIndex>());
  return PBWMono(std::move(v));
}

bool operator<(const PBWMono& a, const PBWMono& b) {
  if (a.idx_.size() != b.idx_.size()) return a.idx_.size() < b.idx_.size();
  return a.idx_ < b.idx_;
}

std::string PBWMono::str() const {
  if (idx_.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < idx_.size()) {
    size_t j = i;
    while (j < idx_.size() && idx_[j] == idx_[i]) ++j;
    if (!first) os << " ";
    os << "e_" << idx_[i];
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

UEAElt UEAElt::mono(const PBWMono& m, const PolyCoeff& c) {
  UEAElt t;
  t.add_term(m, c);
  return t;
}

UEAElt UEAElt::from_lie(const LieElt& x) {
  UEAElt t;
  for (const auto& [n, c] : x.terms()) t.add_term(PBWMono::gen(n), c);
  return t;
}

std::map<int, UEAElt> UEAElt::weight_split() const {
  std::map<int, UEAElt> out;
  for (const auto& [m, c] : terms_) out[m.weight()].add_term(m, c);
  return out;
}

UEAElt UEAElt::eval(std::optional<Rat> at_lambda, std::optional<Rat> at_Lambda) const {
  UEAElt r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.eval(at_lambda, at_Lambda));
  return r;
}

namespace {

struct WordHash {
  size_t operator()(const std::vector<GenIndex>& w) const {
    size_t h = 1469598103934665603ull;
    for (GenIndex i : w) {
      h ^= static_cast<size_t>(i) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Normal form of a coefficient-1 word, memoized. Products in the slice
// machinery revisit the same words constantly.
const UEAElt& nf_word_cached(const std::vector<GenIndex>& word) {
  static std::unordered_map<std::vector<GenIndex>, UEAElt, WordHash> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(word);
    if (it != cache.end()) return it->second;
  }
  UEAElt out;
  std::vector<std::pair<std::vector<GenIndex>, Rat>> stack;
  stack.emplace_back(word, Rat(1));
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    size_t i = 0;
    bool normal = true;
    for (; i + 1 < w.size(); ++i)
      if (w[i] < w[i + 1]) { normal = false; break; }
    if (normal) {
      out.add_term(PBWMono(std::move(w)), PolyCoeff(c));
      continue;
    }
    const GenIndex a = w[i], b = w[i + 1];
    std::vector<GenIndex> contracted;
    contracted.reserve(w.size() - 1);
    contracted.insert(contracted.end(), w.begin(), w.begin() + i);
    contracted.push_back(a + b);
    contracted.insert(contracted.end(), w.begin() + i + 2, w.end());
    std::swap(w[i], w[i + 1]);
    stack.emplace_back(std::move(w), c);
    stack.emplace_back(std::move(contracted), c * Rat(b - a));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(word, std::move(out)).first->second;
}

}  // namespace

UEAElt nf_word(const std::vector<GenIndex>& word, const PolyCoeff& c) {
  for (GenIndex n : word) check_index(n);
  UEAElt r;
  if (c.is_zero()) return r;
  for (const auto& [m, mc] : nf_word_cached(word).terms()) r.add_term(m, c * mc);
  return r;
}

UEAElt mul(const UEAElt& a, const UEAElt& b) {
  UEAElt r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<GenIndex> w = ma.indices();
      w.insert(w.end(), mb.indices().begin(), mb.indices().end());
      const PolyCoeff c = ca * cb;
      for (const auto& [m, mc] : nf_word_cached(w).terms()) r.add_term(m, c * mc);
    }
  return r;
}

UEAElt operator*(const UEAElt& a, const UEAElt& b) { return mul(a, b); }

UEAElt operator*(const PolyCoeff& c, const UEAElt& a) {
  UEAElt r;
  for (const auto& [m, mc] : a.terms()) r.add_term(m, c * mc);
  return r;
}

UEAElt ad(const UEAElt& x, const UEAElt& t) { return mul(x, t) - mul(t, x); }

UEAElt ad_pow(const UEAElt& x, unsigned p, const UEAElt& t) {
  UEAElt r = t;
  for (unsigned i = 0; i < p; ++i) r = ad(x, r);
  return r;
}

UEAElt transpose(const UEAElt& t) {
  UEAElt r;
  for (const auto& [m, c] : t.terms()) {
    std::vector<GenIndex> w = m.indices();
    std::reverse(w.begin(), w.end());
    const PolyCoeff sc = (m.degree() % 2 != 0) ? -c : c;
    for (const auto& [rm, rc] : nf_word_cached(w).terms()) r.add_term(rm, sc * rc);
  }
  return r;
}

std::string UEAElt::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<PBWMono, PolyCoeff>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    if (a.first.weight() != b.first.weight()) return a.first.weight() < b.first.weight();
    return a.first.indices() < b.first.indices();
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    if (c.is_constant()) {
      Rat v = c.constant_value();
      if (first) {
        if (v.sign() < 0) { os << "-"; v = -v; }
      } else {
        os << (v.sign() < 0 ? " - " : " + ");
        if (v.sign() < 0) v = -v;
      }
      if (m.is_one()) os << v.str();
      else if (v == Rat(1)) os << m.str();
      else os << v.str() << " " << m.str();
    } else {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      if (!m.is_one()) os << " " << m.str();
    }
    first = false;
  }
  return os.str();
}

SymElt SymElt::mono(const PBWMono& m, const PolyCoeff& c) {
  SymElt s;
  s.add_term(m, c);
  return s;
}

bool SymElt::is_homogeneous(int k) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != k) return false;
  return true;
}

SymElt operator*(const SymElt& a, const SymElt& b) {
  SymElt r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      r.add_term(ma.merged(mb), ca * cb);
  return r;
}

SymElt operator*(const PolyCoeff& c, const SymElt& a) {
  SymElt r;
  for (const auto& [m, mc] : a.terms()) r.add_term(m, c * mc);
  return r;
}

std::string SymElt::str() const {
  UEAElt as_words;
  for (const auto& [m, c] : terms()) as_words.add_term(m, c);
  return as_words.str();
}

SymElt proj_top(const UEAElt& t, int k) {
  if (t.degree() > k)
    throw std::invalid_argument("proj_top: element degree exceeds k");
  SymElt s;
  for (const auto& [m, c] : t.terms())
    if (m.degree() == k) s.add_term(m, c);
  return s;
}

UEAElt sym_k(const SymElt& s, int k) {
  if (!s.is_homogeneous(k))
    throw std::invalid_argument("sym_k: input not homogeneous of the stated degree");
  UEAElt r;
  for (const auto& [m, c] : s.terms()) {
    // Average over the k! orderings; distinct arrangements enumerated once
    // and weighted by the number of permutations producing them.
    std::vector<GenIndex> asc = m.indices();
    std::sort(asc.begin(), asc.end());
    Rat repeats(1);
    size_t i = 0;
    while (i < asc.size()) {
      size_t j = i;
      while (j < asc.size() && asc[j] == asc[i]) ++j;
      repeats *= factorial(static_cast<long>(j - i));
      i = j;
    }
    const PolyCoeff scale = c * PolyCoeff(repeats / factorial(k));
    do {
      r += nf_word(asc, scale);
    } while (std::next_permutation(asc.begin(), asc.end()));
  }
  return r;
}

std::vector<SymElt> sym_decompose(const UEAElt& t) {
  const int d = t.degree();
  std::vector<SymElt> comps(static_cast<size_t>(d) + 1);
  UEAElt rest = t;
  for (int j = d; j >= 0; --j) {
    SymElt top = proj_top(rest, j);
    comps[static_cast<size_t>(j)] = top;
    rest -= sym_k(top, j);
  }
  if (!rest.is_zero()) throw std::logic_error("sym_decompose: nonzero remainder");
  return comps;
}

SymElt ad_sym(GenIndex n, const SymElt& s) {
  check_index(n);
  SymElt r;
  for (const auto& [m, c] : s.terms()) {
    const auto& idx = m.indices();
    for (size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] == n) continue;  // bracket of equal indices vanishes
      std::vector<GenIndex> v = idx;
      v[i] = n + idx[i];
      std::sort(v.begin(), v.end(), std::greater<GenIndex>());
      r.add_term(PBWMono(std::move(v)), c * PolyCoeff(Rat(idx[i] - n)));
    }
  }
  return r;
}

}  // namespace wittlab
