#include "wittlab/rational.hpp"

#include <ostream>

namespace wittlab {

Rat Rat::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  mpq_class v;
  if (v.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("Rat::parse: bad rational '" + std::string(s) + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rat::parse: zero denominator");
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

Rat binomial(long n, long r) {
  if (r < 0 || r > n || n < 0) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return Rat(mpq_class(b));
}

Rat factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(mpq_class(f));
}

Rat falling(const Rat& x, long k) {
  Rat acc(1);
  for (long i = 0; i < k; ++i) acc *= x - Rat(i);
  return acc;
}

}  // namespace wittlab
