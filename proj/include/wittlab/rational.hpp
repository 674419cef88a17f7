#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wittlab {

/// Exact rational scalar over arbitrary-precision integers.
/// Invariant: always in lowest terms with positive denominator.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p/q", "p", optional leading sign, base 10.
  static Rat parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  /// "p/q" or bare integer.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  mpq_class v_;
};

/// Exact binomial coefficient; zero for r < 0 or r > n.
Rat binomial(long n, long r);
Rat factorial(long n);

/// Falling factorial x(x-1)...(x-k+1) over the rationals.
Rat falling(const Rat& x, long k);

}  // namespace wittlab
