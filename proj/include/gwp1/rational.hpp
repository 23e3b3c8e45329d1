#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "gwp1/errors.hpp"

namespace gwp1 {

// Exact rational number, the coefficient field for the whole engine.
// Always stored in lowest terms with positive denominator (mpq canonical
// form); every operation is exact.  No floating point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, like int -> Q
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(mpq_class q);

  // Parses "p/q" or "p" with optional sign; rejects zero denominators.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  // Canonical "num/den" form, e.g. "1/1", "-3/4".
  std::string str() const;
  // Shortest form, e.g. "1", "-3/4" (used for human-facing output).
  std::string pretty() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational inverse(const Rational& r);

// n!, exact.  Requires n >= 0.
mpz_class factorial(long n);

// Binomial coefficient with integer top; 0 for k < 0 or k > n.  Requires n >= 0.
mpz_class binom(long n, long k);

// Generalized binomial coefficient C(alpha, k) for rational alpha, k >= 0.
Rational binom_rational(const Rational& alpha, long k);

// Harmonic number H_n = sum_{r=1..n} 1/r, H_0 = 0.  Cached.
Rational harmonic(long n);

// Bernoulli number B_m (B_1 = -1/2 convention).  Cached.
Rational bernoulli(long m);

Rational rat_factorial(long n);                 // n! as a Rational
Rational rat_binom(long n, long k);             // binom as a Rational
mpz_class pow_int(const mpz_class& base, unsigned long e);
Rational pow_rational(const Rational& base, long e);  // e may be negative

}  // namespace gwp1
