#include "gwp1/rational.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <vector>

namespace gwp1 {

Rational::Rational(long num, long den) {
  if (den == 0) throw ZeroDivisorError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpq_class(mpz_class(s)));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw ZeroDivisorError("rational with zero denominator: " + s);
    mpq_class q(num);
    q /= mpq_class(den);
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational: '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDivisorError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.pretty();
}

Rational inverse(const Rational& r) {
  if (r.is_zero()) throw ZeroDivisorError("inverse of zero");
  return Rational(mpq_class(1)) / r;
}

namespace {

std::mutex g_num_mutex;
std::vector<mpz_class> g_factorials{mpz_class(1)};
std::vector<Rational> g_harmonics{Rational(0)};
std::vector<Rational> g_bernoullis;

}  // namespace

mpz_class factorial(long n) {
  if (n < 0) throw AlgebraError("factorial of negative integer");
  std::lock_guard lock(g_num_mutex);
  while (static_cast<long>(g_factorials.size()) <= n) {
    const long k = static_cast<long>(g_factorials.size());
    g_factorials.push_back(g_factorials.back() * k);
  }
  return g_factorials[static_cast<size_t>(n)];
}

mpz_class binom(long n, long k) {
  if (n < 0) throw AlgebraError("binom with negative top");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational binom_rational(const Rational& alpha, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) {
    r *= (alpha - Rational(i)) / Rational(i + 1);
  }
  return r;
}

Rational harmonic(long n) {
  if (n < 0) throw AlgebraError("harmonic number with negative index");
  std::lock_guard lock(g_num_mutex);
  while (static_cast<long>(g_harmonics.size()) <= n) {
    const long k = static_cast<long>(g_harmonics.size());
    g_harmonics.push_back(g_harmonics.back() + Rational(1, k));
  }
  return g_harmonics[static_cast<size_t>(n)];
}

Rational bernoulli(long m) {
  if (m < 0) throw AlgebraError("bernoulli number with negative index");
  std::lock_guard lock(g_num_mutex);
  // sum_{j=0..m} C(m+1, j) B_j = 0 for m >= 1, starting from B_0 = 1.
  while (static_cast<long>(g_bernoullis.size()) <= m) {
    const long k = static_cast<long>(g_bernoullis.size());
    if (k == 0) {
      g_bernoullis.push_back(Rational(1));
      continue;
    }
    Rational acc(0);
    for (long j = 0; j < k; ++j) {
      acc += Rational(binom(k + 1, j)) * g_bernoullis[static_cast<size_t>(j)];
    }
    g_bernoullis.push_back(-acc / Rational(k + 1));
  }
  return g_bernoullis[static_cast<size_t>(m)];
}

Rational rat_factorial(long n) { return Rational(factorial(n)); }

Rational rat_binom(long n, long k) { return Rational(binom(n, k)); }

mpz_class pow_int(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) return pow_rational(inverse(base), -e);
  Rational r(1);
  Rational b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace gwp1
