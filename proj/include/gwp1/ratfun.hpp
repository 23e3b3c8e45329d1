#pragma once

#include <string>
#include <vector>

#include "gwp1/rational.hpp"
#include "gwp1/uniseries.hpp"

namespace gwp1 {

// Dense univariate polynomial over Rational; coefficient i is the
// coefficient of z^i, trailing zeros stripped.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& c);
  static Poly monomial(long e, const Rational& c);
  // (z - r)
  static Poly linear_root(const Rational& r);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const;
  Rational coeff(long e) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rational& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd.
  static Poly gcd(Poly a, Poly b);

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  // p(z + a) as a polynomial in z.
  Poly shifted(const Rational& a) const;
  Poly monic() const;

  std::string str(const std::string& var = "z") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// Exact rational function in one variable: numerator/denominator dense
// polynomials, gcd-reduced with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly::constant(Rational(1))) {}
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction derivative() const;
  // Exact evaluation; denominator vanishing at x raises ZeroDivisorError.
  Rational eval(const Rational& x) const;

  // Laurent expansion around z = point in the local variable t = z - point,
  // exact for exponents < order.  The expansion starts at -m where m is the
  // pole order at the point.
  UniSeries laurent_expand_at(const Rational& point, long order,
                              const std::string& tvar = "t") const;

 private:
  void normalize();
  Poly num_, den_;
};

struct PrincipalPart {
  Rational root;
  // coeffs[j] is the coefficient of (z - root)^{-(j+1)}.
  std::vector<Rational> coeffs;
};

struct PartialFractions {
  Poly polynomial_part;
  std::vector<PrincipalPart> parts;
};

// Partial-fraction decomposition for a denominator that splits into the given
// linear factors over Q; `poles` lists (root, multiplicity) and must multiply
// out to the (monic) denominator exactly.
PartialFractions partial_fractions(const RationalFunction& f,
                                   const std::vector<std::pair<Rational, long>>& poles);

}  // namespace gwp1
