#pragma once

#include <map>
#include <string>

#include "gwp1/rational.hpp"

namespace gwp1 {

// Truncated univariate power/Laurent series with exact rational coefficients.
//
// A series knows its coefficients exactly for exponents e with e < trunc();
// exponents below low() are exactly zero (hard support bound).  Every
// operation computes the tightest consistent truncation of the result and
// refuses (TruncationError) rather than report a coefficient beyond it.
class UniSeries {
 public:
  static constexpr long kInf = 1L << 58;

  UniSeries() : var_("z"), low_(0), trunc_(kInf) {}
  UniSeries(std::string var, long low, long trunc);

  static UniSeries zero(const std::string& var, long trunc = kInf);
  static UniSeries constant(const std::string& var, const Rational& c, long trunc = kInf);
  static UniSeries monomial(const std::string& var, const Rational& c, long e,
                            long trunc = kInf);

  const std::string& var() const { return var_; }
  long low() const { return low_; }
  long trunc() const { return trunc_; }
  const std::map<long, Rational>& terms() const { return c_; }
  bool is_identically_zero() const { return c_.empty(); }

  // Smallest exponent with nonzero coefficient; throws ZeroDivisorError when
  // the series is zero up to truncation.
  long valuation() const;

  // Exact coefficient at exponent e; e >= trunc() raises TruncationError.
  Rational coeff(long e) const;
  // Coefficient of var^{-1}.
  Rational residue() const;

  void set_coeff(long e, const Rational& c);

  UniSeries truncated(long new_trunc) const;
  UniSeries shifted(long e) const;  // multiply by var^e
  UniSeries derivative() const;

  UniSeries operator-() const;
  friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  UniSeries operator*(const Rational& s) const;

  friend bool operator==(const UniSeries& a, const UniSeries& b);

  // Multiplicative inverse; valuation v gives a result of valuation -v.
  UniSeries inverse() const;
  friend UniSeries operator/(const UniSeries& a, const UniSeries& b);

  // exp requires valuation >= 1; log requires constant term 1.
  UniSeries exp() const;
  UniSeries log() const;
  // sqrt requires constant term 1; result squared equals the input.
  UniSeries sqrt() const;
  // (this)^e for integer e (negative via inverse).
  UniSeries pow(long e) const;
  // (this)^alpha for half-integer alpha = num/2, via sqrt and integer powers.
  UniSeries pow_half(long num) const;

  std::string str() const;

 private:
  void check_same_var(const UniSeries& o) const;
  void insert(long e, const Rational& c);

  std::string var_;
  long low_;    // coefficients vanish for e < low_
  long trunc_;  // coefficients known for e < trunc_
  std::map<long, Rational> c_;
};

}  // namespace gwp1
