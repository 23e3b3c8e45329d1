#include "gwp1/uniseries.hpp"

#include <algorithm>
#include <sstream>

namespace gwp1 {

namespace {
long sat_add(long a, long b) {
  if (a >= UniSeries::kInf || b >= UniSeries::kInf) return UniSeries::kInf;
  if (a <= -UniSeries::kInf || b <= -UniSeries::kInf) return -UniSeries::kInf;
  return std::clamp(a + b, -UniSeries::kInf, UniSeries::kInf);
}
}  // namespace

UniSeries::UniSeries(std::string var, long low, long trunc)
    : var_(std::move(var)), low_(std::min(low, trunc)), trunc_(trunc) {}

UniSeries UniSeries::zero(const std::string& var, long trunc) {
  return UniSeries(var, trunc >= kInf ? -kInf : 0, trunc);
}

UniSeries UniSeries::constant(const std::string& var, const Rational& c, long trunc) {
  return monomial(var, c, 0, trunc);
}

UniSeries UniSeries::monomial(const std::string& var, const Rational& c, long e,
                              long trunc) {
  UniSeries s(var, std::min(e, trunc), trunc);
  if (e < trunc && !c.is_zero()) s.c_[e] = c;
  return s;
}

long UniSeries::valuation() const {
  if (c_.empty()) throw ZeroDivisorError("valuation of zero series");
  return c_.begin()->first;
}

Rational UniSeries::coeff(long e) const {
  if (e >= trunc_)
    throw TruncationError("coefficient of " + var_ + "^" + std::to_string(e) +
                          " beyond truncation order " + std::to_string(trunc_));
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

Rational UniSeries::residue() const { return coeff(-1); }

void UniSeries::set_coeff(long e, const Rational& c) {
  if (e >= trunc_) throw TruncationError("set_coeff beyond truncation");
  low_ = std::min(low_, e);
  insert(e, c);
}

void UniSeries::insert(long e, const Rational& c) {
  if (c.is_zero()) {
    c_.erase(e);
  } else {
    c_[e] = c;
  }
}

UniSeries UniSeries::truncated(long new_trunc) const {
  UniSeries r(var_, std::min(low_, new_trunc), std::min(trunc_, new_trunc));
  for (const auto& [e, c] : c_)
    if (e < new_trunc) r.c_[e] = c;
  return r;
}

UniSeries UniSeries::shifted(long e) const {
  UniSeries r(var_, sat_add(low_, e), sat_add(trunc_, e));
  for (const auto& [k, c] : c_) r.c_[k + e] = c;
  return r;
}

UniSeries UniSeries::derivative() const {
  UniSeries r(var_, sat_add(low_, -1), sat_add(trunc_, -1));
  for (const auto& [e, c] : c_) {
    if (e != 0) r.insert(e - 1, c * Rational(e));
  }
  return r;
}

UniSeries UniSeries::operator-() const {
  UniSeries r(var_, low_, trunc_);
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

void UniSeries::check_same_var(const UniSeries& o) const {
  if (var_ != o.var_)
    throw AlgebraError("series variable mismatch: " + var_ + " vs " + o.var_);
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
  a.check_same_var(b);
  UniSeries r(a.var_, std::min(a.low_, b.low_), std::min(a.trunc_, b.trunc_));
  for (const auto& [e, c] : a.c_)
    if (e < r.trunc_) r.insert(e, c);
  for (const auto& [e, c] : b.c_) {
    if (e < r.trunc_) {
      auto it = r.c_.find(e);
      r.insert(e, it == r.c_.end() ? c : it->second + c);
    }
  }
  return r;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) { return a + (-b); }

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  a.check_same_var(b);
  // An operand that is exactly zero (zero with unbounded knowledge) gives an
  // exactly zero product; a zero-so-far truncated operand does not.
  if ((a.c_.empty() && a.trunc_ >= UniSeries::kInf) ||
      (b.c_.empty() && b.trunc_ >= UniSeries::kInf))
    return UniSeries::zero(a.var_, UniSeries::kInf);
  const long va = a.c_.empty() ? a.low_ : a.valuation();
  const long vb = b.c_.empty() ? b.low_ : b.valuation();
  const long trunc = std::min(sat_add(a.trunc_, vb), sat_add(b.trunc_, va));
  UniSeries r(a.var_, sat_add(a.low_, b.low_), trunc);
  for (const auto& [ea, ca] : a.c_) {
    for (const auto& [eb, cb] : b.c_) {
      const long e = ea + eb;
      if (e >= trunc) continue;
      const Rational v = ca * cb;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        if (!v.is_zero()) r.c_[e] = v;
      } else {
        it->second += v;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  }
  return r;
}

UniSeries UniSeries::operator*(const Rational& s) const {
  if (s.is_zero()) return zero(var_, trunc_);
  UniSeries r(var_, low_, trunc_);
  for (const auto& [e, c] : c_) r.c_[e] = c * s;
  return r;
}

bool operator==(const UniSeries& a, const UniSeries& b) {
  return a.var_ == b.var_ && a.c_ == b.c_;
}

UniSeries UniSeries::inverse() const {
  if (c_.empty()) throw ZeroDivisorError("zero divisor");
  const long v = valuation();
  const Rational lead = c_.begin()->second;
  if (trunc_ >= kInf) {
    if (c_.size() == 1)
      return monomial(var_, Rational(1) / lead, -v, kInf);
    throw AlgebraError("exact inverse of a non-monomial series; truncate first");
  }
  const long n = trunc_ - v;  // power-series order of the normalized input
  // Normalize to p = 1 + sum_{e>=1} p_e z^e, invert, then shift back.
  std::map<long, Rational> p;
  for (const auto& [e, c] : c_) {
    if (e > v) p[e - v] = c / lead;
  }
  std::map<long, Rational> q;
  q[0] = Rational(1);
  for (long k = 1; k < n; ++k) {
    Rational acc(0);
    for (const auto& [e, c] : p) {
      if (e > k) break;
      auto it = q.find(k - e);
      if (it != q.end()) acc += c * it->second;
    }
    if (!acc.is_zero()) q[k] = -acc;
  }
  UniSeries r(var_, -v, n - v);
  for (const auto& [e, c] : q) r.c_[e - v] = c / lead;
  return r;
}

UniSeries operator/(const UniSeries& a, const UniSeries& b) { return a * b.inverse(); }

UniSeries UniSeries::exp() const {
  if (c_.empty()) return constant(var_, Rational(1), trunc_);
  if (valuation() < 1) throw SeriesDomainError("series domain: exp needs valuation >= 1");
  if (trunc_ >= kInf)
    throw SeriesDomainError("series domain: exp of an untruncated series");
  UniSeries r = constant(var_, Rational(1), trunc_);
  UniSeries p = constant(var_, Rational(1), trunc_);
  Rational invfact(1);
  for (long k = 1; k <= trunc_; ++k) {
    p = p * *this;
    if (p.c_.empty()) break;
    invfact /= Rational(k);
    r = r + p * invfact;
  }
  return r.truncated(trunc_);
}

UniSeries UniSeries::log() const {
  if (coeff(0) != Rational(1))
    throw SeriesDomainError("series domain: log needs constant term 1");
  UniSeries u = *this - constant(var_, Rational(1), trunc_);
  if (u.c_.empty()) return zero(var_, trunc_);
  if (u.valuation() < 1) throw SeriesDomainError("series domain: log needs 1 + O(z)");
  if (trunc_ >= kInf)
    throw SeriesDomainError("series domain: log of an untruncated series");
  UniSeries r = zero(var_, trunc_);
  UniSeries p = constant(var_, Rational(1), trunc_);
  for (long k = 1; k <= trunc_; ++k) {
    p = p * u;
    if (p.c_.empty()) break;
    const Rational sign = (k % 2 == 1) ? Rational(1, k) : Rational(-1, k);
    r = r + p * sign;
  }
  return r.truncated(trunc_);
}

UniSeries UniSeries::sqrt() const {
  if (coeff(0) != Rational(1))
    throw SeriesDomainError("series domain: sqrt needs constant term 1");
  return pow_half(1);
}

UniSeries UniSeries::pow(long e) const {
  if (e == 0) return constant(var_, Rational(1), kInf);
  if (e < 0) return inverse().pow(-e);
  UniSeries r = constant(var_, Rational(1), kInf);
  UniSeries b = *this;
  long n = e;
  while (true) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n == 0) break;
    b = b * b;
  }
  return r;
}

UniSeries UniSeries::pow_half(long num) const {
  if (coeff(0) != Rational(1))
    throw SeriesDomainError("series domain: half-integer power needs constant term 1");
  UniSeries u = *this - constant(var_, Rational(1), trunc_);
  const Rational alpha(num, 2);
  UniSeries r = constant(var_, Rational(1), trunc_);
  if (u.c_.empty()) return r;
  if (trunc_ >= kInf)
    throw SeriesDomainError("series domain: half-integer power of an untruncated series");
  UniSeries p = constant(var_, Rational(1), trunc_);
  for (long k = 1; k <= trunc_; ++k) {
    p = p * u;
    if (p.c_.empty()) break;
    r = r + p * binom_rational(alpha, k);
  }
  return r.truncated(trunc_);
}

std::string UniSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    os << (first ? "" : " + ") << "(" << c.pretty() << ")*" << var_ << "^" << e;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << trunc_ << ")";
  return os.str();
}

}  // namespace gwp1
