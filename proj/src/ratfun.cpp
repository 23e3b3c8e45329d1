#include "gwp1/ratfun.hpp"

#include <sstream>

namespace gwp1 {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(long e, const Rational& c) {
  if (e < 0) throw AlgebraError("polynomial monomial with negative exponent");
  std::vector<Rational> v(static_cast<size_t>(e) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& r) { return Poly({-r, Rational(1)}); }

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::lead() const {
  if (c_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
  return c_.back();
}

Rational Poly::coeff(long e) const {
  if (e < 0 || e >= static_cast<long>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(e)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroDivisorError("polynomial division by zero");
  Poly rem = a;
  std::vector<Rational> q;
  const long db = b.degree();
  if (rem.degree() >= db)
    q.assign(static_cast<size_t>(rem.degree() - db) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    const long sh = rem.degree() - db;
    const Rational f = rem.lead() / b.lead();
    q[static_cast<size_t>(sh)] = f;
    Poly sub = b * f;
    std::vector<Rational> shifted(static_cast<size_t>(sh), Rational(0));
    shifted.insert(shifted.end(), sub.coeffs().begin(), sub.coeffs().end());
    rem = rem - Poly(std::move(shifted));
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::shifted(const Rational& a) const {
  // Horner in (z + a).
  Poly r;
  const Poly lin({a, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * lin + Poly::constant(*it);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * inverse(lead());
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    os << (first ? "" : " + ") << "(" << c_[i].pretty() << ")";
    if (i > 0) os << "*" << var << "^" << i;
    first = false;
  }
  return os.str();
}

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivisorError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  const Rational lead = den_.lead();
  if (!lead.is_one()) {
    const Rational inv = inverse(lead);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroDivisorError("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                          den_ * den_);
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw ZeroDivisorError("evaluation at a pole");
  return num_.eval(x) / d;
}

UniSeries RationalFunction::laurent_expand_at(const Rational& point, long order,
                                              const std::string& tvar) const {
  if (num_.is_zero()) return UniSeries::zero(tvar, order);
  const Poly nt = num_.shifted(point);
  const Poly dt = den_.shifted(point);
  // Pole order = valuation of the shifted denominator.
  long v = 0;
  while (dt.coeff(v).is_zero()) ++v;
  const long work = order + 2 * v + 2;
  UniSeries den_series = UniSeries::zero(tvar, work);
  for (long e = 0; e <= dt.degree(); ++e)
    if (e < work) den_series.set_coeff(e, dt.coeff(e));
  UniSeries num_series = UniSeries::zero(tvar, work);
  for (long e = 0; e <= nt.degree(); ++e)
    if (e < work) num_series.set_coeff(e, nt.coeff(e));
  UniSeries r = num_series * den_series.inverse();
  if (r.trunc() < order)
    throw TruncationError("laurent_expand_at: requested order not reached");
  return r.truncated(order);
}

PartialFractions partial_fractions(const RationalFunction& f,
                                   const std::vector<std::pair<Rational, long>>& poles) {
  Poly check = Poly::constant(Rational(1));
  for (const auto& [r, m] : poles) {
    Poly lin = Poly::linear_root(r);
    for (long i = 0; i < m; ++i) check = check * lin;
  }
  if (!(check == f.den()))
    throw AlgebraError("partial_fractions: pole list does not factor the denominator");

  PartialFractions out;
  out.polynomial_part = Poly::divmod(f.num(), f.den()).first;
  for (const auto& [r, m] : poles) {
    UniSeries local = f.laurent_expand_at(r, 0);
    PrincipalPart pp;
    pp.root = r;
    pp.coeffs.assign(static_cast<size_t>(m), Rational(0));
    for (long j = 1; j <= m; ++j) pp.coeffs[static_cast<size_t>(j - 1)] = local.coeff(-j);
    out.parts.push_back(std::move(pp));
  }
  return out;
}

}  // namespace gwp1
