#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwp1/multiseries.hpp"
#include "gwp1/ratfun.hpp"
#include "gwp1/rational.hpp"
#include "gwp1/uniseries.hpp"

using namespace gwp1;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

// S(z) = sinh(z/2)/(z/2) truncated below z^trunc; [z^{2k}] = 1/(4^k (2k+1)!).
UniSeries s_series(long trunc) {
  UniSeries s = UniSeries::zero("z", trunc);
  for (long k = 0; 2 * k < trunc; ++k) {
    const mpz_class den = pow_int(4, static_cast<unsigned long>(k)) * factorial(2 * k + 1);
    s.set_coeff(2 * k, Rational(1) / Rational(den));
  }
  return s;
}

UniSeries random_series(std::mt19937& rng, long low, long trunc) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  UniSeries s = UniSeries::zero("z", trunc);
  for (long e = low; e < trunc; ++e) s.set_coeff(e, Q(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST_CASE("rational basics and parsing") {
  CHECK(Q(2, 4) == Q(1, 2));
  CHECK(Q(1, -2) == Q(-1, 2));
  CHECK(Q(1, -2).denominator() == 2);
  CHECK(Rational::from_string("-3/9") == Q(-1, 3));
  CHECK(Rational::from_string("7") == Q(7));
  CHECK(Q(1, 3).str() == "1/3");
  CHECK(Q(2).str() == "2/1");
  CHECK_THROWS_AS(Q(1) / Q(0), ZeroDivisorError);
  CHECK_THROWS_AS(Rational::from_string("x"), InputError);
  CHECK(pow_rational(Q(2, 3), -2) == Q(9, 4));
}

TEST_CASE("number theory helpers") {
  CHECK(factorial(6) == 720);
  CHECK(binom(7, 3) == 35);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(4, 5) == 0);
  CHECK(harmonic(0) == Q(0));
  CHECK(harmonic(3) == Q(11, 6));
  for (long n = 1; n <= 20; ++n) CHECK(harmonic(n) - harmonic(n - 1) == Q(1, n));
  CHECK(bernoulli(0) == Q(1));
  CHECK(bernoulli(1) == Q(-1, 2));
  CHECK(bernoulli(2) == Q(1, 6));
  CHECK(bernoulli(12) == Q(-691, 2730));
  CHECK(binom_rational(Q(1, 2), 2) == Q(-1, 8));
}

TEST_CASE("geometric series inverse") {
  // (1 - z)^{-1} = 1 + z + z^2 + ...
  UniSeries a = UniSeries::zero("z", 10);
  a.set_coeff(0, Q(1));
  a.set_coeff(1, Q(-1));
  UniSeries inv = a.inverse();
  for (long e = 0; e < inv.trunc(); ++e) CHECK(inv.coeff(e) == Q(1));
}

TEST_CASE("laurent identity z * (1/z) = 1") {
  UniSeries z = UniSeries::monomial("z", Q(1), 1);
  UniSeries invz = z.inverse();
  CHECK(invz.coeff(-1) == Q(1));
  UniSeries one = z * invz;
  CHECK(one.coeff(0) == Q(1));
}

TEST_CASE("S(z) * S(z)^{-1} = 1 up to truncation") {
  // S(z) = 1 + z^2/24 + z^4/1920 + ..., the [z^{2k}] = 1/(4^k (2k+1)!) law.
  UniSeries s = s_series(14);
  CHECK(s.coeff(0) == Q(1));
  CHECK(s.coeff(2) == Q(1, 24));
  CHECK(s.coeff(4) == Q(1, 1920));
  UniSeries prod = s * s.inverse();
  CHECK(prod.coeff(0) == Q(1));
  for (long e = 1; e < prod.trunc(); ++e) CHECK(prod.coeff(e) == Q(0));
  CHECK(prod.trunc() >= 13);
}

TEST_CASE("series exp/log") {
  // log(1 - u) = -sum u^r / r  (the Mercator series; kernel L of the
  // residue-form recursion).
  UniSeries one_minus_u = UniSeries::zero("z", 12);
  one_minus_u.set_coeff(0, Q(1));
  one_minus_u.set_coeff(1, Q(-1));
  UniSeries lg = one_minus_u.log();
  for (long r = 1; r < lg.trunc(); ++r) CHECK(lg.coeff(r) == Q(-1, r));

  // exp(0) = 1
  UniSeries zero = UniSeries::zero("z", 8);
  CHECK(zero.exp().coeff(0) == Q(1));

  // exp(log(1 + z + z^2)) = 1 + z + z^2 at order 10
  UniSeries p = UniSeries::zero("z", 10);
  p.set_coeff(0, Q(1));
  p.set_coeff(1, Q(1));
  p.set_coeff(2, Q(1));
  UniSeries roundtrip = p.log().exp();
  for (long e = 0; e < 10; ++e) CHECK(roundtrip.coeff(e) == p.coeff(e));

  CHECK_THROWS_AS(UniSeries::monomial("z", Q(1), 0, 8).exp(), SeriesDomainError);
  UniSeries bad = UniSeries::zero("z", 8);
  bad.set_coeff(0, Q(2));
  CHECK_THROWS_AS(bad.log(), SeriesDomainError);
}

TEST_CASE("series sqrt") {
  // sqrt(1 - 4u) = 1 - 2u - 2u^2 - 4u^3 - ...
  UniSeries a = UniSeries::zero("u", 10);
  a.set_coeff(0, Q(1));
  a.set_coeff(1, Q(-4));
  UniSeries r = a.sqrt();
  CHECK(r.coeff(0) == Q(1));
  CHECK(r.coeff(1) == Q(-2));
  CHECK(r.coeff(2) == Q(-2));
  CHECK(r.coeff(3) == Q(-4));
  UniSeries back = r * r - a;
  for (long e = 0; e < back.trunc(); ++e) CHECK(back.coeff(e) == Q(0));

  // sqrt(1+z)^2 - (1+z) = 0 up to truncation
  UniSeries b = UniSeries::zero("z", 12);
  b.set_coeff(0, Q(1));
  b.set_coeff(1, Q(1));
  UniSeries diff = b.sqrt() * b.sqrt() - b;
  CHECK(diff.is_identically_zero());

  UniSeries bad = UniSeries::zero("z", 6);
  bad.set_coeff(0, Q(3));
  CHECK_THROWS_AS(bad.sqrt(), SeriesDomainError);
}

TEST_CASE("residue extraction") {
  UniSeries z = UniSeries::monomial("z", Q(1), 1);
  CHECK(z.inverse().residue() == Q(1));          // 1/z -> 1
  CHECK(UniSeries::monomial("z", Q(1), 2, 8).residue() == Q(0));  // z^2 -> 0

  // residue_z of 1/(z (u0 - z)) expanded for |z| << |u0| is 1/u0.
  MultiSeries geo;  // sum_k z^k u0^{-k-1}
  {
    MultiSeries acc;
    for (long k = 0; k < 8; ++k) {
      acc = acc + MultiSeries::monomial({{"z", k}, {"u0", -k - 1}}, Q(1));
    }
    acc = acc.restrict_knowledge("z", 0, 7);
    geo = acc;
  }
  MultiSeries f = geo * MultiSeries::monomial({{"z", -1}}, Q(1));
  MultiSeries res = f.residue("z");
  CHECK(res.coeff({{"u0", -1}}) == Q(1));
  for (long k = 2; k <= 7; ++k) CHECK(res.coeff({{"u0", -k}}) == Q(0));
}

TEST_CASE("ring axioms on random series at order 8") {
  std::mt19937 rng(12345);
  for (int rep = 0; rep < 12; ++rep) {
    UniSeries a = random_series(rng, -2, 8);
    UniSeries b = random_series(rng, -1, 8);
    UniSeries c = random_series(rng, 0, 8);
    UniSeries lhs = (a * b) * c;
    UniSeries rhs = a * (b * c);
    CHECK((lhs - rhs).is_identically_zero());
    UniSeries dl = a * (b + c);
    UniSeries dr = a * b + a * c;
    CHECK((dl - dr).is_identically_zero());
    CHECK(((a + b) - (b + a)).is_identically_zero());
  }
}

TEST_CASE("residue of an exact form vanishes") {
  std::mt19937 rng(777);
  for (int rep = 0; rep < 12; ++rep) {
    UniSeries f = random_series(rng, -4, 9);
    CHECK(f.derivative().residue() == Q(0));
  }
}

TEST_CASE("residue is linear and kills non (-1) exponents") {
  std::mt19937 rng(4242);
  UniSeries a = random_series(rng, -3, 7);
  UniSeries b = random_series(rng, -5, 7);
  CHECK((a + b).residue() == a.residue() + b.residue());
  for (long e = -5; e < 6; ++e) {
    if (e == -1) continue;
    CHECK(UniSeries::monomial("z", Q(3, 7), e, 7).residue() == Q(0));
  }
}

TEST_CASE("truncation is refused, not silently widened") {
  UniSeries s = s_series(6);
  CHECK_THROWS_AS(s.coeff(6), TruncationError);
  UniSeries p = s * s;  // still O(z^6)
  CHECK_THROWS_AS(p.coeff(7), TruncationError);
}

TEST_CASE("laurent_expand_at basics") {
  // 1/(z-1) at z=1 -> t^{-1}
  RationalFunction f(Poly::constant(Q(1)), Poly::linear_root(Q(1)));
  UniSeries e = f.laurent_expand_at(Q(1), 4);
  CHECK(e.coeff(-1) == Q(1));
  CHECK(e.coeff(0) == Q(0));
  CHECK(e.coeff(3) == Q(0));

  // (z+1)/(z-2)^2 at z=2 -> 3 t^{-2} + t^{-1}
  Poly num({Q(1), Q(1)});
  Poly den = Poly::linear_root(Q(2)) * Poly::linear_root(Q(2));
  RationalFunction g(num, den);
  UniSeries ge = g.laurent_expand_at(Q(2), 3);
  CHECK(ge.coeff(-2) == Q(3));
  CHECK(ge.coeff(-1) == Q(1));
  CHECK(ge.coeff(0) == Q(0));

  // polynomial at any point: Taylor shift, residue 0
  RationalFunction h(Poly({Q(1), Q(0), Q(5)}), Poly::constant(Q(1)));
  UniSeries he = h.laurent_expand_at(Q(3), 5);
  CHECK(he.residue() == Q(0));
  CHECK(he.coeff(0) == Q(46));
  CHECK(he.coeff(1) == Q(30));
  CHECK(he.coeff(2) == Q(5));
}

TEST_CASE("partial fractions reproduce the function") {
  // f = (3z^2+1) / ((z-1)^2 (z+2))
  Poly num({Q(1), Q(0), Q(3)});
  Poly den = Poly::linear_root(Q(1)) * Poly::linear_root(Q(1)) * Poly::linear_root(Q(-2));
  RationalFunction f(num, den);
  auto pf = partial_fractions(f, {{Q(1), 2}, {Q(-2), 1}});
  CHECK(pf.polynomial_part.is_zero());

  // Resum principal parts and compare exactly.
  RationalFunction sum(pf.polynomial_part, Poly::constant(Q(1)));
  for (const auto& part : pf.parts) {
    for (size_t j = 0; j < part.coeffs.size(); ++j) {
      Poly d = Poly::constant(Q(1));
      for (size_t i = 0; i <= j; ++i) d = d * Poly::linear_root(part.root);
      sum = sum + RationalFunction(Poly::constant(part.coeffs[j]), d);
    }
  }
  CHECK(sum == f);

  // And the principal part at z=1 via expansion directly.
  CHECK(pf.parts[0].coeffs[1] == f.laurent_expand_at(Q(1), 0).coeff(-2));
}

TEST_CASE("multiseries windows keep geometric-kernel products exact") {
  // f(x1,x2) = (x1 + x2) expanded against 1/(x1-x2)^2 in |x1| > |x2|:
  // known coefficients must match the closed form (x1+x2)/(x1-x2)^2.
  MultiSeries geo;
  for (long m = 1; m <= 9; ++m)
    geo = geo + MultiSeries::monomial({{"x2", m - 1}, {"x1", -m - 1}}, Q(m));
  geo = geo.restrict_knowledge("x1", -10, MultiSeries::kInf);

  MultiSeries f = MultiSeries::monomial({{"x1", 1}}, Q(1)) +
                  MultiSeries::monomial({{"x2", 1}}, Q(1));
  MultiSeries prod = geo * f;
  // (x1+x2)/(x1-x2)^2 = sum_{m>=1} (2m-1) x2^{m-1} x1^{-m}.
  for (long m = 1; m <= 8; ++m)
    CHECK(prod.coeff({{"x1", -m}, {"x2", m - 1}}) == Q(2 * m - 1));
  // Deep coefficients beyond the kernel truncation must refuse.
  CHECK_THROWS_AS(prod.coeff({{"x1", -11}, {"x2", 10}}), TruncationError);
}

TEST_CASE("multiseries product agrees with iterated univariate structure") {
  // (1 + z1 + z2)^2 fully known.
  MultiSeries a = MultiSeries::constant(Q(1)) +
                  MultiSeries::monomial({{"z1", 1}}, Q(1)) +
                  MultiSeries::monomial({{"z2", 1}}, Q(1));
  MultiSeries sq = a * a;
  CHECK(sq.coeff({{"z1", 1}, {"z2", 1}}) == Q(2));
  CHECK(sq.coeff({{"z1", 2}}) == Q(1));
  CHECK(sq.coeff({}) == Q(1));
  CHECK(sq.coeff({{"z1", 1}}) == Q(2));
}

TEST_CASE("multiseries diagonal substitution") {
  // W(x1,x2) = x1^{-2} x2^{-2} + x1^{-1} x2^{-3}; diagonal -> 2 x^{-4}.
  MultiSeries w = MultiSeries::monomial({{"x1", -2}, {"x2", -2}}, Q(1)) +
                  MultiSeries::monomial({{"x1", -1}, {"x2", -3}}, Q(1));
  MultiSeries d = w.diagonal("x1", "x2", "x");
  CHECK(d.coeff({{"x", -4}}) == Q(2));
}

TEST_CASE("binomial power helper") {
  // (1 - 4u)^{-1/2} with u = q/x^2: central binomial coefficients.
  MultiSeries u = MultiSeries::monomial({{"q", 1}, {"x", -2}}, Q(-4));
  u = u.restrict_knowledge("q", 0, 6);
  MultiSeries r = binom_pow(u, Q(-1, 2));
  for (long k = 0; k <= 6; ++k) {
    CHECK(r.coeff({{"q", k}, {"x", -2 * k}}) == Rational(binom(2 * k, k)));
  }
}

TEST_CASE("compare_series reports mismatches") {
  MultiSeries a = MultiSeries::monomial({{"z", 2}}, Q(1));
  MultiSeries b = MultiSeries::monomial({{"z", 2}}, Q(2));
  auto rep = compare_series(a, b);
  CHECK_FALSE(rep.equal);
  REQUIRE(rep.mismatches.size() == 1);
  CHECK(rep.mismatches[0].lhs == Q(1));
  CHECK(rep.mismatches[0].rhs == Q(2));
  CHECK(compare_series(a, a).equal);
}
