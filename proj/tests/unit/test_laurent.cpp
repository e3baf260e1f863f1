#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awdaha/laurent.hpp"
#include "awdaha/params.hpp"
#include "awdaha/ratfunc.hpp"

using namespace awdaha;
using LP = LaurentPoly<Rational>;
using RF = RatFunc<Rational>;

namespace {

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

LP random_poly(Sampler& s, int lo, int hi) {
  LP p;
  for (int e = lo; e <= hi; ++e)
    if (s.uniform_int(0, 3)) p.set(e, s.small_rational());
  return p;
}

LP random_sym(Sampler& s, int deg) {
  LP p;
  for (int e = 0; e <= deg; ++e) {
    Rational c = s.small_rational();
    p += LP::monomial(e, c);
    if (e) p += LP::monomial(-e, c);
  }
  return p;
}

LP weight(const Rational& a, const Rational& b) { return (one_minus(a) * one_minus(b)).shift(-1); }

}  // namespace

TEST_CASE("involution") {
  CHECK(LP::z().invol() == LP::zinv());
  LP f = LP::z() + LP::monomial(-2, R(3));
  CHECK(f.invol() == LP::zinv() + LP::monomial(2, R(3)));
  Sampler s(1);
  for (int i = 0; i < 20; ++i) {
    LP g = random_poly(s, -5, 7);
    CHECK(g.invol().invol() == g);
  }
}

TEST_CASE("evaluation") {
  CHECK(LP(R(1)).eval(R(17, 3)) == 1);
  CHECK((LP::z() + LP::zinv()).eval(R(2)) == R(5, 2));
  CHECK_THROWS_AS(LP::z().eval(R(0)), ZeroArgument);
  Sampler s(2);
  for (int i = 0; i < 20; ++i) {
    LP g = random_poly(s, -6, 6);
    Rational z = s.small_rational();
    Rational naive = 0;
    for (const auto& [e, c] : g.coeffs()) naive += c * ipow(z, e);
    CHECK(g.eval(z) == naive);
  }
  LP g = LP::monomial(-3, R(2, 7)) + LP::monomial(4, R(-5));
  Complex zc = parse_complex("0.3+1.1i");
  Complex direct = Complex(2) / Complex(7) / (zc * zc * zc) - Complex(5) * zc * zc * zc * zc;
  CHECK(abs(g.eval_as<Complex>(zc) - direct) < pow10_neg(80));
}

TEST_CASE("json round trip") {
  LP g = LP::monomial(-2, R(3, 5)) + LP::monomial(1, R(-7));
  auto j = g.to_json();
  CHECK(j["-2"] == "3/5");
  CHECK(laurent_from_json<Rational>(j) == g);
}

TEST_CASE("T1 on symmetric and anti-symmetric pieces") {
  Sampler s(3);
  for (int i = 0; i < 20; ++i) {
    ExactParams p = s.generic();
    Rational ab = p.a * p.b;
    // symmetric => eigenvalue -ab, and conversely
    LP g = random_sym(s, 4);
    CHECK(apply_T1(g, p.a, p.b) == g * Rational(-ab));
    LP ng = random_poly(s, -3, 4);
    if (!ng.is_symmetric()) CHECK_FALSE(apply_T1(ng, p.a, p.b) == ng * Rational(-ab));
    // weight times symmetric => eigenvalue -1, and conversely
    LP h = random_sym(s, 3);
    LP w = weight(p.a, p.b) * h;
    CHECK(apply_T1(w, p.a, p.b) == -w);
    LP v = random_poly(s, -3, 3);
    if (apply_T1(v, p.a, p.b) == -v) {
      CHECK(divide_exact(v, weight(p.a, p.b)).is_symmetric());
    }
    // -1 eigenvector recovered from a generic polynomial
    LP m = apply_T1(v, p.a, p.b) + v * ab;
    CHECK(apply_T1(m, p.a, p.b) == -m);
    LP hh = divide_exact(m, weight(p.a, p.b));
    CHECK(hh.is_symmetric());
  }
}

TEST_CASE("T1 decomposition") {
  Sampler s(4);
  for (int i = 0; i < 20; ++i) {
    ExactParams p = s.generic();
    LP g = random_sym(s, 3);
    auto d1 = t1_decompose(g, p);
    CHECK(d1.g1 == g);
    CHECK(d1.g2.is_zero());
    auto d2 = t1_decompose(weight(p.a, p.b), p);
    CHECK(d2.g1.is_zero());
    CHECK(d2.g2 == LP(R(-1)));
    auto d3 = t1_decompose(LP::z(), p);
    CHECK(d3.g1 - weight(p.a, p.b) * d3.g2 == LP::z());
    CHECK(d3.g1.is_symmetric());
    CHECK(d3.g2.is_symmetric());
    // uniqueness and linearity
    LP g1 = random_sym(s, 3), g2 = random_sym(s, 2);
    auto d4 = t1_decompose(LP(g1 - weight(p.a, p.b) * g2), p);
    CHECK(d4.g1 == g1);
    CHECK(d4.g2 == g2);
    LP u = random_poly(s, -4, 4), v = random_poly(s, -4, 4);
    Rational c = s.small_rational();
    auto du = t1_decompose(u, p), dv = t1_decompose(v, p), duv = t1_decompose(LP(u + v * c), p);
    CHECK(duv.g1 == du.g1 + dv.g1 * c);
    CHECK(duv.g2 == du.g2 + dv.g2 * c);
  }
  ExactParams bad{R(2), R(1, 2), R(3), R(5), R(1, 3)};
  CHECK_THROWS_AS(t1_decompose(LP::z(), bad), DegenerateParamsError);
}

TEST_CASE("rational functions") {
  LP n = one_minus(R(2)) * one_minus(R(3));
  LP d = one_minus(R(2)) * LP::z();
  RF r(n, d);
  CHECK(r.is_laurent());
  CHECK(r.to_laurent() == one_minus(R(3)).shift(-1));
  CHECK_FALSE(RF(LP(R(1)), one_minus(R(2))).is_laurent());
  CHECK(RF(n, one_minus(R(2))).is_laurent());
  CHECK(RF(n, one_minus(R(2))).to_laurent() == one_minus(R(3)));
  RF x(LP::z() + LP(R(4)), one_minus(R(1, 5)));
  CHECK((x - x).is_zero());
  CHECK(x * x.inverse() == RF(R(1)));
  CHECK((x + x) == x * RF(R(2)));
  // r(s z^eps) via evaluation
  Sampler s(5);
  for (int i = 0; i < 20; ++i) {
    RF y(random_poly(s, -2, 3), LP(R(1)) + random_poly(s, 1, 3));
    if (y.is_zero()) continue;
    Rational sh = s.small_rational(), z0 = s.small_rational();
    for (int eps : {1, -1}) {
      Rational arg = eps == 1 ? Rational(sh * z0) : Rational(sh / z0);
      try {
        CHECK(y.subst(sh, eps).eval(z0) == y.eval(arg));
      } catch (const PoleError&) {
      }
    }
  }
  CHECK_THROWS_AS(RF(LP::z(), LP()), PoleError);
}
