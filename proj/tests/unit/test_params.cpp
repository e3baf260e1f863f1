#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "awdaha/params.hpp"

using namespace awdaha;

namespace {

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool close(const Complex& x, const Complex& y, int digits = 45) {
  return abs(x - y) <= pow10_neg(digits) * (abs(x) + abs(y) + Real(1));
}

NumParams num(const char* a, const char* b, const char* c, const char* d, const char* q) {
  return {parse_complex(a), parse_complex(b), parse_complex(c), parse_complex(d), parse_complex(q)};
}

}  // namespace

TEST_CASE("dual parameters: trivial radicand") {
  Rational a = R(2), b = R(3), c = R(5), q = R(1, 2);
  ExactParams p{a, b, c, q / (a * b * c), q};
  auto t = dual_params(p);
  CHECK(t.a == 1);
  CHECK(t.b == a * b);
  CHECK(t.c == a * c);
  CHECK(t.d == a * p.d);
}

TEST_CASE("dual parameters at (2,3,4,5), q = 1/2") {
  auto p = num("2", "3", "4", "5", "1/2");
  auto t = dual_params(p);
  // sqrt(240), 60 digits, computed independently.
  Complex at = parse_complex("15.4919333848296675407170615991295984433316868211663633063503");
  CHECK(close(t.a, at, 55));
  CHECK(close(t.b, Complex(6) / at));
  CHECK(close(t.c, Complex(8) / at));
  CHECK(close(t.d, Complex(10) / at));
}

TEST_CASE("dual product identities and involutivity") {
  Sampler s(7);
  for (int i = 0; i < 30; ++i) {
    ExactParams p = s.square_compatible();
    auto t = dual_params(p);
    const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
    CHECK(t.b * t.c == q * a / d);
    CHECK(t.b * t.d == q * a / c);
    CHECK(t.c * t.d == q * a / b);
    CHECK(t.a / t.b == c * d / q);
    CHECK(t.a / t.c == b * d / q);
    CHECK(t.a / t.d == b * c / q);
    CHECK(t.b / t.c == b / c);
    CHECK(t.b / t.d == b / d);
    CHECK(t.c / t.d == c / d);
    CHECK(t.a * t.b == a * b);
    CHECK(t.a * t.c == a * c);
    CHECK(t.a * t.d == a * d);
    if (p.a > 0) CHECK(dual_params(t) == p);
  }
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(R(9, 4)) == R(3, 2));
  CHECK_THROWS_AS(exact_sqrt(R(2)), NotASquareError);
  CHECK_THROWS_AS(exact_sqrt(R(-4)), BranchCutError);
  ExactParams p{R(2), R(3), R(4), R(5), R(1, 2)};
  CHECK_THROWS_AS(dual_params(p), NotASquareError);
  CHECK_THROWS_AS(principal_sqrt(Complex(-4)), BranchCutError);
  CHECK(close(principal_sqrt(Complex(4)), Complex(2)));
}

TEST_CASE("Hecke presentation round trip") {
  auto p = num("2", "3", "4", "5", "1/2");
  auto h = to_hecke(p);
  auto back = from_hecke(h, p.q);
  CHECK(close(back.a, p.a));
  CHECK(close(back.b, p.b));
  CHECK(close(back.c, p.c));
  CHECK(close(back.d, p.d));
  // The dual parameter ã factors as k1*k0; u1*u0 is a different number.
  CHECK(close(h.k1 * h.k0, dual_params(p).a));
  CHECK_FALSE(close(h.u1 * h.u0, dual_params(p).a, 10));

  Sampler s(11);
  const Real pi4 = boost::multiprecision::atan(Real(1));
  for (int i = 0; i < 50; ++i) {
    NumParams x = s.numeric(0.3, 3.0, 0.3);
    auto diag = check_generic(x);
    REQUIRE(diag[2].pass);
    auto hx = to_hecke(x);
    auto bx = from_hecke(hx, x.q);
    CHECK(close(bx.a, x.a));
    CHECK(close(bx.d, x.d));
    CHECK(close(hx.k1 * hx.k0, dual_params(x).a));
    for (const Complex& v : {hx.u0, Complex(-hx.u1), Complex(-hx.k0), hx.k1}) {
      Real arg = atan2(v.imag(), v.real());
      CHECK(arg > pi4);
      CHECK(arg < 3 * pi4);
    }
  }
}

TEST_CASE("parameter maps") {
  Sampler s(3);
  for (int i = 0; i < 20; ++i) {
    ExactParams p = s.braid_compatible();
    CHECK(apply_param_map(ParamMap::t4, p) == ExactParams{p.a, p.b, p.q / p.d, p.q / p.c, p.q});
    for (ParamMap m : {ParamMap::t2, ParamMap::t3, ParamMap::t4, ParamMap::t1, ParamMap::eta})
      CHECK(apply_param_map(m, apply_param_map(m, p)) == p);
    CHECK(apply_param_map(ParamMap::tau_inv, apply_param_map(ParamMap::tau, p)) == p);
    CHECK(apply_param_map(ParamMap::sigma, apply_param_map(ParamMap::sigma, p)) == p);
    // t0hat = (t2 t4) t0 (t2 t4)^{-1}
    auto t24 = [](const ExactParams& x) { return apply_param_map(ParamMap::t2, apply_param_map(ParamMap::t4, x)); };
    auto t24inv = [](const ExactParams& x) { return apply_param_map(ParamMap::t4, apply_param_map(ParamMap::t2, x)); };
    CHECK(t24(apply_param_map(ParamMap::t0, t24inv(p))) == apply_param_map(ParamMap::t0hat, p));
    CHECK(apply_param_map(ParamMap::t0hat, p) == ExactParams{p.a, p.c, p.b, p.d, p.q});
    Rational sq = exact_sqrt(p.q), at = dual_params(p).a;
    CHECK(apply_param_map(ParamMap::beta2, p) ==
          ExactParams{-sq * at / p.c, -sq * at / p.d, -sq * at / p.a, -sq * at / p.b, p.q});
    // sigma in Hecke coordinates exchanges u1 and k0 (numerically).
    auto np = to_numeric(p);
    auto h = to_hecke(np);
    auto hd = to_hecke(dual_params(np));
    if (all_pass(check_generic(np))) {
      CHECK(close(hd.k1, h.k1));
      CHECK(close(hd.u1, h.k0));
      CHECK(close(hd.u0, h.u0));
      CHECK(close(hd.k0, h.u1));
    }
  }
}

TEST_CASE("genericity diagnostics") {
  auto ok = check_generic(ExactParams{R(2), R(3), R(4), R(5), R(1, 2)});
  CHECK(all_pass(ok));
  auto inv = check_generic(ExactParams{R(2), R(1, 2), R(4), R(5), R(1, 2)});
  CHECK_FALSE(inv[1].pass);
  CHECK(inv[1].detail.find("a^-1") != std::string::npos);
  auto neg = check_generic(ExactParams{R(-2), R(3), R(4), R(5), R(1, 2)});
  CHECK_FALSE(neg[2].pass);
  auto zero = check_generic(ExactParams{R(0), R(3), R(4), R(5), R(1, 2)});
  CHECK_FALSE(zero[0].pass);
  auto j = to_json(ok);
  CHECK(j.size() == ok.size());
  CHECK(j[0].contains("check"));
}

TEST_CASE("W(D4) orbit has 192 elements") {
  Sampler s(5);
  ExactParams p = s.generic();
  auto orbit = param_orbit(p, {ParamMap::t0hat, ParamMap::t2, ParamMap::t3, ParamMap::t4});
  CHECK(orbit.size() == 192);
  auto orbit0 = param_orbit(p, {ParamMap::t0, ParamMap::t2, ParamMap::t3, ParamMap::t4});
  CHECK(orbit0.size() == 192);
}

TEST_CASE("samplers are deterministic and generic") {
  Sampler s1(42), s2(42);
  for (int i = 0; i < 10; ++i) {
    auto p1 = s1.braid_compatible();
    auto p2 = s2.braid_compatible();
    CHECK(p1 == p2);
    CHECK(strongly_generic(p1));
    exact_sqrt(p1.a * p1.b);
    exact_sqrt(p1.c * p1.d);
    exact_sqrt(p1.q);
  }
}
