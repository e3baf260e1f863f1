#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awdaha/awpoly.hpp"

using namespace awdaha;
using LP = LaurentPoly<Rational>;

namespace {

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

void require_all(const Reports& rs) {
  for (const auto& r : rs) {
    INFO(r.relation);
    CHECK(r.pass);
  }
}

const ExactParams kFixed{R(2, 3), R(-3, 5), R(5, 7), R(7, 4), R(1, 3)};

LP from_pairs(std::initializer_list<std::pair<int, Rational>> cs) {
  LP p;
  for (const auto& [e, c] : cs) p.set(e, c);
  return p;
}

}  // namespace

TEST_CASE("frozen coefficients from an independent computer-algebra evaluation") {
  // Terminating series summed symbolically, and Y-eigenvectors solved for
  // directly from the operator T1 T0 in an external CAS.
  LP e2 = from_pairs({{2, R(-837900, 109021)},
                      {1, R(2997120, 109021)},
                      {0, R(-4127064, 109021)},
                      {-1, R(2997120, 109021)},
                      {-2, R(-837900, 109021)}});
  CHECK(aw_E_plus(2, kFixed) == e2);
  CHECK(aw_nonsym_P(-1, kFixed) == from_pairs({{-1, R(1)}, {0, R(-221, 315)}}));
  CHECK(aw_nonsym_P(1, kFixed) == from_pairs({{1, R(1)}, {0, R(-1756, 735)}, {-1, R(8, 7)}}));
  CHECK(aw_nonsym_P(-2, kFixed) ==
        from_pairs({{-2, R(1)}, {1, R(-249, 665)}, {0, R(317983, 162925)}, {-1, R(-1867, 665)}}));
}

TEST_CASE("trivial indices and normalizations") {
  CHECK(aw_E_plus(0, kFixed) == LP(R(1)));
  CHECK(aw_P_plus(0, kFixed) == LP(R(1)));
  CHECK(aw_nonsym_P(0, kFixed) == LP(R(1)));
  CHECK(aw_nonsym_E(0, kFixed) == LP(R(1)));
  CHECK(aw_nonsym_E_explicit(0, kFixed) == LP(R(1)));
  for (int n = 0; n <= 10; ++n) {
    LP E = aw_E_plus(n, kFixed);
    CHECK(E.eval(kFixed.a) == 1);
    CHECK(E.eval(Rational(1 / kFixed.a)) == 1);
    CHECK(E.max_exp() == n);
    CHECK(E.min_exp() == -n);
  }
  CHECK(aw_lambda(2, kFixed) == Rational(9 + kFixed.a * kFixed.b * kFixed.c * kFixed.d / 3));
}

TEST_CASE("errors") {
  ExactParams pole{R(2), R(1, 2), R(3), R(5), R(1, 3)};  // ab = 1
  CHECK_THROWS_AS(aw_E_plus(1, pole), PoleInDenominatorError);
  CHECK_NOTHROW(aw_p(3, pole));
  CHECK_THROWS_AS(aw_nonsym_P(-2, pole), DegenerateParamsError);
  CHECK_THROWS_AS(aw_antisym(2, kFixed, AntiVariant::P_dagger_minus), NotASquareError);
  CHECK_THROWS_AS(aw_antisym(0, kFixed, AntiVariant::P_minus), DomainError);
  CHECK_THROWS_AS(aw_E_plus(-1, kFixed), DomainError);
  // q^{n-1}cd = 1 blocks the second route for P_{-n}
  ExactParams cd1{R(2, 3), R(-3, 5), R(9, 4), R(1), R(4, 9)};  // q cd = 1, q a square
  CHECK_THROWS_AS(aw_nonsym_P(-2, cd1, NonsymRoute::dagger), DegenerateParamsError);
}

TEST_CASE("symmetric polynomials") {
  Sampler s(11);
  for (int i = 0; i < 3; ++i) require_all(verify_symmetric_polys(s.generic()));
}

TEST_CASE("the two normalizations and the value function agree") {
  Sampler s(12);
  for (int i = 0; i < 5; ++i) {
    ExactParams p = s.generic();
    for (int n = 0; n <= 6; ++n) {
      Rational z = s.small_rational();
      if (sgn(z) == 0) continue;
      CHECK(aw_E_plus_value(n, z, p) == aw_E_plus(n, p).eval(z));
      CHECK(aw_nonsym_E_value(n, z, p) == aw_nonsym_E(n, p).eval(z));
      CHECK(aw_nonsym_E_value(-n, z, p) == aw_nonsym_E(-n, p).eval(z));
    }
  }
}

TEST_CASE("polynomial identity under cd = q^{m-n+1}") {
  Sampler s(13);
  for (int i = 0; i < 3; ++i) require_all(verify_t4_polys(s.generic()));
}

TEST_CASE("half-shift identities at a square base") {
  Sampler s(14);
  for (int i = 0; i < 3; ++i) require_all(verify_half_shift_polys(s.square_q()));
}

TEST_CASE("dualities") {
  Sampler s(15);
  for (int i = 0; i < 3; ++i) {
    ExactParams p = s.square_compatible();
    require_all(verify_poly_duality(p));
    require_all(verify_nonsym_duality(p));
  }
}

TEST_CASE("non-symmetric polynomials") {
  Sampler s(16);
  for (int i = 0; i < 3; ++i) require_all(verify_nonsym_polys(s.generic()));
  for (int i = 0; i < 3; ++i) require_all(verify_nonsym_routes(s.square_q()));
}

TEST_CASE("a perturbed polynomial fails the eigen check") {
  ExactParams p = kFixed;
  LP E = aw_E_plus(3, p) + LP::monomial(1, R(1, 1000)) + LP::monomial(-1, R(1, 1000));
  LP lhs = aw_operator(p).apply(E);
  CHECK_FALSE(compare_poly("perturbed", lhs, LP(E * aw_lambda(3, p)), p).pass);
}

TEST_CASE("numeric backend") {
  Sampler s(17);
  PolyCheckLimits lim;
  lim.eigen_n = 6;
  lim.perm_n = 4;
  lim.sears_n = 6;
  lim.nonsym_n = 4;
  lim.route_n = 4;
  lim.dual_n = 4;
  lim.nonsym_dual_n = 3;
  for (int i = 0; i < 2; ++i) {
    NumParams p = s.numeric();
    require_all(verify_symmetric_polys(p, lim));
    require_all(verify_half_shift_polys(p, lim));
    require_all(verify_nonsym_polys(p, lim));
    require_all(verify_nonsym_routes(p, lim));
    require_all(verify_poly_duality(p, lim));
    require_all(verify_nonsym_duality(p, lim));
  }
  // exact and numeric constructions agree
  NumParams np = to_numeric(kFixed);
  auto ex = aw_nonsym_P(3, kFixed);
  auto nu = aw_nonsym_P(3, np);
  for (const auto& [e, c] : ex.coeffs()) CHECK(abs(to_complex(c) - nu.coeff(e)) < pow10_neg(100));
}

TEST_CASE("coefficient table serializes") {
  auto j = aw_E_plus(2, kFixed).to_json();
  CHECK(j["2"] == "-837900/109021");
  CHECK(laurent_from_json<Rational>(j) == aw_E_plus(2, kFixed));
}
