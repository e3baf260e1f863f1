#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>

#include "awdaha/params.hpp"
#include "awdaha/qseries.hpp"

using namespace awdaha;

namespace {

const SeriesConfig cfg = SeriesConfig::for_digits(50);

Complex C(const char* s) { return parse_complex(s); }

Real rel(const Complex& x, const Complex& y) { return abs(x - y) / (abs(y) + pow10_neg(100)); }

}  // namespace

TEST_CASE("finite q-Pochhammer") {
  Complex x = C("0.3+0.7i"), q = C("0.41");
  CHECK(qpoch(x, q, 0) == Complex(1));
  CHECK(rel(qpoch(q, q, 2), (Complex(1) - q) * (Complex(1) - q * q)) < pow10_neg(60));
  Sampler s(1);
  for (int i = 0; i < 50; ++i) {
    Complex y = s.complex_point(0.2, 3.0);
    long n = s.uniform_int(0, 12), m = s.uniform_int(0, 12);
    CHECK(rel(qpoch(y, q, n + m), qpoch(y, q, n) * qpoch(Complex(y * ipow(q, n)), q, m)) < pow10_neg(60));
  }
  Rational rq(1, 3);
  CHECK(qpoch(rq, rq, 2) == Rational(2, 3) * Rational(8, 9));
}

TEST_CASE("infinite q-Pochhammer") {
  CHECK(qpoch_inf(Complex(0), C("0.5"), cfg) == Complex(1));
  // Euler function at q = 1/2, reference digits from a 400-factor product at 60 digits.
  Complex euler = C("0.288788095086602421278899721929230780088911904840685784114741");
  CHECK(rel(qpoch_inf(C("0.5"), C("0.5"), cfg), euler) < pow10_neg(50));
  auto r = qpoch_inf_ex(C("0.5"), C("0.5"), cfg);
  CHECK(r.est_error < pow10_neg(50));
  CHECK(r.terms > 100);
  Sampler s(2);
  for (int i = 0; i < 30; ++i) {
    Complex x = s.complex_point(0.2, 4.0), q = s.complex_point(0.2, 0.6);
    long n = s.uniform_int(0, 15);
    Complex lhs = qpoch_inf(x, q, cfg);
    Complex rhs = qpoch(x, q, n) * qpoch_inf(Complex(x * ipow(q, n)), q, cfg);
    CHECK(abs(lhs - rhs) < pow10_neg(50) * (abs(lhs) + Real(1)));
  }
  CHECK_THROWS_AS(qpoch_inf(C("0.5"), C("1.5"), cfg), DomainError);
  SeriesConfig tiny = cfg;
  tiny.max_terms = 10;
  CHECK_THROWS_AS(qpoch_inf(C("0.5"), C("0.9"), tiny), MaxTermsExceeded);
}

TEST_CASE("Gaussian symmetry and ratios") {
  Sampler s(3);
  for (int i = 0; i < 100; ++i) {
    Complex q = s.complex_point(0.2, 0.6, 0.2);
    Complex d = s.complex_point(0.3, 3.0), z = s.complex_point(0.3, 3.0);
    Complex g = gaussian(d, z, q, cfg);
    CHECK(rel(gaussian(d, Complex(Complex(1) / z), q, cfg), g) < pow10_neg(50));
    Complex lhs1 = g / gaussian(d, Complex(q / z), q, cfg);
    Complex rhs1 = (Complex(1) - d * z / q) / (Complex(1) - d / z);
    CHECK(rel(lhs1, rhs1) < pow10_neg(45));
    Complex e = q / d;
    Complex lhs2 = gaussian(e, Complex(q / z), q, cfg) / gaussian(e, z, q, cfg);
    Complex rhs2 = q / (z * z) * (Complex(1) - d * z / q) / (Complex(1) - d / z);
    CHECK(rel(lhs2, rhs2) < pow10_neg(45));
  }
  Complex q = C("0.5"), e = C("0.7");
  CHECK_THROWS_AS(gaussian(e, Complex(Complex(1) / e), q, cfg), PoleError);
}

TEST_CASE("basic hypergeometric series") {
  Complex q = C("0.43");
  CHECK(bhs({Complex(1), C("0.3")}, {C("0.7")}, q, C("0.5"), cfg) == Complex(1));
  // 4phi3 with n = 1, expanded by hand.
  Complex a = C("0.8+0.1i"), b = C("1.3"), c = C("0.6-0.2i"), d = C("2.1"), z = C("0.9+0.4i");
  Complex lhs = bhs({Complex(Complex(1) / q), a * b * c * d, a * z, a / z}, {a * b, a * c, a * d}, q, q, cfg);
  Complex rhs = Complex(1) + (Complex(1) - Complex(1) / q) * (Complex(1) - a * b * c * d) * (Complex(1) - a * z) *
                                 (Complex(1) - a / z) * q /
                                 ((Complex(1) - q) * (Complex(1) - a * b) * (Complex(1) - a * c) * (Complex(1) - a * d));
  CHECK(rel(lhs, rhs) < pow10_neg(60));
  // exact terminating version
  Rational rq(1, 3), ra(2), rb(5, 3), rc(1, 4), rd(3, 7), rz(2, 5);
  Rational ex = bhs({Rational(1 / rq), Rational(ra * rb * rc * rd), Rational(ra * rz), Rational(ra / rz)},
                    {Rational(ra * rb), Rational(ra * rc), Rational(ra * rd)}, rq, rq);
  Rational ex_rhs = 1 + (1 - 1 / rq) * (1 - ra * rb * rc * rd) * (1 - ra * rz) * (1 - ra / rz) * rq /
                            ((1 - rq) * (1 - ra * rb) * (1 - ra * rc) * (1 - ra * rd));
  CHECK(ex == ex_rhs);
  // q-binomial theorem: 1phi0(a;;q,x) = (ax;q)_inf/(x;q)_inf
  Complex x = C("0.3+0.2i");
  CHECK(rel(bhs({a}, {}, q, x, cfg), qpoch_inf(a * x, q, cfg) / qpoch_inf(x, q, cfg)) < pow10_neg(50));
  // Euler: 0phi0(;;q,x) carries the extra factor and equals (x;q)_inf
  CHECK(rel(bhs({Complex(0)}, {}, q, x, cfg), Complex(1) / qpoch_inf(x, q, cfg)) < pow10_neg(50));
  CHECK(rel(bhs({}, {}, q, x, cfg), qpoch_inf(x, q, cfg)) < pow10_neg(50));
  CHECK_THROWS_AS(bhs({a, b}, {c}, q, C("1.5"), cfg), DivergenceError);
  CHECK_THROWS_AS(bhs({a, b}, {Complex(Complex(1) / q)}, q, C("0.5"), cfg), PoleInDenominatorError);
}

TEST_CASE("8W7 reference value and permutation symmetry") {
  Complex q = C("0.37"), A = C("1.3+0.1i");
  std::array<Complex, 5> p = {C("1.2-0.2i"), C("0.8"), C("0.5+0.4i"), C("0.7"), C("0.9+0.3i")};
  // 60-digit reference from a 3000-term direct summation.
  Complex ref = C("1.04409599815315071708355932432118088778788571524040996790053"
                  "-0.101848034058994027616570601969652482836925825241467952560921i");
  Complex v = w87(A, p[0], p[1], p[2], p[3], p[4], q, cfg);
  CHECK(rel(v, ref) < pow10_neg(50));
  std::array<int, 5> idx = {0, 1, 2, 3, 4};
  Real worst = 0;
  int count = 0;
  do {
    if (count++ % 6) continue;
    Complex w = w87(A, p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]], p[idx[4]], q, cfg);
    worst = std::max(worst, rel(w, v));
  } while (std::next_permutation(idx.begin(), idx.end()));
  CHECK(worst < 10 * cfg.rel_tol);
  // termination
  Complex qm2 = Complex(1) / (q * q);
  auto term = w87_ex(A, p[0], p[1], p[2], qm2, p[4], q, cfg);
  CHECK(term.terms == 3);
  CHECK(w87(A, p[0], p[1], p[2], Complex(1), p[4], q, cfg) == Complex(1));
}

TEST_CASE("6W5 evaluation formula") {
  Sampler s(9);
  int done = 0;
  while (done < 20) {
    NumParams p = s.numeric(0.3, 3.0, 0.3);
    Complex z = s.complex_point(0.5, 2.0);
    const Complex &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
    Complex x = q / (a * d);
    if (!(abs(x) < Real(0.9))) continue;
    Complex pref = qpoch_inf({a * b * c * z, a * b * c / z, q * a / d, q / (a * d)}, q, cfg) /
                   qpoch_inf({a * a * b * c, b * c, q * z / d, q / (d * z)}, q, cfg);
    Complex val = pref * w65(a * a * b * c / q, a * z, a / z, a * b * c * d / q, q, x, cfg);
    CHECK(abs(val - Complex(1)) < pow10_neg(40));
    ++done;
  }
}
