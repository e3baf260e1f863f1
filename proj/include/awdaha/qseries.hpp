#pragma once

// q-shifted factorials, Gaussians, basic hypergeometric series and the
// very-well-poised 8W7.

#include <string>
#include <vector>

#include "awdaha/field.hpp"

namespace awdaha {

struct SeriesConfig {
  int digits = 50;
  Real rel_tol = pow10_neg(55);
  int max_terms = 6000;
  int tail_guard = 4;

  static SeriesConfig for_digits(int digits);
  void validate() const;
  // Denominator factors below this modulus count as poles.
  Real pole_threshold() const { return pow10_neg(digits / 2); }
};

struct SeriesResult {
  Complex value;
  int terms = 0;
  Real est_error = 0;  // absolute
};

template <class F>
F qpoch(const F& x, const F& q, long n) {
  F r(1), xq(x);
  for (long j = 0; j < n; ++j) {
    r *= F(1) - xq;
    xq *= q;
  }
  return r;
}

template <class F>
F qpoch(std::initializer_list<F> xs, const F& q, long n) {
  F r(1);
  for (const auto& x : xs) r *= qpoch(x, q, n);
  return r;
}

// Throws PoleInDenominatorError if |v| is below the pole threshold.
void guard_denominator(const Complex& v, const SeriesConfig& cfg, const char* what);
void guard_denominator(const Rational& v, const SeriesConfig& cfg, const char* what);

SeriesResult qpoch_inf_ex(const Complex& x, const Complex& q, const SeriesConfig& cfg);
Complex qpoch_inf(const Complex& x, const Complex& q, const SeriesConfig& cfg);
Complex qpoch_inf(std::initializer_list<Complex> xs, const Complex& q, const SeriesConfig& cfg);

// G_e(z) = 1/((ez, e/z; q)_inf).
Complex gaussian(const Complex& e, const Complex& z, const Complex& q, const SeriesConfig& cfg);

// r+1 phi r (and the general r phi s with the extra factor).
SeriesResult bhs_ex(const std::vector<Complex>& num, const std::vector<Complex>& den,
                    const Complex& q, const Complex& arg, const SeriesConfig& cfg);
Complex bhs(const std::vector<Complex>& num, const std::vector<Complex>& den, const Complex& q,
            const Complex& arg, const SeriesConfig& cfg);
// Terminating series in the exact backend; some numerator must be q^-n.
Rational bhs(const std::vector<Rational>& num, const std::vector<Rational>& den, const Rational& q,
             const Rational& arg);

// Very-well-poised series
//   sum_k (1 - A q^{2k})/(1 - A) (A, b_1, ..., b_r; q)_k / (q, qA/b_1, ..., qA/b_r; q)_k x^k.
SeriesResult vwp_ex(const Complex& A, const std::vector<Complex>& b, const Complex& q,
                    const Complex& x, const SeriesConfig& cfg);

// 8W7(A; b,c,d,e,f; q, q^2 A^2/(bcdef)).
SeriesResult w87_ex(const Complex& A, const Complex& b, const Complex& c, const Complex& d,
                    const Complex& e, const Complex& f, const Complex& q, const SeriesConfig& cfg);
Complex w87(const Complex& A, const Complex& b, const Complex& c, const Complex& d,
            const Complex& e, const Complex& f, const Complex& q, const SeriesConfig& cfg);

// 6W5(A; b,c,d; q, x).
Complex w65(const Complex& A, const Complex& b, const Complex& c, const Complex& d,
            const Complex& q, const Complex& x, const SeriesConfig& cfg);

// If x = q^{-n} for some 0 <= n <= limit (relative tolerance tol), return n; else -1.
long terminating_index(const Complex& x, const Complex& q, long limit, const Real& tol);
long terminating_index(const Rational& x, const Rational& q, long limit);

}  // namespace awdaha
