#include "awdaha/qseries.hpp"

#include <functional>

namespace awdaha {

SeriesConfig SeriesConfig::for_digits(int digits) {
  SeriesConfig c;
  c.digits = digits;
  c.rel_tol = pow10_neg(digits + 5);
  c.validate();
  return c;
}

void SeriesConfig::validate() const {
  if (digits < 10 || digits > kMaxDigits)
    throw DomainError("digits must lie in [10, " + std::to_string(kMaxDigits) + "]");
  if (!(rel_tol > 0)) throw DomainError("rel_tol must be positive");
  if (max_terms < 8) throw DomainError("max_terms must be at least 8");
  if (tail_guard < 3) throw DomainError("tail_guard must be at least 3");
}

void guard_denominator(const Complex& v, const SeriesConfig& cfg, const char* what) {
  if (abs(v) < cfg.pole_threshold())
    throw PoleInDenominatorError(std::string("near-vanishing denominator in ") + what);
}

void guard_denominator(const Rational& v, const SeriesConfig&, const char* what) {
  if (sgn(v) == 0) throw PoleInDenominatorError(std::string("vanishing denominator in ") + what);
}

SeriesResult qpoch_inf_ex(const Complex& x, const Complex& q, const SeriesConfig& cfg) {
  const Real aq = abs(q);
  if (!(aq < 1)) throw DomainError("(x;q)_inf needs |q| < 1");
  SeriesResult r;
  r.value = Complex(1);
  if (Field<Complex>::is_zero(x)) return r;
  Complex xq = x;
  int small = 0;
  for (int j = 0; j < cfg.max_terms; ++j) {
    Real m = abs(xq);
    if (m < cfg.rel_tol) {
      // |log prod_{i>=j}(1 - x q^i)| <= m / ((1-|q|)(1-m)) for m < 1.
      Real tail = m / ((1 - aq) * (1 - m));
      if (++small >= cfg.tail_guard && tail < cfg.rel_tol) {
        r.terms = j;
        r.est_error = 2 * tail * abs(r.value);
        return r;
      }
    } else {
      small = 0;
    }
    r.value *= Complex(1) - xq;
    xq *= q;
  }
  throw MaxTermsExceeded("(x;q)_inf did not converge within max_terms factors");
}

Complex qpoch_inf(const Complex& x, const Complex& q, const SeriesConfig& cfg) {
  return qpoch_inf_ex(x, q, cfg).value;
}

Complex qpoch_inf(std::initializer_list<Complex> xs, const Complex& q, const SeriesConfig& cfg) {
  Complex r(1);
  for (const auto& x : xs) r *= qpoch_inf(x, q, cfg);
  return r;
}

Complex gaussian(const Complex& e, const Complex& z, const Complex& q, const SeriesConfig& cfg) {
  if (Field<Complex>::is_zero(z)) throw PoleError("Gaussian at z = 0");
  Complex den = qpoch_inf(e * z, q, cfg) * qpoch_inf(e / z, q, cfg);
  if (abs(den) < cfg.pole_threshold()) throw PoleError("Gaussian evaluated at a pole");
  return Complex(1) / den;
}

long terminating_index(const Complex& x, const Complex& q, long limit, const Real& tol) {
  Complex qn(1);
  for (long n = 0; n <= limit; ++n) {
    // x = q^{-n}  <=>  x q^n = 1
    if (abs(x * qn - Complex(1)) <= tol) return n;
    qn *= q;
  }
  return -1;
}

long terminating_index(const Rational& x, const Rational& q, long limit) {
  Rational qn(1);
  for (long n = 0; n <= limit; ++n) {
    if (x * qn == 1) return n;
    qn *= q;
  }
  return -1;
}

namespace {

// Sum t_0 + t_1 + ... with t_{k+1} = t_k * ratio(k). If nterm >= 0 the sum is
// finite and summed to k = nterm.
SeriesResult sum_series(const std::function<Complex(long)>& ratio, long nterm, const SeriesConfig& cfg) {
  SeriesResult r;
  Complex t(1), s(1);
  int small = 0;
  Real last_ratio = 0;
  long limit = nterm >= 0 ? nterm : cfg.max_terms;
  for (long k = 0; k < limit; ++k) {
    Complex rho = ratio(k);
    t *= rho;
    s += t;
    if (nterm >= 0) continue;
    Real at = abs(t), as = abs(s);
    Real ar = abs(rho);
    if (at <= cfg.rel_tol * as) {
      last_ratio = ar;
      if (++small >= cfg.tail_guard && last_ratio < 1) {
        Real tail = at * last_ratio / (1 - last_ratio);
        if (tail <= cfg.rel_tol * as) {
          r.value = s;
          r.terms = static_cast<int>(k + 2);
          r.est_error = tail;
          return r;
        }
      }
    } else {
      small = 0;
    }
  }
  if (nterm < 0) throw MaxTermsExceeded("series did not converge within max_terms terms");
  r.value = s;
  r.terms = static_cast<int>(nterm + 1);
  return r;
}

}  // namespace

SeriesResult bhs_ex(const std::vector<Complex>& num, const std::vector<Complex>& den,
                    const Complex& q, const Complex& arg, const SeriesConfig& cfg) {
  const long r = static_cast<long>(num.size()) - 1;
  const long s = static_cast<long>(den.size());
  const long extra = 1 + s - (r + 1);  // exponent of (-1)^k q^{k(k-1)/2}
  long nterm = -1;
  for (const auto& x : num) {
    long n = terminating_index(x, q, cfg.max_terms, pow10_neg(cfg.digits + 5));
    if (n >= 0 && (nterm < 0 || n < nterm)) nterm = n;
  }
  if (nterm < 0) {
    if (extra < 0) throw DivergenceError("r phi s with r > s+1 diverges unless terminating");
    if (extra == 0 && !(abs(arg) < 1)) throw DivergenceError("non-terminating r+1 phi r needs |arg| < 1");
  }
  std::vector<Complex> nq(num), dq(den);
  Complex qk(1);
  auto ratio = [&](long) {
    Complex numer(1), denom(Complex(1) - qk * q);
    for (auto& x : nq) numer *= Complex(1) - x;
    for (auto& x : dq) {
      Complex f = Complex(1) - x;
      guard_denominator(f, cfg, "basic hypergeometric series");
      denom *= f;
    }
    Complex rho = numer / denom * arg;
    for (long e = 0; e < (extra > 0 ? extra : -extra); ++e) {
      Complex g = -qk;  // (-1) q^k : ratio of (-1)^k q^{k(k-1)/2}
      rho = extra > 0 ? rho * g : rho / g;
    }
    for (auto& x : nq) x *= q;
    for (auto& x : dq) x *= q;
    qk *= q;
    return rho;
  };
  return sum_series(ratio, nterm, cfg);
}

Complex bhs(const std::vector<Complex>& num, const std::vector<Complex>& den, const Complex& q,
            const Complex& arg, const SeriesConfig& cfg) {
  return bhs_ex(num, den, q, arg, cfg).value;
}

Rational bhs(const std::vector<Rational>& num, const std::vector<Rational>& den, const Rational& q,
             const Rational& arg) {
  const long r = static_cast<long>(num.size()) - 1;
  const long s = static_cast<long>(den.size());
  const long extra = 1 + s - (r + 1);
  long nterm = -1;
  for (const auto& x : num) {
    long n = terminating_index(x, q, 100000);
    if (n >= 0 && (nterm < 0 || n < nterm)) nterm = n;
  }
  if (nterm < 0) throw DomainError("exact backend sums only terminating series");
  Rational t(1), sum(1), qk(1);
  std::vector<Rational> nq(num), dq(den);
  for (long k = 0; k < nterm; ++k) {
    Rational numer(1), denom(Rational(1) - qk * q);
    for (auto& x : nq) numer *= Rational(1) - x;
    for (auto& x : dq) denom *= Rational(1) - x;
    if (sgn(denom) == 0) throw PoleInDenominatorError("denominator parameter in q^{-Z>=0}");
    t *= numer / denom * arg;
    for (long e = 0; e < (extra > 0 ? extra : -extra); ++e) t = extra > 0 ? Rational(-t * qk) : Rational(-t / qk);
    sum += t;
    for (auto& x : nq) x *= q;
    for (auto& x : dq) x *= q;
    qk *= q;
  }
  return sum;
}

SeriesResult vwp_ex(const Complex& A, const std::vector<Complex>& b, const Complex& q,
                    const Complex& x, const SeriesConfig& cfg) {
  long nterm = terminating_index(A, q, cfg.max_terms, pow10_neg(cfg.digits + 5));
  for (const auto& y : b) {
    long n = terminating_index(y, q, cfg.max_terms, pow10_neg(cfg.digits + 5));
    if (n >= 0 && (nterm < 0 || n < nterm)) nterm = n;
  }
  if (nterm < 0 && !(abs(x) < 1)) throw DivergenceError("very-well-poised series outside |x| < 1");
  Complex one_minus_A = Complex(1) - A;
  guard_denominator(one_minus_A, cfg, "very-well-poised series (1 - A)");
  std::vector<Complex> nb(b), db;
  for (const auto& y : b) {
    if (Field<Complex>::is_zero(y)) throw PoleError("zero parameter in very-well-poised series");
    db.push_back(q * A / y);
  }
  Complex Ak = A, qk(1), A2k = A;  // A q^k, q^k, A q^{2k}
  // term_k = (1 - A q^{2k})/(1 - A) * prod ...; carry the product part and
  // apply the well-poised factor when summing.
  SeriesResult r;
  Complex prod(1), s(1);
  int small = 0;
  long limit = nterm >= 0 ? nterm : cfg.max_terms;
  for (long k = 0; k < limit; ++k) {
    Complex numer = Complex(1) - Ak, denom = Complex(1) - qk * q;
    for (size_t i = 0; i < nb.size(); ++i) {
      numer *= Complex(1) - nb[i];
      Complex f = Complex(1) - db[i];
      guard_denominator(f, cfg, "very-well-poised series");
      denom *= f;
      nb[i] *= q;
      db[i] *= q;
    }
    prod *= numer / denom * x;
    Ak *= q;
    qk *= q;
    A2k *= q * q;
    Complex t = prod * (Complex(1) - A2k) / one_minus_A;
    s += t;
    if (nterm >= 0) continue;
    Real at = abs(t), as = abs(s);
    if (at <= cfg.rel_tol * as) {
      if (++small >= cfg.tail_guard) {
        Real rho = abs(x) * Real(1.01);
        if (rho < 1 && at * rho / (1 - rho) <= cfg.rel_tol * as) {
          r.value = s;
          r.terms = static_cast<int>(k + 2);
          r.est_error = at * rho / (1 - rho);
          return r;
        }
      }
    } else {
      small = 0;
    }
  }
  if (nterm < 0) throw MaxTermsExceeded("very-well-poised series did not converge within max_terms");
  r.value = s;
  r.terms = static_cast<int>(nterm + 1);
  return r;
}

SeriesResult w87_ex(const Complex& A, const Complex& b, const Complex& c, const Complex& d,
                    const Complex& e, const Complex& f, const Complex& q, const SeriesConfig& cfg) {
  Complex x = q * q * A * A / (b * c * d * e * f);
  return vwp_ex(A, {b, c, d, e, f}, q, x, cfg);
}

Complex w87(const Complex& A, const Complex& b, const Complex& c, const Complex& d,
            const Complex& e, const Complex& f, const Complex& q, const SeriesConfig& cfg) {
  return w87_ex(A, b, c, d, e, f, q, cfg).value;
}

Complex w65(const Complex& A, const Complex& b, const Complex& c, const Complex& d,
            const Complex& q, const Complex& x, const SeriesConfig& cfg) {
  return vwp_ex(A, {b, c, d}, q, x, cfg).value;
}

}  // namespace awdaha
