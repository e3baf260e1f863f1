#include "awdaha/awpoly.hpp"

#include <algorithm>
#include <array>

#include "awdaha/qseries.hpp"

namespace awdaha {

namespace {

template <class F>
using LP = LaurentPoly<F>;

template <class F>
void require_nonzero(const F& v, const char* what) {
  if constexpr (Field<F>::exact) {
    if (Field<F>::is_zero(v)) throw PoleInDenominatorError(what);
  } else {
    guard_denominator(v, SeriesConfig{}, what);
  }
}

template <class F>
void require_nondegenerate(const F& v, const char* what) {
  bool zero;
  if constexpr (Field<F>::exact) {
    zero = Field<F>::is_zero(v);
  } else {
    zero = Field<F>::magnitude(v) < SeriesConfig{}.pole_threshold();
  }
  if (zero) throw DegenerateParamsError(what);
}

// (1 - x z)(1 - x/z)
template <class F>
LP<F> pair_factor(const F& x) {
  LP<F> r(F(F(1) + x * x));
  r.set(1, F(-x));
  r.set(-1, F(-x));
  return r;
}

template <class F>
ParamSet<F> with(const ParamSet<F>& p, const F& a, const F& b, const F& c, const F& d) {
  return {a, b, c, d, p.q};
}

// Sample points for pointwise operator checks in the numeric backend.
std::vector<Complex> probe_points() {
  return {parse_complex("0.83+0.21i"), parse_complex("1.37-0.4i"), parse_complex("-0.6+0.9i")};
}

template <class F>
Report scalar_report(const std::string& relation, const F& lhs, const F& rhs, const ParamSet<F>& p, int digits) {
  Report r{relation, params_json(p), false, 0};
  if constexpr (Field<F>::exact) {
    r.pass = lhs == rhs;
  } else {
    Real scale = std::max({Real(1), abs(lhs), abs(rhs)});
    r.pass = abs(lhs - rhs) <= pow10_neg(digits - 10) * scale;
  }
  r.residual_terms = r.pass ? 0 : 1;
  return r;
}

// op f = lam f, exactly on coefficients or pointwise at the probe points.
template <class F>
Report eigen_report(const std::string& relation, const DiffRefOp<F>& op, const LP<F>& f, const F& lam,
                    const ParamSet<F>& p, int digits) {
  if constexpr (Field<F>::exact) {
    return compare_poly(relation, op.apply(f), LP<F>(f * lam), p, digits);
  } else {
    Report r{relation, params_json(p), true, 0};
    std::function<Complex(const Complex&)> fn = [&](const Complex& z) { return f.eval(z); };
    for (const auto& z : probe_points()) {
      Complex lhs = op.template apply_at<Complex>(fn, z), rhs = lam * f.eval(z);
      Real scale = std::max({Real(1), abs(lhs), abs(rhs)});
      if (abs(lhs - rhs) > pow10_neg(digits - 10) * scale) {
        r.pass = false;
        ++r.residual_terms;
      }
    }
    return r;
  }
}

// Every coefficient outside [lo, hi] vanishes (numerically: is negligible).
template <class F>
bool within_support(const LP<F>& f, int lo, int hi, int digits) {
  Real scale = 1;
  for (const auto& [e, x] : f.coeffs()) scale = std::max(scale, Field<F>::magnitude(x));
  for (const auto& [e, x] : f.coeffs()) {
    if (e >= lo && e <= hi) continue;
    if constexpr (Field<F>::exact) return false;
    if (Field<F>::magnitude(x) > pow10_neg(digits - 10) * scale) return false;
  }
  return true;
}

template <class F>
F half(const F& q) {
  return Field<F>::sqrt(q);
}

}  // namespace

const char* name(AntiVariant v) {
  switch (v) {
    case AntiVariant::P_minus: return "P_minus";
    case AntiVariant::E_minus: return "E_minus";
    case AntiVariant::P_dagger_minus: return "P_dagger_minus";
    default: return "P_dagger_plus";
  }
}

template <class F>
F aw_lambda(int n, const ParamSet<F>& p) {
  return F(ipow(p.q, -n) + ipow(p.q, n - 1) * p.a * p.b * p.c * p.d);
}

template <class F>
LaurentPoly<F> aw_E_plus(int n, const ParamSet<F>& p) {
  if (n < 0) throw DomainError("symmetric polynomial index must be nonnegative");
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F x1 = ipow(q, -n), x2 = F(ipow(q, n - 1) * a * b * c * d);
  F coef(1);
  LP<F> pk(F(1)), sum(F(1));
  for (int k = 0; k < n; ++k) {
    F qk = ipow(q, k);
    F den = F((F(1) - qk * q) * (F(1) - a * b * qk) * (F(1) - a * c * qk) * (F(1) - a * d * qk));
    require_nonzero(den, "denominator (q, ab, ac, ad; q)_n vanishes");
    coef = F(coef * (F(1) - x1 * qk) * (F(1) - x2 * qk) * q / den);
    pk *= pair_factor(F(a * qk));
    sum += pk * coef;
  }
  return sum;
}

template <class F>
F aw_E_plus_value(int n, const F& z, const ParamSet<F>& p) {
  if (n < 0) throw DomainError("symmetric polynomial index must be nonnegative");
  if (Field<F>::is_zero(z)) throw ZeroArgument("polynomial evaluated at z = 0");
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F x1 = ipow(q, -n), x2 = F(ipow(q, n - 1) * a * b * c * d), zi = F(F(1) / z);
  F term(1), sum(1);
  for (int k = 0; k < n; ++k) {
    F qk = ipow(q, k);
    F den = F((F(1) - qk * q) * (F(1) - a * b * qk) * (F(1) - a * c * qk) * (F(1) - a * d * qk));
    require_nonzero(den, "denominator (q, ab, ac, ad; q)_n vanishes");
    term = F(term * (F(1) - x1 * qk) * (F(1) - x2 * qk) * q * (F(1) - a * qk * z) * (F(1) - a * qk * zi) / den);
    sum += term;
  }
  return sum;
}

template <class F>
LaurentPoly<F> aw_p(int n, const ParamSet<F>& p) {
  if (n < 0) throw DomainError("symmetric polynomial index must be nonnegative");
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F x1 = ipow(q, -n), x2 = F(ipow(q, n - 1) * a * b * c * d);
  F coef(1);  // (q^-n, q^{n-1}abcd; q)_k q^k / (q; q)_k
  LP<F> pk(F(1)), sum;
  for (int k = 0; k <= n; ++k) {
    F qk = ipow(q, k);
    F tail = F(qpoch(F(a * b * qk), q, n - k) * qpoch(F(a * c * qk), q, n - k) * qpoch(F(a * d * qk), q, n - k));
    sum += pk * F(coef * tail);
    if (k == n) break;
    F den = F(F(1) - qk * q);
    require_nonzero(den, "(q; q)_n vanishes");
    coef = F(coef * (F(1) - x1 * qk) * (F(1) - x2 * qk) * q / den);
    pk *= pair_factor(F(a * qk));
  }
  return sum * ipow(a, -n);
}

template <class F>
LaurentPoly<F> aw_P_plus(int n, const ParamSet<F>& p) {
  F lead = qpoch(F(ipow(p.q, n - 1) * p.a * p.b * p.c * p.d), p.q, n);
  require_nonzero(lead, "(q^{n-1}abcd; q)_n vanishes");
  LP<F> r = aw_p(n, p) * F(F(1) / lead);
  if constexpr (Field<F>::exact) {
    if (r.coeff(n) != 1 || r.max_exp() != n) throw InternalError("monic polynomial has wrong leading term");
  }
  return r;
}

template <class F>
LaurentPoly<F> aw_antisym(int n, const ParamSet<F>& p, AntiVariant v) {
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  if (v == AntiVariant::P_dagger_plus) {
    if (n < 0) throw DomainError("index must be nonnegative");
    F s = half(q), si = F(F(1) / s);
    LP<F> base = aw_P_plus(n, with(p, F(s * a), F(s * b), F(si * c), F(si * d)));
    return base.subst(si, 1) * ipow(s, n);
  }
  if (n < 1) throw DomainError("anti-symmetric polynomial index must be positive");
  if (v == AntiVariant::P_dagger_minus) {
    F s = half(q), si = F(F(1) / s);
    LP<F> base = aw_P_plus(n - 1, with(p, F(s * a), F(s * b), F(s * c), F(s * d)));
    LP<F> w = (LP<F>(c) - LP<F>::z()) * (LP<F>(d) - LP<F>::z());
    return (w * base.subst(si, 1)).shift(-1) * ipow(s, n - 1);
  }
  LP<F> w = (one_minus(a) * one_minus(b)).shift(-1);
  ParamSet<F> shifted = with(p, F(q * a), F(q * b), c, d);
  if (v == AntiVariant::E_minus) return w * aw_E_plus(n - 1, shifted);
  return w * aw_P_plus(n - 1, shifted) * F(F(1) / (a * b));
}

template <class F>
LaurentPoly<F> aw_nonsym_P(int n, const ParamSet<F>& p, NonsymRoute route) {
  if (n == 0) return LP<F>(F(1));
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F ab = F(a * b), abcd = F(a * b * c * d);
  int m = n < 0 ? -n : n;
  LP<F> plus = aw_P_plus(m, p);
  if (route == NonsymRoute::ab) {
    LP<F> minus = aw_antisym(m, p, AntiVariant::P_minus);
    require_nondegenerate(F(F(1) - ab), "ab = 1");
    if (n < 0) return (plus - minus) * F(ab / (ab - F(1)));
    F den = F((F(1) - ab) * (F(1) - ipow(q, 2 * m - 1) * abcd));
    require_nondegenerate(den, "q^{2n-1}abcd = 1");
    F cp = F((F(1) - ipow(q, m) * ab) * (F(1) - ipow(q, m - 1) * abcd));
    F cm = F(ab * (F(1) - ipow(q, m)) * (F(1) - ipow(q, m - 1) * c * d));
    return (plus * cp - minus * cm) * F(F(1) / den);
  }
  LP<F> dminus = aw_antisym(m, p, AntiVariant::P_dagger_minus);
  if (n < 0) {
    F den = F(F(1) - ipow(q, m - 1) * c * d);
    require_nondegenerate(den, "q^{n-1}cd = 1");
    return (plus - dminus) * F(F(1) / den);
  }
  F den = F(F(1) - ipow(q, 2 * m - 1) * abcd);
  require_nondegenerate(den, "q^{2n-1}abcd = 1");
  return (plus * F(ipow(q, m) * (F(1) - ipow(q, m - 1) * abcd)) + dminus * F(F(1) - ipow(q, m))) *
         F(F(1) / den);
}

template <class F>
LaurentPoly<F> aw_nonsym_E(int n, const ParamSet<F>& p, NonsymRoute route) {
  LP<F> P = aw_nonsym_P(n, p, route);
  F at = P.eval(F(F(1) / p.a));
  require_nondegenerate(at, "P_n(1/a) = 0");
  return P * F(F(1) / at);
}

namespace {

// Multipliers of E_n^- in the explicit forms of E_{-n} and E_n (n >= 1).
template <class F>
std::pair<F, F> explicit_multipliers(int n, const ParamSet<F>& p) {
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F base = F(ipow(q, n - 1) * (F(1) - a * b) * (F(1) - q * a * b) * (F(1) - a * c) * (F(1) - a * d));
  require_nondegenerate(base, "(1-ab)(1-qab)(1-ac)(1-ad) = 0");
  F neg = F((F(1) - ipow(q, n) * a * b) * (F(1) - ipow(q, n - 1) * a * b * c * d) / (b * base));
  F pos = F(a * (F(1) - ipow(q, n)) * (F(1) - ipow(q, n - 1) * c * d) / base);
  return {neg, pos};
}

}  // namespace

template <class F>
LaurentPoly<F> aw_nonsym_E_explicit(int n, const ParamSet<F>& p) {
  if (n == 0) return LP<F>(F(1));
  int m = n < 0 ? -n : n;
  auto [neg, pos] = explicit_multipliers(m, p);
  return aw_E_plus(m, p) - aw_antisym(m, p, AntiVariant::E_minus) * (n < 0 ? neg : pos);
}

template <class F>
F aw_nonsym_E_value(int n, const F& z, const ParamSet<F>& p) {
  if (n == 0) return F(1);
  int m = n < 0 ? -n : n;
  auto [neg, pos] = explicit_multipliers(m, p);
  F em = F((F(1) - p.a * z) * (F(1) - p.b * z) / z *
           aw_E_plus_value(m - 1, z, with(p, F(p.q * p.a), F(p.q * p.b), p.c, p.d)));
  return F(aw_E_plus_value(m, z, p) - em * (n < 0 ? neg : pos));
}

template <class F>
F aw_nonsym_normalization(int n, const ParamSet<F>& p) {
  if (n == 0) return F(1);
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  int m = n < 0 ? -n : n;
  F abcd = F(a * b * c * d);
  if (n < 0) {
    F den = F((a * b - F(1)) * qpoch(F(ipow(q, m - 1) * abcd), q, m) * ipow(a, m));
    require_nondegenerate(den, "normalization denominator vanishes");
    return F(a * b * qpoch({F(a * b), F(a * c), F(a * d)}, q, m) / den);
  }
  F den = F(qpoch(F(ipow(q, m) * abcd), q, m) * ipow(a, m));
  require_nondegenerate(den, "normalization denominator vanishes");
  return F(qpoch({F(q * a * b), F(a * c), F(a * d)}, q, m) / den);
}

template <class F>
LaurentPoly<F> delta_q(const LaurentPoly<F>& f, const F& q) {
  F s = half(q);
  return f.subst(s, 1) - f.subst(F(F(1) / s), 1);
}

template <class F>
Report compare_poly(const std::string& relation, const LaurentPoly<F>& lhs, const LaurentPoly<F>& rhs,
                    const ParamSet<F>& p, int digits) {
  Report r{relation, params_json(p), false, 0};
  LP<F> diff = lhs - rhs;
  if constexpr (Field<F>::exact) {
    r.residual_terms = diff.size();
  } else {
    Real scale = 1;
    for (const auto& [e, x] : lhs.coeffs()) scale = std::max(scale, abs(x));
    for (const auto& [e, x] : rhs.coeffs()) scale = std::max(scale, abs(x));
    Real tol = pow10_neg(digits - 10) * scale;
    for (const auto& [e, x] : diff.coeffs())
      if (abs(x) > tol) ++r.residual_terms;
  }
  r.pass = r.residual_terms == 0;
  return r;
}

namespace {

std::string idx(const char* what, int n) { return std::string(what) + " n=" + std::to_string(n); }
std::string idx2(const char* what, int m, int n) {
  return std::string(what) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

}  // namespace

template <class F>
Reports verify_symmetric_polys(const ParamSet<F>& p, const PolyCheckLimits& lim) {
  Reports out;
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  auto L = aw_operator(p);
  for (int n = 0; n <= lim.eigen_n; ++n) {
    LP<F> E = aw_E_plus(n, p);
    out.push_back(eigen_report(idx("L E_n^+ = lambda_n E_n^+", n), L, E, aw_lambda(n, p), p, lim.digits));
    out.push_back(scalar_report(idx("E_n^+(a) = 1", n), E.eval(a), F(1), p, lim.digits));
    out.push_back(scalar_report(idx("E_n^+(1/a) = 1", n), E.eval(F(F(1) / a)), F(1), p, lim.digits));
    out.push_back(compare_poly(idx("E_n^+ symmetric", n), E, E.invol(), p, lim.digits));
  }
  for (int n = 0; n <= lim.perm_n; ++n) {
    LP<F> pn = aw_p(n, p);
    F k = F(ipow(a, n) / qpoch({F(a * b), F(a * c), F(a * d)}, q, n));
    out.push_back(compare_poly(idx("E_n^+ = a^n/(ab,ac,ad;q)_n p_n", n), aw_E_plus(n, p), LP<F>(pn * k), p,
                               lim.digits));
    LP<F> P = aw_P_plus(n, p);
    Report mon = scalar_report(idx("P_n^+ monic", n), P.coeff(n), F(1), p, lim.digits);
    mon.pass = mon.pass && P.max_exp() == n && P.min_exp() == -n;
    out.push_back(mon);
    std::array<F, 4> t = {a, b, c, d};
    std::array<int, 4> perm = {0, 1, 2, 3};
    size_t bad = 0;
    while (std::next_permutation(perm.begin(), perm.end())) {
      auto pp = with(p, t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]);
      if (!compare_poly("", aw_p(n, pp), pn, p, lim.digits).pass) ++bad;
    }
    out.push_back({idx("p_n invariant under the 24 permutations of (a,b,c,d)", n), params_json(p), bad == 0, bad});
  }
  for (int n = 0; n <= lim.sears_n; ++n) {
    F k = F(ipow(F(a / b), n) * qpoch({F(b * c), F(b * d)}, q, n) / qpoch({F(a * c), F(a * d)}, q, n));
    out.push_back(compare_poly(idx("E_n^+(a,b,c,d) = (a/b)^n (bc,bd;q)_n/(ac,ad;q)_n E_n^+(b,a,c,d)", n),
                               aw_E_plus(n, p), LP<F>(aw_E_plus(n, with(p, b, a, c, d)) * k), p, lim.digits));
  }
  return out;
}

template <class F>
Reports verify_poly_duality(const ParamSet<F>& p, const PolyCheckLimits& lim) {
  Reports out;
  ParamSet<F> dp = dual_params(p);
  const F& q = p.q;
  for (int m = 0; m <= lim.dual_n; ++m)
    for (int n = 0; n <= lim.dual_n; ++n) {
      F lhs = aw_E_plus_value(n, F(F(1) / (p.a * ipow(q, m))), p);
      F rhs = aw_E_plus_value(m, F(F(1) / (dp.a * ipow(q, n))), dp);
      out.push_back(scalar_report(idx2("E_n^+(a^-1 q^-m) = E_m^+(dual a^-1 q^-n; dual)", m, n), lhs, rhs, p,
                                  lim.digits));
    }
  return out;
}

template <class F>
Reports verify_t4_polys(const ParamSet<F>& p, const PolyCheckLimits& lim) {
  Reports out;
  const F &a = p.a, &b = p.b, &c = p.c, &q = p.q;
  for (int m = 0; m + lim.t4_gap <= lim.t4_n; ++m)
    for (int n = m; n <= m + lim.t4_gap; ++n) {
      int k = n - m;
      F d = F(ipow(q, m - n + 1) / c);
      ParamSet<F> pt = with(p, a, b, c, d);
      ParamSet<F> pr = with(p, a, b, F(q / d), F(q / c));
      LP<F> ratio(F(1));
      for (int j = 0; j < k; ++j) ratio *= pair_factor(F(c * ipow(q, j)));
      F pref = F(ipow(F(-c), -k) * ipow(q, -(k * (k - 1)) / 2) * qpoch(F(ipow(q, m) * a * b), q, k));
      out.push_back(compare_poly(idx2("p_n = (-c)^-(n-m) q^-(n-m)(n-m-1)/2 (q^m ab;q)_{n-m} (cz,c/z;q)_{n-m} "
                                      "p_m(a,b,q/d,q/c) at cd = q^{m-n+1}",
                                      m, n),
                                 aw_p(n, pt), LP<F>(ratio * aw_p(m, pr) * pref), pt, lim.digits));
      // The Gaussian ratio carrying the second eigenfunction to the first.
      NumParams np = to_numeric(pt);
      SeriesConfig cfg = SeriesConfig::for_digits(lim.digits);
      Complex z0 = parse_complex("0.71+0.43i");
      Complex g = gaussian(Complex(np.q / np.d), z0, np.q, cfg) / gaussian(np.c, z0, np.q, cfg);
      Complex r0 = ratio.template eval_as<Complex>(z0);
      Report rep{idx2("G_{q/d}(z)/G_c(z) = (cz,c/z;q)_{n-m} at cd = q^{m-n+1}", m, n), params_json(pt), false, 0};
      rep.pass = abs(g - r0) <= pow10_neg(lim.digits - 10) * std::max(Real(1), abs(r0));
      rep.residual_terms = rep.pass ? 0 : 1;
      out.push_back(rep);
    }
  return out;
}

template <class F>
Reports verify_half_shift_polys(const ParamSet<F>& p, const PolyCheckLimits& lim) {
  Reports out;
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F s = half(q), si = F(F(1) / s);
  LP<F> zz = LP<F>::z() - LP<F>::zinv();
  ParamSet<F> up = with(p, F(s * a), F(s * b), F(s * c), F(s * d));
  for (int n = 1; n <= lim.delta_n; ++n) {
    out.push_back(compare_poly(idx("delta_q P_n^+ = (q^{n/2}-q^{-n/2})(z-1/z) P_{n-1}^+(q^{1/2} params)", n),
                               delta_q(aw_P_plus(n, p), q),
                               LP<F>(zz * aw_P_plus(n - 1, up) * F(ipow(s, n) - ipow(si, n))), p, lim.digits));
  }
  ParamSet<F> km = with(p, F(si * a), F(si * b), F(s * c), F(s * d));
  for (int n = 0; n <= lim.shift_n; ++n) {
    LP<F> E = aw_E_plus(n, p);
    LP<F> left = LP<F>::z() * (LP<F>(F(1)) - LP<F>::monomial(-1, F(si * a))) *
                 (LP<F>(F(1)) - LP<F>::monomial(-1, F(si * b))) * E.subst(si, 1);
    LP<F> right = LP<F>::zinv() * one_minus(F(si * a)) * one_minus(F(si * b)) * E.subst(s, 1);
    out.push_back(compare_poly(idx("z-shift combination of E_n^+ equals (1-ab/q)(z-1/z) E_n^+(q^{-1/2}a,q^{-1/2}b,"
                                   "q^{1/2}c,q^{1/2}d)",
                                   n),
                               LP<F>(left - right), LP<F>(zz * aw_E_plus(n, km) * F(F(1) - a * b / q)), p,
                               lim.digits));
  }
  ParamSet<F> jac = with(p, F(1), F(-1), F(-s), s);
  for (int m = 1; m <= lim.delta_n; ++m) {
    LP<F> target = (LP<F>::monomial(m) + LP<F>::monomial(-m)) * F(F(1) / F(2));
    out.push_back(compare_poly(idx("E_m^+(z;1,-1,-q^{1/2},q^{1/2}) = (z^m+z^-m)/2", m), aw_E_plus(m, jac), target,
                               jac, lim.digits));
  }
  return out;
}

template <class F>
Reports verify_nonsym_polys(const ParamSet<F>& p, const PolyCheckLimits& lim) {
  Reports out;
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  auto Y = basic_op(Gen::Y, p);
  auto D = basic_op(Gen::D, p);
  auto T1 = basic_op(Gen::T1, p);
  F abcd = F(a * b * c * d);
  for (int n = -lim.nonsym_n; n <= lim.nonsym_n; ++n) {
    LP<F> P = aw_nonsym_P(n, p);
    int m = n < 0 ? -n : n;
    F ev = n < 0 ? F(ipow(q, n)) : F(ipow(q, n - 1) * abcd);
    out.push_back(eigen_report(idx(n < 0 ? "Y P_-n = q^-n P_-n" : "Y P_n = q^{n-1}abcd P_n", n), Y, P, ev, p,
                               lim.digits));
    // leading term and support
    bool support = n < 0 ? within_support(P, n, m - 1, lim.digits) : within_support(P, -m, n, lim.digits);
    Report lead = scalar_report(idx("P_n leading coefficient 1", n), P.coeff(n), F(1), p, lim.digits);
    lead.pass = lead.pass && support;
    out.push_back(lead);
    LP<F> E = aw_nonsym_E(n, p);
    out.push_back(compare_poly(idx("P_n = C_n E_n", n), P, LP<F>(E * aw_nonsym_normalization(n, p)), p,
                               lim.digits));
    out.push_back(compare_poly(idx("E_n from E_n^+ and E_n^-", n), aw_nonsym_E_explicit(n, p), E, p, lim.digits));
    F k = F(ipow(F(b / a), m) * qpoch({F(a * c), F(a * d)}, q, m) / qpoch({F(b * c), F(b * d)}, q, m));
    out.push_back(compare_poly(idx("E_n(b,a,c,d) = (b/a)^|n| (ac,ad;q)/(bc,bd;q) E_n(a,b,c,d)", n),
                               aw_nonsym_E(n, with(p, b, a, c, d)), LP<F>(E * k), p, lim.digits));
    out.push_back(compare_poly(idx("E_n symmetric in c,d", n), aw_nonsym_E(n, with(p, a, b, d, c)), E, p,
                               lim.digits));
    out.push_back(compare_poly(idx("P_n symmetric in a,b", n), aw_nonsym_P(n, with(p, b, a, c, d)), P, p,
                               lim.digits));
    if (m >= 1 && n > 0) {
      LP<F> Pm = aw_antisym(m, p, AntiVariant::P_minus);
      out.push_back(eigen_report(idx("T1 P_n^- = -P_n^-", m), T1, Pm, F(-1), p, lim.digits));
      out.push_back(eigen_report(idx("D P_n^- = lambda_n P_n^-", m), D, Pm, aw_lambda(m, p), p, lim.digits));
      out.push_back(scalar_report(idx("P_n^-(1/a) = 0", m), Pm.eval(F(F(1) / a)), F(0), p, lim.digits));
      out.push_back(scalar_report(idx("P_n^- monic", m), Pm.coeff(m), F(1), p, lim.digits));
      LP<F> Pp = aw_P_plus(m, p);
      out.push_back(eigen_report(idx("T1 P_n^+ = -ab P_n^+", m), T1, Pp, F(-a * b), p, lim.digits));
      out.push_back(eigen_report(idx("D P_n^+ = lambda_n P_n^+", m), D, Pp, aw_lambda(m, p), p, lim.digits));
    }
  }
  return out;
}

template <class F>
Reports verify_nonsym_routes(const ParamSet<F>& p, const PolyCheckLimits& lim) {
  Reports out;
  auto D = basic_op(Gen::D, p);
  auto T0 = basic_op(Gen::T0, p);
  F cdq = F(p.c * p.d / p.q);
  for (int n = 1; n <= lim.route_n; ++n) {
    for (int sgn : {-1, 1})
      out.push_back(compare_poly(idx("P_n via (P^+, P^-) equals P_n via (P^+, P^dagger-)", sgn * n),
                                 aw_nonsym_P(sgn * n, p, NonsymRoute::ab), aw_nonsym_P(sgn * n, p, NonsymRoute::dagger),
                                 p, lim.digits));
    LP<F> dm = aw_antisym(n, p, AntiVariant::P_dagger_minus);
    out.push_back(eigen_report(idx("T0 P_n^dagger- = -P_n^dagger-", n), T0, dm, F(-1), p, lim.digits));
    out.push_back(eigen_report(idx("D P_n^dagger- = lambda_n P_n^dagger-", n), D, dm, aw_lambda(n, p), p, lim.digits));
    out.push_back(scalar_report(idx("P_n^dagger- monic", n), dm.coeff(n), F(1), p, lim.digits));
  }
  for (int n = 0; n <= lim.route_n; ++n) {
    LP<F> dp = aw_antisym(n, p, AntiVariant::P_dagger_plus);
    out.push_back(eigen_report(idx("T0 P_n^dagger+ = -(cd/q) P_n^dagger+", n), T0, dp, F(-cdq), p, lim.digits));
    out.push_back(eigen_report(idx("D P_n^dagger+ = lambda_n P_n^dagger+", n), D, dp, aw_lambda(n, p), p, lim.digits));
    out.push_back(scalar_report(idx("P_n^dagger+ monic", n), dp.coeff(n), F(1), p, lim.digits));
  }
  return out;
}

template <class F>
Reports verify_nonsym_duality(const ParamSet<F>& p, const PolyCheckLimits& lim) {
  Reports out;
  ParamSet<F> dp = dual_params(p);
  const F& q = p.q;
  auto zinv = [&](const F& e, int n) { return n >= 0 ? F(F(1) / (e * ipow(q, n))) : F(e * ipow(q, -n)); };
  for (int m = -lim.nonsym_dual_n; m <= lim.nonsym_dual_n; ++m)
    for (int n = -lim.nonsym_dual_n; n <= lim.nonsym_dual_n; ++n) {
      F lhs = aw_nonsym_E_value(n, zinv(p.a, m), p);
      F rhs = aw_nonsym_E_value(m, zinv(dp.a, n), dp);
      out.push_back(
          scalar_report(idx2("E_n(z_a(m)^-1) = E_m(z_dual_a(n)^-1; dual)", m, n), lhs, rhs, p, lim.digits));
    }
  return out;
}

#define AWDAHA_INSTANTIATE(F)                                                                              \
  template F aw_lambda<F>(int, const ParamSet<F>&);                                                        \
  template LaurentPoly<F> aw_E_plus<F>(int, const ParamSet<F>&);                                           \
  template F aw_E_plus_value<F>(int, const F&, const ParamSet<F>&);                                        \
  template LaurentPoly<F> aw_p<F>(int, const ParamSet<F>&);                                                \
  template LaurentPoly<F> aw_P_plus<F>(int, const ParamSet<F>&);                                           \
  template LaurentPoly<F> aw_antisym<F>(int, const ParamSet<F>&, AntiVariant);                             \
  template LaurentPoly<F> aw_nonsym_P<F>(int, const ParamSet<F>&, NonsymRoute);                            \
  template LaurentPoly<F> aw_nonsym_E<F>(int, const ParamSet<F>&, NonsymRoute);                            \
  template LaurentPoly<F> aw_nonsym_E_explicit<F>(int, const ParamSet<F>&);                                \
  template F aw_nonsym_E_value<F>(int, const F&, const ParamSet<F>&);                                      \
  template F aw_nonsym_normalization<F>(int, const ParamSet<F>&);                                          \
  template LaurentPoly<F> delta_q<F>(const LaurentPoly<F>&, const F&);                                     \
  template Report compare_poly<F>(const std::string&, const LaurentPoly<F>&, const LaurentPoly<F>&,        \
                                  const ParamSet<F>&, int);                                                \
  template Reports verify_symmetric_polys<F>(const ParamSet<F>&, const PolyCheckLimits&);                  \
  template Reports verify_poly_duality<F>(const ParamSet<F>&, const PolyCheckLimits&);                     \
  template Reports verify_t4_polys<F>(const ParamSet<F>&, const PolyCheckLimits&);                         \
  template Reports verify_half_shift_polys<F>(const ParamSet<F>&, const PolyCheckLimits&);                 \
  template Reports verify_nonsym_polys<F>(const ParamSet<F>&, const PolyCheckLimits&);                     \
  template Reports verify_nonsym_routes<F>(const ParamSet<F>&, const PolyCheckLimits&);                    \
  template Reports verify_nonsym_duality<F>(const ParamSet<F>&, const PolyCheckLimits&);

AWDAHA_INSTANTIATE(Rational)
AWDAHA_INSTANTIATE(Complex)

}  // namespace awdaha
