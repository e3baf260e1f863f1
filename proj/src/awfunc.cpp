#include "awdaha/awfunc.hpp"

#include <algorithm>
#include <cmath>

#include "awdaha/awpoly.hpp"

namespace awdaha {

namespace {

using C = Complex;

C inf(std::initializer_list<C> xs, const C& q, const SeriesConfig& cfg) { return qpoch_inf(xs, q, cfg); }

// Division by an infinite product that may vanish on a q-lattice.
C inf_den(std::initializer_list<C> xs, const C& q, const SeriesConfig& cfg, const char* what) {
  C v = qpoch_inf(xs, q, cfg);
  guard_denominator(v, cfg, what);
  return v;
}

// x = q^{-k} for some k >= 0, within the series tolerance
bool on_lattice(const C& x, const C& q, const SeriesConfig& cfg) {
  return terminating_index(x, q, cfg.max_terms, pow10_neg(cfg.digits / 2)) >= 0;
}

bool any_on_lattice(std::initializer_list<C> xs, const C& q, const SeriesConfig& cfg) {
  for (const auto& x : xs)
    if (on_lattice(x, q, cfg)) return true;
  return false;
}

NumParams with(const NumParams& p, const C& a, const C& b, const C& c, const C& d) { return {a, b, c, d, p.q}; }

// tolerance used to reject the excluded points of the difference operators
Real singular_tol(const SeriesConfig& cfg) { return pow10_neg(std::max(cfg.digits / 2, 10)); }

// The argument of the 8W7 in the W87 form, after replacing gamma by the
// member of {gamma, 1/gamma} with the larger modulus.
C w87_gamma(const C& gamma) { return abs(gamma) < 1 ? C(C(1) / gamma) : gamma; }

const Real kConvergenceMargin = Real(0.97);

bool w87_valid(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C g = w87_gamma(gamma);
  C x = q * at / (a * d * g);
  if (abs(x) < kConvergenceMargin) return true;
  return any_on_lattice({C(a * z), C(a / z), C(g * at), C(g * a * b / at), C(g * a * c / at)}, q, cfg);
}

C ir_z(const C& z) { return abs(z) <= 1 ? z : C(C(1) / z); }

bool ismail_rahman_valid(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C zz = ir_z(z);
  if (abs(q * zz / d) < kConvergenceMargin) return true;
  return any_on_lattice({C(at * gamma), C(at / gamma), C(a / zz), C(b / zz), C(c / zz)}, q, cfg);
}

bool two_phi_valid(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  return !any_on_lattice({C(a * b), C(a * c), C(a * d), C(q * b / d), C(q * c / d), C(q * q / (a * d)),
                          C(q * z / d), C(q / (d * z)), C(q * gamma * at / (a * d)), C(q * at / (gamma * a * d)),
                          C(a * d / q)},
                         q, cfg);
}

bool valid_with(Method m, const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  switch (m) {
    case Method::W87: return w87_valid(gamma, z, p, at, cfg);
    case Method::ISMAIL_RAHMAN: return ismail_rahman_valid(gamma, z, p, at, cfg);
    case Method::SUM4PHI3:
    case Method::SUSLOV: return two_phi_valid(gamma, z, p, at, cfg);
    case Method::KERNEL: return true;
  }
  return false;
}

FuncValue eval_w87(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C g = w87_gamma(gamma);
  C num = inf({C(q * g * at * z / d), C(q * g * at / (d * z)), C(q * a / d), C(q / (a * d))}, q, cfg);
  C den = inf_den({C(q * g * at * a / d), C(g * b * c / at), C(q * z / d), C(q / (d * z))}, q, cfg,
                  "W87 prefactor denominator");
  SeriesResult s = w87_ex(C(g * at * a / d), C(a * z), C(a / z), C(g * at), C(g * a * b / at), C(g * a * c / at), q, cfg);
  C pref = num / den;
  return {pref * s.value, abs(pref) * s.est_error, s.terms};
}

FuncValue eval_ismail_rahman(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C zz = ir_z(z);
  C bt = a * b / at, ct = a * c / at, dt = a * d / at;
  C num = inf({C(q * a / (dt * gamma * zz)), C(q * a * gamma / (dt * zz))}, q, cfg);
  C den = inf_den({C(bt * ct), C(q * at * a / (dt * zz)), C(bt * ct / (a * zz)), C(q * gamma / dt), C(q / (dt * gamma))},
                  q, cfg, "Ismail-Rahman prefactor denominator");
  SeriesResult s = w87_ex(C(at * a / (dt * zz)), C(at * gamma), C(at / gamma), C(a / zz), C(b / zz), C(c / zz), q, cfg);
  C pref = inf({C(b * c), C(q * a / d), C(q / (a * d))}, q, cfg) * num / den;
  return {pref * s.value, abs(pref) * s.est_error, s.terms};
}

// 4phi3(az, a/z, ã gamma, ã/gamma; ab, ac, ad; q, q) with ã supplied.
SeriesResult r43(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  return bhs_ex({C(a * z), C(a / z), C(at * gamma), C(at / gamma)}, {C(a * b), C(a * c), C(a * d)}, q, q, cfg);
}

FuncValue eval_sum4phi3(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C dt = a * d / at;
  SeriesResult s1 = r43(gamma, z, p, at, cfg);
  C num = inf({C(a * z), C(a / z), C(at * gamma), C(at / gamma), C(q * b / d), C(q * c / d), C(q / (a * d))}, q, cfg);
  C den = inf_den({C(q * z / d), C(q / (d * z)), C(q * gamma * at / (a * d)), C(q * at / (gamma * a * d)), C(a * b),
                   C(a * c), C(a * d / q)},
                  q, cfg, "two-4phi3 prefactor denominator");
  SeriesResult s2 = bhs_ex({C(q * z / d), C(q / (d * z)), C(q * gamma / dt), C(q / (dt * gamma))},
                           {C(q * b / d), C(q * c / d), C(q * q / (a * d))}, q, q, cfg);
  C pref = num / den;
  return {s1.value + pref * s2.value, s1.est_error + abs(pref) * s2.est_error, s1.terms + s2.terms};
}

FuncValue eval_suslov(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  NumParams p2 = with(p, C(q / d), b, c, C(q / a));
  // dual of (q/d, b, c, q/a) on the branch continuing ã
  C at2 = q * at / (a * d);
  SeriesResult s1 = r43(gamma, z, p, at, cfg);
  SeriesResult s2 = r43(gamma, z, p2, at2, cfg);
  C k1 = inf({C(at * gamma), C(at / gamma), C(q * b / d), C(q * c / d), C(q / (a * d))}, q, cfg) /
         inf_den({C(q * gamma * at / (a * d)), C(q * at / (a * d * gamma)), C(a * b), C(a * c), C(a * d / q)}, q, cfg,
                 "split prefactor denominator");
  C k2 = inf({C(a * z), C(a / z)}, q, cfg) /
         inf_den({C(q * z / d), C(q / (d * z))}, q, cfg, "split prefactor denominator");
  C pref = k1 * k2;
  return {s1.value + pref * s2.value, s1.est_error + abs(pref) * s2.est_error, s1.terms + s2.terms};
}

// Sum of term(m) for m = 0, 1, ... until the terms drop below the tolerance
// for tail_guard consecutive indices.
template <class Term>
FuncValue sum_kernel(Term term, const SeriesConfig& cfg) {
  C sum(0);
  Real scale(0), last(0);
  int small = 0, m = 0;
  for (; m < cfg.max_terms; ++m) {
    C t = term(m);
    sum += t;
    Real at = abs(t);
    scale = std::max(scale, std::max(at, Real(abs(sum))));
    last = at;
    if (m >= 2 && at <= cfg.rel_tol * scale) {
      if (++small >= cfg.tail_guard) break;
    } else {
      small = 0;
    }
  }
  if (m == cfg.max_terms) throw MaxTermsExceeded("kernel expansion did not converge within max_terms");
  return {sum, last, m + 1};
}

C kernel_prefactor(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C dt = a * d / at;
  C num = inf({C(b * c), C(q * a / d), C(q * b / d), C(q * c / d), C(q / (a * d))}, q, cfg);
  C den = inf_den({C(q * a * b * c / d), C(q * z / d), C(q / (d * z)), C(q * gamma / dt), C(q / (dt * gamma))}, q, cfg,
                  "kernel prefactor denominator (Gaussian pole)");
  return num / den;
}

// The two tuples whose polynomials enter the kernel expansions.
std::pair<NumParams, NumParams> kernel_tuples(const NumParams& p, const C& at) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C dt = a * d / at;
  return {with(p, a, b, c, C(q / d)), with(p, at, C(a * b / at), C(a * c / at), C(q / dt))};
}

FuncValue eval_kernel(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  auto [pz, pg] = kernel_tuples(p, at);
  C pref = kernel_prefactor(gamma, z, p, at, cfg);
  FuncValue s = sum_kernel(
      [&](int m) { return C(kernel_coefficient(m, p) * aw_E_plus_value(m, z, pz) * aw_E_plus_value(m, gamma, pg)); },
      cfg);
  return {pref * s.value, abs(pref) * s.est_error, s.terms};
}

FuncValue eval_with(Method m, const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  if (Field<C>::is_zero(gamma) || Field<C>::is_zero(z)) throw ZeroArgument("gamma and z must be nonzero");
  if (!valid_with(m, gamma, z, p, at, cfg))
    throw MethodDomainError(std::string("point outside the domain of method ") + name(m));
  switch (m) {
    case Method::W87: return eval_w87(gamma, z, p, at, cfg);
    case Method::SUM4PHI3: return eval_sum4phi3(gamma, z, p, at, cfg);
    case Method::KERNEL: return eval_kernel(gamma, z, p, at, cfg);
    case Method::SUSLOV: return eval_suslov(gamma, z, p, at, cfg);
    case Method::ISMAIL_RAHMAN: return eval_ismail_rahman(gamma, z, p, at, cfg);
  }
  throw InternalError("unknown method");
}

FuncValue nonsym_kernel(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg) {
  auto [pz, pg] = kernel_tuples(p, at);
  C pref = kernel_prefactor(gamma, z, p, at, cfg);
  FuncValue s = sum_kernel(
      [&](int m) {
        auto [cm, cp] = nonsym_kernel_coefficient(m, p);
        C t = cp * aw_nonsym_E_value(m, z, pz) * aw_nonsym_E_value(m, gamma, pg);
        if (m > 0) t += cm * aw_nonsym_E_value(-m, z, pz) * aw_nonsym_E_value(-m, gamma, pg);
        return t;
      },
      cfg);
  return {pref * s.value, abs(pref) * s.est_error, s.terms};
}

FuncValue nonsym_decomp(const C& gamma, const C& z, const NumParams& p, const C& at, const SeriesConfig& cfg,
                        Method sym) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C bt = a * b / at;
  C den = (C(1) - a * b) * (C(1) - q * a * b) * (C(1) - a * c) * (C(1) - a * d);
  guard_denominator(den, cfg, "(1-ab)(1-qab)(1-ac)(1-ad)");
  // square root of qacd/b on the branch q ã / b
  C k = q * at / b / den;
  FuncValue e0 = eval_with(sym, gamma, z, p, at, cfg);
  FuncValue e1 = eval_with(sym, gamma, z, with(p, C(q * a), C(q * b), c, d), C(q * at), cfg);
  C mult = k * (C(1) - at * gamma) * (C(1) - bt * gamma) / gamma * (C(1) - a * z) * (C(1) - b * z) / z;
  return {e0.value - mult * e1.value, e0.est_error + abs(mult) * e1.est_error, e0.terms + e1.terms};
}

void check_singular(const C& z, const C& q, const SeriesConfig& cfg) {
  C z2 = z * z;
  Real tol = singular_tol(cfg);
  if (abs(C(1) - z2) < tol || abs(C(q) - z2) < tol || abs(C(1) - q * z2) < tol)
    throw SingularPointError("z^2 is at an excluded point {1, q, 1/q}");
}

}  // namespace

const char* name(Method m) {
  switch (m) {
    case Method::W87: return "W87";
    case Method::SUM4PHI3: return "SUM4PHI3";
    case Method::KERNEL: return "KERNEL";
    case Method::SUSLOV: return "SUSLOV";
    case Method::ISMAIL_RAHMAN: return "ISMAIL_RAHMAN";
  }
  return "?";
}

const char* name(NsMethod m) { return m == NsMethod::NS_KERNEL ? "NS_KERNEL" : "NS_DECOMP"; }

Method method_from_name(const std::string& s) {
  for (Method m : {Method::W87, Method::SUM4PHI3, Method::KERNEL, Method::SUSLOV, Method::ISMAIL_RAHMAN})
    if (s == name(m)) return m;
  throw DomainError("unknown method: " + s);
}

NsMethod ns_method_from_name(const std::string& s) {
  if (s == "NS_KERNEL") return NsMethod::NS_KERNEL;
  if (s == "NS_DECOMP") return NsMethod::NS_DECOMP;
  throw DomainError("unknown non-symmetric method: " + s);
}

Real rel_dev(const Complex& x, const Complex& y) {
  Real s = std::max(abs(x), abs(y));
  if (s < pow10_neg(300)) s = pow10_neg(300);
  return abs(x - y) / s;
}

bool method_valid(Method m, const Complex& gamma, const Complex& z, const NumParams& p, const SeriesConfig& cfg) {
  if (Field<C>::is_zero(gamma) || Field<C>::is_zero(z)) return false;
  return valid_with(m, gamma, z, p, dual_params(p).a, cfg);
}

FuncValue aw_function_ex(const Complex& gamma, const Complex& z, const NumParams& p, Method m, SeriesConfig cfg) {
  cfg.validate();
  return eval_with(m, gamma, z, p, dual_params(p).a, cfg);
}

Complex aw_function(const Complex& gamma, const Complex& z, const NumParams& p, Method m, SeriesConfig cfg) {
  return aw_function_ex(gamma, z, p, m, cfg).value;
}

Complex normalization_factor(Normalization n, const NumParams& p, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  if (n == Normalization::E_plus) return C(1);
  C phi = C(1) / inf_den({C(b * c), C(q * a / d), C(q / (a * d))}, q, cfg, "(bc, qa/d, q/(ad); q)_inf");
  if (n == Normalization::phi) return phi;
  return phi * inf({C(q * a * b * c / d)}, q, cfg) /
         inf_den({C(q * b / d), C(q * c / d)}, q, cfg, "(qb/d, qc/d; q)_inf");
}

Complex aw_function_normalized(const Complex& gamma, const Complex& z, const NumParams& p, Normalization n,
                               Method m, SeriesConfig cfg) {
  return normalization_factor(n, p, cfg) * aw_function(gamma, z, p, m, cfg);
}

FuncValue nonsym_aw_function_ex(const Complex& gamma, const Complex& z, const NumParams& p, NsMethod m,
                                SeriesConfig cfg, Method sym) {
  cfg.validate();
  if (Field<C>::is_zero(gamma) || Field<C>::is_zero(z)) throw ZeroArgument("gamma and z must be nonzero");
  C at = dual_params(p).a;
  return m == NsMethod::NS_KERNEL ? nonsym_kernel(gamma, z, p, at, cfg) : nonsym_decomp(gamma, z, p, at, cfg, sym);
}

Complex nonsym_aw_function(const Complex& gamma, const Complex& z, const NumParams& p, NsMethod m, SeriesConfig cfg,
                           Method sym) {
  return nonsym_aw_function_ex(gamma, z, p, m, cfg, sym).value;
}

Complex f_function(const Complex& gamma, const Complex& z, const NumParams& p, SeriesConfig cfg, Method sym) {
  cfg.validate();
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C at = dual_params(p).a, s = principal_sqrt(q);
  C den = (C(1) - a * b) * (C(1) - a * c) * (C(1) - a * d);
  guard_denominator(den, cfg, "(1-ab)(1-ac)(1-ad)");
  C e0 = eval_with(sym, gamma, z, p, at, cfg).value;
  C e1 = eval_with(sym, gamma, C(z / s), with(p, C(s * a), C(s * b), C(s * c), C(s * d)), C(q * at), cfg).value;
  return e0 - a * (C(1) - at * gamma) / den * (c - z) * (d - z) / z * e1;
}

template <class F>
F kernel_coefficient(int m, const ParamSet<F>& p) {
  if (m < 0) throw DomainError("kernel index must be nonnegative");
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F abc_d = F(a * b * c / d);
  F den = F((F(1) - abc_d) * qpoch({F(q * b / d), F(q * c / d), q}, q, m));
  if (Field<F>::is_zero(den)) throw DegenerateParamsError("kernel coefficient denominator vanishes");
  F sign = m % 2 ? F(-1) : F(1);
  return F(sign * ipow(F(a * d), -m) * ipow(q, static_cast<long>(m) * (m + 1) / 2) * (F(1) - ipow(q, 2 * m) * abc_d) *
           qpoch({F(a * b), F(a * c), abc_d}, q, m) / den);
}

template <class F>
std::pair<F, F> nonsym_kernel_coefficient(int m, const ParamSet<F>& p) {
  if (m < 0) throw DomainError("kernel index must be nonnegative");
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F abc_d = F(a * b * c / d);
  F den = F((F(1) - a * b) * (F(1) - abc_d) * qpoch({F(q * b / d), F(q * c / d), q}, q, m));
  if (Field<F>::is_zero(den)) throw DegenerateParamsError("kernel coefficient denominator vanishes");
  F sign = m % 2 ? F(-1) : F(1);
  F qm = ipow(q, m);
  F common = F(sign * ipow(F(a * d), -m) * ipow(q, static_cast<long>(m) * (m + 1) / 2) *
               qpoch({F(a * b), F(a * c), abc_d}, q, m) / den);
  F minus = F(-common * a * b * (F(1) - qm) * (F(1) - qm * c / d));
  F plus = F(common * (F(1) - qm * a * b) * (F(1) - qm * abc_d));
  return {minus, plus};
}

template <class F>
WeightBreakdown<F> appendix_a_weight(int m, const ParamSet<F>& p) {
  if (m < 0) throw DomainError("kernel index must be nonnegative");
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F abc_d = F(a * b * c / d);
  F qm = ipow(q, m), q2m = ipow(q, 2 * m);
  auto nz = [](const F& x) {
    if (Field<F>::is_zero(x)) throw DegenerateParamsError("kernel weight denominator vanishes");
    return x;
  };
  WeightBreakdown<F> w;
  w.m = m;
  F sign = m % 2 ? F(-1) : F(1);
  w.gaussian_ratio = F(qpoch(F(b * c), q, m) / nz(qpoch(F(q * a / d), q, m)) * sign * ipow(F(a / d), m) *
                       ipow(q, static_cast<long>(m) * (m + 1) / 2));
  w.n_ratio = F(ipow(a, -2 * m) * (F(1) - q2m * abc_d) / nz(F(F(1) - abc_d)) *
                qpoch({F(a * b), F(a * c), F(q * a / d), abc_d}, q, m) /
                nz(qpoch({F(b * c), F(q * b / d), F(q * c / d), q}, q, m)));
  w.product = F(w.gaussian_ratio * w.n_ratio);
  F cden = nz(F((F(1) - a * b) * (F(1) - q2m * abc_d)));
  w.c_minus = F(-a * b * (F(1) - qm) * (F(1) - qm * c / d) / cden);
  w.c_plus = F((F(1) - qm * a * b) * (F(1) - qm * abc_d) / cden);
  w.sym_coefficient = kernel_coefficient(m, p);
  auto [mi, pl] = nonsym_kernel_coefficient(m, p);
  w.minus_coefficient = mi;
  w.plus_coefficient = pl;
  auto same = [&](const F& x, const F& y) {
    if constexpr (Field<F>::exact) {
      return x == y;
    } else {
      return rel_dev(x, y) < pow10_neg(kMaxDigits);
    }
  };
  w.reassembles = same(w.product, w.sym_coefficient) && same(F(w.product * w.c_minus), mi) &&
                  same(F(w.product * w.c_plus), pl);
  return w;
}

Complex inverse_gaussian_expansion(const Complex& z, const NumParams& p, int M, const SeriesConfig& cfg) {
  if (M < 0) throw DomainError("truncation order must be nonnegative");
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  C abcd = a * b * c * d;
  C sum(1), coef(1);  // coef_m = (abcd;q)_{m-1} (ab, ac; q)_m / (bd, cd, q; q)_m
  for (int m = 1; m <= M; ++m) {
    C qm1 = ipow(q, m - 1);
    C den = (C(1) - qm1 * b * d) * (C(1) - qm1 * c * d) * (C(1) - qm1 * q);
    if (abs(den) < cfg.pole_threshold()) throw DegenerateParamsError("(bd, cd, q; q)_m vanishes");
    coef *= (C(1) - qm1 * a * b) * (C(1) - qm1 * a * c) / den;
    if (m > 1) coef *= C(1) - ipow(q, m - 2) * abcd;
    C w = ipow(C(-d / a), m) * ipow(q, static_cast<long>(m) * (m - 1) / 2) * (C(1) - ipow(q, 2 * m - 1) * abcd) * coef;
    sum += w * aw_E_plus_value(m, z, p);
  }
  C den = inf({abcd}, q, cfg);
  if (abs(den) < cfg.pole_threshold()) throw DegenerateParamsError("(abcd; q)_inf vanishes");
  return inf({C(a * d), C(b * d), C(c * d)}, q, cfg) / den * sum;
}

Complex apply_Y_numeric(const NumParams& p, const FuncSample& f, const Complex& z, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  check_singular(z, q, cfg);
  C z2 = z * z, hab = C(1) + a * b - (a + b) * z;
  C t0 = z * hab * ((c + d) * q - (c * d + q) * z) / (q * (C(1) - z2) * (q - z2));
  C t1 = (C(1) - a * z) * (C(1) - b * z) * (C(1) - c * z) * (C(1) - d * z) / ((C(1) - z2) * (C(1) - q * z2));
  C t2 = (C(1) - a * z) * (C(1) - b * z) * ((c + d) * q * z - (c * d + q)) / (q * (C(1) - z2) * (C(1) - q * z2));
  C t3 = (c - z) * (d - z) * hab / ((C(1) - z2) * (q - z2));
  return t0 * f(z) + t1 * f(C(q * z)) + t2 * f(C(C(1) / z)) + t3 * f(C(q / z));
}

Complex apply_L_numeric(const NumParams& p, const FuncSample& f, const Complex& z, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  check_singular(z, q, cfg);
  auto A = [&](const C& x) {
    return (C(1) - a * x) * (C(1) - b * x) * (C(1) - c * x) * (C(1) - d * x) /
           ((C(1) - x * x) * (C(1) - q * x * x));
  };
  C f0 = f(z);
  return (C(1) + a * b * c * d / q) * f0 + A(z) * (f(C(q * z)) - f0) + A(C(C(1) / z)) * (f(C(z / q)) - f0);
}

Complex apply_T1_numeric(const NumParams& p, const FuncSample& f, const Complex& z, const SeriesConfig& cfg) {
  const C &a = p.a, &b = p.b;
  check_singular(z, p.q, cfg);
  C z2 = z * z;
  return ((a + b) * z - (C(1) + a * b)) / (C(1) - z2) * f(z) +
         (C(1) - a * z) * (C(1) - b * z) / (C(1) - z2) * f(C(C(1) / z));
}

std::vector<Real> regularity_probe(const Complex& gamma, const Complex& z_pole, const NumParams& p, int steps,
                                   const SeriesConfig& cfg) {
  std::vector<Real> out;
  C dt = dual_params(p).d;
  for (int k = 1; k <= steps; ++k) {
    C z = z_pole * (C(1) + C(pow10_neg(k)));
    C v = aw_function(gamma, z, p, Method::KERNEL, cfg);
    // divide by the Gaussians: multiply by their reciprocal products
    C inv_g = inf({C(p.q * z / p.d), C(p.q / (p.d * z)), C(p.q * gamma / dt), C(p.q / (dt * gamma))}, p.q, cfg);
    out.push_back(abs(v * inv_g));
  }
  return out;
}

template Rational kernel_coefficient<Rational>(int, const ExactParams&);
template Complex kernel_coefficient<Complex>(int, const NumParams&);
template std::pair<Rational, Rational> nonsym_kernel_coefficient<Rational>(int, const ExactParams&);
template std::pair<Complex, Complex> nonsym_kernel_coefficient<Complex>(int, const NumParams&);
template WeightBreakdown<Rational> appendix_a_weight<Rational>(int, const ExactParams&);
template WeightBreakdown<Complex> appendix_a_weight<Complex>(int, const NumParams&);

}  // namespace awdaha
