#include "awdaha/params.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace awdaha {

const char* name(ParamMap m) {
  switch (m) {
    case ParamMap::t1: return "t1";
    case ParamMap::t2: return "t2";
    case ParamMap::t3: return "t3";
    case ParamMap::t4: return "t4";
    case ParamMap::t0: return "t0";
    case ParamMap::t0hat: return "t0hat";
    case ParamMap::sigma: return "sigma";
    case ParamMap::tau: return "tau";
    case ParamMap::tau_inv: return "tau_inv";
    case ParamMap::eta: return "eta";
    case ParamMap::beta2: return "beta2";
    case ParamMap::swap_ab: return "swap_ab";
    case ParamMap::swap_cd: return "swap_cd";
  }
  return "?";
}

ParamMap param_map_from_name(const std::string& s) {
  for (ParamMap m : {ParamMap::t1, ParamMap::t2, ParamMap::t3, ParamMap::t4, ParamMap::t0,
                     ParamMap::t0hat, ParamMap::sigma, ParamMap::tau, ParamMap::tau_inv,
                     ParamMap::eta, ParamMap::beta2, ParamMap::swap_ab, ParamMap::swap_cd})
    if (s == name(m)) return m;
  throw DomainError("unknown parameter map '" + s + "'");
}

nlohmann::json to_json(const Diagnostics& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : d) out.push_back({{"check", x.check}, {"pass", x.pass}, {"detail", x.detail}});
  return out;
}

bool all_pass(const Diagnostics& d) {
  for (const auto& x : d)
    if (!x.pass) return false;
  return true;
}

template <class F>
ParamSet<F> dual_params(const ParamSet<F>& p) {
  F rad = p.a * p.b * p.c * p.d / p.q;
  F at = Field<F>::sqrt(rad);
  return {at, p.a * p.b / at, p.a * p.c / at, p.a * p.d / at, p.q};
}

HeckeParams to_hecke(const NumParams& p) {
  const Complex I(Real(0), Real(1));
  return {I * principal_sqrt(p.a * p.b), -I * principal_sqrt(p.a / p.b),
          I * principal_sqrt(p.c / p.d), -I * principal_sqrt(p.c * p.d / p.q)};
}

NumParams from_hecke(const HeckeParams& h, const Complex& q) {
  Complex sq = principal_sqrt(q);
  return {h.u1 * h.k1, -h.k1 / h.u1, sq * h.u0 * h.k0, -sq * h.k0 / h.u0, q};
}

template <class F>
ParamSet<F> apply_param_map(ParamMap m, const ParamSet<F>& p) {
  const F& a = p.a; const F& b = p.b; const F& c = p.c; const F& d = p.d; const F& q = p.q;
  switch (m) {
    case ParamMap::t1: return {F(1) / b, F(1) / a, c, d, q};
    case ParamMap::t2:
    case ParamMap::swap_ab: return {b, a, c, d, q};
    case ParamMap::t3:
    case ParamMap::swap_cd: return {a, b, d, c, q};
    case ParamMap::t4: return {a, b, q / d, q / c, q};
    case ParamMap::t0: return {q / d, b, c, q / a, q};
    case ParamMap::t0hat: return {a, c, b, d, q};
    case ParamMap::sigma: return dual_params(p);
    case ParamMap::tau:
    case ParamMap::tau_inv: return {a, b, c, q / d, q};
    case ParamMap::eta: return {F(1) / a, F(1) / b, F(1) / c, F(1) / d, F(1) / q};
    case ParamMap::beta2: {
      F s = Field<F>::sqrt(q);
      F at = dual_params(p).a;
      F k = -s * at;
      return {k / c, k / d, k / a, k / b, q};
    }
  }
  throw InternalError("unhandled parameter map");
}

namespace {

template <class F>
bool nearly_equal(const F& x, const F& y, const Real& tol) {
  if constexpr (Field<F>::exact) {
    return x == y;
  } else {
    return abs(x - y) <= tol * (abs(x) + abs(y) + Real(1));
  }
}

template <class F>
Real real_part(const F& x) {
  if constexpr (Field<F>::exact) {
    return to_real(x);
  } else {
    return x.real();
  }
}

}  // namespace

template <class F>
Diagnostics check_generic(const ParamSet<F>& p) {
  Diagnostics out;
  const Real tol = pow10_neg(25);
  auto t = p.tuple();
  const char* names[4] = {"a", "b", "c", "d"};
  bool nonzero = true;
  for (int i = 0; i < 4; ++i)
    if (Field<F>::is_zero(t[i])) nonzero = false;
  out.push_back({"nonzero", nonzero, nonzero ? "a,b,c,d nonzero" : "a parameter is zero"});
  if (!nonzero) return out;

  std::vector<std::pair<std::string, F>> vals;
  for (int i = 0; i < 4; ++i) {
    vals.push_back({names[i], t[i]});
    vals.push_back({std::string(names[i]) + "^-1", F(1) / t[i]});
  }
  std::string clash;
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = i + 1; j < vals.size(); ++j)
      if (nearly_equal(vals[i].second, vals[j].second, tol)) {
        if (!clash.empty()) clash += ", ";
        clash += vals[i].first + " = " + vals[j].first;
      }
  out.push_back({"distinct", clash.empty(), clash.empty() ? "parameters and inverses pairwise distinct" : clash});

  std::string bad;
  auto need_pos = [&](const std::string& label, const F& x) {
    if (!(real_part(x) > 0)) bad += (bad.empty() ? "" : ", ") + std::string("Re(") + label + ") <= 0";
  };
  need_pos("ab", p.a * p.b);
  need_pos("a/b", p.a / p.b);
  need_pos("cd", p.c * p.d);
  need_pos("c/d", p.c / p.d);
  for (int i = 0; i < 4; ++i) need_pos(names[i], t[i]);
  out.push_back({"positive-real-parts", bad.empty(), bad.empty() ? "real parts positive" : bad});

  F rad = p.a * p.b * p.c * p.d / p.q;
  bool cut;
  if constexpr (Field<F>::exact) {
    cut = sgn(rad) <= 0;
  } else {
    cut = rad.imag() == 0 && rad.real() <= 0;
  }
  out.push_back({"dual-radicand", !cut, cut ? "abcd/q lies on (-inf,0]" : "abcd/q off the branch cut"});

  bool qok;
  if constexpr (Field<F>::exact) {
    qok = sgn(p.q) > 0 && p.q < 1;
  } else {
    qok = abs(p.q) < 1 && !Field<F>::is_zero(p.q);
  }
  out.push_back({"base", qok, qok ? "0 < |q| < 1" : "q outside the unit disc"});
  return out;
}

bool strongly_generic(const ExactParams& p, int kmax) {
  auto t = p.tuple();
  for (const auto& x : t)
    if (sgn(x) == 0) return false;
  if (!(sgn(p.q) > 0 && p.q < 1)) return false;
  if (!check_generic(p)[1].pass) return false;
  std::vector<Rational> qpow;
  for (int k = -kmax; k <= kmax; ++k) qpow.push_back(ipow(p.q, k));
  for (int e0 = -1; e0 <= 1; ++e0)
    for (int e1 = -1; e1 <= 1; ++e1)
      for (int e2 = -1; e2 <= 1; ++e2)
        for (int e3 = -1; e3 <= 1; ++e3) {
          if (!e0 && !e1 && !e2 && !e3) continue;
          Rational m = ipow(t[0], e0) * ipow(t[1], e1) * ipow(t[2], e2) * ipow(t[3], e3);
          for (const auto& qk : qpow) {
            Rational v = qk * m;
            if (v == 1 || v == -1) return false;
          }
        }
  return true;
}

bool strongly_generic(const NumParams& p, int kmax, int digits) {
  auto t = p.tuple();
  const Real tol = pow10_neg(digits / 2);
  for (const auto& x : t)
    if (abs(x) < tol) return false;
  auto diag = check_generic(p);
  if (!diag[1].pass) return false;
  for (int e0 = -1; e0 <= 1; ++e0)
    for (int e1 = -1; e1 <= 1; ++e1)
      for (int e2 = -1; e2 <= 1; ++e2)
        for (int e3 = -1; e3 <= 1; ++e3) {
          if (!e0 && !e1 && !e2 && !e3) continue;
          Complex m = ipow(t[0], e0) * ipow(t[1], e1) * ipow(t[2], e2) * ipow(t[3], e3);
          for (int k = -kmax; k <= kmax; ++k) {
            Complex v = ipow(p.q, k) * m;
            if (abs(v - Complex(1)) < Real(1e-6) || abs(v + Complex(1)) < Real(1e-6)) return false;
          }
        }
  return true;
}

template <class F>
ParamSet<Complex> to_numeric(const ParamSet<F>& p) {
  if constexpr (Field<F>::exact) {
    return {to_complex(p.a), to_complex(p.b), to_complex(p.c), to_complex(p.d), to_complex(p.q)};
  } else {
    return p;
  }
}

template <class F>
nlohmann::json params_json(const ParamSet<F>& p) {
  return {{"a", Field<F>::str(p.a)}, {"b", Field<F>::str(p.b)}, {"c", Field<F>::str(p.c)},
          {"d", Field<F>::str(p.d)}, {"q", Field<F>::str(p.q)}};
}

long Sampler::uniform_int(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

double Sampler::uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Rational Sampler::small_rational(int max_num, int max_den, bool allow_negative) {
  for (;;) {
    Rational r(uniform_int(1, max_num), uniform_int(1, max_den));
    r.canonicalize();
    if (r == 1) continue;
    if (allow_negative && uniform_int(0, 3) == 0) r = -r;
    return r;
  }
}

Rational Sampler::base_q() {
  static const int dens[] = {3, 4, 5, 7};
  for (;;) {
    long den = dens[uniform_int(0, 3)];
    Rational q(uniform_int(1, den - 1), den);
    q.canonicalize();
    if (q >= Rational(1, 5) && q <= Rational(3, 5)) return q;
  }
}

ExactParams Sampler::generic() {
  for (;;) {
    ExactParams p{small_rational(), small_rational(), small_rational(), small_rational(), base_q()};
    if (strongly_generic(p)) return p;
  }
}

ExactParams Sampler::square_compatible() {
  for (;;) {
    Rational a = small_rational(), b = small_rational(), c = small_rational();
    Rational r = small_rational(5, 5);
    Rational q = base_q();
    ExactParams p{a, b, c, q * r * r / (a * b * c), q};
    if (strongly_generic(p) && strongly_generic(dual_params(p))) return p;
  }
}

ExactParams Sampler::braid_compatible() {
  static const Rational roots[] = {Rational(1, 2), Rational(2, 3), Rational(1, 3), Rational(3, 4),
                                   Rational(2, 5), Rational(3, 5)};
  for (;;) {
    Rational s = roots[uniform_int(0, 5)];
    Rational a = small_rational(9, 9, false), c = small_rational(9, 9, false);
    Rational r1 = small_rational(4, 4, false), r2 = small_rational(4, 4, false);
    ExactParams p{a, r1 * r1 / a, c, r2 * r2 / c, s * s};
    if (!strongly_generic(p)) continue;
    if (!strongly_generic(dual_params(p))) continue;
    if (!strongly_generic(apply_param_map(ParamMap::beta2, p))) continue;
    return p;
  }
}

ExactParams Sampler::square_q() {
  static const Rational roots[] = {Rational(1, 2), Rational(2, 3), Rational(1, 3), Rational(3, 4),
                                   Rational(2, 5), Rational(3, 5)};
  for (;;) {
    Rational s = roots[uniform_int(0, 5)];
    ExactParams p{small_rational(), small_rational(), small_rational(), small_rational(), s * s};
    if (strongly_generic(p)) return p;
  }
}

Complex Sampler::complex_point(double mod_lo, double mod_hi, double max_arg) {
  double lr = std::log(mod_lo) + uniform01() * (std::log(mod_hi) - std::log(mod_lo));
  double th = (2 * uniform01() - 1) * max_arg;
  // Round to 12 decimals so the point has a short exact decimal form.
  auto rnd = [](double v) { return std::round(v * 1e12) / 1e12; };
  Real re = Real(static_cast<long long>(std::llround(rnd(std::exp(lr) * std::cos(th)) * 1e12))) / Real(1e12);
  Real im = Real(static_cast<long long>(std::llround(rnd(std::exp(lr) * std::sin(th)) * 1e12))) / Real(1e12);
  return Complex(re, im);
}

NumParams Sampler::numeric(double mod_lo, double mod_hi, double max_arg) {
  for (;;) {
    double qv = 0.2 + 0.4 * uniform01();
    Complex q(Real(static_cast<long long>(std::llround(qv * 1e6))) / Real(1e6), Real(0));
    NumParams p{complex_point(mod_lo, mod_hi, max_arg), complex_point(mod_lo, mod_hi, max_arg),
                complex_point(mod_lo, mod_hi, max_arg), complex_point(mod_lo, mod_hi, max_arg), q};
    if (!all_pass(check_generic(p))) continue;
    if (!strongly_generic(p)) continue;
    return p;
  }
}

std::vector<ExactParams> param_orbit(const ExactParams& p, const std::vector<ParamMap>& gens) {
  auto key = [](const ExactParams& x) {
    std::ostringstream os;
    os << x.a << ' ' << x.b << ' ' << x.c << ' ' << x.d << ' ' << x.q;
    return os.str();
  };
  std::vector<ExactParams> out;
  std::set<std::string> seen;
  std::deque<ExactParams> todo{p};
  seen.insert(key(p));
  while (!todo.empty()) {
    ExactParams x = todo.front();
    todo.pop_front();
    out.push_back(x);
    for (ParamMap g : gens) {
      ExactParams y = apply_param_map(g, x);
      if (seen.insert(key(y)).second) todo.push_back(y);
    }
  }
  return out;
}

template ParamSet<Rational> dual_params(const ParamSet<Rational>&);
template ParamSet<Complex> dual_params(const ParamSet<Complex>&);
template ParamSet<Rational> apply_param_map(ParamMap, const ParamSet<Rational>&);
template ParamSet<Complex> apply_param_map(ParamMap, const ParamSet<Complex>&);
template Diagnostics check_generic(const ParamSet<Rational>&);
template Diagnostics check_generic(const ParamSet<Complex>&);
template ParamSet<Complex> to_numeric(const ParamSet<Rational>&);
template ParamSet<Complex> to_numeric(const ParamSet<Complex>&);
template nlohmann::json params_json(const ParamSet<Rational>&);
template nlohmann::json params_json(const ParamSet<Complex>&);

}  // namespace awdaha
