#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "awdaha/field.hpp"
#include "awdaha/params.hpp"

namespace awdaha {

// Dense polynomial helpers: coefficient vectors in ascending order, trimmed so
// the last entry is nonzero (the zero polynomial is the empty vector).
namespace poly {

template <class F>
void trim(std::vector<F>& p) {
  while (!p.empty() && Field<F>::is_zero(p.back())) p.pop_back();
}

template <class F>
std::vector<F> mul(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<F> r(a.size() + b.size() - 1, F(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

template <class F>
std::vector<F> add(const std::vector<F>& a, const std::vector<F>& b) {
  std::vector<F> r(std::max(a.size(), b.size()), F(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

template <class F>
std::vector<F> scale(const std::vector<F>& a, const F& s) {
  if (Field<F>::is_zero(s)) return {};
  std::vector<F> r(a);
  for (auto& x : r) x *= s;
  return r;
}

// a = quot * b + rem
template <class F>
std::pair<std::vector<F>, std::vector<F>> divmod(std::vector<F> a, const std::vector<F>& b) {
  if (b.empty()) throw PoleError("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  std::vector<F> quot(a.size() - b.size() + 1, F(0));
  const F lead = b.back();
  for (size_t k = quot.size(); k-- > 0;) {
    F coef = a[k + b.size() - 1] / lead;
    quot[k] = coef;
    if (Field<F>::is_zero(coef)) continue;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= coef * b[j];
    a[k + b.size() - 1] = F(0);
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

template <class F>
std::vector<F> monic(const std::vector<F>& a) {
  if (a.empty()) return a;
  F inv = F(1) / a.back();
  return scale(a, inv);
}

// Monic gcd over the field.
template <class F>
std::vector<F> gcd(std::vector<F> a, std::vector<F> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

// Number of leading zero coefficients (the z-adic valuation).
template <class F>
size_t valuation(const std::vector<F>& a) {
  size_t v = 0;
  while (v < a.size() && Field<F>::is_zero(a[v])) ++v;
  return v;
}

}  // namespace poly

template <class F>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const F& c) { set(0, c); }  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(F(c)) {}

  static LaurentPoly monomial(int e, const F& c = F(1)) {
    LaurentPoly p;
    p.set(e, c);
    return p;
  }
  static LaurentPoly z() { return monomial(1); }
  static LaurentPoly zinv() { return monomial(-1); }

  // Dense ascending coefficients times z^low.
  static LaurentPoly from_dense(int low, const std::vector<F>& c) {
    LaurentPoly p;
    for (size_t i = 0; i < c.size(); ++i) p.set(low + static_cast<int>(i), c[i]);
    return p;
  }

  const std::map<int, F>& coeffs() const { return c_; }
  F coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? F(0) : it->second;
  }
  void set(int e, const F& v) {
    if (Field<F>::is_zero(v))
      c_.erase(e);
    else
      c_[e] = v;
  }
  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }
  int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
  int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  // (low exponent, dense coefficients)
  std::pair<int, std::vector<F>> dense() const {
    if (c_.empty()) return {0, {}};
    int lo = min_exp();
    std::vector<F> v(static_cast<size_t>(max_exp() - lo + 1), F(0));
    for (const auto& [e, x] : c_) v[static_cast<size_t>(e - lo)] = x;
    return {lo, v};
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, x] : o.c_) set(e, F(coeff(e) + x));
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, x] : o.c_) set(e, F(coeff(e) - x));
    return *this;
  }
  LaurentPoly& operator*=(const F& s) {
    if (Field<F>::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& [e, x] : c_) x *= s;
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= F(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const F& s) { return a *= s; }
  friend LaurentPoly operator*(const F& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [e1, x1] : a.c_)
      for (const auto& [e2, x2] : b.c_) r.set(e1 + e2, F(r.coeff(e1 + e2) + x1 * x2));
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  // Coefficientwise comparison with an explicit absolute tolerance.
  bool approx_equal(const LaurentPoly& o, const Real& tol) const {
    for (const auto& [e, x] : c_)
      if (Field<F>::magnitude(F(x - o.coeff(e))) > tol) return false;
    for (const auto& [e, x] : o.c_)
      if (Field<F>::magnitude(F(x - coeff(e))) > tol) return false;
    return true;
  }

  // f(z) -> f(1/z)
  LaurentPoly invol() const {
    LaurentPoly r;
    for (const auto& [e, x] : c_) r.c_[-e] = x;
    return r;
  }
  bool is_symmetric() const { return *this == invol(); }

  // f(z) -> z^k f(z)
  LaurentPoly shift(int k) const {
    LaurentPoly r;
    for (const auto& [e, x] : c_) r.c_[e + k] = x;
    return r;
  }

  // f(z) -> f(s z^eps)
  LaurentPoly subst(const F& s, int eps) const {
    LaurentPoly r;
    for (const auto& [e, x] : c_) r.set(eps * e, F(x * ipow(s, e)));
    return r;
  }

  F eval(const F& z0) const {
    if (Field<F>::is_zero(z0)) throw ZeroArgument("Laurent polynomial evaluated at z = 0");
    return eval_as<F>(z0);
  }

  // Evaluate at a point of another field (rational coefficients at a complex point).
  template <class G>
  G eval_as(const G& z0) const {
    if (c_.empty()) return G(0);
    if (Field<G>::is_zero(z0)) throw ZeroArgument("Laurent polynomial evaluated at z = 0");
    auto conv = [](const F& x) -> G {
      if constexpr (std::is_same_v<F, G>) {
        return x;
      } else {
        return Field<G>::from_rational(x);
      }
    };
    // Horner on the nonnegative part, then on the negative part in 1/z.
    G pos(0), neg(0);
    int hi = max_exp(), lo = min_exp();
    if (hi >= 0) {
      for (int e = hi; e >= 0; --e) pos = pos * z0 + conv(coeff(e));
    }
    if (lo < 0) {
      G w = G(1) / z0;
      for (int e = lo; e < 0; ++e) neg = (neg + conv(coeff(e))) * w;
    }
    return pos + neg;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, x] : c_) j[std::to_string(e)] = Field<F>::str(x);
    return j;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [e, x] : c_) {
      if (!s.empty()) s += " + ";
      s += "(" + Field<F>::str(x) + ")";
      if (e != 0) s += "*z^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<int, F> c_;
};

template <class F>
LaurentPoly<F> laurent_from_json(const nlohmann::json& j) {
  LaurentPoly<F> p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    F v;
    if constexpr (Field<F>::exact) {
      v = parse_rational(it.value().template get<std::string>());
    } else {
      v = parse_complex(it.value().template get<std::string>());
    }
    p.set(std::stoi(it.key()), v);
  }
  return p;
}

// Exact quotient a/b; InternalError if b does not divide a (exact backend) or
// if the remainder is not negligible (numeric backend).
template <class F>
LaurentPoly<F> divide_exact(const LaurentPoly<F>& a, const LaurentPoly<F>& b) {
  if (b.is_zero()) throw PoleError("division by the zero Laurent polynomial");
  if (a.is_zero()) return a;
  auto [la, da] = a.dense();
  auto [lb, db] = b.dense();
  auto [quot, rem] = poly::divmod(da, db);
  bool ok = rem.empty();
  if constexpr (!Field<F>::exact) {
    if (!ok) {
      Real scale = 0, worst = 0;
      for (const auto& x : da) scale = std::max(scale, Field<F>::magnitude(x));
      for (const auto& x : rem) worst = std::max(worst, Field<F>::magnitude(x));
      ok = worst <= pow10_neg(kWorkingDigits - 20) * (scale + 1);
    }
  }
  if (!ok) throw InternalError("Laurent polynomial division leaves a remainder");
  return LaurentPoly<F>::from_dense(la - lb, quot);
}

// (1 - x z)
template <class F>
LaurentPoly<F> one_minus(const F& x) {
  LaurentPoly<F> p(F(1));
  p.set(1, F(-x));
  return p;
}

// T1 of the basic representation acting on a Laurent polynomial, via
//   T1 g = -ab g + z^{-1}(1-az)(1-bz) (g(z) - g(1/z))/(z - 1/z).
template <class F>
LaurentPoly<F> apply_T1(const LaurentPoly<F>& g, const F& a, const F& b) {
  LaurentPoly<F> diff = g - g.invol();
  LaurentPoly<F> zz = LaurentPoly<F>::z() - LaurentPoly<F>::zinv();
  LaurentPoly<F> dd = diff.is_zero() ? diff : divide_exact(diff, zz);
  LaurentPoly<F> r = g * F(-a * b);
  r += (one_minus(a) * one_minus(b)).shift(-1) * dd;
  return r;
}

template <class F>
struct T1Decomposition {
  LaurentPoly<F> g1, g2;
};

// g = g1 - z^{-1}(1-az)(1-bz) g2 with g1, g2 symmetric.
template <class F>
T1Decomposition<F> t1_decompose(const LaurentPoly<F>& g, const ParamSet<F>& p) {
  F ab = p.a * p.b;
  if (Field<F>::is_zero(F(F(1) - ab))) throw DegenerateParamsError("t1_decompose needs ab != 1");
  F inv = F(1) / F(F(1) - ab);
  LaurentPoly<F> tg = apply_T1(g, p.a, p.b);
  LaurentPoly<F> g1 = (tg + g) * inv;
  LaurentPoly<F> h2 = (tg + g * ab) * inv;
  LaurentPoly<F> w = (one_minus(p.a) * one_minus(p.b)).shift(-1);
  LaurentPoly<F> g2 = divide_exact(h2, w);
  if constexpr (Field<F>::exact) {
    if (!(g1 - w * g2 == g)) throw InternalError("t1_decompose reconstruction mismatch");
  }
  return {g1, g2};
}

}  // namespace awdaha
