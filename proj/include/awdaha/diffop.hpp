#pragma once

// q-difference-reflection operators f(z) -> sum r(z) f(q^k z^eps), kept in
// normal form: one term per key (eps, k), zero coefficients dropped.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "awdaha/qseries.hpp"
#include "awdaha/ratfunc.hpp"

namespace awdaha {

struct ShiftKey {
  int eps;  // +1 or -1
  int k;
  auto operator<=>(const ShiftKey&) const = default;
};

template <class F>
class DiffRefOp {
 public:
  using Rat = RatFunc<F>;

  explicit DiffRefOp(const F& q) : q_(q) {}

  static DiffRefOp zero(const F& q) { return DiffRefOp(q); }
  static DiffRefOp identity(const F& q) { return multiplication(q, Rat(F(1))); }
  static DiffRefOp multiplication(const F& q, const Rat& r) {
    DiffRefOp op(q);
    op.add_term({1, 0}, r);
    return op;
  }
  static DiffRefOp shift(const F& q, ShiftKey key, const Rat& r) {
    DiffRefOp op(q);
    op.add_term(key, r);
    return op;
  }

  const F& q() const { return q_; }
  const std::map<ShiftKey, Rat>& terms() const { return terms_; }
  size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(ShiftKey key, const Rat& r) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!r.is_zero()) terms_.emplace(key, r);
      return;
    }
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }

  DiffRefOp& operator+=(const DiffRefOp& o) {
    check_base(o);
    for (const auto& [key, r] : o.terms_) add_term(key, r);
    return *this;
  }
  DiffRefOp& operator-=(const DiffRefOp& o) {
    check_base(o);
    for (const auto& [key, r] : o.terms_) add_term(key, -r);
    return *this;
  }
  friend DiffRefOp operator+(DiffRefOp a, const DiffRefOp& b) { return a += b; }
  friend DiffRefOp operator-(DiffRefOp a, const DiffRefOp& b) { return a -= b; }
  friend DiffRefOp operator*(const F& s, const DiffRefOp& a) {
    DiffRefOp r(a.q_);
    if (Field<F>::is_zero(s)) return r;
    for (const auto& [key, x] : a.terms_) r.terms_.emplace(key, x * Rat(s));
    return r;
  }
  friend DiffRefOp operator+(const DiffRefOp& a, const F& s) { return a + s * identity(a.q_); }

  // Composition (A*B)f = A(Bf).
  friend DiffRefOp operator*(const DiffRefOp& A, const DiffRefOp& B) {
    A.check_base(B);
    DiffRefOp r(A.q_);
    for (const auto& [ka, ra] : A.terms_) {
      F qk = ipow(A.q_, ka.k);
      for (const auto& [kb, rb] : B.terms_) {
        ShiftKey key{ka.eps * kb.eps, kb.k + kb.eps * ka.k};
        r.add_term(key, ra * rb.subst(qk, ka.eps));
      }
    }
    return r;
  }

  bool operator==(const DiffRefOp& o) const { return q_ == o.q_ && terms_ == o.terms_; }

  // Termwise comparison with an explicit tolerance (numeric backend).
  bool approx_equal(const DiffRefOp& o, const Real& tol) const {
    for (const auto& [key, r] : terms_) {
      auto it = o.terms_.find(key);
      if (it == o.terms_.end()) {
        if (r.magnitude() > tol) return false;
      } else if (!r.approx_equal(it->second, tol)) {
        return false;
      }
    }
    for (const auto& [key, r] : o.terms_)
      if (!terms_.count(key) && r.magnitude() > tol) return false;
    return true;
  }

  // Apply to a Laurent polynomial; the result must again be a Laurent polynomial.
  LaurentPoly<F> apply(const LaurentPoly<F>& f) const {
    Rat acc;
    for (const auto& [key, r] : terms_) acc += r * Rat(f.subst(ipow(q_, key.k), key.eps));
    if (!acc.is_laurent()) throw InternalError("operator image is not a Laurent polynomial");
    return acc.to_laurent();
  }

  Rat apply(const Rat& f) const {
    Rat acc;
    for (const auto& [key, r] : terms_) acc += r * f.subst(ipow(q_, key.k), key.eps);
    return acc;
  }

  // Pointwise action on an arbitrary function of z.
  template <class G>
  G apply_at(const std::function<G(const G&)>& f, const G& z) const {
    G acc(0);
    G qq;
    if constexpr (std::is_same_v<F, G>) {
      qq = q_;
    } else {
      qq = Field<G>::from_rational(q_);
    }
    for (const auto& [key, r] : terms_) {
      G arg = ipow(qq, key.k) * (key.eps == 1 ? z : G(G(1) / z));
      acc += r.template eval_as<G>(z) * f(arg);
    }
    return acc;
  }

  std::string str() const {
    std::string s;
    for (const auto& [key, r] : terms_) {
      if (!s.empty()) s += "\n";
      s += "[eps=" + std::to_string(key.eps) + ", k=" + std::to_string(key.k) + "] " + r.str();
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_base(const DiffRefOp& o) const {
    if (!(q_ == o.q_)) throw DomainError("operators over different bases q");
  }

  F q_;
  std::map<ShiftKey, Rat> terms_;
};

// M A M^{-1} with M = G_numer(Z)/G_denom(Z) (an absent Gaussian is 1). The
// (eps,k) coefficient gets the factor M(z)/M(q^k z^eps), which is rational:
//   G_e(z)/G_e(q^k z^eps) = (e q^k z^eps, e q^{-k} z^{-eps}; q)_inf / (e z, e/z; q)_inf
// telescopes to a finite product for every key.
template <class F>
RatFunc<F> gaussian_shift_ratio(const F& e, const F& q, ShiftKey key) {
  // Pair (e q^k z^eps)_inf with (e z^eps)_inf and (e q^{-k} z^{-eps})_inf with (e z^{-eps})_inf.
  // (x q^k)_inf/(x)_inf = 1/(x;q)_k for k >= 0 and (x q^k;q)_{-k} for k < 0.
  auto ratio = [&](int eps, int k) {
    // (e q^k z^eps; q)_inf / (e z^eps; q)_inf as a rational function
    RatFunc<F> r(F(1));
    int n = k >= 0 ? k : -k;
    F start = k >= 0 ? e : F(e * ipow(q, k));
    for (int j = 0; j < n; ++j) {
      F c = start * ipow(q, j);
      LaurentPoly<F> factor(F(1));
      factor.set(eps, F(-c));
      if (k >= 0)
        r = r / RatFunc<F>(factor);
      else
        r = r * RatFunc<F>(factor);
    }
    return r;
  };
  return ratio(key.eps, key.k) * ratio(-key.eps, -key.k);
}

template <class F>
DiffRefOp<F> conjugate_by_gaussian_ratio(const DiffRefOp<F>& A, const std::optional<F>& numer_e,
                                         const std::optional<F>& denom_e) {
  DiffRefOp<F> r(A.q());
  for (const auto& [key, coef] : A.terms()) {
    RatFunc<F> m = coef;
    if (numer_e) m = m * gaussian_shift_ratio(*numer_e, A.q(), key);
    if (denom_e) m = m / gaussian_shift_ratio(*denom_e, A.q(), key);
    r.add_term(key, m);
  }
  return r;
}

}  // namespace awdaha
