#pragma once

// Rational functions of z in the normal form z^s N(z)/D(z) with N(0) != 0,
// D(0) != 0, D monic and gcd(N, D) = 1 (exact backend). The numeric backend
// skips the gcd and compares by cross-multiplication.

#include <string>
#include <vector>

#include "awdaha/laurent.hpp"

namespace awdaha {

template <class F>
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const F& c) {  // NOLINT
    if (!Field<F>::is_zero(c)) {
      num_ = {c};
      den_ = {F(1)};
    }
  }
  RatFunc(long c) : RatFunc(F(c)) {}
  RatFunc(const LaurentPoly<F>& p) : RatFunc(p, LaurentPoly<F>(F(1))) {}  // NOLINT
  RatFunc(const LaurentPoly<F>& n, const LaurentPoly<F>& d) {
    if (d.is_zero()) throw PoleError("rational function with zero denominator");
    if (n.is_zero()) return;
    auto [ln, dn] = n.dense();
    auto [ld, dd] = d.dense();
    shift_ = ln - ld;
    num_ = std::move(dn);
    den_ = std::move(dd);
    normalize();
  }

  bool is_zero() const { return num_.empty(); }
  int shift() const { return shift_; }
  const std::vector<F>& num() const { return num_; }
  const std::vector<F>& den() const { return den_; }

  bool is_laurent() const { return is_zero() || den_.size() == 1; }
  LaurentPoly<F> to_laurent() const {
    if (!is_laurent()) throw InternalError("rational function is not a Laurent polynomial");
    if (is_zero()) return {};
    return LaurentPoly<F>::from_dense(shift_, num_);
  }
  LaurentPoly<F> numerator() const { return LaurentPoly<F>::from_dense(shift_, num_); }
  LaurentPoly<F> denominator() const { return LaurentPoly<F>::from_dense(0, den_); }

  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero() || y.is_zero()) return {};
    RatFunc r;
    r.shift_ = x.shift_ + y.shift_;
    if constexpr (Field<F>::exact) {
      // Cross-cancel first to keep the products small.
      auto g1 = poly::gcd(x.num_, y.den_);
      auto g2 = poly::gcd(y.num_, x.den_);
      auto xn = poly::divmod(x.num_, g1).first, yd = poly::divmod(y.den_, g1).first;
      auto yn = poly::divmod(y.num_, g2).first, xd = poly::divmod(x.den_, g2).first;
      r.num_ = poly::mul(xn, yn);
      r.den_ = poly::mul(xd, yd);
    } else {
      r.num_ = poly::mul(x.num_, y.num_);
      r.den_ = poly::mul(x.den_, y.den_);
    }
    r.normalize_scalar();
    return r;
  }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    RatFunc r;
    int s = std::min(x.shift_, y.shift_);
    std::vector<F> xn = shifted(x.num_, x.shift_ - s), yn = shifted(y.num_, y.shift_ - s);
    if (x.den_ == y.den_) {
      r.num_ = poly::add(xn, yn);
      r.den_ = x.den_;
    } else if constexpr (Field<F>::exact) {
      auto g = poly::gcd(x.den_, y.den_);
      auto xd = poly::divmod(x.den_, g).first, yd = poly::divmod(y.den_, g).first;
      r.num_ = poly::add(poly::mul(xn, yd), poly::mul(yn, xd));
      r.den_ = poly::mul(x.den_, yd);
    } else {
      r.num_ = poly::add(poly::mul(xn, y.den_), poly::mul(yn, x.den_));
      r.den_ = poly::mul(x.den_, y.den_);
    }
    r.shift_ = s;
    r.normalize();
    return r;
  }

  friend RatFunc operator-(const RatFunc& x) {
    RatFunc r(x);
    for (auto& c : r.num_) c = -c;
    return r;
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const {
    if (is_zero()) throw PoleError("inverse of the zero rational function");
    RatFunc r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_scalar();
    return r;
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }

  // r(z) -> r(s z^eps)
  RatFunc subst(const F& s, int eps) const {
    if (is_zero()) return {};
    RatFunc r;
    auto scaled = [&](const std::vector<F>& p) {
      std::vector<F> out(p.size());
      F sk(1);
      for (size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i] * sk;
        sk *= s;
      }
      return out;
    };
    std::vector<F> n = scaled(num_), d = scaled(den_);
    F sshift = ipow(s, shift_);
    if (eps == 1) {
      r.shift_ = shift_;
      r.num_ = poly::scale(n, sshift);
      r.den_ = d;
    } else {
      // N(s/z) = z^{-deg N} rev(N)(z), likewise D.
      std::vector<F> rn(n.rbegin(), n.rend()), rd(d.rbegin(), d.rend());
      r.shift_ = -shift_ - static_cast<int>(n.size() - 1) + static_cast<int>(d.size() - 1);
      r.num_ = poly::scale(rn, sshift);
      r.den_ = rd;
    }
    r.normalize_scalar();
    return r;
  }

  F eval(const F& z0) const { return eval_as<F>(z0); }

  template <class G>
  G eval_as(const G& z0) const {
    if (is_zero()) return G(0);
    LaurentPoly<F> n = numerator(), d = denominator();
    G dv = d.template eval_as<G>(z0);
    if (Field<G>::is_zero(dv)) throw PoleError("rational function evaluated at a pole");
    return n.template eval_as<G>(z0) / dv;
  }

  // Exact normal-form equality.
  bool operator==(const RatFunc& o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
  }

  // Cross-multiplied comparison with an explicit relative tolerance.
  bool approx_equal(const RatFunc& o, const Real& tol) const {
    if (is_zero() && o.is_zero()) return true;
    LaurentPoly<F> lhs = numerator() * o.denominator();
    LaurentPoly<F> rhs = o.numerator() * denominator();
    Real scale = 0;
    for (const auto& [e, x] : lhs.coeffs()) scale = std::max(scale, Field<F>::magnitude(x));
    for (const auto& [e, x] : rhs.coeffs()) scale = std::max(scale, Field<F>::magnitude(x));
    return lhs.approx_equal(rhs, tol * (scale + Real(1)));
  }

  // Largest coefficient magnitude of the numerator relative to the denominator.
  Real magnitude() const {
    Real n = 0, d = 0;
    for (const auto& x : num_) n = std::max(n, Field<F>::magnitude(x));
    for (const auto& x : den_) d = std::max(d, Field<F>::magnitude(x));
    return d > 0 ? n / d : n;
  }

  std::string str() const {
    if (is_zero()) return "0";
    return "(" + numerator().str() + ")/(" + denominator().str() + ")";
  }

 private:
  static std::vector<F> shifted(const std::vector<F>& p, int k) {
    std::vector<F> r(static_cast<size_t>(k), F(0));
    r.insert(r.end(), p.begin(), p.end());
    return r;
  }

  // Strip z-powers into the shift, make den monic; exact backend also reduces.
  void normalize() {
    poly::trim(num_);
    poly::trim(den_);
    if (num_.empty()) {
      shift_ = 0;
      den_.clear();
      return;
    }
    size_t vn = poly::valuation(num_), vd = poly::valuation(den_);
    num_.erase(num_.begin(), num_.begin() + static_cast<long>(vn));
    den_.erase(den_.begin(), den_.begin() + static_cast<long>(vd));
    shift_ += static_cast<int>(vn) - static_cast<int>(vd);
    if constexpr (Field<F>::exact) {
      if (den_.size() > 1 && num_.size() > 1) {
        auto g = poly::gcd(num_, den_);
        if (g.size() > 1) {
          num_ = poly::divmod(num_, g).first;
          den_ = poly::divmod(den_, g).first;
        }
      }
    }
    normalize_scalar();
  }

  void normalize_scalar() {
    if (num_.empty()) {
      shift_ = 0;
      den_.clear();
      return;
    }
    F lead = den_.back();
    if (!(lead == F(1))) {
      F inv = F(1) / lead;
      for (auto& x : num_) x *= inv;
      for (auto& x : den_) x *= inv;
    }
  }

  int shift_ = 0;
  std::vector<F> num_, den_;
};

}  // namespace awdaha
