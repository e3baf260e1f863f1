#pragma once

// Basic representation of the rank-one DAHA on Laurent polynomials, formal
// generator expressions, the automorphism catalog and relation checks.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "awdaha/diffop.hpp"
#include "awdaha/params.hpp"

namespace awdaha {

enum class Gen { Z, Zi, T1, T1i, T0, T0i, Y, Yi, D, X, e };

template <class F>
DiffRefOp<F> basic_op(Gen g, const ParamSet<F>& p);

// Askey-Wilson second-order operator; equals D on symmetric functions.
template <class F>
DiffRefOp<F> aw_operator(const ParamSet<F>& p);

enum class Letter : signed char { T1, T1i, T0, T0i, Z, Zi };

inline Letter inverse(Letter l) {
  switch (l) {
    case Letter::T1: return Letter::T1i;
    case Letter::T1i: return Letter::T1;
    case Letter::T0: return Letter::T0i;
    case Letter::T0i: return Letter::T0;
    case Letter::Z: return Letter::Zi;
    default: return Letter::Z;
  }
}

using Word = std::vector<Letter>;

std::string word_str(const Word& w);

// Linear combination of freely reduced words with scalar coefficients. The
// coefficients are plain numbers: substitution never rewrites them.
template <class F>
class GenExpr {
 public:
  GenExpr() = default;
  GenExpr(const F& c) {  // NOLINT
    if (!Field<F>::is_zero(c)) terms_[{}] = c;
  }
  GenExpr(long c) : GenExpr(F(c)) {}
  static GenExpr letter(Letter l, const F& c = F(1)) { return word({l}, c); }
  static GenExpr word(Word w, const F& c = F(1)) {
    GenExpr e;
    e.add(reduce(std::move(w)), c);
    return e;
  }

  const std::map<Word, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  friend GenExpr operator+(GenExpr x, const GenExpr& y) {
    for (const auto& [w, c] : y.terms_) x.add(w, c);
    return x;
  }
  friend GenExpr operator-(GenExpr x, const GenExpr& y) {
    for (const auto& [w, c] : y.terms_) x.add(w, F(-c));
    return x;
  }
  friend GenExpr operator*(const GenExpr& x, const GenExpr& y) {
    GenExpr r;
    for (const auto& [wx, cx] : x.terms_)
      for (const auto& [wy, cy] : y.terms_) {
        Word w = wx;
        w.insert(w.end(), wy.begin(), wy.end());
        r.add(reduce(std::move(w)), F(cx * cy));
      }
    return r;
  }
  friend GenExpr operator*(const F& s, const GenExpr& x) { return GenExpr(s) * x; }

  // Only monomials c*w have a formal inverse c^{-1} w^{-1}.
  GenExpr inverse() const {
    if (!is_monomial()) throw DomainError("formal inverse of a non-monomial expression");
    const auto& [w, c] = *terms_.begin();
    Word inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(awdaha::inverse(*it));
    return word(inv, F(F(1) / c));
  }

  // Replace T1, T0, Z by the given images (inverse letters by inverse images).
  GenExpr substitute(const std::array<GenExpr, 3>& img) const {
    std::array<GenExpr, 3> inv;
    std::array<bool, 3> have{false, false, false};
    auto image = [&](Letter l) -> const GenExpr& {
      int idx = (l == Letter::T1 || l == Letter::T1i) ? 0 : (l == Letter::T0 || l == Letter::T0i) ? 1 : 2;
      if (l == Letter::T1 || l == Letter::T0 || l == Letter::Z) return img[idx];
      if (!have[idx]) {
        inv[idx] = img[idx].inverse();
        have[idx] = true;
      }
      return inv[idx];
    };
    GenExpr r;
    for (const auto& [w, c] : terms_) {
      GenExpr t(c);
      for (Letter l : w) t = t * image(l);
      r = r + t;
    }
    return r;
  }

  DiffRefOp<F> realize(const ParamSet<F>& p) const;

  std::string str() const;

 private:
  static Word reduce(Word w) {
    Word out;
    for (Letter l : w) {
      if (!out.empty() && out.back() == awdaha::inverse(l))
        out.pop_back();
      else
        out.push_back(l);
    }
    return out;
  }
  void add(const Word& w, const F& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!Field<F>::is_zero(c)) terms_.emplace(w, c);
      return;
    }
    it->second += c;
    if (Field<F>::is_zero(it->second)) terms_.erase(it);
  }

  std::map<Word, F> terms_;
};

template <class F>
GenExpr<F> gen(Letter l) {
  return GenExpr<F>::letter(l);
}

// The relations of the algebra at parameters p, as expressions in the
// generators: each must realize to the zero operator.
template <class F>
std::vector<std::pair<std::string, GenExpr<F>>> defining_relations(const ParamSet<F>& p);

enum class AutoName { t1, t2, t3, t4, sigma, tau, tau_inv, tau2, eta, beta1, beta2 };
const char* name(AutoName a);
AutoName auto_from_name(const std::string& s);

// Images of (T1, T0, Z) at source parameters, together with the target tuple.
template <class F>
struct AutoImage {
  std::array<GenExpr<F>, 3> images;
  ParamSet<F> source, target;
};

template <class F>
AutoImage<F> automorphism(AutoName a, const ParamSet<F>& p);

// Composite of maps listed in application order (first element applied first),
// with coefficients frozen at the parameters where each map is applied.
template <class F>
AutoImage<F> compose_automorphisms(const std::vector<AutoName>& order, const ParamSet<F>& p);

struct Report {
  std::string relation;
  nlohmann::json params;
  bool pass = false;
  size_t residual_terms = 0;
  // relative residual of numeric checks (0 for exact ones)
  double residual = 0;
};
using Reports = std::vector<Report>;
nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const Reports& r);
bool all_pass(const Reports& r);

template <class F>
Report check_zero(const std::string& relation, const DiffRefOp<F>& op, const ParamSet<F>& p);
template <class F>
Report check_equal(const std::string& relation, const DiffRefOp<F>& lhs, const DiffRefOp<F>& rhs,
                   const ParamSet<F>& p);

// Source relations evaluated on the images, realized at the target tuple.
template <class F>
Reports verify_automorphism(const AutoImage<F>& img);
template <class F>
Reports verify_automorphism(AutoName a, const ParamSet<F>& p);

// The composite realizes U -> W^{-1} U W for every generator U.
template <class F>
Reports verify_conjugation(const std::string& label, const AutoImage<F>& img, const GenExpr<F>& W);

// Relations among automorphisms (exact backend).
Reports verify_group_relations(const ExactParams& p);

// Generator relations and commutators of the basic representation.
template <class F>
Reports verify_daha_relations(const ParamSet<F>& p);

// Gaussian conjugation identities as operator identities.
template <class F>
Reports verify_gaussian_conjugations(const ParamSet<F>& p);

// Idempotent, spherical commutation, and images of Y, D, X under eta.
template <class F>
Reports verify_spherical(const ParamSet<F>& p);

}  // namespace awdaha
