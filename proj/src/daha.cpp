#include "awdaha/daha.hpp"

#include <stdexcept>

namespace awdaha {

namespace {

template <class F>
using LP = LaurentPoly<F>;
template <class F>
using RF = RatFunc<F>;

template <class F>
LP<F> lp(std::initializer_list<std::pair<int, F>> cs) {
  LP<F> p;
  for (const auto& [e, c] : cs) p += LP<F>::monomial(e, c);
  return p;
}

template <class F>
F inv(const F& x) {
  return F(F(1) / x);
}

template <class F>
DiffRefOp<F> op_T1(const ParamSet<F>& p) {
  const F &a = p.a, &b = p.b;
  LP<F> den = lp<F>({{0, F(1)}, {2, F(-1)}});
  DiffRefOp<F> op(p.q);
  op.add_term({1, 0}, RF<F>(lp<F>({{1, F(a + b)}, {0, F(-(F(1) + a * b))}}), den));
  op.add_term({-1, 0}, RF<F>(one_minus(a) * one_minus(b), den));
  return op;
}

template <class F>
DiffRefOp<F> op_T0(const ParamSet<F>& p) {
  const F &c = p.c, &d = p.d, &q = p.q;
  LP<F> den = lp<F>({{0, q}, {2, F(-1)}});
  LP<F> cz = lp<F>({{0, c}, {1, F(-1)}}), dz = lp<F>({{0, d}, {1, F(-1)}});
  DiffRefOp<F> op(q);
  op.add_term({1, 0}, RF<F>(lp<F>({{2, F(c * d / q + F(1))}, {1, F(-(c + d))}}), den));
  op.add_term({-1, 1}, RF<F>(-(cz * dz), den));
  return op;
}

}  // namespace

template <class F>
DiffRefOp<F> basic_op(Gen g, const ParamSet<F>& p) {
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  using Op = DiffRefOp<F>;
  Op id = Op::identity(q);
  switch (g) {
    case Gen::Z: return Op::multiplication(q, RF<F>(LP<F>::z()));
    case Gen::Zi: return Op::multiplication(q, RF<F>(LP<F>::zinv()));
    case Gen::T1: return op_T1(p);
    case Gen::T1i: {
      F iab = inv(F(a * b));
      return F(-iab) * op_T1(p) + F(-(F(1) + iab)) * id;
    }
    case Gen::T0: return op_T0(p);
    case Gen::T0i: {
      F r = q / (c * d);
      return F(-r) * op_T0(p) + F(-(F(1) + r)) * id;
    }
    case Gen::Y: return op_T1(p) * op_T0(p);
    case Gen::Yi: return basic_op(Gen::T0i, p) * basic_op(Gen::T1i, p);
    case Gen::D: return basic_op(Gen::Y, p) + F(a * b * c * d / q) * basic_op(Gen::Yi, p);
    case Gen::X: return basic_op(Gen::Z, p) + basic_op(Gen::Zi, p);
    case Gen::e: {
      F one_ab = F(1) - a * b;
      if (Field<F>::is_zero(one_ab)) throw DegenerateParamsError("idempotent e needs ab != 1");
      return inv(one_ab) * (op_T1(p) + id);
    }
  }
  throw InternalError("unknown generator");
}

template <class F>
DiffRefOp<F> aw_operator(const ParamSet<F>& p) {
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  LP<F> one_z2 = lp<F>({{0, F(1)}, {2, F(-1)}});
  RF<F> A(one_minus(a) * one_minus(b) * one_minus(c) * one_minus(d), one_z2 * lp<F>({{0, F(1)}, {2, F(-q)}}));
  auto lin = [](const F& x) { return lp<F>({{0, x}, {1, F(-1)}}); };
  RF<F> B(lin(a) * lin(b) * lin(c) * lin(d), one_z2 * lp<F>({{0, q}, {2, F(-1)}}));
  DiffRefOp<F> L(q);
  L.add_term({1, 0}, RF<F>(F(F(1) + a * b * c * d / q)) - A - B);
  L.add_term({1, 1}, A);
  L.add_term({1, -1}, B);
  return L;
}

std::string word_str(const Word& w) {
  static const char* names[] = {"T1", "T1^-1", "T0", "T0^-1", "Z", "Z^-1"};
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += " ";
    s += names[static_cast<int>(l)];
  }
  return s.empty() ? "1" : s;
}

template <class F>
DiffRefOp<F> GenExpr<F>::realize(const ParamSet<F>& p) const {
  std::array<DiffRefOp<F>, 6> base = {basic_op(Gen::T1, p), basic_op(Gen::T1i, p), basic_op(Gen::T0, p),
                                      basic_op(Gen::T0i, p), basic_op(Gen::Z, p),  basic_op(Gen::Zi, p)};
  DiffRefOp<F> r(p.q);
  for (const auto& [w, c] : terms_) {
    DiffRefOp<F> t = DiffRefOp<F>::identity(p.q);
    for (Letter l : w) t = t * base[static_cast<int>(l)];
    r += c * t;
  }
  return r;
}

template <class F>
std::string GenExpr<F>::str() const {
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + Field<F>::str(c) + ")";
    if (!w.empty()) s += " " + word_str(w);
  }
  return s.empty() ? "0" : s;
}

template <class F>
std::vector<std::pair<std::string, GenExpr<F>>> defining_relations(const ParamSet<F>& p) {
  using E = GenExpr<F>;
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  E T1 = gen<F>(Letter::T1), T0 = gen<F>(Letter::T0), Z = gen<F>(Letter::Z);
  E T1i = gen<F>(Letter::T1i), T0i = gen<F>(Letter::T0i), Zi = gen<F>(Letter::Zi);
  E one(F(1));
  E t1z = T1 * Z, qt0zi = q * (T0 * Zi), zit1i = Zi * T1i, t0iz = T0i * Z;
  return {
      {"(T1+ab)(T1+1)", (T1 + E(F(a * b))) * (T1 + one)},
      {"(T1 Z+a)(T1 Z+b)", (t1z + E(a)) * (t1z + E(b))},
      {"(q T0 Z^-1+c)(q T0 Z^-1+d)", (qt0zi + E(c)) * (qt0zi + E(d))},
      {"(T0+cd/q)(T0+1)", (T0 + E(F(c * d / q))) * (T0 + one)},
      {"(Z^-1 T1^-1+1/a)(Z^-1 T1^-1+1/b)", (zit1i + E(inv(a))) * (zit1i + E(inv(b)))},
      {"(T0^-1 Z+q/c)(T0^-1 Z+q/d)", (t0iz + E(F(q / c))) * (t0iz + E(F(q / d)))},
  };
}

const char* name(AutoName a) {
  switch (a) {
    case AutoName::t1: return "t1";
    case AutoName::t2: return "t2";
    case AutoName::t3: return "t3";
    case AutoName::t4: return "t4";
    case AutoName::sigma: return "sigma";
    case AutoName::tau: return "tau";
    case AutoName::tau_inv: return "tau_inv";
    case AutoName::tau2: return "tau2";
    case AutoName::eta: return "eta";
    case AutoName::beta1: return "beta1";
    case AutoName::beta2: return "beta2";
  }
  return "?";
}

AutoName auto_from_name(const std::string& s) {
  for (AutoName a : {AutoName::t1, AutoName::t2, AutoName::t3, AutoName::t4, AutoName::sigma, AutoName::tau,
                     AutoName::tau_inv, AutoName::tau2, AutoName::eta, AutoName::beta1, AutoName::beta2})
    if (s == name(a)) return a;
  throw DomainError("unknown automorphism: " + s);
}

template <class F>
AutoImage<F> automorphism(AutoName a, const ParamSet<F>& p) {
  using E = GenExpr<F>;
  E T1 = gen<F>(Letter::T1), T0 = gen<F>(Letter::T0), Z = gen<F>(Letter::Z);
  E T1i = gen<F>(Letter::T1i), T0i = gen<F>(Letter::T0i), Zi = gen<F>(Letter::Zi);
  const F &c = p.c, &d = p.d, &q = p.q;
  AutoImage<F> r{{T1, T0, Z}, p, p};
  switch (a) {
    case AutoName::t1:
      r.images[0] = F(p.a * p.b) * T1;
      r.target = apply_param_map(ParamMap::t1, p);
      break;
    case AutoName::t2: r.target = apply_param_map(ParamMap::t2, p); break;
    case AutoName::t3: r.target = apply_param_map(ParamMap::t3, p); break;
    case AutoName::t4:
      r.images[1] = F(c * d / q) * T0;
      r.target = apply_param_map(ParamMap::t4, p);
      break;
    case AutoName::sigma: {
      F at = dual_params(p).a;
      r.images[1] = at * (T1i * Zi);
      r.images[2] = p.a * (T1i * T0i);
      r.target = apply_param_map(ParamMap::sigma, p);
      break;
    }
    case AutoName::tau:
    case AutoName::beta1:
      r.images[1] = F(c / q) * (Z * T0i);
      r.target = apply_param_map(ParamMap::tau, p);
      break;
    case AutoName::tau_inv:
      r.images[1] = F(c / q) * (T0i * Z);
      r.target = apply_param_map(ParamMap::tau_inv, p);
      break;
    case AutoName::tau2: r.images[1] = Z * T0 * Zi; break;
    case AutoName::eta:
      r.images = {T1i, T0i, Zi};
      r.target = apply_param_map(ParamMap::eta, p);
      break;
    case AutoName::beta2: {
      F s = Field<F>::sqrt(F(p.a * p.b / (c * d)));
      r.images[2] = F(-q * s) * (T1i * Zi * T0);
      r.target = apply_param_map(ParamMap::beta2, p);
      break;
    }
  }
  return r;
}

template <class F>
AutoImage<F> compose_automorphisms(const std::vector<AutoName>& order, const ParamSet<F>& p) {
  AutoImage<F> acc{{gen<F>(Letter::T1), gen<F>(Letter::T0), gen<F>(Letter::Z)}, p, p};
  for (AutoName a : order) {
    AutoImage<F> step = automorphism(a, acc.target);
    for (auto& img : acc.images) img = img.substitute(step.images);
    acc.target = step.target;
  }
  return acc;
}

nlohmann::json to_json(const Report& r) {
  return {{"relation", r.relation}, {"params", r.params}, {"pass", r.pass}, {"residual_terms", r.residual_terms}, {"residual", r.residual}};
}

nlohmann::json to_json(const Reports& rs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) j.push_back(to_json(r));
  return j;
}

bool all_pass(const Reports& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

namespace {

template <class F>
size_t residual(const DiffRefOp<F>& op) {
  if constexpr (Field<F>::exact) {
    return op.nterms();
  } else {
    // numeric backend: count terms above the working-precision floor
    size_t n = 0;
    for (const auto& [key, r] : op.terms())
      if (r.magnitude() > pow10_neg(60)) ++n;
    return n;
  }
}

}  // namespace

template <class F>
Report check_zero(const std::string& relation, const DiffRefOp<F>& op, const ParamSet<F>& p) {
  size_t n = residual(op);
  return {relation, params_json(p), n == 0, n};
}

template <class F>
Report check_equal(const std::string& relation, const DiffRefOp<F>& lhs, const DiffRefOp<F>& rhs,
                   const ParamSet<F>& p) {
  return check_zero(relation, DiffRefOp<F>(lhs - rhs), p);
}

template <class F>
Reports verify_automorphism(const AutoImage<F>& img) {
  Reports out;
  auto rels = defining_relations(img.source);
  for (const auto& [label, rel] : rels) {
    GenExpr<F> mapped = rel.substitute(img.images);
    out.push_back(check_zero(label, mapped.realize(img.target), img.target));
  }
  return out;
}

template <class F>
Reports verify_automorphism(AutoName a, const ParamSet<F>& p) {
  Reports r = verify_automorphism(automorphism(a, p));
  for (auto& x : r) x.relation = std::string(name(a)) + ": " + x.relation;
  return r;
}

template <class F>
Reports verify_conjugation(const std::string& label, const AutoImage<F>& img, const GenExpr<F>& W) {
  Reports out;
  bool same = img.target == img.source;
  out.push_back({label + ": returns to the source parameters", params_json(img.source), same, same ? 0u : 1u});
  if (!same) return out;
  static const char* gname[] = {"T1", "T0", "Z"};
  std::array<GenExpr<F>, 3> gens = {gen<F>(Letter::T1), gen<F>(Letter::T0), gen<F>(Letter::Z)};
  GenExpr<F> Wi = W.inverse();
  for (int i = 0; i < 3; ++i) {
    DiffRefOp<F> lhs = img.images[static_cast<size_t>(i)].realize(img.target);
    DiffRefOp<F> rhs = (Wi * gens[static_cast<size_t>(i)] * W).realize(img.source);
    out.push_back(check_equal(label + " on " + gname[i], lhs, rhs, img.source));
  }
  return out;
}

namespace {

// Z -> -Z identifies H(a,b,c,d) with H(-a,-b,-c,-d); principal square roots in
// the beta2 parameter map only determine the target tuple up to this sign.
AutoImage<Rational> parity(const AutoImage<Rational>& x) {
  AutoImage<Rational> r = x;
  std::array<GenExpr<Rational>, 3> nu = {gen<Rational>(Letter::T1), gen<Rational>(Letter::T0),
                                         GenExpr<Rational>::letter(Letter::Z, Rational(-1))};
  for (auto& img : r.images) img = img.substitute(nu);
  r.target = {Rational(-x.target.a), Rational(-x.target.b), Rational(-x.target.c), Rational(-x.target.d), x.target.q};
  return r;
}

bool negated(const ExactParams& x, const ExactParams& y) {
  return x.q == y.q && x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d;
}

Reports compare_images(const std::string& label, const AutoImage<Rational>& x, AutoImage<Rational> y,
                       bool allow_parity = false) {
  Reports out;
  if (allow_parity && negated(x.target, y.target)) y = parity(y);
  bool same = x.target == y.target;
  out.push_back({label + ": same target parameters", params_json(x.source), same, same ? 0u : 1u});
  if (!same) return out;
  static const char* gname[] = {"T1", "T0", "Z"};
  for (size_t i = 0; i < 3; ++i)
    out.push_back(check_equal(label + " on " + gname[i], x.images[i].realize(x.target),
                              y.images[i].realize(y.target), x.source));
  return out;
}

void append(Reports& out, const Reports& r) { out.insert(out.end(), r.begin(), r.end()); }

}  // namespace

Reports verify_group_relations(const ExactParams& p) {
  using E = GenExpr<Rational>;
  using A = AutoName;
  E T1 = gen<Rational>(Letter::T1);
  Reports out;
  append(out, verify_conjugation("sigma^2 = conjugation by T1", compose_automorphisms({A::sigma, A::sigma}, p), T1));
  append(out, verify_conjugation("(sigma tau)^3 = conjugation by T1^2",
                                 compose_automorphisms({A::tau, A::sigma, A::tau, A::sigma, A::tau, A::sigma}, p),
                                 T1 * T1));
  append(out, compare_images("t4 = tau t3 tau^-1", compose_automorphisms({A::tau_inv, A::t3, A::tau}, p),
                             automorphism(A::t4, p)));
  append(out, compare_images("tau^2", compose_automorphisms({A::tau, A::tau}, p), automorphism(A::tau2, p)));
  append(out, verify_conjugation("tau tau^-1 = id", compose_automorphisms({A::tau_inv, A::tau}, p), E(1)));
  append(out, verify_conjugation("eta^2 = id", compose_automorphisms({A::eta, A::eta}, p), E(1)));
  append(out, verify_conjugation("(sigma eta)^2 = id", compose_automorphisms({A::eta, A::sigma, A::eta, A::sigma}, p),
                                 E(1)));
  append(out, verify_conjugation("(tau eta)^2 = id", compose_automorphisms({A::eta, A::tau, A::eta, A::tau}, p),
                                 E(1)));
  append(out, compare_images("braid relation (up to Z -> -Z)",
                             compose_automorphisms({A::beta1, A::beta2, A::beta1}, p),
                             compose_automorphisms({A::beta2, A::beta1, A::beta2}, p), true));
  AutoImage<Rational> cox = compose_automorphisms({A::beta2, A::beta1, A::beta2, A::beta1, A::beta2, A::beta1}, p);
  if (negated(cox.target, p)) cox = parity(cox);
  append(out, verify_conjugation("(beta1 beta2)^3 = conjugation by T1 (up to Z -> -Z)", cox, T1));
  return out;
}

template <class F>
Reports verify_daha_relations(const ParamSet<F>& p) {
  Reports out;
  for (const auto& [label, rel] : defining_relations(p)) out.push_back(check_zero(label, rel.realize(p), p));
  auto op = [&](Gen g) { return basic_op(g, p); };
  auto comm = [](const DiffRefOp<F>& x, const DiffRefOp<F>& y) { return DiffRefOp<F>(x * y - y * x); };
  out.push_back(check_zero("[T1, X]", comm(op(Gen::T1), op(Gen::X)), p));
  out.push_back(check_zero("[T1, D]", comm(op(Gen::T1), op(Gen::D)), p));
  out.push_back(check_zero("[T0, D]", comm(op(Gen::T0), op(Gen::D)), p));
  DiffRefOp<F> zq = op(Gen::Z) + p.q * op(Gen::Zi);
  out.push_back(check_zero("[T0, Z + q Z^-1]", comm(op(Gen::T0), zq), p));
  auto idn = DiffRefOp<F>::identity(p.q);
  out.push_back(check_equal("T1^-1 T1 = 1", op(Gen::T1i) * op(Gen::T1), idn, p));
  out.push_back(check_equal("T0^-1 T0 = 1", op(Gen::T0i) * op(Gen::T0), idn, p));
  out.push_back(check_equal("Y^-1 Y = 1", op(Gen::Yi) * op(Gen::Y), idn, p));
  // Z^-1 through the Hecke relations
  F iab = inv(F(p.a * p.b));
  DiffRefOp<F> zi = F(-iab) * (op(Gen::T1) * op(Gen::Z) * op(Gen::T1)) - F(inv(p.a) + inv(p.b)) * op(Gen::T1);
  out.push_back(check_equal("Z^-1 = -(ab)^-1 T1 Z T1 - (a^-1+b^-1) T1", zi, op(Gen::Zi), p));
  return out;
}

template <class F>
Reports verify_gaussian_conjugations(const ParamSet<F>& p) {
  const F &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  F qd = q / d;
  ParamSet<F> p_tau{a, b, c, qd, q};
  ParamSet<F> p_t4{a, b, qd, F(q / c), q};
  F cdq = c * d / q;
  std::optional<F> none;
  Reports out;
  DiffRefOp<F> T0 = basic_op(Gen::T0, p);
  out.push_back(check_equal("G_d T0 G_d^-1 = (c/q) Z T0(c,q/d)^-1",
                            conjugate_by_gaussian_ratio(T0, std::optional<F>(d), none),
                            F(c / q) * (basic_op(Gen::Z, p_tau) * basic_op(Gen::T0i, p_tau)), p));
  out.push_back(check_equal("G_{q/d}^-1 T0 G_{q/d} = (c/q) T0(c,q/d)^-1 Z",
                            conjugate_by_gaussian_ratio(T0, none, std::optional<F>(qd)),
                            F(c / q) * (basic_op(Gen::T0i, p_tau) * basic_op(Gen::Z, p_tau)), p));
  auto t4conj = [&](const DiffRefOp<F>& A) { return conjugate_by_gaussian_ratio(A, std::optional<F>(c), std::optional<F>(qd)); };
  out.push_back(check_equal("(G_c/G_{q/d}) T0 (G_{q/d}/G_c) = (cd/q) T0(q/d,q/c)", t4conj(T0),
                            cdq * basic_op(Gen::T0, p_t4), p));
  out.push_back(check_equal("(G_c/G_{q/d}) Y (G_{q/d}/G_c) = (cd/q) Y(a,b,q/d,q/c)", t4conj(basic_op(Gen::Y, p)),
                            cdq * basic_op(Gen::Y, p_t4), p));
  out.push_back(check_equal("(G_c/G_{q/d}) D (G_{q/d}/G_c) = (cd/q) D(a,b,q/d,q/c)", t4conj(basic_op(Gen::D, p)),
                            cdq * basic_op(Gen::D, p_t4), p));
  out.push_back(check_equal("(G_c/G_{q/d}) L (G_{q/d}/G_c) = (cd/q) L(a,b,q/d,q/c)", t4conj(aw_operator(p)),
                            cdq * aw_operator(p_t4), p));
  // generator-level forms for tau, tau^-1 and t4
  static const char* gname[] = {"T1", "T0", "Z"};
  struct Case {
    const char* label;
    AutoName a;
    std::optional<F> numer, denom;
  };
  std::vector<Case> cases = {{"G_d pi(U) G_d^-1 = pi'(tau U)", AutoName::tau, d, none},
                             {"G_{q/d}^-1 pi(U) G_{q/d} = pi'(tau^-1 U)", AutoName::tau_inv, none, qd},
                             {"(G_c/G_{q/d}) pi(U) (G_{q/d}/G_c) = pi'(t4 U)", AutoName::t4, c, qd}};
  std::array<Gen, 3> gens = {Gen::T1, Gen::T0, Gen::Z};
  for (const auto& cs : cases) {
    AutoImage<F> img = automorphism(cs.a, p);
    for (size_t i = 0; i < 3; ++i) {
      DiffRefOp<F> lhs = conjugate_by_gaussian_ratio(basic_op(gens[i], p), cs.numer, cs.denom);
      out.push_back(check_equal(std::string(cs.label) + " for U = " + gname[i], lhs,
                                img.images[i].realize(img.target), p));
    }
  }
  return out;
}

template <class F>
Reports verify_spherical(const ParamSet<F>& p) {
  Reports out;
  auto op = [&](Gen g, const ParamSet<F>& x) { return basic_op(g, x); };
  DiffRefOp<F> e = op(Gen::e, p), T1 = op(Gen::T1, p);
  out.push_back(check_equal("e^2 = e", e * e, e, p));
  DiffRefOp<F> Xe = op(Gen::X, p) * e, De = op(Gen::D, p) * e;
  out.push_back(check_equal("[T1, X e] = 0", T1 * Xe, Xe * T1, p));
  out.push_back(check_equal("[T1, D e] = 0", T1 * De, De * T1, p));
  // eta images, realized at the inverted tuple
  AutoImage<F> eta = automorphism(AutoName::eta, p);
  const ParamSet<F>& t = eta.target;
  using E = GenExpr<F>;
  E Y = gen<F>(Letter::T1) * gen<F>(Letter::T0);
  E Yi = Y.inverse();
  E D = Y + F(p.a * p.b * p.c * p.d / p.q) * Yi;
  E X = gen<F>(Letter::Z) + gen<F>(Letter::Zi);
  auto image = [&](const E& x) { return x.substitute(eta.images).realize(t); };
  out.push_back(check_equal("eta(Y) = T1^-1 Y^-1 T1", image(Y),
                            op(Gen::T1i, t) * op(Gen::Yi, t) * op(Gen::T1, t), p));
  // q(abcd)^-1 read in the target parameters (q' = 1/q, a' = 1/a, ...)
  F scal = t.q / (t.a * t.b * t.c * t.d);
  out.push_back(check_equal("eta(D) = q(abcd)^-1 D", image(D), scal * op(Gen::D, t), p));
  out.push_back(check_equal("eta(X) = X", image(X), op(Gen::X, t), p));
  return out;
}

#define AWDAHA_INSTANTIATE(F)                                                                       \
  template DiffRefOp<F> basic_op(Gen, const ParamSet<F>&);                                          \
  template DiffRefOp<F> aw_operator(const ParamSet<F>&);                                            \
  template class GenExpr<F>;                                                                        \
  template std::vector<std::pair<std::string, GenExpr<F>>> defining_relations(const ParamSet<F>&);  \
  template AutoImage<F> automorphism(AutoName, const ParamSet<F>&);                                 \
  template AutoImage<F> compose_automorphisms(const std::vector<AutoName>&, const ParamSet<F>&);    \
  template Report check_zero(const std::string&, const DiffRefOp<F>&, const ParamSet<F>&);          \
  template Report check_equal(const std::string&, const DiffRefOp<F>&, const DiffRefOp<F>&,         \
                              const ParamSet<F>&);                                                  \
  template Reports verify_automorphism(const AutoImage<F>&);                                        \
  template Reports verify_automorphism(AutoName, const ParamSet<F>&);                               \
  template Reports verify_conjugation(const std::string&, const AutoImage<F>&, const GenExpr<F>&); \
  template Reports verify_daha_relations(const ParamSet<F>&);                                       \
  template Reports verify_gaussian_conjugations(const ParamSet<F>&);                                \
  template Reports verify_spherical(const ParamSet<F>&);

AWDAHA_INSTANTIATE(Rational)
AWDAHA_INSTANTIATE(Complex)

}  // namespace awdaha
