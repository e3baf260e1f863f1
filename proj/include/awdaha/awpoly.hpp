#pragma once

// Askey-Wilson polynomials: symmetric, anti-symmetric, T0-(anti)symmetric and
// non-symmetric families, built by direct summation of the terminating series.

#include "awdaha/daha.hpp"
#include "awdaha/laurent.hpp"
#include "awdaha/params.hpp"

namespace awdaha {

// q^{-n} + q^{n-1} abcd
template <class F>
F aw_lambda(int n, const ParamSet<F>& p);

// 4phi3(q^-n, q^{n-1}abcd, az, a/z; ab, ac, ad; q, q), normalized by E(a) = 1.
template <class F>
LaurentPoly<F> aw_E_plus(int n, const ParamSet<F>& p);

// Same series evaluated at a point, without building the polynomial.
template <class F>
F aw_E_plus_value(int n, const F& z, const ParamSet<F>& p);

// Classical normalization, as a finite sum with no denominators besides (q;q)_k.
template <class F>
LaurentPoly<F> aw_p(int n, const ParamSet<F>& p);

// Monic in z: p_n / (q^{n-1}abcd; q)_n.
template <class F>
LaurentPoly<F> aw_P_plus(int n, const ParamSet<F>& p);

enum class AntiVariant { P_minus, E_minus, P_dagger_minus, P_dagger_plus };
const char* name(AntiVariant v);

// P_minus, E_minus and P_dagger_minus need n >= 1. The dagger variants use
// sqrt(q) (NotASquareError in the exact backend unless q is a square).
template <class F>
LaurentPoly<F> aw_antisym(int n, const ParamSet<F>& p, AntiVariant v);

enum class NonsymRoute { ab, dagger };

// Monic Y-eigenpolynomial P_n, n in Z, from either pair of closed forms.
template <class F>
LaurentPoly<F> aw_nonsym_P(int n, const ParamSet<F>& p, NonsymRoute route = NonsymRoute::ab);

// E_n = P_n / P_n(1/a).
template <class F>
LaurentPoly<F> aw_nonsym_E(int n, const ParamSet<F>& p, NonsymRoute route = NonsymRoute::ab);

// E_{+-n} as E_n^+ minus a multiple of E_n^-.
template <class F>
LaurentPoly<F> aw_nonsym_E_explicit(int n, const ParamSet<F>& p);
template <class F>
F aw_nonsym_E_value(int n, const F& z, const ParamSet<F>& p);

// The constant C_n with P_n = C_n E_n.
template <class F>
F aw_nonsym_normalization(int n, const ParamSet<F>& p);

// f(q^{1/2} z) - f(q^{-1/2} z)
template <class F>
LaurentPoly<F> delta_q(const LaurentPoly<F>& f, const F& q);

// Coefficient comparison. Exact backend: the difference must vanish. Numeric
// backend: relative tolerance against the largest coefficient.
template <class F>
Report compare_poly(const std::string& relation, const LaurentPoly<F>& lhs, const LaurentPoly<F>& rhs,
                    const ParamSet<F>& p, int digits = 50);

// Identity checks over the given tuple. Each takes the tuple as is; the
// caller supplies tuples of the required shape (see the comments).
struct PolyCheckLimits {
  int eigen_n = 12;
  int perm_n = 8;
  int sears_n = 10;
  int dual_n = 6;
  int t4_gap = 4;
  int t4_n = 8;
  int delta_n = 8;
  int shift_n = 6;
  int nonsym_n = 8;
  int route_n = 6;
  int nonsym_dual_n = 5;
  int digits = 50;
};

// L-eigen, agreement of the two normalizations, monic leading term, S4
// symmetry of p_n, the a<->b transformation, E(a^{+-1}) = 1.
template <class F>
Reports verify_symmetric_polys(const ParamSet<F>& p, const PolyCheckLimits& lim = {});
// Needs abcd/q to be a square (rational square in the exact backend).
template <class F>
Reports verify_poly_duality(const ParamSet<F>& p, const PolyCheckLimits& lim = {});
// Uses (a, b, c) and q of p; d is replaced by q^{m-n+1}/c for each pair (m, n).
template <class F>
Reports verify_t4_polys(const ParamSet<F>& p, const PolyCheckLimits& lim = {});
// Needs sqrt(q).
template <class F>
Reports verify_half_shift_polys(const ParamSet<F>& p, const PolyCheckLimits& lim = {});
// Y-eigen, anti-symmetric characterizations, both explicit forms of E_n,
// a<->b and c<->d.
template <class F>
Reports verify_nonsym_polys(const ParamSet<F>& p, const PolyCheckLimits& lim = {});
// Route agreement and the T0-(anti)symmetric characterizations; needs sqrt(q).
template <class F>
Reports verify_nonsym_routes(const ParamSet<F>& p, const PolyCheckLimits& lim = {});
// Needs abcd/q to be a square.
template <class F>
Reports verify_nonsym_duality(const ParamSet<F>& p, const PolyCheckLimits& lim = {});

}  // namespace awdaha
