#pragma once

// Askey-Wilson functions: the symmetric function E+ through its series and
// kernel representations, the non-symmetric function E, the companion F, the
// kernel weights and numeric application of Y, L and T1.

#include <functional>
#include <string>
#include <utility>

#include "awdaha/daha.hpp"
#include "awdaha/laurent.hpp"
#include "awdaha/params.hpp"
#include "awdaha/qseries.hpp"

namespace awdaha {

enum class Method { W87, SUM4PHI3, KERNEL, SUSLOV, ISMAIL_RAHMAN };
enum class NsMethod { NS_KERNEL, NS_DECOMP };

const char* name(Method m);
const char* name(NsMethod m);
Method method_from_name(const std::string& s);
NsMethod ns_method_from_name(const std::string& s);

struct FuncValue {
  Complex value;
  Real est_error = 0;  // absolute
  int terms = 0;
};

// Domain predicate of each representation. KERNEL is always valid away from
// the Gaussian poles of its prefactor.
bool method_valid(Method m, const Complex& gamma, const Complex& z, const NumParams& p,
                  const SeriesConfig& cfg = {});

// E+(gamma; z; p). MethodDomainError if the method's predicate fails.
FuncValue aw_function_ex(const Complex& gamma, const Complex& z, const NumParams& p,
                         Method m = Method::KERNEL, SeriesConfig cfg = {});
Complex aw_function(const Complex& gamma, const Complex& z, const NumParams& p,
                    Method m = Method::KERNEL, SeriesConfig cfg = {});

// phi_gamma(z) = E+ / (bc, qa/d, q/(ad); q)_inf and
// phi^S = (qabc/d; q)_inf / (qb/d, qc/d; q)_inf * phi.
enum class Normalization { E_plus, phi, phi_S };
Complex normalization_factor(Normalization n, const NumParams& p, const SeriesConfig& cfg = {});
Complex aw_function_normalized(const Complex& gamma, const Complex& z, const NumParams& p, Normalization n,
                               Method m = Method::KERNEL, SeriesConfig cfg = {});

// Non-symmetric function. NS_DECOMP evaluates its two symmetric pieces with
// `sym`; the default keeps it independent of the kernel expansion.
FuncValue nonsym_aw_function_ex(const Complex& gamma, const Complex& z, const NumParams& p,
                                NsMethod m = NsMethod::NS_KERNEL, SeriesConfig cfg = {},
                                Method sym = Method::SUM4PHI3);
Complex nonsym_aw_function(const Complex& gamma, const Complex& z, const NumParams& p,
                           NsMethod m = NsMethod::NS_KERNEL, SeriesConfig cfg = {},
                           Method sym = Method::SUM4PHI3);

// F(gamma; z) = E+(gamma; z; p) - a(1 - ã gamma)/((1-ab)(1-ac)(1-ad))
//   * z^-1 (c - z)(d - z) E+(gamma; q^{-1/2} z; q^{1/2} p).
Complex f_function(const Complex& gamma, const Complex& z, const NumParams& p, SeriesConfig cfg = {},
                   Method sym = Method::KERNEL);

// Coefficient of E_m+ (x) E_m+ in the symmetric kernel expansion.
template <class F>
F kernel_coefficient(int m, const ParamSet<F>& p);
// Coefficients of E_{-m} (x) E_{-m} and E_m (x) E_m in the non-symmetric one.
template <class F>
std::pair<F, F> nonsym_kernel_coefficient(int m, const ParamSet<F>& p);

// The pieces of the kernel weight: the Gaussian ratio, the N+ ratio, their
// product, and the two C-ratios. `reassembles` records that the products
// equal kernel_coefficient and nonsym_kernel_coefficient (exactly in the exact
// backend).
template <class F>
struct WeightBreakdown {
  int m = 0;
  F gaussian_ratio, n_ratio, product, c_minus, c_plus;
  F sym_coefficient, minus_coefficient, plus_coefficient;
  bool reassembles = false;
};
template <class F>
WeightBreakdown<F> appendix_a_weight(int m, const ParamSet<F>& p);

// Partial sum through m = M of the expansion of (dz, d/z; q)_inf in E_m+(z; p).
Complex inverse_gaussian_expansion(const Complex& z, const NumParams& p, int M, const SeriesConfig& cfg = {});

// Function values at the shift points z^{+-1} q^k.
using FuncSample = std::function<Complex(const Complex&)>;

// SingularPointError when z^2 is within tolerance of 1, q or 1/q.
Complex apply_Y_numeric(const NumParams& p, const FuncSample& f, const Complex& z, const SeriesConfig& cfg = {});
Complex apply_L_numeric(const NumParams& p, const FuncSample& f, const Complex& z, const SeriesConfig& cfg = {});
Complex apply_T1_numeric(const NumParams& p, const FuncSample& f, const Complex& z, const SeriesConfig& cfg = {});

// Values of E+ / (G_{q/d}(z) G_{q/d̃}(gamma)) along z_k = z_pole (1 + eps_k),
// eps_k = 10^{-k}, k = 1..steps. Heuristic; callers log it.
std::vector<Real> regularity_probe(const Complex& gamma, const Complex& z_pole, const NumParams& p, int steps,
                                   const SeriesConfig& cfg = {});

// Relative deviation |x - y| / max(|x|, |y|, 1e-300).
Real rel_dev(const Complex& x, const Complex& y);

// The polynomial F(gamma; z) at gamma = q^n ã (minus = true) or gamma =
// q^-n ã^-1 (minus = false), n >= 1, from E_n+ and E_{n-1}+ at the half-shifted
// tuple; needs sqrt(q). The second function gives the constant K with
// F = K P_{-n} (respectively F = K P_n).
template <class F>
LaurentPoly<F> f_polynomial(int n, const ParamSet<F>& p, bool minus);
template <class F>
F f_polynomial_constant(int n, const ParamSet<F>& p, bool minus);

struct EvalPoint {
  Complex gamma, z;
};

// Draws (gamma, z) with moduli in [0.5, 2] until every method in `need` is
// valid at p. DomainError after 1000 attempts.
EvalPoint sample_point(Sampler& s, const NumParams& p, const std::vector<Method>& need, const SeriesConfig& cfg = {});

// Numeric identity checks at one point. The tolerance is 10^-(digits-10),
// relative, unless tol > 0 overrides it. Every report carries gamma and z in
// its params.
struct FuncCheckConfig {
  int digits = 50;
  double tol = 0;
  int k13_n = 6;
  int k96_n = 5;
};

// Pairwise agreement of W87, SUM4PHI3, KERNEL, SUSLOV (and ISMAIL_RAHMAN when
// valid).
Reports verify_func_crosscheck(const EvalPoint& pt, const NumParams& p, const FuncCheckConfig& c = {});
// Normalizations, polynomial reduction, duality, argument symmetries, the
// L-eigen equation, the t4 and t2 images, b<->c, and a c<->d witness.
Reports verify_func_symmetries(const EvalPoint& pt, const NumParams& p, const FuncCheckConfig& c = {});
// The non-symmetric function: both methods, normalizations, polynomial
// reductions, duality, the two symmetries and the characterizing equations.
Reports verify_nonsym_func(const EvalPoint& pt, const NumParams& p, const FuncCheckConfig& c = {});
// Shift lemmas, Y on the two building blocks, Y-eigen equation of F, and
// the ratio F/E: independent of z at fixed gamma, but not constant (witness
// between pt and pt2, which must differ in gamma).
Reports verify_appendix_b(const EvalPoint& pt, const EvalPoint& pt2, const NumParams& p,
                          const FuncCheckConfig& c = {});
// Exact: F at the two polynomial points against the stated constants; q must
// be a rational square.
Reports verify_f_polynomials(const ExactParams& p, int nmax = 4);
// Exact: weight pieces reassemble the kernel coefficients for m <= mmax.
Reports verify_appendix_a(const ExactParams& p, int mmax = 10);
// The 6W5 evaluation of 1 at (z, p); needs |q/(ad)| < 1.
Report verify_w65_evaluation(const Complex& z, const NumParams& p, const FuncCheckConfig& c = {});
// Inverse Gaussian expansion against the product at truncation M, the
// Jacobi-triple-product specialization, and vanishing on the zero lattice.
Reports verify_inverse_gaussian(const Complex& z, const NumParams& p, int M, const Real& tol);

}  // namespace awdaha
