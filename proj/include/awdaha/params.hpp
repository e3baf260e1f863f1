#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "awdaha/field.hpp"

namespace awdaha {

template <class F>
struct ParamSet {
  F a, b, c, d, q;

  std::array<F, 4> tuple() const { return {a, b, c, d}; }
  bool operator==(const ParamSet&) const = default;
};

using ExactParams = ParamSet<Rational>;
using NumParams = ParamSet<Complex>;

struct HeckeParams {
  Complex k1, u1, u0, k0;
};

enum class ParamMap { t1, t2, t3, t4, t0, t0hat, sigma, tau, tau_inv, eta, beta2, swap_ab, swap_cd };

const char* name(ParamMap m);
ParamMap param_map_from_name(const std::string& s);

struct Diagnostic {
  std::string check;
  bool pass;
  std::string detail;
};
using Diagnostics = std::vector<Diagnostic>;
nlohmann::json to_json(const Diagnostics& d);
bool all_pass(const Diagnostics& d);

// ã = sqrt(abcd/q), b̃ = ab/ã, c̃ = ac/ã, d̃ = ad/ã.
template <class F>
ParamSet<F> dual_params(const ParamSet<F>& p);

HeckeParams to_hecke(const NumParams& p);
NumParams from_hecke(const HeckeParams& h, const Complex& q);

template <class F>
ParamSet<F> apply_param_map(ParamMap m, const ParamSet<F>& p);

// Never throws. Distinctness of {a,b,c,d,1/a,...}, the real-part conditions,
// and the position of abcd/q relative to the branch cut.
template <class F>
Diagnostics check_generic(const ParamSet<F>& p);

// Stronger condition used by the samplers: q^k m != ±1 for every monomial m in
// a,b,c,d with exponents in {-1,0,1} and every |k| <= kmax, plus ab != 1.
bool strongly_generic(const ExactParams& p, int kmax = 16);
bool strongly_generic(const NumParams& p, int kmax = 16, int digits = 50);

template <class F>
ParamSet<Complex> to_numeric(const ParamSet<F>& p);

template <class F>
nlohmann::json params_json(const ParamSet<F>& p);

// Samplers. All draws are deterministic in the engine state.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_u64() { return rng_(); }
  long uniform_int(long lo, long hi);  // inclusive
  double uniform01();

  Rational small_rational(int max_num = 9, int max_den = 9, bool allow_negative = true);
  Rational base_q();

  // Generic rational tuple.
  ExactParams generic();
  // d = q r^2/(abc), so ã = r is rational.
  ExactParams square_compatible();
  // ab, cd and q are rational squares; closed under the automorphism catalog.
  ExactParams braid_compatible();
  // Generic tuple with q = s^2.
  ExactParams square_q();

  // Numeric sampling in the admissible region: q real in [0.2,0.6], parameter
  // moduli in [0.3,3] with small arguments, so a, b, c, d, ab, a/b, cd, c/d
  // all have positive real part.
  NumParams numeric(double mod_lo = 0.3, double mod_hi = 3.0, double max_arg = 0.3);
  Complex complex_point(double mod_lo, double mod_hi, double max_arg = 3.14159);

 private:
  std::mt19937_64 rng_;
};

// Orbit of p under the group generated by the given parameter maps (BFS).
std::vector<ExactParams> param_orbit(const ExactParams& p, const std::vector<ParamMap>& gens);

}  // namespace awdaha
