#pragma once

// Scalar fields. Rational is the exact backend (GMP), Complex the numeric one
// (MPFR at a fixed working precision). Fixed precision keeps the numeric type
// free of process-wide state so it is safe inside OpenMP regions.

#include <gmpxx.h>

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <string>

#include "awdaha/errors.hpp"

namespace awdaha {

inline constexpr unsigned kWorkingDigits = 140;
inline constexpr int kMaxDigits = 100;

using Rational = mpq_class;
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kWorkingDigits>,
    boost::multiprecision::et_off>;
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::mpfr_float_backend<kWorkingDigits>>,
    boost::multiprecision::et_off>;

Real to_real(const Rational& x);
Complex to_complex(const Rational& x);

// 10^-k as a Real.
Real pow10_neg(int k);

// Exact square root; NotASquareError if x is not a rational square,
// BranchCutError if x < 0.
Rational exact_sqrt(const Rational& x);
// Principal branch; BranchCutError on (-inf, 0].
Complex principal_sqrt(const Complex& x);

Rational parse_rational(const std::string& s);  // "p/q", "-3", "0.25"
Complex parse_complex(const std::string& s);    // "1.5", "1/3", "0.2+0.1i", "(0.2,0.1)"

std::string to_string(const Rational& x);
std::string to_string(const Complex& x, int digits = 30);
std::string to_string(const Real& x, int digits = 30);

template <class F>
struct Field;

template <>
struct Field<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational sqrt(const Rational& x) { return exact_sqrt(x); }
  static Real magnitude(const Rational& x) { return abs(to_real(x)); }
  static std::string str(const Rational& x) { return to_string(x); }
  static Rational from_rational(const Rational& x) { return x; }
};

template <>
struct Field<Complex> {
  static constexpr bool exact = false;
  static bool is_zero(const Complex& x) { return x.real() == 0 && x.imag() == 0; }
  static Complex sqrt(const Complex& x) { return principal_sqrt(x); }
  static Real magnitude(const Complex& x) { return abs(x); }
  static std::string str(const Complex& x) { return to_string(x); }
  static Complex from_rational(const Rational& x) { return to_complex(x); }
};

template <class F>
F ipow(const F& x, long n) {
  if (n < 0) {
    if (Field<F>::is_zero(x)) throw PoleError("zero raised to a negative power");
    F inv = F(1) / x;
    return ipow(inv, -n);
  }
  F result(1), base(x);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

}  // namespace awdaha
