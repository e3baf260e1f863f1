#include "awdaha/field.hpp"

#include <cctype>
#include <sstream>

namespace awdaha {

Real to_real(const Rational& x) {
  Real r;
  mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

Complex to_complex(const Rational& x) { return Complex(to_real(x), Real(0)); }

Real pow10_neg(int k) { return pow(Real(10), -k); }

Rational exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) throw BranchCutError("square root of negative rational " + to_string(x));
  if (sgn(x) == 0) return Rational(0);
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    throw NotASquareError(to_string(x) + " is not the square of a rational");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Complex principal_sqrt(const Complex& x) {
  if (x.imag() == 0 && x.real() <= 0) {
    if (x.real() == 0) return Complex(0);
    throw BranchCutError("square root radicand on the negative real axis");
  }
  return sqrt(x);
}

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Real parse_real(const std::string& s) {
  if (s.find('/') != std::string::npos) return to_real(parse_rational(s));
  if (s.empty()) throw DomainError("empty number");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw DomainError("cannot parse number '" + s + "'");
  }
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw DomainError("empty rational");
  auto dot = s.find('.');
  auto exp = s.find_first_of("eE");
  if (dot == std::string::npos && exp == std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0 || s.find_first_not_of("+-0123456789/") != std::string::npos)
      throw DomainError("cannot parse rational '" + s + "'");
    if (s.find('/') != std::string::npos && sgn(r.get_den()) == 0)
      throw DomainError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }
  // Decimal literal: read it exactly as a terminating decimal.
  std::string mant = exp == std::string::npos ? s : s.substr(0, exp);
  long e10 = exp == std::string::npos ? 0 : std::stol(s.substr(exp + 1));
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant = mant.substr(1);
  }
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (char ch : mant) {
    if (ch == '.') {
      if (seen_dot) throw DomainError("cannot parse rational '" + s + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      if (seen_dot) ++frac;
    } else {
      throw DomainError("cannot parse rational '" + s + "'");
    }
  }
  if (digits.empty()) throw DomainError("cannot parse rational '" + s + "'");
  mpz_class num(digits, 10), ten(10), scale;
  long shift = e10 - frac;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift < 0 ? Rational(num, scale) : Rational(num * scale);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

Complex parse_complex(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw DomainError("empty complex number");
  if (s.front() == '(' && s.back() == ')') {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw DomainError("cannot parse complex '" + s + "'");
    return Complex(parse_real(trim(s.substr(1, comma - 1))),
                   parse_real(trim(s.substr(comma + 1, s.size() - comma - 2))));
  }
  if (s.back() != 'i') return Complex(parse_real(s), Real(0));
  // a+bi, a-bi, bi
  std::string body = s.substr(0, s.size() - 1);
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string t) {
    if (t == "" || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    return parse_real(t);
  };
  if (split == std::string::npos) return Complex(Real(0), imag_of(body));
  return Complex(parse_real(body.substr(0, split)), imag_of(body.substr(split)));
}

std::string to_string(const Rational& x) { return x.get_str(10); }

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string to_string(const Complex& x, int digits) {
  std::string re = to_string(x.real(), digits);
  if (x.imag() == 0) return re;
  std::string im = to_string(abs(x.imag()), digits);
  return re + (x.imag() < 0 ? "-" : "+") + im + "i";
}

}  // namespace awdaha
