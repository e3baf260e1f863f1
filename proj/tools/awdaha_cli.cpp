// awdaha: verification suites, function evaluation and tables.
//
//   awdaha verify --suite daha-relations --samples 50 --seed 7
//   awdaha eval --fn Eplus --params 0.7,0.4,0.5,1.3 --q 0.35 --gamma atilde --z 0.7
//   awdaha table --kind orbit --params 2/3,3/5,5/7,7/4 --q 1/3
//
// Exit codes: 0 success, 1 check failure or evaluation error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "awdaha/awfunc.hpp"
#include "awdaha/awpoly.hpp"
#include "awdaha/suites.hpp"

using namespace awdaha;

namespace {

struct Args {
  std::string suite = "all", fn, kind, params, q, gamma, z, method, which, format = "json", out;
  std::string m = "0", n = "0";
  int samples = 5, digits = 50;
  std::uint64_t seed = 1;
  double tol = 0;
  bool no_timing = false;
};

ParamSpec param_spec(const Args& a) {
  ParamSpec s;
  if (!a.q.empty()) s.q = a.q;
  if (a.params.empty()) {
    if (s.q) throw ConfigError("--q needs --params");
    return s;
  }
  std::array<std::string, 4> t;
  std::stringstream ss(a.params);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 4) throw ConfigError("--params takes four entries a,b,c,d");
    t[i++] = item;
  }
  if (i != 4) throw ConfigError("--params takes four entries a,b,c,d");
  s.tuple = t;
  return s;
}

// "lo..hi" or a single integer.
std::pair<int, int> parse_range(const std::string& s) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw ConfigError("bad range: " + s);
      return {v, v};
    }
    int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
    if (lo > hi) throw ConfigError("empty range: " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("bad range: " + s);
  }
}

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw ConfigError("cannot open " + a.out);
  f << text;
}

const char* error_kind(const Error& e) {
  if (dynamic_cast<const MethodDomainError*>(&e)) return "MethodDomainError";
  if (dynamic_cast<const PoleInDenominatorError*>(&e)) return "PoleInDenominatorError";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const DivergenceError*>(&e)) return "DivergenceError";
  if (dynamic_cast<const MaxTermsExceeded*>(&e)) return "MaxTermsExceeded";
  if (dynamic_cast<const SingularPointError*>(&e)) return "SingularPointError";
  if (dynamic_cast<const ZeroArgument*>(&e)) return "ZeroArgument";
  if (dynamic_cast<const NotASquareError*>(&e)) return "NotASquareError";
  if (dynamic_cast<const BranchCutError*>(&e)) return "BranchCutError";
  if (dynamic_cast<const DegenerateParamsError*>(&e)) return "DegenerateParamsError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  return "Error";
}

// ---- verify

int cmd_verify(const Args& a) {
  SuiteOptions o;
  o.samples = a.samples;
  o.seed = a.seed;
  o.digits = a.digits;
  o.tol = a.tol;
  o.timing = !a.no_timing;
  ParamSpec spec = param_spec(a);
  if (spec.tuple) {
    Sampler s(a.seed);
    o.params = resolve_params(spec, s);
  }
  if (a.format != "json" && a.format != "text") throw ConfigError("--format must be json or text");
  Suite suite = suite_from_name(a.suite);
  SuiteResult r = run_suite(suite, o);
  emit(a, a.format == "json" ? r.to_json(o, a.suite).dump(2) + "\n" : r.to_text());
  return r.pass() ? 0 : 1;
}

// ---- eval

template <class Fn>
auto parse_name(Fn fn, const std::string& s) {
  try {
    return fn(s);
  } catch (const Error&) {
    throw ConfigError("unknown method: " + s);
  }
}

// Parameters of an evaluation: the given tuple or a draw from the seed.
ExactParams exact_params(const Args& a) {
  ParamSpec spec = param_spec(a);
  Sampler s(a.seed);
  return spec.tuple ? resolve_params(spec, s) : s.generic();
}

NumParams numeric_params(const Args& a, Sampler& s) {
  ParamSpec spec = param_spec(a);
  if (!spec.tuple) return s.numeric();
  NumParams p = to_numeric(resolve_params(spec, s));
  for (const auto& d : check_generic(p))
    if (!d.pass) throw ConfigError("parameters not admissible for function evaluation: " + d.detail);
  return p;
}

// Argument value; accepts the tokens a, 1/a, atilde, 1/atilde.
Complex point(const std::string& s, const NumParams& p) {
  Complex at = dual_params(p).a;
  if (s == "a") return p.a;
  if (s == "1/a") return Complex(1) / p.a;
  if (s == "atilde") return at;
  if (s == "1/atilde") return Complex(1) / at;
  try {
    return parse_complex(s);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse point: " + s);
  }
}

int cmd_eval(const Args& a) {
  static const std::vector<std::string> fns = {"Eplus", "E", "F", "phi", "Eplus_poly", "nonsym_poly", "kernel_coeff"};
  if (std::find(fns.begin(), fns.end(), a.fn) == fns.end()) throw ConfigError("unknown --fn: " + a.fn);
  if (a.digits < 12 || a.digits > kMaxDigits) throw ConfigError("--digits out of range");
  nlohmann::json row;
  row["fn"] = a.fn;

  if (a.fn == "kernel_coeff" || a.fn == "Eplus_poly" || a.fn == "nonsym_poly") {
    ExactParams p = exact_params(a);
    row["params"] = params_json(p);
    if (a.fn == "kernel_coeff") {
      auto [m, m_hi] = parse_range(a.m);
      if (m != m_hi || m < 0) throw ConfigError("--m must be a single non-negative integer");
      std::string which = a.which.empty() ? "sym" : a.which;
      row["m"] = m;
      row["which"] = which;
      if (which == "sym") {
        row["value"] = to_string(kernel_coefficient(m, p));
      } else if (which == "nonsym") {
        auto [mi, pl] = nonsym_kernel_coefficient(m, p);
        row["value"] = {to_string(mi), to_string(pl)};
      } else {
        throw ConfigError("--which must be sym or nonsym");
      }
    } else {
      auto [n, n_hi] = parse_range(a.n);
      if (n != n_hi) throw ConfigError("--n must be a single integer");
      if (a.fn == "Eplus_poly" && n < 0) throw ConfigError("--n must be non-negative for Eplus_poly");
      LaurentPoly<Rational> poly = a.fn == "Eplus_poly" ? aw_E_plus(n, p) : aw_nonsym_E(n, p);
      row["n"] = n;
      row["coefficients"] = poly.to_json();
      if (!a.z.empty()) {
        Rational z;
        try {
          z = parse_rational(a.z);
        } catch (const std::exception&) {
          throw ConfigError("polynomial values need a rational --z: " + a.z);
        }
        row["z"] = to_string(z);
        row["value"] = to_string(poly.eval(z));
      }
    }
  } else {
    Sampler s(a.seed);
    NumParams p = numeric_params(a, s);
    SeriesConfig cfg = SeriesConfig::for_digits(a.digits);
    EvalPoint pt = (a.gamma.empty() || a.z.empty()) ? sample_point(s, p, {}) : EvalPoint{};
    Complex g = a.gamma.empty() ? pt.gamma : point(a.gamma, p);
    Complex z = a.z.empty() ? pt.z : point(a.z, p);
    FuncValue v;
    std::string method;
    if (a.fn == "Eplus" || a.fn == "phi") {
      Method m = a.method.empty() ? Method::KERNEL : parse_name(method_from_name, a.method);
      method = name(m);
      v = aw_function_ex(g, z, p, m, cfg);
      if (a.fn == "phi") {
        Complex f = normalization_factor(Normalization::phi, p, cfg);
        v.value *= f;
        v.est_error *= abs(f);
      }
    } else if (a.fn == "E") {
      NsMethod m = a.method.empty() ? NsMethod::NS_KERNEL : parse_name(ns_method_from_name, a.method);
      method = name(m);
      v = nonsym_aw_function_ex(g, z, p, m, cfg);
    } else {
      method = "KERNEL";
      v.value = f_function(g, z, p, cfg);
      v.est_error = abs(v.value) * pow10_neg(a.digits);
    }
    row["method"] = method;
    row["gamma"] = to_string(g, a.digits);
    row["z"] = to_string(z, a.digits);
    row["params"] = params_json(p);
    row["value_re"] = to_string(Real(v.value.real()), a.digits);
    row["value_im"] = to_string(Real(v.value.imag()), a.digits);
    row["est_error"] = to_string(v.est_error, 6);
  }
  emit(a, row.dump(2) + "\n");
  return 0;
}

// ---- table

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
  return os.str();
}

std::string render(const Args& a, const std::string& kind, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows, const nlohmann::json& extra) {
  if (a.format == "csv" || a.format == "text") return csv(header, rows);
  if (a.format != "json") throw ConfigError("--format must be json, csv or text");
  nlohmann::json j = extra;
  j["kind"] = kind;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o;
    for (size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
    j["rows"].push_back(o);
  }
  return j.dump(2) + "\n";
}

int cmd_table(const Args& a) {
  ExactParams p = exact_params(a);
  nlohmann::json extra{{"params", params_json(p)}};
  std::vector<std::vector<std::string>> rows;
  if (a.kind == "kernel-coefficients") {
    auto [lo, hi] = parse_range(a.m == "0" ? "0..10" : a.m);
    if (lo < 0) throw ConfigError("kernel coefficients need m >= 0");
    std::string which = a.which.empty() ? "sym" : a.which;
    if (which != "sym" && which != "nonsym") throw ConfigError("--which must be sym or nonsym");
    for (int m = lo; m <= hi; ++m) {
      if (which == "sym") {
        rows.push_back({std::to_string(m), to_string(kernel_coefficient(m, p))});
      } else {
        auto [mi, pl] = nonsym_kernel_coefficient(m, p);
        rows.push_back({std::to_string(m), to_string(mi), to_string(pl)});
      }
    }
    extra["which"] = which;
    std::vector<std::string> header = which == "sym" ? std::vector<std::string>{"m", "coefficient"}
                                                     : std::vector<std::string>{"m", "minus", "plus"};
    emit(a, render(a, a.kind, header, rows, extra));
  } else if (a.kind == "poly-coeffs") {
    auto [lo, hi] = parse_range(a.n);
    std::string which = a.which.empty() ? "sym" : a.which;
    if (which != "sym" && which != "nonsym") throw ConfigError("--which must be sym or nonsym");
    if (which == "sym" && lo < 0) throw ConfigError("symmetric polynomials need n >= 0");
    for (int n = lo; n <= hi; ++n) {
      LaurentPoly<Rational> poly = which == "sym" ? aw_E_plus(n, p) : aw_nonsym_E(n, p);
      for (const auto& [e, c] : poly.to_json().items())
        rows.push_back({std::to_string(n), e, c.get<std::string>()});
    }
    extra["which"] = which;
    emit(a, render(a, a.kind, {"n", "power", "coefficient"}, rows, extra));
  } else if (a.kind == "orbit") {
    std::vector<ParamMap> gens;
    std::stringstream ss(a.which.empty() ? "t0hat,t2,t3,t4" : a.which);
    std::string g;
    while (std::getline(ss, g, ',')) {
      try {
        gens.push_back(param_map_from_name(g));
      } catch (const Error&) {
        throw ConfigError("unknown parameter map: " + g);
      }
    }
    auto orbit = param_orbit(p, gens);
    for (const auto& x : orbit) rows.push_back({to_string(x.a), to_string(x.b), to_string(x.c), to_string(x.d), to_string(x.q)});
    extra["generators"] = a.which.empty() ? "t0hat,t2,t3,t4" : a.which;
    extra["size"] = orbit.size();
    emit(a, render(a, a.kind, {"a", "b", "c", "d", "q"}, rows, extra));
  } else {
    throw ConfigError("unknown --kind: " + a.kind);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double affine Hecke algebra of rank one and Askey-Wilson functions"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* c) {
    c->add_option("--params", a.params, "a,b,c,d as p/q or decimals; d may be r-square");
    c->add_option("--q", a.q, "base q (default 1/3 when --params is given)");
    c->add_option("--seed", a.seed, "sampler seed");
    c->add_option("--digits", a.digits, "working accuracy in decimal digits");
    c->add_option("--format", a.format, "json, text (verify) or csv (table)");
    c->add_option("--out", a.out, "write the output to a file");
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", a.suite, "suite name or all");
  verify->add_option("--samples", a.samples, "samples per suite");
  verify->add_option("--tol", a.tol, "relative tolerance of numeric checks (default 10^-(digits-10))");
  verify->add_flag("--no-timing", a.no_timing, "report runtime_ms = 0 so reports are byte-identical");

  auto* eval = app.add_subcommand("eval", "evaluate a function or polynomial");
  common(eval);
  eval->add_option("--fn", a.fn, "Eplus, E, F, phi, Eplus_poly, nonsym_poly, kernel_coeff")->required();
  eval->add_option("--gamma", a.gamma, "spectral variable (complex, or a, atilde, 1/a, 1/atilde)");
  eval->add_option("--z", a.z, "geometric variable (same tokens)");
  eval->add_option("--m", a.m, "kernel coefficient index");
  eval->add_option("--n", a.n, "polynomial degree");
  eval->add_option("--method", a.method, "W87, SUM4PHI3, KERNEL, SUSLOV, ISMAIL_RAHMAN, NS_KERNEL, NS_DECOMP");
  eval->add_option("--which", a.which, "sym or nonsym");

  auto* table = app.add_subcommand("table", "emit a table");
  common(table);
  table->add_option("--kind", a.kind, "kernel-coefficients, poly-coeffs or orbit")->required();
  table->add_option("--m", a.m, "index range lo..hi (kernel-coefficients, default 0..10)");
  table->add_option("--n", a.n, "degree range lo..hi (poly-coeffs)");
  table->add_option("--which", a.which, "sym or nonsym; for orbit a comma-separated generator list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(a);
    if (eval->parsed()) return cmd_eval(a);
    if (table->parsed()) return cmd_table(a);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    nlohmann::json j{{"error", error_kind(e)}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 1;
  }
  return 2;
}
