#include "awdaha/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "awdaha/awfunc.hpp"
#include "awdaha/awpoly.hpp"

namespace awdaha {

namespace {

struct SuiteName {
  Suite s;
  const char* n;
};

constexpr SuiteName kNames[] = {
    {Suite::daha_relations, "daha-relations"},
    {Suite::automorphisms, "automorphisms"},
    {Suite::gaussian_conjugation, "gaussian-conjugation"},
    {Suite::aw_poly_identities, "aw-poly-identities"},
    {Suite::nonsym_poly_identities, "nonsym-poly-identities"},
    {Suite::aw_func_crosscheck, "aw-func-crosscheck"},
    {Suite::aw_func_symmetries, "aw-func-symmetries"},
    {Suite::nonsym_func, "nonsym-func"},
    {Suite::appendix_a, "appendix-a"},
    {Suite::appendix_b, "appendix-b"},
    {Suite::all, "all"},
};

bool has_rational_sqrt(const Rational& x) {
  try {
    exact_sqrt(x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool square_q(const ExactParams& p) { return has_rational_sqrt(p.q); }
bool square_compatible(const ExactParams& p) { return has_rational_sqrt(Rational(p.a * p.b * p.c * p.d / p.q)); }
bool braid_compatible(const ExactParams& p) {
  return square_q(p) && has_rational_sqrt(Rational(p.a * p.b)) && has_rational_sqrt(Rational(p.c * p.d));
}

Reports concat(Reports a, const Reports& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FuncCheckConfig func_config(const SuiteOptions& o) {
  FuncCheckConfig c;
  c.digits = o.digits;
  c.tol = o.tol;
  return c;
}

// Numeric tuple for the function suites: the given one, or a fresh draw.
NumParams numeric_tuple(const SuiteOptions& o, Sampler& s) {
  if (!o.params) return s.numeric();
  NumParams p = to_numeric(*o.params);
  for (const auto& d : check_generic(p))
    if (!d.pass) throw ConfigError("parameters not admissible for the function suites: " + d.detail);
  return p;
}

// A (tuple, point) pair where every method in `need` is valid. With sampled
// tuples a tuple without such a point is redrawn.
std::pair<NumParams, EvalPoint> numeric_sample(const SuiteOptions& o, Sampler& s, const std::vector<Method>& need) {
  for (int tries = 0; tries < 100; ++tries) {
    NumParams p = numeric_tuple(o, s);
    try {
      return {p, sample_point(s, p, need)};
    } catch (const DomainError&) {
      if (o.params) throw ConfigError("no admissible evaluation point for the given parameters");
    }
  }
  throw InternalError("no admissible tuple after 100 draws");
}

using Gen = std::function<ExactParams(Sampler&)>;

// Exact tuple of a given shape: the user's tuple when it has the shape
// (nullopt otherwise), or a fresh draw.
std::optional<ExactParams> exact_tuple(const SuiteOptions& o, Sampler& s, const Gen& gen,
                                       bool (*shape)(const ExactParams&)) {
  if (!o.params) return gen(s);
  if (shape && !shape(*o.params)) return std::nullopt;
  return *o.params;
}

int exact_samples(const SuiteOptions& o) { return o.params ? 1 : o.samples; }

}  // namespace

const char* name(Suite s) {
  for (const auto& n : kNames)
    if (n.s == s) return n.n;
  return "?";
}

Suite suite_from_name(const std::string& s) {
  for (const auto& n : kNames)
    if (s == n.n) return n.s;
  throw ConfigError("unknown suite: " + s);
}

std::vector<Suite> expand(Suite s) {
  if (s != Suite::all) return {s};
  std::vector<Suite> out;
  for (const auto& n : kNames)
    if (n.s != Suite::all) out.push_back(n.s);
  return out;
}

ExactParams resolve_params(const ParamSpec& spec, Sampler& s) {
  if (!spec.tuple) throw ConfigError("no parameter tuple given");
  auto parse = [](const std::string& x, const char* what) {
    try {
      return parse_rational(x);
    } catch (const std::exception&) {
      throw ConfigError(std::string("cannot parse ") + what + ": " + x);
    }
  };
  const auto& t = *spec.tuple;
  ExactParams p;
  p.q = parse(spec.q.value_or(kDefaultQ), "q");
  if (!(p.q > 0 && p.q != 1)) throw ConfigError("q must be positive and different from 1");
  p.a = parse(t[0], "a");
  p.b = parse(t[1], "b");
  p.c = parse(t[2], "c");
  for (int i = 0; i < 3; ++i)
    if (t[i] == "r-square") throw ConfigError("r-square is only accepted in place of d");
  if (t[3] == "r-square") {
    if (sgn(p.a) == 0 || sgn(p.b) == 0 || sgn(p.c) == 0) throw ConfigError("a parameter is zero");
    for (int tries = 0;; ++tries) {
      if (tries == 1000) throw ConfigError("no generic square-compatible d for the given a, b, c, q");
      Rational r = s.small_rational(5, 5, false);
      p.d = p.q * r * r / (p.a * p.b * p.c);
      if (strongly_generic(p)) break;
    }
  } else {
    p.d = parse(t[3], "d");
  }
  for (const auto& d : check_generic(p))
    if (!d.pass && (d.check == "nonzero" || d.check == "distinct"))
      throw ConfigError("parameters not generic: " + d.detail);
  return p;
}

void validate(const SuiteOptions& o) {
  if (o.samples < 1) throw ConfigError("samples must be at least 1");
  if (o.digits < 12 || o.digits > kMaxDigits)
    throw ConfigError("digits must lie in [12, " + std::to_string(kMaxDigits) + "]");
  if (o.tol < 0) throw ConfigError("tolerance must be non-negative");
}

std::vector<Batch> build_batches(Suite suite, const SuiteOptions& o, std::vector<std::string>& skipped) {
  validate(o);
  std::vector<Batch> out;
  for (Suite su : expand(suite)) {
    // each suite has its own stream so that `all` reproduces the single runs
    Sampler s(o.seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(su) + 1));
    auto add = [&](int i, std::function<Reports()> f) { out.push_back({su, i, std::move(f)}); };
    auto skip = [&](const std::string& what) {
      skipped.push_back(std::string(name(su)) + ": " + what);
    };
    const int ne = exact_samples(o);
    switch (su) {
      case Suite::daha_relations:
        for (int i = 0; i < ne; ++i) {
          ExactParams p = *exact_tuple(o, s, &Sampler::generic, nullptr);
          add(i, [p] { return concat(verify_daha_relations(p), verify_spherical(p)); });
        }
        break;
      case Suite::automorphisms:
        for (int i = 0; i < ne; ++i) {
          auto p = exact_tuple(o, s, &Sampler::braid_compatible, nullptr);
          bool braid = braid_compatible(*p), dual = square_compatible(*p);
          if (!braid) skip("beta1, beta2 and the group relations need ab, cd and q to be rational squares");
          if (!dual) skip("sigma, eta and tau2 need abcd/q to be a rational square");
          add(i, [p = *p, braid, dual] {
            Reports r;
            for (AutoName a : {AutoName::t1, AutoName::t2, AutoName::t3, AutoName::t4, AutoName::tau,
                               AutoName::tau_inv})
              r = concat(r, verify_automorphism(a, p));
            if (dual)
              for (AutoName a : {AutoName::sigma, AutoName::tau2, AutoName::eta})
                r = concat(r, verify_automorphism(a, p));
            if (braid) {
              for (AutoName a : {AutoName::beta1, AutoName::beta2}) r = concat(r, verify_automorphism(a, p));
              r = concat(r, verify_group_relations(p));
            }
            return r;
          });
        }
        break;
      case Suite::gaussian_conjugation:
        for (int i = 0; i < ne; ++i) {
          ExactParams p = *exact_tuple(o, s, &Sampler::generic, nullptr);
          add(i, [p] { return verify_gaussian_conjugations(p); });
        }
        break;
      case Suite::aw_poly_identities:
        for (int i = 0; i < ne; ++i) {
          ExactParams g = *exact_tuple(o, s, &Sampler::generic, nullptr);
          auto sq = exact_tuple(o, s, &Sampler::square_q, square_q);
          auto sc = exact_tuple(o, s, &Sampler::square_compatible, square_compatible);
          if (!sq) skip("half-shift identities need q to be a rational square");
          if (!sc) skip("duality needs abcd/q to be a rational square");
          add(i, [g, sq, sc] {
            Reports r = concat(verify_symmetric_polys(g), verify_t4_polys(g));
            if (sq) r = concat(r, verify_half_shift_polys(*sq));
            if (sc) r = concat(r, verify_poly_duality(*sc));
            return r;
          });
        }
        break;
      case Suite::nonsym_poly_identities:
        for (int i = 0; i < ne; ++i) {
          ExactParams g = *exact_tuple(o, s, &Sampler::generic, nullptr);
          auto sq = exact_tuple(o, s, &Sampler::square_q, square_q);
          auto sc = exact_tuple(o, s, &Sampler::square_compatible, square_compatible);
          if (!sq) skip("route agreement needs q to be a rational square");
          if (!sc) skip("duality needs abcd/q to be a rational square");
          add(i, [g, sq, sc] {
            Reports r = verify_nonsym_polys(g);
            if (sq) r = concat(r, verify_nonsym_routes(*sq));
            if (sc) r = concat(r, verify_nonsym_duality(*sc));
            return r;
          });
        }
        break;
      case Suite::aw_func_crosscheck:
        for (int i = 0; i < o.samples; ++i) {
          auto [p, pt] = numeric_sample(o, s, {Method::W87, Method::SUM4PHI3, Method::SUSLOV});
          Complex z = s.complex_point(0.5, 2.0);
          bool w65 = abs(p.q / (p.a * p.d)) < Real(0.9);
          add(i, [p, pt, z, w65, c = func_config(o)] {
            Reports r = verify_func_crosscheck(pt, p, c);
            if (w65) r.push_back(verify_w65_evaluation(z, p, c));
            return r;
          });
        }
        break;
      case Suite::aw_func_symmetries:
        for (int i = 0; i < o.samples; ++i) {
          auto [p, pt] = numeric_sample(o, s, {});
          add(i, [p, pt, c = func_config(o)] { return verify_func_symmetries(pt, p, c); });
        }
        break;
      case Suite::nonsym_func:
        for (int i = 0; i < o.samples; ++i) {
          auto [p, pt] = numeric_sample(o, s, {Method::SUM4PHI3});
          add(i, [p, pt, c = func_config(o)] { return verify_nonsym_func(pt, p, c); });
        }
        break;
      case Suite::appendix_a:
        for (int i = 0; i < ne; ++i) {
          ExactParams p = *exact_tuple(o, s, &Sampler::generic, nullptr);
          add(i, [p] { return verify_appendix_a(p, 10); });
        }
        break;
      case Suite::appendix_b:
        for (int i = 0; i < o.samples; ++i) {
          auto [p, pt] = numeric_sample(o, s, {});
          EvalPoint pt2 = sample_point(s, p, {});
          add(i, [p, pt, pt2, c = func_config(o)] { return verify_appendix_b(pt, pt2, p, c); });
        }
        for (int i = 0; i < ne; ++i) {
          auto sq = exact_tuple(o, s, &Sampler::square_q, square_q);
          if (!sq) {
            skip("polynomial specializations of F need q to be a rational square");
            break;
          }
          add(o.samples + i, [p = *sq] { return verify_f_polynomials(p, 4); });
        }
        break;
      case Suite::all:
        break;
    }
  }
  return out;
}

std::vector<Row> run_batches(const std::vector<Batch>& batches, Execution ex, bool timing) {
  const long n = static_cast<long>(batches.size());
  std::vector<Reports> results(n);
  std::vector<double> ms(n, 0.0);
  auto one = [&](long i) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      results[i] = batches[i].run();
    } catch (const std::exception& e) {
      Report r{"batch aborted", nlohmann::json::object(), false, 1};
      r.params["error"] = e.what();
      r.residual = 1;
      results[i] = {r};
    }
    ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) one(i);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }

  std::vector<Row> rows;
  for (long i = 0; i < n; ++i)
    for (const auto& r : results[i])
      rows.push_back({std::string(name(batches[i].suite)) + "/" + r.relation, r.relation, r.params, r.pass,
                      r.residual, timing ? ms[i] : 0.0, batches[i].sample});
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.check_id != y.check_id) return x.check_id < y.check_id;
    return x.sample < y.sample;
  });
  return rows;
}

SuiteResult run_suite(Suite s, const SuiteOptions& o, Execution ex) {
  SuiteResult res;
  auto batches = build_batches(s, o, res.skipped);
  res.rows = run_batches(batches, ex, o.timing);
  std::sort(res.skipped.begin(), res.skipped.end());
  res.skipped.erase(std::unique(res.skipped.begin(), res.skipped.end()), res.skipped.end());
  return res;
}

bool SuiteResult::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

nlohmann::json SuiteResult::to_json(const SuiteOptions& o, const std::string& suite) const {
  nlohmann::json rs = nlohmann::json::array();
  size_t failed = 0;
  for (const auto& r : rows) {
    rs.push_back({{"check_id", r.check_id},
                  {"paper_anchor", r.anchor},
                  {"params", r.params},
                  {"pass", r.pass},
                  {"residual", r.residual},
                  {"runtime_ms", r.runtime_ms},
                  {"sample", r.sample}});
    if (!r.pass) ++failed;
  }
  nlohmann::json j{{"suite", suite}, {"seed", o.seed}, {"samples", o.samples}, {"digits", o.digits},
                   {"tol", o.tol}, {"rows", rs}, {"skipped", skipped}};
  if (o.params) j["params"] = params_json(*o.params);
  j["summary"] = {{"checks", rows.size()}, {"failed", failed}, {"pass", failed == 0}};
  return j;
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  size_t failed = 0;
  for (const auto& r : rows) {
    os << (r.pass ? "PASS " : "FAIL ") << r.check_id << " [sample " << r.sample << "]";
    if (r.residual != 0) os << " residual=" << r.residual;
    if (!r.pass) os << " params=" << r.params.dump();
    os << "\n";
    if (!r.pass) ++failed;
  }
  for (const auto& s : skipped) os << "SKIP " << s << "\n";
  os << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  return os.str();
}

}  // namespace awdaha
