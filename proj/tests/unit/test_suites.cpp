#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "awdaha/suites.hpp"

using namespace awdaha;

namespace {

SuiteOptions opts(int samples, std::uint64_t seed) {
  SuiteOptions o;
  o.samples = samples;
  o.seed = seed;
  o.timing = false;
  return o;
}

void same_rows(const std::vector<Row>& x, const std::vector<Row>& y) {
  REQUIRE(x.size() == y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    INFO(x[i].check_id);
    CHECK(x[i].check_id == y[i].check_id);
    CHECK(x[i].sample == y[i].sample);
    CHECK(x[i].pass == y[i].pass);
    CHECK(x[i].residual == y[i].residual);
    CHECK(x[i].params == y[i].params);
  }
}

ParamSpec spec(const char* a, const char* b, const char* c, const char* d, const char* q) {
  ParamSpec s;
  s.tuple = std::array<std::string, 4>{a, b, c, d};
  if (q) s.q = q;
  return s;
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(expand(Suite::all).size() == 10);
  for (Suite s : expand(Suite::all)) CHECK(suite_from_name(name(s)) == s);
  CHECK(suite_from_name("all") == Suite::all);
  CHECK_THROWS_AS(suite_from_name("daha"), ConfigError);
}

TEST_CASE("parallel evaluation matches the serial reference") {
  for (Suite s : {Suite::daha_relations, Suite::aw_poly_identities, Suite::nonsym_func}) {
    INFO(name(s));
    SuiteOptions o = opts(3, 5);
    auto par = run_suite(s, o, Execution::parallel);
    auto ser = run_suite(s, o, Execution::serial);
    CHECK(par.pass());
    same_rows(par.rows, ser.rows);
  }
}

TEST_CASE("reports are order-stable and reproducible") {
  SuiteOptions o = opts(2, 9);
  auto r1 = run_suite(Suite::appendix_a, o);
  auto r2 = run_suite(Suite::appendix_a, o);
  CHECK(r1.to_json(o, "appendix-a").dump() == r2.to_json(o, "appendix-a").dump());
  CHECK(std::is_sorted(r1.rows.begin(), r1.rows.end(), [](const Row& x, const Row& y) {
    return x.check_id != y.check_id ? x.check_id < y.check_id : x.sample < y.sample;
  }));
  for (const auto& r : r1.rows) {
    CHECK(r.runtime_ms == 0);
    CHECK(r.check_id == "appendix-a/" + r.anchor);
  }
  // `all` draws each suite from its own stream
  auto all = run_suite(Suite::all, opts(1, 4));
  auto one = run_suite(Suite::gaussian_conjugation, opts(1, 4));
  size_t n = std::count_if(all.rows.begin(), all.rows.end(),
                           [](const Row& r) { return r.check_id.rfind("gaussian-conjugation/", 0) == 0; });
  CHECK(n == one.rows.size());
  CHECK(all.pass());
  auto j = all.to_json(opts(1, 4), "all");
  CHECK(j["summary"]["pass"] == true);
  CHECK(j["rows"][0].contains("paper_anchor"));
  CHECK(j["rows"][0].contains("runtime_ms"));
}

TEST_CASE("a throwing batch becomes a failed row") {
  std::vector<Batch> b = {{Suite::appendix_a, 0, []() -> Reports { throw DomainError("boom"); }},
                          {Suite::appendix_a, 1, [] { return Reports{Report{"x", {}, true, 0}}; }}};
  auto rows = run_batches(b, Execution::parallel, false);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].check_id == "appendix-a/batch aborted");
  CHECK_FALSE(rows[0].pass);
  CHECK(rows[0].params["error"] == "boom");
  CHECK(rows[1].pass);
}

TEST_CASE("command-line parameters") {
  Sampler s(1);
  ExactParams p = resolve_params(spec("2", "3", "4", "r-square", "9/25"), s);
  CHECK(p.q == Rational(9, 25));
  CHECK_NOTHROW(exact_sqrt(Rational(p.a * p.b * p.c * p.d / p.q)));
  ExactParams d = resolve_params(spec("0.5", "2/3", "-3", "5", nullptr), s);
  CHECK(d.a == Rational(1, 2));
  CHECK(d.q == Rational(1, 3));
  CHECK_THROWS_AS(resolve_params(spec("2", "1/2", "4", "5", nullptr), s), ConfigError);
  CHECK_THROWS_AS(resolve_params(spec("2", "x", "4", "5", nullptr), s), ConfigError);
  CHECK_THROWS_AS(resolve_params(spec("2", "3", "4", "5", "1"), s), ConfigError);
  CHECK_THROWS_AS(resolve_params(spec("r-square", "3", "4", "5", nullptr), s), ConfigError);
  CHECK_THROWS_AS(resolve_params(ParamSpec{}, s), ConfigError);

  SuiteOptions o = opts(1, 1);
  o.digits = 5;
  CHECK_THROWS_AS(run_suite(Suite::daha_relations, o), ConfigError);
  o.digits = 50;
  o.samples = 0;
  CHECK_THROWS_AS(run_suite(Suite::daha_relations, o), ConfigError);
}

TEST_CASE("given tuples run the checks whose shape they have") {
  Sampler s(2);
  SuiteOptions o = opts(3, 1);
  o.params = resolve_params(spec("2", "3", "4", "r-square", "9/25"), s);
  auto r = run_suite(Suite::aw_poly_identities, o);
  CHECK(r.pass());
  CHECK(r.skipped.empty());
  for (const auto& row : r.rows) CHECK(row.sample == 0);

  o.params = resolve_params(spec("2", "3", "4", "5", "1/3"), s);
  r = run_suite(Suite::aw_poly_identities, o);
  CHECK(r.pass());
  CHECK(r.skipped.size() == 2);
  // negative parameters are fine for the exact suites but not for the functions
  o.params = resolve_params(spec("-2", "3", "4", "5", "1/3"), s);
  CHECK(run_suite(Suite::daha_relations, o).pass());
  CHECK_THROWS_AS(run_suite(Suite::nonsym_func, o), ConfigError);
}
