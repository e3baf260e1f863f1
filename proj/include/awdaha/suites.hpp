#pragma once

// Verification suites: sampled batches of identity checks, evaluated in
// parallel (OpenMP) or serially, assembled into an order-stable report.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "awdaha/daha.hpp"
#include "awdaha/params.hpp"

namespace awdaha {

enum class Suite {
  daha_relations,
  automorphisms,
  gaussian_conjugation,
  aw_poly_identities,
  nonsym_poly_identities,
  aw_func_crosscheck,
  aw_func_symmetries,
  nonsym_func,
  appendix_a,
  appendix_b,
  all
};

const char* name(Suite s);
Suite suite_from_name(const std::string& s);  // ConfigError if unknown
std::vector<Suite> expand(Suite s);           // `all` -> every other suite

// Parameters given on the command line. Each entry is "p/q", a decimal, or
// (for d only) "r-square": d = q r^2/(abc) with r drawn from the sampler, so
// that abcd/q is a rational square.
struct ParamSpec {
  std::optional<std::array<std::string, 4>> tuple;
  std::optional<std::string> q;
};

// Default q when a tuple is given without one.
inline const char* kDefaultQ = "1/3";

// ConfigError on unparsable entries or a tuple that fails check_generic.
ExactParams resolve_params(const ParamSpec& spec, Sampler& s);

struct SuiteOptions {
  int samples = 5;
  std::uint64_t seed = 1;
  int digits = 50;
  double tol = 0;  // 0: 10^-(digits-10)
  std::optional<ExactParams> params;
  bool timing = true;
};

// ConfigError unless samples >= 1 and 12 <= digits <= kMaxDigits.
void validate(const SuiteOptions& o);

struct Row {
  std::string check_id;  // suite/relation
  std::string anchor;    // the identity checked, as formula text
  nlohmann::json params;
  bool pass = false;
  double residual = 0;
  double runtime_ms = 0;  // of the sample batch that produced the row
  int sample = 0;
};

struct SuiteResult {
  std::vector<Row> rows;              // sorted by check_id, then sample
  std::vector<std::string> skipped;   // checks whose preconditions the given tuple misses
  bool pass() const;
  nlohmann::json to_json(const SuiteOptions& o, const std::string& suite) const;
  std::string to_text() const;
};

// One unit of work: every check of one suite at one sampled input. Inputs are
// drawn when the batch is built, so results do not depend on scheduling.
struct Batch {
  Suite suite;
  int sample;
  std::function<Reports()> run;
};

std::vector<Batch> build_batches(Suite s, const SuiteOptions& o, std::vector<std::string>& skipped);

enum class Execution { parallel, serial };

// Errors thrown inside a batch become one failed row carrying the message.
std::vector<Row> run_batches(const std::vector<Batch>& batches, Execution ex, bool timing);

SuiteResult run_suite(Suite s, const SuiteOptions& o, Execution ex = Execution::parallel);

}  // namespace awdaha
