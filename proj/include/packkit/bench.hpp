#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "packkit/core.hpp"
#include "packkit/decor.hpp"
#include "packkit/super_harmonic.hpp"

namespace packkit {

// One (instance, algorithm) measurement. ratio = height / best known lower
// bound (known_opt when present, else the instance lower bound).
struct BenchRecord {
  std::string instance;
  std::string algorithm;
  double c = -1.0;      // negative = not applicable
  double r = -1.0;
  double eps = -1.0;
  int k = -1;
  double height = 0.0;
  double lb = 0.0;
  std::optional<double> known_opt;
  double ratio = 0.0;
  double wall_ms = 0.0;
};

// Shared defaults for algorithm tokens that need them.
struct AlgoConfig {
  double c = 2.0;
  double r = 0.5;
  SuperHarmonicParams params;  // used by gp / bp-sh when the token has no own ref
  bool have_params = false;
};

struct NamedAlgorithm {
  std::string name;
  double c = -1.0, r = -1.0, eps = -1.0;
  int k = -1;
  std::function<StripPacking(const Instance&, Decor*)> run;
};

// Parses an algorithm token into a runnable. Tokens:
//   nfdh | ffdh
//   bp-nf | bp-ff | bp-ffd | bp-harmonic:<k> | bp-sh:<params>
//   gp | gp:<params>
//   shelf-nf | shelf-ff | shelf-harmonic:<k>
// where <params> is a built-in name or a file path.
// Throws std::invalid_argument on unknown tokens.
NamedAlgorithm make_algorithm(const std::string& token, const AlgoConfig& config);

struct BenchValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs every (instance, algorithm) pair, validating each packing. A
// validation failure aborts the run with BenchValidationError carrying the
// violation report.
std::vector<BenchRecord> run_bench(const std::vector<Instance>& instances,
                                   const std::vector<std::string>& algo_tokens,
                                   const AlgoConfig& config);

extern const char* const kBenchCsvHeader;
std::string bench_to_csv(const std::vector<BenchRecord>& records);
std::string bench_to_json(const std::vector<BenchRecord>& records);

// Expands a glob of the form "dir/prefix*suffix" (wildcards in the final
// path component only), sorted lexicographically.
std::vector<std::string> expand_glob(const std::string& pattern);

}  // namespace packkit
