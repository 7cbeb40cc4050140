#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cosec/graph.hpp"

namespace cosec {

enum class Suite { Bounds, Reg3, Reg4, Reductions, Monopoly };

std::string_view to_string(Suite s);
Suite parse_suite(std::string_view text);

struct ExperimentRecord {
  std::string instance;
  std::string family;
  std::optional<std::uint64_t> seed;
  std::size_t n = 0, m = 0, min_degree = 0, max_degree = 0;
  std::string method;
  std::size_t cardinality = 0;
  std::optional<std::size_t> oracle;
  std::optional<double> ratio;  // cardinality / oracle
  double bound = 0.0;
  bool bound_satisfied = false;
  std::chrono::nanoseconds elapsed{0};
};

struct BenchOptions {
  Suite suite = Suite::Bounds;
  std::size_t n_max = 8;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::optional<std::chrono::seconds> time_cap;
};

struct Counterexample {
  std::string instance;
  Graph graph;
};

struct BenchReport {
  Suite suite = Suite::Bounds;
  std::vector<ExperimentRecord> records;  // ordered by instance id
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  bool complete = true;

  bool all_satisfied() const;
};

BenchReport run_bench_suite(const BenchOptions& options);

/// Columns follow ExperimentRecord field order; elapsed_ms is appended
/// only when `with_timing` is set so default reports are reproducible.
std::string to_csv(const BenchReport& report, bool with_timing = false);
std::string to_json(const BenchReport& report, bool with_timing = false);

/// Runs fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace cosec
