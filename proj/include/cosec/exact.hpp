#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosec/graph.hpp"
#include "cosec/verify.hpp"

namespace cosec {

enum class Method { Exact, Greedy, Reg3, Reg4 };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

struct SolveResult {
  Property problem = Property::Dominating;
  std::optional<VertexSet> set;
  std::optional<std::size_t> cardinality;
  Method method = Method::Exact;
  std::chrono::nanoseconds elapsed{0};
  /// Runtime checks of proven claims that did not hold (normally empty).
  std::vector<std::string> diagnostics;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// The combination of given lexicographic rank among all k-subsets of
/// {0..n-1}.
std::vector<Vertex> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank);

/// Lexicographic stream of the k-subsets of {0..n-1} with ranks in
/// [first, last). Ranges of one (n, k) partition the full stream.
class KSubsets {
 public:
  KSubsets(std::size_t n, std::size_t k);
  KSubsets(std::size_t n, std::size_t k, std::uint64_t first, std::uint64_t last);

  /// Writes the next subset into `out`; false once the range is exhausted.
  bool next(std::vector<Vertex>& out);
  std::uint64_t rank() const { return rank_; }  // rank of the next subset

 private:
  std::size_t n_, k_;
  std::uint64_t rank_, last_;
  std::vector<Vertex> current_;
  bool started_ = false;
};

std::vector<VertexSet> k_subsets(std::size_t n, std::size_t k);

struct ExactOptions {
  std::optional<std::size_t> limit;  // maximum cardinality to try
  unsigned workers = 1;
};

/// Brute-force minimum: tries k = 1, 2, ... and returns the
/// lexicographically least k-subset satisfying p, or an empty result when
/// nothing up to the limit qualifies. Requires n <= 64.
SolveResult exact_min(const Graph& g, Property p, ExactOptions options = {});

namespace detail {

/// Word-level kernels over graphs with at most 64 vertices. Kept public
/// so tests can cross-check them against the VertexSet verifiers.
struct MaskGraph {
  explicit MaskGraph(const Graph& g);
  std::size_t n;
  std::vector<std::uint64_t> open;
  std::vector<std::uint64_t> closed;

  bool satisfies(std::uint64_t s, Property p) const;
  bool dominating(std::uint64_t s) const;
  bool double_dominating(std::uint64_t s) const;
  bool csds(std::uint64_t s) const;
  bool partial_monopoly(std::uint64_t s) const;
};

}  // namespace detail

}  // namespace cosec
