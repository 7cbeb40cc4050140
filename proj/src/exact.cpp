#include "cosec/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "cosec/errors.hpp"

namespace cosec {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Greedy: return "greedy";
    case Method::Reg3: return "reg3";
    case Method::Reg4: return "reg4";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "exact") return Method::Exact;
  if (text == "greedy") return Method::Greedy;
  if (text == "reg3") return Method::Reg3;
  if (text == "reg4") return Method::Reg4;
  throw InputError("unknown method '" + std::string(text) + "'");
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<Vertex> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
  if (rank >= binomial(n, k)) throw InputError("combination rank out of range");
  std::vector<Vertex> out;
  out.reserve(k);
  std::size_t v = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    // skip candidates whose block of completions lies entirely before rank
    while (true) {
      std::uint64_t block = binomial(n - v - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    out.push_back(static_cast<Vertex>(v));
    ++v;
  }
  return out;
}

KSubsets::KSubsets(std::size_t n, std::size_t k) : KSubsets(n, k, 0, binomial(n, k)) {}

KSubsets::KSubsets(std::size_t n, std::size_t k, std::uint64_t first, std::uint64_t last)
    : n_(n), k_(k), rank_(first), last_(std::min(last, binomial(n, k))) {
  if (k > n) throw InputError("k_subsets: k exceeds n");
}

bool KSubsets::next(std::vector<Vertex>& out) {
  if (rank_ >= last_) return false;
  if (!started_) {
    current_ = unrank_combination(n_, k_, rank_);
    started_ = true;
  } else {
    // advance: rightmost slot that can still move
    std::size_t i = k_;
    while (i > 0 && current_[i - 1] == n_ - k_ + i - 1) --i;
    ++current_[i - 1];
    for (std::size_t j = i; j < k_; ++j) current_[j] = current_[j - 1] + 1;
  }
  ++rank_;
  out = current_;
  return true;
}

std::vector<VertexSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<VertexSet> out;
  KSubsets gen(n, k);
  std::vector<Vertex> buf;
  while (gen.next(buf)) out.push_back(VertexSet::from_vector(n, buf));
  return out;
}

namespace detail {

MaskGraph::MaskGraph(const Graph& g) : n(g.n()), open(g.n()), closed(g.n()) {
  if (g.n() > 64) throw PreconditionError("exact search supports at most 64 vertices");
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) open[v] |= std::uint64_t{1} << w;
    closed[v] = open[v] | (std::uint64_t{1} << v);
  }
}

bool MaskGraph::dominating(std::uint64_t s) const {
  for (std::size_t v = 0; v < n; ++v)
    if (!((s >> v) & 1) && !(open[v] & s)) return false;
  return true;
}

bool MaskGraph::double_dominating(std::uint64_t s) const {
  for (std::size_t v = 0; v < n; ++v)
    if (!((s >> v) & 1) && std::popcount(open[v] & s) < 2) return false;
  return true;
}

bool MaskGraph::partial_monopoly(std::uint64_t s) const {
  for (std::size_t v = 0; v < n; ++v)
    if (!((s >> v) & 1) && 2 * std::popcount(open[v] & s) < std::popcount(closed[v])) return false;
  return true;
}

bool MaskGraph::csds(std::uint64_t s) const {
  if (!dominating(s)) return false;
  for (std::uint64_t rest = s; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const std::uint64_t ubit = std::uint64_t{1} << u;
    const std::uint64_t outside_nbrs = open[u] & ~s;
    std::uint64_t private_nbrs = 0;
    for (std::uint64_t w = outside_nbrs; w; w &= w - 1) {
      const int x = std::countr_zero(w);
      if ((open[x] & s) == ubit) private_nbrs |= std::uint64_t{1} << x;
    }
    bool replaced = false;
    for (std::uint64_t c = outside_nbrs; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      if ((private_nbrs & ~closed[v]) == 0) {
        replaced = true;
        break;
      }
    }
    if (!replaced) return false;
  }
  return true;
}

bool MaskGraph::satisfies(std::uint64_t s, Property p) const {
  switch (p) {
    case Property::Dominating: return dominating(s);
    case Property::DoubleDominating: return double_dominating(s);
    case Property::Csds: return csds(s);
    case Property::PartialMonopoly: return partial_monopoly(s);
  }
  return false;
}

}  // namespace detail

namespace {

constexpr std::uint64_t kNoHit = std::numeric_limits<std::uint64_t>::max();

std::uint64_t to_mask(const std::vector<Vertex>& members) {
  std::uint64_t m = 0;
  for (Vertex v : members) m |= std::uint64_t{1} << v;
  return m;
}

// First rank in [first, last) whose subset satisfies p, or kNoHit.
std::uint64_t scan_range(const detail::MaskGraph& mg, Property p, std::size_t k, std::uint64_t first,
                         std::uint64_t last) {
  KSubsets gen(mg.n, k, first, last);
  std::vector<Vertex> buf;
  while (true) {
    const std::uint64_t rank = gen.rank();
    if (!gen.next(buf)) return kNoHit;
    if (mg.satisfies(to_mask(buf), p)) return rank;
  }
}

}  // namespace

SolveResult exact_min(const Graph& g, Property p, ExactOptions options) {
  const auto start = std::chrono::steady_clock::now();
  const detail::MaskGraph mg(g);
  SolveResult result;
  result.problem = p;
  result.method = Method::Exact;

  const std::size_t n = g.n();
  std::size_t k_max = (p == Property::Csds && n > 0) ? n - 1 : n;
  if (options.limit) k_max = std::min(k_max, *options.limit);
  std::size_t k_min = n == 0 ? 0 : 1;
  if (p == Property::Dominating && n > 0) {
    const std::size_t delta = degree_profile(g).max_degree;
    k_min = std::max(k_min, (n + delta) / (delta + 1));
  }
  const unsigned workers = std::max(1u, options.workers);

  for (std::size_t k = k_min; k <= k_max; ++k) {
    const std::uint64_t total = binomial(n, k);
    std::uint64_t hit = kNoHit;
    if (workers == 1 || total < 4096) {
      hit = scan_range(mg, p, k, 0, total);
    } else {
      // contiguous rank blocks; the lowest block with a hit wins
      std::vector<std::uint64_t> hits(workers, kNoHit);
      std::vector<std::thread> pool;
      const std::uint64_t chunk = (total + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        pool.emplace_back([&, w, lo, hi] { hits[w] = scan_range(mg, p, k, lo, hi); });
      }
      for (auto& t : pool) t.join();
      hit = *std::min_element(hits.begin(), hits.end());
    }
    if (hit != kNoHit) {
      result.set = VertexSet::from_vector(n, unrank_combination(n, k, hit));
      result.cardinality = k;
      break;
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace cosec
