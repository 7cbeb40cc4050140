#include "cosec/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cosec/approx.hpp"
#include "cosec/enumerate.hpp"
#include "cosec/errors.hpp"
#include "cosec/exact.hpp"
#include "cosec/gen.hpp"
#include "cosec/reduce.hpp"
#include "cosec/verify.hpp"

namespace cosec {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Bounds: return "bounds";
    case Suite::Reg3: return "reg3";
    case Suite::Reg4: return "reg4";
    case Suite::Reductions: return "reductions";
    case Suite::Monopoly: return "monopoly";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::Bounds, Suite::Reg3, Suite::Reg4, Suite::Reductions, Suite::Monopoly})
    if (text == to_string(s)) return s;
  throw InputError("unknown suite '" + std::string(text) + "'");
}

bool BenchReport::all_satisfied() const {
  for (const auto& r : records)
    if (!r.bound_satisfied) return false;
  return true;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

using Clock = std::chrono::steady_clock;

// One unit of work: a graph plus the records it produced.
struct Instance {
  std::string id;
  std::string family;
  std::optional<std::uint64_t> seed;
  Graph graph;
  std::vector<ExperimentRecord> records;
  std::vector<std::string> notes;
  bool ran = false;
};

ExperimentRecord base_record(const Instance& inst, std::string method) {
  ExperimentRecord r;
  r.instance = inst.id;
  r.family = inst.family;
  r.seed = inst.seed;
  r.n = inst.graph.n();
  r.m = inst.graph.m();
  if (inst.graph.n() > 0) {
    const auto p = degree_profile(inst.graph);
    r.min_degree = p.min_degree;
    r.max_degree = p.max_degree;
  }
  r.method = std::move(method);
  return r;
}

void set_ratio(ExperimentRecord& r, std::size_t cardinality, std::size_t oracle) {
  r.cardinality = cardinality;
  r.oracle = oracle;
  if (oracle > 0) r.ratio = static_cast<double>(cardinality) / static_cast<double>(oracle);
}

std::size_t optimum(const Graph& g, Property p) {
  const auto r = exact_min(g, p);
  if (!r.cardinality) throw ClaimViolation("no " + std::string(to_string(p)) + " set exists");
  return *r.cardinality;
}

std::string pad(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06zu", i);
  return buf;
}

// ---- bounds ---------------------------------------------------------------

void run_bounds(Instance& inst) {
  const Graph& g = inst.graph;
  const auto start = Clock::now();
  const std::size_t gcs = optimum(g, Property::Csds);
  const std::size_t g2 = optimum(g, Property::DoubleDominating);
  const double delta = static_cast<double>(degree_profile(g).max_degree);

  ExperimentRecord sandwich = base_record(inst, "sandwich");
  set_ratio(sandwich, g2, gcs);
  sandwich.bound = 2.0;
  sandwich.bound_satisfied = gcs <= g2 && g2 <= 2 * gcs;
  sandwich.elapsed = Clock::now() - start;
  inst.records.push_back(sandwich);

  auto t = Clock::now();
  const VertexSet greedy = greedy_double_dominating(g);
  ExperimentRecord greedy_rec = base_record(inst, "greedy");
  set_ratio(greedy_rec, greedy.size(), g2);
  greedy_rec.bound = 1.0 + std::log(delta + 2.0);
  greedy_rec.bound_satisfied = is_double_dominating(g, greedy).verdict &&
                               static_cast<double>(greedy.size()) <= greedy_rec.bound * static_cast<double>(g2);
  greedy_rec.elapsed = Clock::now() - t;
  inst.records.push_back(greedy_rec);

  t = Clock::now();
  const SolveResult approx = approx_csds(g);
  ExperimentRecord approx_rec = base_record(inst, "approx_csds");
  set_ratio(approx_rec, *approx.cardinality, gcs);
  approx_rec.bound = 2.0 + 2.0 * std::log(delta + 2.0);
  approx_rec.bound_satisfied = approx.diagnostics.empty() && is_csds(g, *approx.set).verdict &&
                               is_minimal(g, *approx.set, Property::DoubleDominating) &&
                               static_cast<double>(*approx.cardinality) <= approx_rec.bound * static_cast<double>(gcs);
  approx_rec.elapsed = Clock::now() - t;
  inst.records.push_back(approx_rec);
}

// ---- regular graphs --------------------------------------------------------

std::size_t max_degree_within(const Graph& g, const VertexSet& w) {
  std::size_t best = 0;
  for (Vertex v : w) best = std::max(best, g.open_neighborhood(v).intersection_size(w));
  return best;
}

void run_regular(Instance& inst, std::size_t degree) {
  const Graph& g = inst.graph;
  const auto start = Clock::now();
  const RegularCsds out = degree == 3 ? approx_csds_3reg(g) : approx_csds_4reg(g);
  const auto elapsed = Clock::now() - start;
  const std::size_t gcs = optimum(g, Property::Csds);
  const std::size_t n = g.n();
  const std::size_t size = *out.result.cardinality;

  ExperimentRecord r = base_record(inst, degree == 3 ? "reg3" : "reg4");
  set_ratio(r, size, gcs);
  r.bound = degree == 3 ? 8.0 / 3.0 : 10.0 / 3.0;
  const std::size_t bound_num = degree == 3 ? 8 : 10;
  bool ok = out.result.diagnostics.empty() && is_csds(g, *out.result.set).verdict;
  ok = ok && 3 * size <= bound_num * gcs;
  ok = ok && size <= (2 * n) / 3;
  ok = ok && gcs * (degree + 1) >= n;  // gamma_cs >= n / (degree + 1)
  if (degree == 4) ok = ok && max_degree_within(g, out.picked | out.leftover) <= 2;
  r.bound_satisfied = ok;
  r.elapsed = elapsed;
  inst.records.push_back(r);
  for (const auto& d : out.result.diagnostics) inst.notes.push_back(inst.id + ": " + d);
}

// ---- reductions ------------------------------------------------------------

void run_reduction(Instance& inst, ReductionKind kind) {
  const Graph& g = inst.graph;
  const auto start = Clock::now();
  const std::size_t gamma = optimum(g, Property::Dominating);
  ExperimentRecord r = base_record(inst, std::string(to_string(kind)));
  bool ok = true;
  std::size_t gcs = 0;
  if (kind == ReductionKind::Pebg) {
    const PebgReduction red = build_pebg(g);
    ok = red.reduced.n() == 2 * g.n() + 6 && red.reduced.m() == g.m() + 4 * g.n() + 3;
    ok = ok && check_peo(red.reduced, red.map.peo);
    const SolveResult s = exact_min(red.reduced, Property::Csds);
    ok = ok && s.set.has_value();
    if (s.set) {
      gcs = *s.cardinality;
      const VertexSet d = extract_dom_pebg(red.map, g, red.reduced, *s.set);
      ok = ok && gcs == gamma + 3 && d.size() + 3 == gcs;
    }
    r.bound = 3.0;
  } else {
    const StarReduction red = build_star_convex(g);
    ok = red.reduced.n() == g.n() + 4 && red.reduced.m() == g.m() + g.n() + 3;
    ok = ok && check_star_convex(red.reduced, red.map.reduced_x()) == red.map.x;
    const SolveResult s = exact_min(red.reduced, Property::Csds);
    ok = ok && s.set.has_value();
    if (s.set) {
      gcs = *s.cardinality;
      const VertexSet d = extract_dom_star(red.map, g, red.reduced, *s.set);
      ok = ok && gcs == gamma + 2 && d.size() + 2 == gcs;
    }
    r.bound = 2.0;
  }
  r.cardinality = gcs;
  r.oracle = gamma;
  r.bound_satisfied = ok;
  r.elapsed = Clock::now() - start;
  inst.records.push_back(r);
}

// ---- monopoly --------------------------------------------------------------

void run_monopoly(Instance& inst) {
  const Graph& g = inst.graph;
  const auto start = Clock::now();
  const detail::MaskGraph mg(g);
  const std::uint64_t total = std::uint64_t{1} << g.n();
  bool equivalent = true;
  std::vector<std::uint64_t> csds_sets;
  for (std::uint64_t s = 0; s < total; ++s) {
    equivalent = equivalent && mg.partial_monopoly(s) == mg.double_dominating(s);
    if (mg.csds(s)) csds_sets.push_back(s);
  }
  const std::size_t mono = optimum(g, Property::PartialMonopoly);
  const std::size_t g2 = optimum(g, Property::DoubleDominating);
  ExperimentRecord mono_rec = base_record(inst, "monopoly");
  set_ratio(mono_rec, mono, g2);
  mono_rec.bound = 1.0;
  mono_rec.bound_satisfied = equivalent && mono == g2;
  mono_rec.elapsed = Clock::now() - start;
  inst.records.push_back(mono_rec);

  // converter over every inclusion-minimal CSDS
  auto t = Clock::now();
  std::size_t worst_out = 0, worst_in = 1, safety = 0;
  bool ok = true;
  for (std::uint64_t s : csds_sets) {
    bool minimal = true;
    for (std::uint64_t other : csds_sets)
      if (other != s && (other & ~s) == 0) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    VertexSet set(g.n());
    for (std::uint64_t r = s; r; r &= r - 1) set.insert(static_cast<Vertex>(std::countr_zero(r)));
    const DoubleDomConversion conv = csds_to_double_dominating(g, set);
    safety += conv.safety_net_additions;
    ok = ok && conv.within_bound && is_double_dominating(g, conv.set).verdict;
    if (conv.set.size() * worst_in > worst_out * set.size()) {
      worst_out = conv.set.size();
      worst_in = set.size();
    }
  }
  ExperimentRecord conv_rec = base_record(inst, "csds_to_double");
  set_ratio(conv_rec, worst_out, worst_in);
  conv_rec.bound = 2.0;
  conv_rec.bound_satisfied = ok;
  conv_rec.elapsed = Clock::now() - t;
  inst.records.push_back(conv_rec);
  if (safety > 0) inst.notes.push_back(inst.id + ": converter safety net fired " + std::to_string(safety) + " times");
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t i) { return seed * 1000003ULL + i; }

std::vector<Instance> make_instances(const BenchOptions& o) {
  std::vector<Instance> out;
  auto add_enumerated = [&](const std::string& family, std::size_t lo, std::size_t hi, std::size_t max_degree,
                            const std::function<bool(const Graph&)>& keep) {
    if (hi < lo) return;
    std::size_t k = 0;
    for (Graph& g : enumerate_graphs(lo, hi, max_degree, keep))
      out.push_back({family + "-" + pad(k++), family, std::nullopt, std::move(g), {}, {}, false});
  };
  switch (o.suite) {
    case Suite::Bounds: {
      const std::size_t hi = std::min<std::size_t>(o.n_max, 9);
      add_enumerated("enum_mindeg2", 3, hi, hi, [](const Graph& g) {
        return is_connected(g) && degree_profile(g).min_degree >= 2;
      });
      if (o.n_max >= 3)
        for (std::size_t i = 0; i < o.trials; ++i) {
          const std::size_t n = 3 + i % (o.n_max - 2);
          const double p = 0.15 + 0.05 * static_cast<double>(i % 10);
          const std::uint64_t s = derive_seed(o.seed, i);
          out.push_back({"random_mindeg2-" + pad(i), "random_mindeg2", s, gen_random_min_degree2(n, p, s), {}, {}, false});
        }
      break;
    }
    case Suite::Reg3:
    case Suite::Reg4: {
      const std::size_t d = o.suite == Suite::Reg3 ? 3 : 4;
      const std::size_t lo = d + 1;
      if (o.n_max < lo) break;
      std::vector<std::size_t> orders;
      for (std::size_t n = lo; n <= o.n_max; ++n)
        if ((n * d) % 2 == 0) orders.push_back(n);
      for (std::size_t i = 0; i < o.trials; ++i) {
        const std::size_t n = orders[i % orders.size()];
        const std::uint64_t s = derive_seed(o.seed, i);
        const std::string fam = d == 3 ? "random_cubic" : "random_quartic";
        out.push_back({fam + "-" + pad(i), fam, s, gen_random_regular(n, d, s), {}, {}, false});
      }
      break;
    }
    case Suite::Reductions:
      add_enumerated("pebg", 2, o.n_max, o.n_max, [](const Graph& g) { return is_connected(g); });
      add_enumerated("star_convex", 2, o.n_max, o.n_max,
                     [](const Graph& g) { return is_connected(g) && bipartition(g).has_value(); });
      break;
    case Suite::Monopoly:
      add_enumerated("cubic", 4, o.n_max, 3, [](const Graph& g) { return degree_profile(g).regular_degree == 3u; });
      break;
  }
  return out;
}

}  // namespace

BenchReport run_bench_suite(const BenchOptions& options) {
  BenchReport report;
  report.suite = options.suite;
  std::vector<Instance> instances = make_instances(options);
  std::stable_sort(instances.begin(), instances.end(),
                   [](const Instance& a, const Instance& b) { return a.id < b.id; });
  const auto deadline = options.time_cap ? std::optional(Clock::now() + *options.time_cap) : std::nullopt;
  std::atomic<bool> capped{false};
  parallel_for(instances.size(), options.workers, [&](std::size_t i) {
    if (deadline && Clock::now() > *deadline) {
      capped = true;
      return;
    }
    Instance& inst = instances[i];
    switch (options.suite) {
      case Suite::Bounds: run_bounds(inst); break;
      case Suite::Reg3: run_regular(inst, 3); break;
      case Suite::Reg4: run_regular(inst, 4); break;
      case Suite::Reductions:
        run_reduction(inst, inst.family == "pebg" ? ReductionKind::Pebg : ReductionKind::StarConvex);
        break;
      case Suite::Monopoly: run_monopoly(inst); break;
    }
    inst.ran = true;
  });
  report.complete = !capped;
  for (Instance& inst : instances) {
    if (!inst.ran) continue;
    bool failed = false;
    for (auto& r : inst.records) {
      failed = failed || !r.bound_satisfied;
      report.records.push_back(std::move(r));
    }
    for (auto& note : inst.notes) report.notes.push_back(std::move(note));
    if (failed) report.counterexamples.push_back({inst.id, inst.graph});
  }
  return report;
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string to_csv(const BenchReport& report, bool with_timing) {
  std::ostringstream os;
  os << "instance,family,seed,n,m,min_degree,max_degree,method,cardinality,oracle,ratio,bound,bound_satisfied";
  if (with_timing) os << ",elapsed_ms";
  os << '\n';
  for (const auto& r : report.records) {
    os << r.instance << ',' << r.family << ',' << (r.seed ? std::to_string(*r.seed) : "") << ',' << r.n << ',' << r.m
       << ',' << r.min_degree << ',' << r.max_degree << ',' << r.method << ',' << r.cardinality << ','
       << (r.oracle ? std::to_string(*r.oracle) : "") << ',' << (r.ratio ? fixed6(*r.ratio) : "") << ','
       << fixed6(r.bound) << ',' << (r.bound_satisfied ? "true" : "false");
    if (with_timing) os << ',' << fixed6(std::chrono::duration<double, std::milli>(r.elapsed).count());
    os << '\n';
  }
  return os.str();
}

std::string to_json(const BenchReport& report, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["suite"] = std::string(to_string(report.suite));
  doc["complete"] = report.complete;
  doc["all_satisfied"] = report.all_satisfied();
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json row;
    row["instance"] = r.instance;
    row["family"] = r.family;
    row["seed"] = r.seed ? ordered_json(*r.seed) : ordered_json(nullptr);
    row["n"] = r.n;
    row["m"] = r.m;
    row["min_degree"] = r.min_degree;
    row["max_degree"] = r.max_degree;
    row["method"] = r.method;
    row["cardinality"] = r.cardinality;
    row["oracle"] = r.oracle ? ordered_json(*r.oracle) : ordered_json(nullptr);
    row["ratio"] = r.ratio ? ordered_json(*r.ratio) : ordered_json(nullptr);
    row["bound"] = r.bound;
    row["bound_satisfied"] = r.bound_satisfied;
    if (with_timing) row["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    rows.push_back(std::move(row));
  }
  doc["records"] = std::move(rows);
  doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

}  // namespace cosec
