#include "cosec/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosec/approx.hpp"
#include "cosec/bench.hpp"
#include "cosec/errors.hpp"
#include "cosec/exact.hpp"
#include "cosec/gen.hpp"
#include "cosec/io.hpp"
#include "cosec/reduce.hpp"
#include "cosec/verify.hpp"

namespace cosec {

unsigned workers_from_env() {
  const char* raw = std::getenv("COSEC_WORKERS");
  if (!raw || !*raw) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("COSEC_WORKERS must be a positive integer");
  return static_cast<unsigned>(std::min<unsigned long>(v, 256));
}

namespace {

using nlohmann::json;

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::string parts;
  std::size_t degree = 3;
  double p = 0.3;
  std::optional<std::uint64_t> seed;
  std::string output;
};

struct SolveArgs {
  std::string problem = "csds";
  std::string method = "exact";
  std::string input;
  std::string reduction = "pebg";
  std::optional<std::size_t> limit;
  bool json = false;
  bool oracle = false;
  bool timing = false;
};

struct VerifyArgs {
  std::string kind;
  std::string input;
  std::string set;
  std::string solution;
  bool json = false;
};

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string output;
  std::string map;
};

struct ExtractArgs {
  std::string map;
  std::string input;
  std::string reduced;
  std::string set;
  std::string solution;
  bool json = false;
};

struct StructureArgs {
  std::string kind;
  std::string input;
  std::string map;
  std::string x_side;
};

struct BenchArgs {
  std::string suite;
  std::size_t n_max = 8;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::string output;
  std::string json_output;
  bool timing = false;
  std::optional<std::size_t> time_cap;
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad part size '" + tok + "'");
    out.push_back(std::stoul(tok));
  }
  return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

json set_json(const VertexSet& s) { return s.to_vector(); }

VertexSet read_set(const std::string& set, const std::string& solution, std::size_t universe) {
  if (!solution.empty()) return solution_set_from_json(read_text_file(solution), universe);
  return parse_vertex_list(set, universe);
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Graph g;
  if (a.family == "random_regular" || a.family == "random_min_degree2") {
    if (!a.seed) throw InputError("--seed is required for random families");
    g = a.family == "random_regular" ? gen_random_regular(a.n, a.degree, *a.seed)
                                     : gen_random_min_degree2(a.n, a.p, *a.seed);
  } else {
    FamilySpec spec;
    spec.family = parse_family(a.family);
    spec.n = a.n;
    if (!a.parts.empty()) spec.parts = parse_sizes(a.parts);
    g = gen_family(spec);
  }
  emit(a.output, write_edge_list(g), out);
  return exit_code::ok;
}

SolveResult dispatch_solve(const Graph& g, Property p, Method m, const SolveArgs& a) {
  switch (m) {
    case Method::Exact: {
      ExactOptions opt;
      opt.limit = a.limit;
      opt.workers = workers_from_env();
      return exact_min(g, p, opt);
    }
    case Method::Greedy:
      if (p == Property::Csds) return approx_csds_isolate_free(g);
      if (p == Property::DoubleDominating) {
        const auto start = std::chrono::steady_clock::now();
        SolveResult r;
        r.problem = p;
        r.method = m;
        r.set = greedy_double_dominating(g);
        r.cardinality = r.set->size();
        r.elapsed = std::chrono::steady_clock::now() - start;
        return r;
      }
      if (p == Property::Dominating) {
        const auto start = std::chrono::steady_clock::now();
        const DomViaCsds d = approx_dom_via_csds(g, parse_reduction_kind(a.reduction));
        SolveResult r;
        r.problem = p;
        r.method = m;
        r.set = d.dominating;
        r.cardinality = d.dominating.size();
        r.elapsed = std::chrono::steady_clock::now() - start;
        return r;
      }
      throw UnsupportedProperty("greedy has no variant for " + std::string(to_string(p)));
    case Method::Reg3:
    case Method::Reg4:
      if (p != Property::Csds) throw UnsupportedProperty("reg3/reg4 solve csds only");
      return (m == Method::Reg3 ? approx_csds_3reg(g) : approx_csds_4reg(g)).result;
  }
  throw InputError("unknown method");
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list_file(a.input);
  const Property p = parse_property(a.problem);
  const Method m = parse_method(a.method);
  const SolveResult r = dispatch_solve(g, p, m, a);
  if (!r.set) {
    if (a.json)
      out << solution_to_json(a.input, r) << '\n';
    else
      out << "no " << to_string(p) << " set exists\n";
    return exit_code::no_solution;
  }
  std::optional<std::size_t> oracle;
  if (a.oracle) {
    ExactOptions opt;
    opt.workers = workers_from_env();
    oracle = exact_min(g, p, opt).cardinality;
  }
  if (a.json) {
    json doc = json::parse(solution_to_json(a.input, r));
    if (oracle) {
      doc["oracle_cardinality"] = *oracle;
      doc["ratio"] = *oracle ? static_cast<double>(*r.cardinality) / static_cast<double>(*oracle) : 0.0;
    }
    if (a.timing) doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    if (!r.diagnostics.empty()) doc["diagnostics"] = r.diagnostics;
    out << doc.dump() << '\n';
  } else {
    out << "set " << *r.set << "\ncardinality " << *r.cardinality << "\nmethod " << to_string(r.method) << '\n';
    if (oracle) {
      out << "oracle " << *oracle << '\n';
      if (*oracle) out << "ratio " << static_cast<double>(*r.cardinality) / static_cast<double>(*oracle) << '\n';
    }
    if (a.timing) out << "elapsed_ms " << std::chrono::duration<double, std::milli>(r.elapsed).count() << '\n';
  }
  for (const auto& d : r.diagnostics) err << "diagnostic: " << d << '\n';
  return r.diagnostics.empty() ? exit_code::ok : exit_code::claim_violation;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.input);
  const Property p = parse_property(a.kind);
  const VertexSet s = read_set(a.set, a.solution, g.n());
  const Certificate c = check_property(g, s, p);
  const char* witness_label = c.verdict ? "replacements" : "epn";
  if (a.json) {
    json doc;
    doc["property"] = std::string(to_string(p));
    doc["set"] = set_json(s);
    doc["verdict"] = c.verdict;
    doc["reason"] = std::string(to_string(c.reason));
    doc["failing"] = set_json(c.failing);
    json w = json::object();
    for (const auto& [u, ws] : c.witnesses) w[std::to_string(u)] = set_json(ws);
    doc[witness_label] = w;
    out << doc.dump() << '\n';
  } else {
    out << "verdict " << (c.verdict ? "true" : "false") << '\n';
    if (!c.verdict) out << "reason " << to_string(c.reason) << "\nfailing " << c.failing << '\n';
    if (!c.witnesses.empty()) {
      out << witness_label << '\n';
      for (const auto& [u, ws] : c.witnesses) out << "  " << u << " -> " << ws << '\n';
    }
  }
  return c.verdict ? exit_code::ok : exit_code::verdict_false;
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.input);
  const ReductionKind kind = parse_reduction_kind(a.kind);
  Graph reduced;
  ReductionMap map;
  if (kind == ReductionKind::Pebg) {
    auto r = build_pebg(g);
    reduced = std::move(r.reduced);
    map = std::move(r.map);
  } else {
    auto r = build_star_convex(g);
    reduced = std::move(r.reduced);
    map = std::move(r.map);
  }
  if (!a.output.empty()) write_text_file(a.output, write_edge_list(reduced));
  if (!a.map.empty()) write_text_file(a.map, reduction_map_to_json(map));
  out << "kind " << to_string(kind) << "\nn' " << reduced.n() << "\nm' " << reduced.m() << '\n';
  if (a.output.empty()) out << write_edge_list(reduced);
  return exit_code::ok;
}

int cmd_extract(const ExtractArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.input);
  const Graph reduced = read_edge_list_file(a.reduced);
  const ReductionMap map = reduction_map_from_json(read_text_file(a.map));
  const VertexSet s = read_set(a.set, a.solution, reduced.n());
  VertexSet d = std::holds_alternative<PebgMap>(map)
                    ? extract_dom_pebg(std::get<PebgMap>(map), g, reduced, s)
                    : extract_dom_star(std::get<ScbMap>(map), g, reduced, s);
  if (a.json) {
    json doc;
    doc["graph"] = a.input;
    doc["kind"] = "dom";
    doc["set"] = set_json(d);
    doc["cardinality"] = d.size();
    doc["method"] = "extract";
    out << doc.dump() << '\n';
  } else {
    out << "set " << d << "\ncardinality " << d.size() << '\n';
  }
  return exit_code::ok;
}

int cmd_structure(const StructureArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.input);
  const ReductionKind kind = parse_reduction_kind(a.kind);
  if (kind == ReductionKind::Pebg) {
    if (a.map.empty()) throw InputError("check-structure --kind pebg needs --map with an elimination order");
    const ReductionMap map = reduction_map_from_json(read_text_file(a.map));
    if (!std::holds_alternative<PebgMap>(map)) throw InputError("map is not a pebg map");
    const bool ok = check_peo(g, std::get<PebgMap>(map).peo);
    out << "peo " << (ok ? "valid" : "invalid") << '\n';
    return ok ? exit_code::ok : exit_code::verdict_false;
  }
  std::optional<Vertex> centre;
  if (!a.x_side.empty())
    centre = check_star_convex(g, parse_vertex_list(a.x_side, g.n()));
  else if (!a.map.empty()) {
    const ReductionMap map = reduction_map_from_json(read_text_file(a.map));
    if (!std::holds_alternative<ScbMap>(map)) throw InputError("map is not a star_convex map");
    const ScbMap& scb = std::get<ScbMap>(map);
    const bool ok = star_centers(g, scb.reduced_x()).contains(scb.center);
    out << "center " << scb.center << (ok ? " valid" : " invalid") << '\n';
    return ok ? exit_code::ok : exit_code::verdict_false;
  } else
    centre = check_star_convex(g);
  if (centre)
    out << "center " << *centre << '\n';
  else
    out << "not star convex\n";
  return centre ? exit_code::ok : exit_code::verdict_false;
}

std::string counterexample_path(const std::string& report, const std::string& instance) {
  std::filesystem::path p(report);
  return (p.parent_path() / (p.stem().string() + "." + instance + ".el")).string();
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchOptions o;
  o.suite = parse_suite(a.suite);
  o.n_max = a.n_max;
  o.trials = a.trials;
  o.seed = a.seed;
  o.workers = workers_from_env();
  if (a.time_cap) o.time_cap = std::chrono::seconds(*a.time_cap);
  const BenchReport report = run_bench_suite(o);
  emit(a.output, to_csv(report, a.timing), out);
  if (!a.json_output.empty()) write_text_file(a.json_output, to_json(report, a.timing));
  for (const auto& note : report.notes) err << "note: " << note << '\n';
  if (!report.complete) err << "warning: time cap reached, report is incomplete\n";
  if (report.all_satisfied()) return exit_code::ok;
  for (const auto& c : report.counterexamples) {
    if (a.output.empty() || a.output == "-") {
      err << "counterexample " << c.instance << '\n' << write_edge_list(c.graph);
    } else {
      const std::string path = counterexample_path(a.output, c.instance);
      write_text_file(path, write_edge_list(c.graph));
      err << "counterexample " << c.instance << " written to " << path << '\n';
    }
  }
  return exit_code::claim_violation;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"co-secure domination toolkit", "cosec"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a generated graph as an edge list");
  g->add_option("--family", gen.family,
                "path|cycle|complete|complete_bipartite|complete_multipartite|wheel|star|random_regular|random_min_degree2")
      ->required();
  g->add_option("-n,--n", gen.n, "order");
  g->add_option("--parts", gen.parts, "part sizes, e.g. 2,3");
  g->add_option("--degree", gen.degree, "degree for random_regular");
  g->add_option("--p", gen.p, "edge probability for random_min_degree2");
  g->add_option("--seed", gen.seed, "seed (required for random families)");
  g->add_option("-o,--output", gen.output, "output file (default stdout)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "compute a set for a problem");
  s->add_option("--problem", solve.problem, "dom|double|csds|monopoly");
  s->add_option("--method", solve.method, "exact|greedy|reg3|reg4");
  s->add_option("-i,--input", solve.input, "edge list")->required();
  s->add_option("--reduction", solve.reduction, "pebg|star (greedy dom)");
  s->add_option("--limit", solve.limit, "largest cardinality tried by exact");
  s->add_flag("--json", solve.json, "print a solution document");
  s->add_flag("--oracle", solve.oracle, "also report the exact optimum and ratio");
  s->add_flag("--timing", solve.timing, "report elapsed time");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check a set and print the certificate");
  v->add_option("--kind", verify.kind, "dom|double|csds|monopoly")->required();
  v->add_option("-i,--input", verify.input, "edge list")->required();
  auto* set_opt = v->add_option("--set", verify.set, "comma-separated vertices");
  auto* sol_opt = v->add_option("--solution", verify.solution, "solution JSON");
  set_opt->excludes(sol_opt);
  v->add_flag("--json", verify.json);

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "build a reduced graph");
  r->add_option("--kind", reduce.kind, "pebg|star")->required();
  r->add_option("-i,--input", reduce.input, "edge list")->required();
  r->add_option("-o,--output", reduce.output, "reduced edge list");
  r->add_option("--map", reduce.map, "gadget map JSON");

  ExtractArgs extract;
  auto* e = app.add_subcommand("extract", "map a CSDS of the reduced graph back to a dominating set");
  e->add_option("--map", extract.map, "gadget map JSON")->required();
  e->add_option("-i,--input", extract.input, "base edge list")->required();
  e->add_option("--reduced", extract.reduced, "reduced edge list")->required();
  auto* eset = e->add_option("--set", extract.set, "CSDS of the reduced graph");
  auto* esol = e->add_option("--solution", extract.solution, "solution JSON for the reduced graph");
  eset->excludes(esol);
  e->add_flag("--json", extract.json);

  StructureArgs structure;
  auto* c = app.add_subcommand("check-structure", "validate an elimination order or star-convex centre");
  c->add_option("--kind", structure.kind, "pebg|star")->required();
  c->add_option("-i,--input", structure.input, "edge list")->required();
  c->add_option("--map", structure.map, "gadget map JSON");
  c->add_option("--x-side", structure.x_side, "vertices of the star side");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "run an experiment suite (workers from COSEC_WORKERS, default 1)");
  b->add_option("--suite", bench.suite, "bounds|reg3|reg4|reductions|monopoly")->required();
  b->add_option("--n-max", bench.n_max);
  b->add_option("--trials", bench.trials);
  b->add_option("--seed", bench.seed);
  b->add_option("-o,--output", bench.output, "CSV report (default stdout)");
  b->add_option("--json", bench.json_output, "JSON report");
  b->add_flag("--timing", bench.timing, "add an elapsed_ms column");
  b->add_option("--time-cap", bench.time_cap, "seconds before the report is cut short");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return exit_code::input_error;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (v->parsed()) return cmd_verify(verify, out);
    if (r->parsed()) return cmd_reduce(reduce, out);
    if (e->parsed()) return cmd_extract(extract, out);
    if (c->parsed()) return cmd_structure(structure, out);
    if (b->parsed()) return cmd_bench(bench, out, err);
  } catch (const ClaimViolation& ex) {
    err << "claim violation: " << ex.what() << '\n';
    return exit_code::claim_violation;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_code::input_error;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_code::input_error;
  }
  err << app.help();
  return exit_code::input_error;
}

}  // namespace cosec
