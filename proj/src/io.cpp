#include "cosec/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cosec/errors.hpp"

namespace cosec {

namespace {

using nlohmann::json;

struct Line {
  std::size_t number;
  std::string_view text;
};

class Tokens {
 public:
  explicit Tokens(Line line) : line_(line) {}

  bool done() {
    skip_space();
    return pos_ >= line_.text.size();
  }

  std::uint64_t number(const char* what) {
    skip_space();
    const std::size_t column = pos_ + 1;
    std::uint64_t value = 0;
    const char* begin = line_.text.data() + pos_;
    const char* end = line_.text.data() + line_.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      fail(column, std::string("expected ") + what);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw InputError("line " + std::to_string(line_.number) + ", column " + std::to_string(column) + ": " + message);
  }

  std::size_t line_number() const { return line_.number; }

 private:
  void skip_space() {
    while (pos_ < line_.text.size() && (line_.text[pos_] == ' ' || line_.text[pos_] == '\t' || line_.text[pos_] == '\r')) ++pos_;
  }

  Line line_;
  std::size_t pos_ = 0;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("missing header line 'n m'");
  Tokens header(lines[0]);
  const auto n = header.number("vertex count");
  const auto m = header.number("edge count");
  if (!header.done()) header.fail(1, "header must contain exactly two numbers");
  if (lines.size() - 1 > m)
    throw InputError("line " + std::to_string(lines[m + 1].number) + ": header announces only " +
                     std::to_string(m) + " edges");
  if (lines.size() - 1 < m)
    throw InputError("header announces " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                     " edge lines follow");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Tokens tok(lines[i]);
    const auto u = tok.number("vertex id");
    const auto v = tok.number("vertex id");
    if (!tok.done()) tok.fail(1, "edge line must contain exactly two vertex ids");
    try {
      if (u >= n || v >= n) throw InputError("endpoint out of range [0," + std::to_string(n) + ")");
      if (u == v) throw InputError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(tok.line_number()) + ": " + e.what());
    }
  }
  try {
    return Graph(n, edges);
  } catch (const InputError& e) {
    // locate the duplicate for the message
    std::string msg = e.what();
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Edge& ei = edges[i - 1];
      for (std::size_t j = 1; j < i; ++j) {
        const Edge& ej = edges[j - 1];
        if ((ei.first == ej.first && ei.second == ej.second) || (ei.first == ej.second && ei.second == ej.first))
          throw InputError("line " + std::to_string(lines[i].number) + ": " + msg);
      }
    }
    throw;
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph read_edge_list_file(const std::string& path) {
  try {
    return parse_edge_list(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

VertexSet parse_vertex_list(std::string_view text, std::size_t universe) {
  VertexSet out(universe);
  std::size_t start = 0;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw InputError("bad vertex id '" + std::string(item) + "' in set list");
    if (v >= universe) throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(universe) + ")");
    out.insert(static_cast<Vertex>(v));
    start = end + 1;
  }
  return out;
}

std::string reduction_map_to_json(const ReductionMap& map) {
  json doc;
  if (const auto* p = std::get_if<PebgMap>(&map)) {
    doc["kind"] = "pebg";
    doc["base_n"] = p->base_n;
    doc["gadgets"] = {{"s", p->s}, {"t", p->t}, {"x", p->x}, {"y", p->y}, {"w", p->w}, {"z", p->z}, {"a", p->a}};
    json peo = json::array();
    for (const auto& [u, v] : p->peo) peo.push_back({u, v});
    doc["peo"] = peo;
  } else {
    const auto& s = std::get<ScbMap>(map);
    doc["kind"] = "star_convex";
    doc["base_n"] = s.base_n;
    doc["gadgets"] = {{"x0", s.x0}, {"x", s.x}, {"y0", s.y0}, {"y", s.y}};
    doc["center"] = s.center;
    doc["sides"] = {{"X", s.base_x.to_vector()}, {"Y", s.base_y.to_vector()}};
  }
  return doc.dump(2) + "\n";
}

ReductionMap reduction_map_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const std::string kind = doc.at("kind").get<std::string>();
    const auto base_n = doc.at("base_n").get<std::size_t>();
    const json& gadgets = doc.at("gadgets");
    if (kind == "pebg") {
      PebgMap p;
      p.base_n = base_n;
      p.s = gadgets.at("s");
      p.t = gadgets.at("t");
      p.x = gadgets.at("x");
      p.y = gadgets.at("y");
      p.w = gadgets.at("w");
      p.z = gadgets.at("z");
      p.a = gadgets.at("a").get<std::vector<Vertex>>();
      if (p.a.size() != base_n) throw InputError("gadget list 'a' must have base_n entries");
      for (const auto& e : doc.at("peo")) p.peo.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
      return p;
    }
    if (kind == "star_convex") {
      ScbMap s;
      s.base_n = base_n;
      s.x0 = gadgets.at("x0");
      s.x = gadgets.at("x");
      s.y0 = gadgets.at("y0");
      s.y = gadgets.at("y");
      s.center = doc.at("center");
      s.base_x = VertexSet::from_vector(base_n, doc.at("sides").at("X").get<std::vector<Vertex>>());
      s.base_y = VertexSet::from_vector(base_n, doc.at("sides").at("Y").get<std::vector<Vertex>>());
      return s;
    }
    throw InputError("unknown reduction kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed reduction map: ") + e.what());
  }
}

std::string solution_to_json(const std::string& graph_path, const SolveResult& result) {
  json doc;
  doc["graph"] = graph_path;
  doc["kind"] = std::string(to_string(result.problem));
  doc["set"] = result.set ? json(result.set->to_vector()) : json(nullptr);
  doc["cardinality"] = result.cardinality ? json(*result.cardinality) : json(nullptr);
  doc["method"] = std::string(to_string(result.method));
  return doc.dump();
}

VertexSet solution_set_from_json(std::string_view text, std::size_t universe) {
  try {
    const json doc = json::parse(text);
    VertexSet out(universe);
    for (const auto& v : doc.at("set")) {
      const auto id = v.get<std::uint64_t>();
      if (id >= universe) throw InputError("solution vertex " + std::to_string(id) + " out of range");
      out.insert(static_cast<Vertex>(id));
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed solution document: ") + e.what());
  }
}

}  // namespace cosec
