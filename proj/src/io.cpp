#include "veccon/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "veccon/errors.hpp"

namespace veccon {
namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

// Splits the stream into whitespace-separated tokens per line, skipping
// blank lines and comments.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      tokens_.clear();
      for (std::size_t i = 0; i < line.size();) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens_.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
      }
      if (tokens_.empty() || tokens_[0].text == "c") continue;
      return true;
    }
    return false;
  }

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::string& kind() const { return tokens_[0].text; }
  int line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& message, int token = 0) const {
    int column = 1;
    if (token < static_cast<int>(tokens_.size())) {
      column = tokens_[token].column;
    } else if (!tokens_.empty()) {
      const Token& last = tokens_.back();
      column = last.column + static_cast<int>(last.text.size());
    }
    throw ParseError(line_no_, column, message);
  }

  void expect_arity(std::size_t count) const {
    if (tokens_.size() < count) fail("expected " + std::to_string(count - 1) + " fields", static_cast<int>(tokens_.size()));
    if (tokens_.size() > count) fail("unexpected trailing field", static_cast<int>(count));
  }

  long long integer(int token) const {
    const std::string& t = tokens_[token].text;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) fail("expected an integer", token);
    return value;
  }

  /// 1-indexed vertex id translated to 0-indexed.
  Vertex vertex(int token, int n) const {
    const long long v = integer(token);
    if (v < 1 || v > n) {
      fail("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n), token);
    }
    return static_cast<Vertex>(v - 1);
  }

 private:
  std::istream& in_;
  std::vector<Token> tokens_;
  int line_no_ = 0;
};

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader(in);
  int n = -1;
  long long declared_edges = 0;
  std::vector<Edge> edges;
  std::vector<int> r;
  std::vector<char> seen_r;
  VertexSet free;
  int header_line = 0;

  while (reader.next()) {
    const std::string& kind = reader.kind();
    if (kind == "p") {
      if (n >= 0) reader.fail("duplicate problem line");
      reader.expect_arity(4);
      const std::string& format = reader.tokens()[1].text;
      if (format != "vcn" && format != "edge") reader.fail("unknown format '" + format + "'", 1);
      const long long count = reader.integer(2);
      if (count < 0 || count > 100'000'000) reader.fail("invalid vertex count", 2);
      declared_edges = reader.integer(3);
      if (declared_edges < 0) reader.fail("invalid edge count", 3);
      n = static_cast<int>(count);
      r.assign(n, 0);
      seen_r.assign(n, 0);
      header_line = reader.line();
      continue;
    }
    if (n < 0) reader.fail("record before the problem line");
    if (kind == "e") {
      reader.expect_arity(3);
      const Vertex u = reader.vertex(1, n);
      const Vertex v = reader.vertex(2, n);
      if (u == v) reader.fail("self-loop", 2);
      edges.emplace_back(u, v);
    } else if (kind == "r") {
      reader.expect_arity(3);
      const Vertex v = reader.vertex(1, n);
      const long long k = reader.integer(2);
      if (k < 0 || k > 1'000'000'000) reader.fail("requirement out of range", 2);
      if (seen_r[v]) reader.fail("duplicate requirement", 1);
      seen_r[v] = 1;
      r[v] = static_cast<int>(k);
    } else if (kind == "f") {
      reader.expect_arity(2);
      free.push_back(reader.vertex(1, n));
    } else {
      reader.fail("unknown record '" + kind + "'");
    }
  }
  if (n < 0) throw ParseError(reader.line(), 1, "missing problem line");
  if (static_cast<long long>(edges.size()) != declared_edges) {
    throw ParseError(header_line, 1,
                     "problem line declares " + std::to_string(declared_edges) +
                         " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Instance(Graph(n, std::move(edges)), std::move(r), normalized(std::move(free)));
  } catch (const InputError& e) {
    throw ParseError(header_line, 1, e.what());
  }
}

Instance read_instance_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst,
                    const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p vcn " << inst.vertex_count() << ' ' << inst.graph.edge_count() << '\n';
  for (const auto& [u, v] : inst.graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    if (inst.requirements[v] != 0) out << "r " << v + 1 << ' ' << inst.requirements[v] << '\n';
  }
  for (Vertex v : inst.free_set) out << "f " << v + 1 << '\n';
}

VertexSet parse_solution(std::istream& in, int vertex_count) {
  LineReader reader(in);
  std::optional<long long> declared;
  int header_line = 0;
  VertexSet s;
  const int bound = vertex_count < 0 ? std::numeric_limits<int>::max() : vertex_count;
  while (reader.next()) {
    if (reader.kind() == "s") {
      if (declared) reader.fail("duplicate size line");
      reader.expect_arity(2);
      declared = reader.integer(1);
      if (*declared < 0) reader.fail("negative size", 1);
      header_line = reader.line();
    } else if (reader.kind() == "v") {
      reader.expect_arity(2);
      s.push_back(reader.vertex(1, bound));
    } else {
      reader.fail("unknown record '" + reader.kind() + "'");
    }
  }
  if (!declared) throw ParseError(reader.line(), 1, "missing size line");
  const std::size_t listed = s.size();
  normalize(s);
  if (s.size() != listed) throw ParseError(header_line, 1, "duplicate vertex in solution");
  if (static_cast<long long>(s.size()) != *declared) {
    throw ParseError(header_line, 1,
                     "size line declares " + std::to_string(*declared) + " vertices, found " +
                         std::to_string(s.size()));
  }
  return s;
}

VertexSet read_solution_file(const std::string& path, int vertex_count) {
  auto in = open_or_throw(path);
  return parse_solution(in, vertex_count);
}

void write_solution(std::ostream& out, const VertexSet& s,
                    const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "s " << s.size() << '\n';
  for (Vertex v : s) out << "v " << v + 1 << '\n';
}

namespace {

std::vector<long long> role_refs(const Role& role) {
  switch (role.kind) {
    case RoleKind::kOriginal:
      return {role.source_vertex + 1};
    case RoleKind::kWSide:
    case RoleKind::kZSide:
      return {role.source_vertex + 1, role.source_edge + 1};
    case RoleKind::kWMid:
      return {role.source_edge + 1};
    case RoleKind::kSubdivision:
      return {role.owner + 1};
  }
  return {};
}

}  // namespace

void write_mapping(std::ostream& out, const GadgetMapping& m) {
  out << "c gadget mapping: role <gadget-id> <tag> <source-refs>\n";
  out << "p map " << m.source.vertex_count() << ' ' << m.source.edge_count() << ' '
      << m.subdivision_parameter << '\n';
  for (const auto& [u, v] : m.source.edges()) out << "se " << u + 1 << ' ' << v + 1 << '\n';
  for (Vertex v = 0; v < m.gadget.vertex_count(); ++v) {
    out << "role " << v + 1 << ' ' << role_name(m.roles[v].kind);
    for (long long ref : role_refs(m.roles[v])) out << ' ' << ref;
    out << '\n';
  }
}

GadgetMapping parse_mapping(std::istream& in) {
  LineReader reader(in);
  int n = -1;
  long long m = 0, k = 0;
  int header_line = 0;
  std::vector<Edge> edges;
  struct RoleLine {
    int line;
    Vertex id;
    RoleKind kind;
    std::vector<long long> refs;
  };
  std::vector<RoleLine> role_lines;

  while (reader.next()) {
    const std::string& kind = reader.kind();
    if (kind == "p") {
      if (n >= 0) reader.fail("duplicate problem line");
      reader.expect_arity(5);
      if (reader.tokens()[1].text != "map") reader.fail("expected 'p map'", 1);
      const long long count = reader.integer(2);
      if (count < 0 || count > 10'000'000) reader.fail("invalid vertex count", 2);
      n = static_cast<int>(count);
      m = reader.integer(3);
      k = reader.integer(4);
      if (k < 0 || k > 1000) reader.fail("invalid subdivision parameter", 4);
      header_line = reader.line();
      continue;
    }
    if (n < 0) reader.fail("record before the problem line");
    if (kind == "se") {
      reader.expect_arity(3);
      edges.emplace_back(reader.vertex(1, n), reader.vertex(2, n));
    } else if (kind == "role") {
      if (reader.tokens().size() < 3) reader.fail("expected gadget id and tag", 1);
      RoleLine rl{reader.line(), static_cast<Vertex>(reader.integer(1) - 1), RoleKind::kOriginal, {}};
      try {
        rl.kind = role_from_name(reader.tokens()[2].text);
      } catch (const InputError& e) {
        reader.fail(e.what(), 2);
      }
      for (std::size_t t = 3; t < reader.tokens().size(); ++t) {
        rl.refs.push_back(reader.integer(static_cast<int>(t)));
      }
      role_lines.push_back(std::move(rl));
    } else {
      reader.fail("unknown record '" + kind + "'");
    }
  }
  if (n < 0) throw ParseError(reader.line(), 1, "missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(header_line, 1, "edge count does not match the problem line");
  }

  GadgetMapping mapping;
  try {
    Graph source(n, std::move(edges));
    mapping = k == 0 ? build_gadget(source) : build_bipartite_gadget(source, static_cast<int>(k));
  } catch (const InputError& e) {
    throw ParseError(header_line, 1, e.what());
  }
  for (const auto& rl : role_lines) {
    if (rl.id < 0 || rl.id >= mapping.gadget.vertex_count()) {
      throw ParseError(rl.line, 1, "gadget id out of range");
    }
    const Role& expected = mapping.roles[rl.id];
    if (expected.kind != rl.kind || role_refs(expected) != rl.refs) {
      throw ParseError(rl.line, 1, "role does not match the rebuilt gadget");
    }
  }
  return mapping;
}

GadgetMapping read_mapping_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_mapping(in);
}

void write_family(std::ostream& out, const ViolatingFamily& family) {
  out << "c connected sets X with max requirement above |N(X)|"
      << (family.minimal_only ? " (inclusion-minimal)" : "") << '\n';
  out << "p fam " << family.sets.size() << '\n';
  for (const auto& x : family.sets) {
    out << 'h';
    for (Vertex v : x) out << ' ' << v + 1;
    out << '\n';
  }
}

std::string to_dot(const Instance& inst, const VertexSet& solution) {
  std::ostringstream out;
  out << "graph veccon {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    out << "  " << v + 1 << " [label=\"" << v + 1 << "\\nr=" << inst.requirements[v] << '"';
    if (inst.is_free(v)) out << ", shape=doublecircle";
    if (contains(solution, v)) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (const auto& [u, v] : inst.graph.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace veccon
